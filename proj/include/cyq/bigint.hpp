#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n,k); zero outside 0 <= k <= n.
Int binomial(long long n, long long k);

Int int_pow(const Int& base, long long exp);

}  // namespace cyq
