#include "cyq/bigint.hpp"

#include <cassert>

namespace cyq {

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is always a binomial prefix
  }
  return r;
}

Int int_pow(const Int& base, long long exp) {
  assert(exp >= 0);
  Int r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace cyq
