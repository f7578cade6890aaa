#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cyq/bigint.hpp"

namespace cyq {

// Exact integer-coefficient polynomial in t. The zero polynomial is the
// empty coefficient sequence; nonzero polynomials carry no trailing zeros,
// so each value has a unique representation.
class IntPoly {
 public:
  IntPoly() = default;                      // zero
  explicit IntPoly(Int constant);
  explicit IntPoly(long long constant) : IntPoly(Int(constant)) {}
  static IntPoly monomial(Int c, int deg);
  static IntPoly from_coeffs(std::vector<Int> ascending);

  bool is_zero() const { return c_.empty(); }
  // Degree of a nonzero polynomial; the zero polynomial has none.
  int degree() const;
  const Int& coeff(int k) const;  // 0 outside the stored range
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const;
  Int operator()(const Int& x) const { return eval(x); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  bool all_coeffs_nonnegative() const;

  // Ascending powers: "1 + t + 3t^2"; "0" for zero.
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;  // c_[k] multiplies t^k
};

std::ostream& operator<<(std::ostream&, const IntPoly&);

}  // namespace cyq
