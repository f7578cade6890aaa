#include "cyq/intpoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cyq {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly IntPoly::monomial(Int c, int deg) {
  IntPoly p;
  if (c != 0) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = std::move(c);
  }
  return p;
}

IntPoly IntPoly::from_coeffs(std::vector<Int> ascending) {
  IntPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

int IntPoly::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

const Int& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

bool IntPoly::all_coeffs_nonnegative() const {
  for (const Int& c : c_)
    if (c < 0) return false;
  return true;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.str();
}

}  // namespace cyq
