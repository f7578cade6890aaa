#include "cyq/fpmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace cyq {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> first_primes(int k) {
  std::vector<int> out;
  for (int x = 2; static_cast<int>(out.size()) < k; ++x)
    if (is_prime(x)) out.push_back(x);
  return out;
}

int next_prime_after(int p) {
  int x = p + 1;
  while (!is_prime(x)) ++x;
  return x;
}

FpMatrix::FpMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p),
      a_(static_cast<size_t>(rows) * cols, 0) {
  assert(rows >= 0 && cols >= 0 && p >= 2);
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

uint32_t fp_inv(uint32_t x, int p) {
  // extended Euclid
  int64_t a = x % p, b = p, u = 1, v = 0;
  while (b) {
    int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  assert(a == 1);
  u %= p;
  if (u < 0) u += p;
  return static_cast<uint32_t>(u);
}

FpMatrix FpMatrix::mul(const FpMatrix& rhs) const {
  assert(cols_ == rhs.rows_ && p_ == rhs.p_);
  FpMatrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      uint64_t aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = static_cast<uint32_t>(
            (out.at(i, j) + aik * rhs.at(k, j)) % p_);
    }
  return out;
}

std::vector<int> FpMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c)) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    uint64_t inv = fp_inv(at(r, c), p_);
    for (int j = 0; j < cols_; ++j)
      at(r, j) = static_cast<uint32_t>(at(r, j) * inv % p_);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || !at(i, c)) continue;
      uint64_t f = at(i, c);
      for (int j = 0; j < cols_; ++j)
        at(i, j) = static_cast<uint32_t>(
            (at(i, j) + (p_ - 1) * f % p_ * at(r, j)) % p_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FpMatrix::rank() const {
  FpMatrix tmp = *this;
  return static_cast<int>(tmp.rref().size());
}

FpMatrix FpMatrix::kernel_basis() const {
  FpMatrix tmp = *this;
  std::vector<int> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  int nullity = cols_ - static_cast<int>(pivots.size());
  FpMatrix out(nullity, cols_, p_);
  int k = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    out.at(k, c) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      uint32_t v = tmp.at(static_cast<int>(r), c);
      if (v) out.at(k, pivots[r]) = p_ - v;
    }
    ++k;
  }
  return out;
}

FpMatrix FpMatrix::row_space_rref() const {
  FpMatrix tmp = *this;
  std::vector<int> pivots = tmp.rref();
  FpMatrix out(static_cast<int>(pivots.size()), cols_, p_);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = tmp.at(i, j);
  return out;
}

namespace {

// Recursively fill the free entries of the echelon pattern.
void fill_free(FpMatrix& m, const std::vector<std::pair<int, int>>& free_pos,
               size_t idx, const std::function<void(const FpMatrix&)>& fn) {
  if (idx == free_pos.size()) {
    fn(m);
    return;
  }
  auto [r, c] = free_pos[idx];
  for (int v = 0; v < m.p(); ++v) {
    m.at(r, c) = static_cast<uint32_t>(v);
    fill_free(m, free_pos, idx + 1, fn);
  }
  m.at(r, c) = 0;
}

void choose_pivots(int m, int k, int p, std::vector<int>& pivots, int from,
                   const std::function<void(const FpMatrix&)>& fn) {
  if (static_cast<int>(pivots.size()) == k) {
    FpMatrix mat(k, m, p);
    std::vector<bool> is_pivot(m, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r) {
      mat.at(r, pivots[r]) = 1;
      for (int c = pivots[r] + 1; c < m; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    }
    fill_free(mat, free_pos, 0, fn);
    return;
  }
  for (int c = from; c <= m - (k - static_cast<int>(pivots.size())); ++c) {
    pivots.push_back(c);
    choose_pivots(m, k, p, pivots, c + 1, fn);
    pivots.pop_back();
  }
}

}  // namespace

void for_each_subspace(int m, int k, int p,
                       const std::function<void(const FpMatrix&)>& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> pivots;
  choose_pivots(m, k, p, pivots, 0, fn);
}

Int gaussian_binomial(int a, int k, int p) {
  if (k < 0 || k > a) return 0;
  if (k > a - k) k = a - k;
  // [a k]_p = prod_{i=0}^{k-1} (p^{a-i} - 1) / (p^{i+1} - 1), exact division
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= int_pow(p, a - i) - 1;
    den *= int_pow(p, i + 1) - 1;
  }
  assert(num % den == 0);
  return num / den;
}

Int count_subspaces_with_profile(const std::vector<int>& f,
                                 const std::vector<int>& w, int p) {
  if (f.size() != w.size() || f.empty())
    throw std::invalid_argument("chain and profile must have equal length");
  size_t m = f.size();
  for (size_t k = 0; k < m; ++k) {
    int fk1 = (k + 1 < m) ? f[k + 1] : 0;
    int wk1 = (k + 1 < m) ? w[k + 1] : 0;
    if (w[k] < wk1 || f[k] < fk1)
      throw std::invalid_argument("chain/profile must be weakly decreasing");
    if (w[k] > f[k]) return 0;
  }
  Int total = 1;
  for (size_t k = 0; k < m; ++k) {
    int fk1 = (k + 1 < m) ? f[k + 1] : 0;
    int wk1 = (k + 1 < m) ? w[k + 1] : 0;
    Int g = gaussian_binomial(f[k] - fk1, w[k] - wk1, p);
    if (g == 0) return 0;
    total *= g * int_pow(p, static_cast<long long>(fk1 - wk1) * (w[k] - wk1));
  }
  return total;
}

}  // namespace cyq
