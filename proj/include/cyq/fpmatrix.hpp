#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyq/bigint.hpp"

namespace cyq {

bool is_prime(int p);
// The first k primes 2, 3, 5, ...
std::vector<int> first_primes(int k);
int next_prime_after(int p);

// Dense matrix over the prime field F_p. Entries stay reduced mod p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);
  static FpMatrix identity(int n, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int p() const { return p_; }
  uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  FpMatrix mul(const FpMatrix& rhs) const;
  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  // Basis of the right null space, one basis vector per row.
  FpMatrix kernel_basis() const;
  // Rows of this matrix span a subspace; returns its unique rref basis.
  FpMatrix row_space_rref() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0, p_ = 2;
  std::vector<uint32_t> a_;
};

uint32_t fp_inv(uint32_t x, int p);

// Visits every k-dimensional subspace of F_p^m exactly once, presented as its
// reduced-echelon basis matrix (k x m, one matrix per subspace).
void for_each_subspace(int m, int k, int p,
                       const std::function<void(const FpMatrix&)>& fn);

// Number of k-dimensional subspaces of F_p^a (Gaussian binomial), exact.
Int gaussian_binomial(int a, int k, int p);

// Subspaces of a space filtered by a chain F_0 >= F_1 >= ... >= F_m >= 0
// (dims f[0..m], weakly decreasing), counted by intersection profile:
// the number of subspaces W with dim(W cap F_k) = w[k] for all k.
// Product over the chain steps of a Gaussian binomial and a p-power.
Int count_subspaces_with_profile(const std::vector<int>& f,
                                 const std::vector<int>& w, int p);

}  // namespace cyq
