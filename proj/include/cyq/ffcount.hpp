#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyq/bigint.hpp"
#include "cyq/fpmatrix.hpp"
#include "cyq/intpoly.hpp"
#include "cyq/multisegment.hpp"

namespace cyq::ffcount {

// A nilpotent graded representation over F_p: one arrow map per vertex,
// maps[i] : V_i -> V_{i-1}.
struct GradedRep {
  int p = 2;
  DimVector dims;
  std::vector<FpMatrix> maps;
  Multisegment type;

  GradedRep() : type(1) {}
};

// The standard representative of the orbit: segments laid out in canonical
// order, basis vector j of a segment in grade start+j-1, x b_j = b_{j-1}.
GradedRep build_representative(const Multisegment& ms, int p);

// Graded dimensions of ker x^k.
DimVector graded_kernel_dims(const GradedRep& rep, int k);

// Recover the multisegment whose truncation dimensions are c[k], k = 0..L.
Multisegment type_from_truncation_dims(int n,
                                       const std::vector<DimVector>& c);

struct CountStats {
  long long nodes = 0;            // work units spent in counting recursions
  long long interpolations = 0;   // completed interpolations
  long long holdout_checks = 0;   // held-out prime validations performed
};

// Shared memo of fibre counts, keyed by isomorphism type.
// Counting tasks for distinct keys are independent and entries never change
// once computed; use one context per thread (independent contexts may run
// concurrently and recompute the same keys).
class CountContext {
 public:
  explicit CountContext(long long node_budget = 100'000'000)
      : node_budget_(node_budget) {}

  // |{graded flags of column type lam fixed by the standard point of mu}|
  // over F_p. Exactly 1 when lam == mu; 0 iff mu is not below lam.
  // Throws std::invalid_argument on grading mismatch or non-prime p,
  // CapExceeded past the node budget.
  Int count(const Multisegment& lam, const Multisegment& mu, int p);

  // Recovers g_{lam,mu}(t) by exact interpolation of the counts at the
  // first flag_dim(lam)+1 primes, then validates against the direct count
  // at the next prime; a held-out mismatch is a hard error.
  // prime_pool, when nonempty, seeds the prime list (extended as needed).
  IntPoly interpolate_g(const Multisegment& lam, const Multisegment& mu,
                        const std::vector<int>& prime_pool = {});

  CountStats& stats() { return stats_; }
  long long node_budget() const { return node_budget_; }

 private:
  Int count_rec(const Multisegment& lam, const Multisegment& mu, int p);

  long long node_budget_;
  CountStats stats_;
  std::map<std::string, Int> memo_;
};

// Convenience wrapper around a throwaway context.
Int count_fibre_points(const Multisegment& lam, const Multisegment& mu, int p);

// Matrix-level oracle: enumerates flag steps subspace by subspace over the
// explicit representative (reduced-echelon bases, explicit quotients).
// Independent of the grouped counting path; intended for cross-checks.
Int count_fibre_points_direct(const Multisegment& lam, const Multisegment& mu,
                              int p, long long node_budget = 10'000'000);

// Point count of the two-block Springer fibre: complete flags in dimension
// s1+s2 fixed by a nilpotent with Jordan blocks (s1, s2).
Int springer_count(int s1, int s2, int p);

IntPoly interpolate_g(const Multisegment& lam, const Multisegment& mu);

}  // namespace cyq::ffcount
