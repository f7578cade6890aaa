#include "cyq/ffcount.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "cyq/errors.hpp"

namespace cyq::ffcount {

namespace {

void require_prime(int p) {
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

void require_same_grading(const Multisegment& lam, const Multisegment& mu) {
  if (lam.modulus() != mu.modulus())
    throw std::invalid_argument("moduli differ");
  if (dim_vector(lam) != dim_vector(mu))
    throw std::invalid_argument("grading mismatch: dim vectors of " + lam.str() +
                                " and " + mu.str() + " differ");
}

}  // namespace

GradedRep build_representative(const Multisegment& ms, int p) {
  require_prime(p);
  int n = ms.modulus();
  GradedRep rep;
  rep.p = p;
  rep.type = ms;
  rep.dims = dim_vector(ms);

  // box (row, j) -> index within its grade
  std::vector<std::vector<int>> box_index(ms.rows().size());
  std::vector<int> next_index(n, 0);
  for (size_t r = 0; r < ms.rows().size(); ++r) {
    const Segment& seg = ms.rows()[r];
    box_index[r].resize(seg.length);
    for (int j = 0; j < seg.length; ++j)
      box_index[r][j] = next_index[residue(seg.start + j, n)]++;
  }

  rep.maps.reserve(n);
  for (int i = 0; i < n; ++i)
    rep.maps.emplace_back(rep.dims.counts[residue(i - 1, n)],
                          rep.dims.counts[i], p);
  for (size_t r = 0; r < ms.rows().size(); ++r) {
    const Segment& seg = ms.rows()[r];
    for (int j = 1; j < seg.length; ++j) {
      int grade = residue(seg.start + j, n);
      rep.maps[grade].at(box_index[r][j - 1], box_index[r][j]) = 1;
    }
  }
  return rep;
}

DimVector graded_kernel_dims(const GradedRep& rep, int k) {
  int n = rep.dims.n;
  std::vector<int> counts(n, 0);
  for (int i = 0; i < n; ++i) {
    FpMatrix m = rep.maps[i];
    for (int t = 1; t < k; ++t) m = rep.maps[residue(i - t, n)].mul(m);
    counts[i] = rep.dims.counts[i] - m.rank();
  }
  return DimVector(n, std::move(counts));
}

Multisegment type_from_truncation_dims(int n, const std::vector<DimVector>& c) {
  int L = static_cast<int>(c.size()) - 1;
  // column multisets
  std::vector<std::vector<int>> col(L + 1, std::vector<int>(n, 0));
  for (int k = 1; k <= L; ++k)
    for (int i = 0; i < n; ++i) {
      col[k][i] = c[k].counts[i] - c[k - 1].counts[i];
      if (col[k][i] < 0)
        throw InternalError("kernel filtration is not weakly increasing");
    }
  std::vector<Segment> rows;
  for (int k = L; k >= 1; --k)
    for (int j = 0; j < n; ++j) {
      int longer = (k < L) ? col[k + 1][residue(j + 1, n)] : 0;
      int exact = col[k][j] - longer;
      if (exact < 0) throw InternalError("kernel filtration has no diagram");
      for (int t = 0; t < exact; ++t)
        rows.push_back({residue(j - (k - 1), n), k});
    }
  return Multisegment(n, std::move(rows));
}

Int CountContext::count(const Multisegment& lam, const Multisegment& mu, int p) {
  require_prime(p);
  require_same_grading(lam, mu);
  return count_rec(lam, mu, p);
}

Int CountContext::count_rec(const Multisegment& lam, const Multisegment& mu,
                            int p) {
  if (lam.empty()) return 1;
  std::string key = std::to_string(lam.modulus()) + "#" + lam.str() + "|" +
                    mu.str() + "|" + std::to_string(p);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int n = lam.modulus();
  DimVector first_col = dim_vector(truncate(lam, 1));

  // chain[r][k] = #rows of mu starting at r with length >= k+1, i.e.
  // dim of ker x cap im x^k in grade r.
  std::vector<std::vector<int>> chain(n);
  for (const Segment& s : mu.rows()) {
    auto& f = chain[s.start];
    if (static_cast<int>(f.size()) < s.length) f.resize(s.length, 0);
    for (int k = 0; k < s.length; ++k) ++f[k];
  }
  for (int r = 0; r < n; ++r) {
    int have = chain[r].empty() ? 0 : chain[r][0];
    if (first_col.counts[r] > have) {
      memo_[key] = 0;
      return 0;
    }
  }

  auto mu_trunc = truncation_dims(mu);
  int L = mu.max_length();
  Multisegment lam_rest = strip_first_column(lam);

  // All intersection profiles, one weakly decreasing sequence per grade.
  std::vector<std::vector<int>> profile(n);
  for (int r = 0; r < n; ++r) {
    profile[r].assign(chain[r].size(), 0);
    if (!profile[r].empty()) profile[r][0] = first_col.counts[r];
  }
  Int total = 0;

  auto w_at = [&](int r, int k) -> int {
    if (k == 0) return first_col.counts[r];
    if (k < static_cast<int>(profile[r].size())) return profile[r][k];
    return 0;
  };

  auto process_profile = [&]() {
    if (++stats_.nodes > node_budget_)
      throw CapExceeded("fibre counting node budget exceeded");
    Int ways = 1;
    for (int r = 0; r < n && ways != 0; ++r) {
      if (chain[r].empty()) continue;
      ways *= count_subspaces_with_profile(chain[r], profile[r], p);
    }
    if (ways == 0) return;
    std::vector<DimVector> qdims;
    qdims.reserve(L + 1);
    std::vector<int> zero(n, 0);
    qdims.emplace_back(n, zero);
    for (int k = 1; k <= L; ++k) {
      std::vector<int> counts(n);
      for (int i = 0; i < n; ++i) {
        counts[i] = mu_trunc[k].counts[i] + w_at(residue(i - k, n), k) -
                    first_col.counts[i];
        if (counts[i] < 0)
          throw InternalError("negative quotient kernel dimension");
      }
      qdims.emplace_back(n, std::move(counts));
    }
    Multisegment nu = type_from_truncation_dims(n, qdims);
    total += ways * count_rec(lam_rest, nu, p);
  };

  // enumerate profile entries grade by grade, position by position
  auto rec = [&](auto&& self, int r, int k) -> void {
    while (r < n && (chain[r].size() <= 1)) {
      ++r;
      k = 1;
    }
    if (r == n) {
      process_profile();
      return;
    }
    if (k == static_cast<int>(chain[r].size())) {
      self(self, r + 1, 1);
      return;
    }
    int upper = std::min(profile[r][k - 1], chain[r][k]);
    for (int v = 0; v <= upper; ++v) {
      profile[r][k] = v;
      self(self, r, k + 1);
    }
    profile[r][k] = 0;
  };
  rec(rec, 0, 1);

  memo_[key] = total;
  return total;
}

Int count_fibre_points(const Multisegment& lam, const Multisegment& mu, int p) {
  CountContext ctx;
  return ctx.count(lam, mu, p);
}

namespace {

struct DirectCounter {
  int p;
  long long budget;
  long long used = 0;

  Int recurse(const std::vector<FpMatrix>& maps, const std::vector<int>& dims,
              const Multisegment& lam) {
    if (lam.empty()) return 1;
    int n = lam.modulus();
    DimVector first_col = dim_vector(truncate(lam, 1));
    std::vector<FpMatrix> kernels(n);
    for (int i = 0; i < n; ++i) {
      kernels[i] = maps[i].kernel_basis();
      if (first_col.counts[i] > kernels[i].rows()) return 0;
    }
    Multisegment lam_rest = strip_first_column(lam);
    std::vector<FpMatrix> chosen(n);
    Int total = 0;

    auto descend = [&]() {
      // quotient of each grade by the chosen subspace
      std::vector<FpMatrix> proj(n), incl(n);
      std::vector<int> qdims(n);
      for (int i = 0; i < n; ++i) {
        FpMatrix r = chosen[i].row_space_rref();
        std::vector<int> pivots;
        {
          FpMatrix tmp = r;
          pivots = tmp.rref();  // already reduced; recovers pivot columns
        }
        std::vector<bool> is_pivot(dims[i], false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<int> nonpivot;
        for (int c = 0; c < dims[i]; ++c)
          if (!is_pivot[c]) nonpivot.push_back(c);
        qdims[i] = static_cast<int>(nonpivot.size());
        proj[i] = FpMatrix(qdims[i], dims[i], p);
        incl[i] = FpMatrix(dims[i], qdims[i], p);
        for (int t = 0; t < qdims[i]; ++t) {
          proj[i].at(t, nonpivot[t]) = 1;
          incl[i].at(nonpivot[t], t) = 1;
          for (size_t j = 0; j < pivots.size(); ++j) {
            uint32_t v = r.at(static_cast<int>(j), nonpivot[t]);
            if (v) proj[i].at(t, pivots[j]) = static_cast<uint32_t>(p) - v;
          }
        }
      }
      std::vector<FpMatrix> qmaps(n);
      for (int i = 0; i < n; ++i)
        qmaps[i] = proj[residue(i - 1, n)].mul(maps[i]).mul(incl[i]);
      total += recurse(qmaps, qdims, lam_rest);
    };

    auto pick = [&](auto&& self, int i) -> void {
      if (i == n) {
        if (++used > budget)
          throw CapExceeded("direct fibre counting budget exceeded");
        descend();
        return;
      }
      int want = first_col.counts[i];
      for_each_subspace(kernels[i].rows(), want, p, [&](const FpMatrix& coords) {
        chosen[i] = coords.mul(kernels[i]);
        self(self, i + 1);
      });
    };
    pick(pick, 0);
    return total;
  }
};

}  // namespace

Int count_fibre_points_direct(const Multisegment& lam, const Multisegment& mu,
                              int p, long long node_budget) {
  require_prime(p);
  require_same_grading(lam, mu);
  GradedRep rep = build_representative(mu, p);
  DirectCounter counter{p, node_budget};
  return counter.recurse(rep.maps, rep.dims.counts, lam);
}

Int springer_count(int s1, int s2, int p) {
  if (s1 < 0 || s2 < 0)
    throw std::invalid_argument("springer_count needs nonnegative block sizes");
  std::vector<std::pair<long long, int>> lam_rows, mu_rows;
  if (s1 + s2 > 0) lam_rows.emplace_back(0, s1 + s2);
  if (s1 > 0) mu_rows.emplace_back(0, s1);
  if (s2 > 0) mu_rows.emplace_back(0, s2);
  return count_fibre_points(canonicalize(lam_rows, 1), canonicalize(mu_rows, 1),
                            p);
}

IntPoly CountContext::interpolate_g(const Multisegment& lam,
                                    const Multisegment& mu,
                                    const std::vector<int>& prime_pool) {
  require_same_grading(lam, mu);
  int m = static_cast<int>(flag_dim(lam));
  std::vector<int> primes = prime_pool;
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]) || (i > 0 && primes[i] <= primes[i - 1]))
      throw std::invalid_argument(
          "prime pool must be a strictly increasing list of primes");
  }
  while (static_cast<int>(primes.size()) < m + 2)
    primes.push_back(primes.empty() ? 2 : next_prime_after(primes.back()));

  int points = m + 1;
  std::vector<Int> ys(points);
  for (int i = 0; i < points; ++i) ys[i] = count(lam, mu, primes[i]);

  // exact Lagrange interpolation over the rationals
  std::vector<Rat> acc(points, Rat(0));
  for (int i = 0; i < points; ++i) {
    std::vector<Rat> basis{Rat(1)};  // prod_{j<i, j!=i} (x - p_j)
    Rat denom(1);
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (int k = static_cast<int>(basis.size()) - 1; k >= 1; --k)
        basis[k] = basis[k - 1] - Rat(primes[j]) * basis[k];
      basis[0] = -Rat(primes[j]) * basis[0];
      denom *= Rat(primes[i] - primes[j]);
    }
    Rat scale = Rat(ys[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
  }

  std::vector<Int> coeffs(points);
  for (int k = 0; k < points; ++k) {
    if (denominator(acc[k]) != 1)
      throw InternalError("interpolated count polynomial for " + lam.str() +
                          " / " + mu.str() + " has a non-integer coefficient");
    coeffs[k] = numerator(acc[k]);
    if (coeffs[k] < 0)
      throw InternalError("interpolated count polynomial for " + lam.str() +
                          " / " + mu.str() + " has a negative coefficient");
  }
  IntPoly g = IntPoly::from_coeffs(std::move(coeffs));

  int holdout = primes[points];
  Int direct = count(lam, mu, holdout);
  if (g.eval(holdout) != direct) {
    std::ostringstream msg;
    msg << "held-out prime validation failed for " << lam.str() << " / "
        << mu.str() << " at p=" << holdout << ": interpolant gives "
        << g.eval(holdout) << ", direct count is " << direct;
    throw InternalError(msg.str());
  }
  ++stats_.interpolations;
  ++stats_.holdout_checks;
  return g;
}

IntPoly interpolate_g(const Multisegment& lam, const Multisegment& mu) {
  CountContext ctx;
  return ctx.interpolate_g(lam, mu);
}

}  // namespace cyq::ffcount
