#include "cyq/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

#include "cyq/errors.hpp"
#include "cyq/tworow.hpp"

namespace cyq::decompose {

int OrbitPoset::index_of(const Multisegment& ms) const {
  for (size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i] == ms) return static_cast<int>(i);
  return -1;
}

OrbitPoset build_poset(const DimVector& d, bool two_row_only,
                       ffcount::CountContext& ctx, const PosetOptions& opt) {
  OrbitPoset poset;
  poset.n = d.n;
  poset.d = d;
  poset.orbits = enumerate_multisegments(d, two_row_only, opt.cap);
  size_t N = poset.orbits.size();
  poset.eps.resize(N);
  for (size_t i = 0; i < N; ++i) poset.eps[i] = epsilon_rows(poset.orbits[i]);

  poset.leq_.assign(N, std::vector<bool>(N, false));
  for (size_t a = 0; a < N; ++a) {
    for (size_t b = 0; b < N; ++b) {
      if (a == b) {
        poset.leq_[a][b] = true;
        continue;
      }
      bool ne1 = ctx.count(poset.orbits[b], poset.orbits[a], opt.decide_prime) > 0;
      bool ne2 = ctx.count(poset.orbits[b], poset.orbits[a], opt.confirm_prime) > 0;
      if (ne1 != ne2)
        throw InternalError("fibre emptiness depends on the prime for " +
                            poset.orbits[b].str() + " / " + poset.orbits[a].str());
      poset.leq_[a][b] = ne1;
      if (two_row_only) {
        bool closed = tworow::leq_tworow(poset.orbits[b], poset.orbits[a]) ==
                      tworow::LeqResult::leq;
        if (closed != ne1)
          throw InternalError("closed-form order disagrees with the counting "
                              "oracle for " + poset.orbits[b].str() + " / " +
                              poset.orbits[a].str());
      }
    }
  }

  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      if (a == b || !poset.leq_[a][b]) continue;
      if (poset.eps[a] <= poset.eps[b])
        throw InternalError("eps not strictly monotone on " +
                            poset.orbits[a].str() + " < " + poset.orbits[b].str());
      if (poset.leq_[b][a])
        throw InternalError("order relation is not antisymmetric");
    }
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t c = 0; c < N; ++c)
        if (poset.leq_[a][b] && poset.leq_[b][c] && !poset.leq_[a][c])
          throw InternalError("order relation is not transitive");

  for (size_t upper = 0; upper < N; ++upper)
    for (size_t lower = 0; lower < N; ++lower) {
      if (upper == lower || !poset.leq_[lower][upper]) continue;
      bool covered = false;
      for (size_t mid = 0; mid < N && !covered; ++mid)
        if (mid != upper && mid != lower && poset.leq_[lower][mid] &&
            poset.leq_[mid][upper])
          covered = true;
      if (!covered)
        poset.covers.push_back({static_cast<int>(upper), static_cast<int>(lower),
                                poset.eps[lower] - poset.eps[upper]});
    }
  return poset;
}

GMatrix g_matrix_closed(const OrbitPoset& poset) {
  size_t N = poset.size();
  GMatrix g(N, std::vector<IntPoly>(N));
  for (size_t l = 0; l < N; ++l)
    for (size_t m = 0; m < N; ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      if (l == m) {
        g[l][m] = IntPoly(1);
        continue;
      }
      tworow::FibreShape sh = tworow::fibre_shape(poset.orbits[l], poset.orbits[m]);
      if (sh.empty())
        throw InternalError("comparable pair with empty fibre shape: " +
                            poset.orbits[l].str() + " / " + poset.orbits[m].str());
      g[l][m] = tworow::green_poly(sh.s1, sh.s2);
    }
  return g;
}

GMatrix g_matrix_counted(const OrbitPoset& poset, ffcount::CountContext& ctx) {
  size_t N = poset.size();
  GMatrix g(N, std::vector<IntPoly>(N));
  for (size_t l = 0; l < N; ++l)
    for (size_t m = 0; m < N; ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      g[l][m] = ctx.interpolate_g(poset.orbits[l], poset.orbits[m]);
      if (g[l][m].is_zero())
        throw InternalError("comparable pair counted as empty: " +
                            poset.orbits[l].str() + " / " + poset.orbits[m].str());
    }
  return g;
}

namespace {

std::string pair_name(const OrbitPoset& poset, int l, int m) {
  return poset.orbits[l].str() + " / " + poset.orbits[m].str();
}

// Shift polynomial sum_j a_j t^{(gap - j)/2} of one interior term.
IntPoly shift_poly(const std::map<int, Int>& a, int gap) {
  IntPoly out;
  for (const auto& [j, mult] : a) {
    if (mult == 0) continue;
    int num = gap - j;
    if (num < 0 || num % 2 != 0)
      throw InternalError("multiplicity shift outside the stalk identity");
    out += IntPoly::monomial(mult, num / 2);
  }
  return out;
}

// Core triangular inversion over an arbitrary down-set of pairs.
// pair_allowed(l,m) restricts which comparable pairs participate (they must
// be closed under passing to interior pairs).
ICTable deconvolve_impl(const OrbitPoset& poset, const GMatrix& g,
                        const std::function<bool(int, int)>& pair_allowed) {
  size_t N = poset.size();
  ICTable table;
  table.pairs.assign(N, std::vector<std::optional<ICPair>>(N));

  struct Job {
    int l, m, gap;
  };
  std::vector<Job> jobs;
  for (size_t l = 0; l < N; ++l)
    for (size_t m = 0; m < N; ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      if (!pair_allowed(static_cast<int>(l), static_cast<int>(m))) continue;
      if (l == m) {
        if (!(g[l][m] == IntPoly(1)))
          throw std::invalid_argument("g must be 1 on the diagonal");
        ICPair diag;
        diag.ktilde = IntPoly(1);
        diag.a[0] = 1;
        table.pairs[l][m] = std::move(diag);
        continue;
      }
      jobs.push_back({static_cast<int>(l), static_cast<int>(m),
                      poset.eps[m] - poset.eps[l]});
    }
  // induction on the eps gap; ties in canonical index order
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
    return std::tie(x.gap, x.l, x.m) < std::tie(y.gap, y.l, y.m);
  });

  for (const Job& job : jobs) {
    const int l = job.l, m = job.m, gap = job.gap;
    if (gap <= 0)
      throw InternalError("nonpositive codimension for " + pair_name(poset, l, m));
    IntPoly residual = g[l][m];
    for (size_t nu = 0; nu < N; ++nu) {
      int v = static_cast<int>(nu);
      if (v == l || v == m) continue;
      if (!poset.leq(m, v) || !poset.leq(v, l)) continue;
      const auto& a_lv = table.pairs[l][v];
      const auto& k_vm = table.pairs[v][m];
      if (!a_lv || !k_vm)
        throw InternalError("interval interior not yet solved at " +
                            pair_name(poset, l, m));
      residual -= shift_poly(a_lv->a, poset.eps[v] - poset.eps[l]) * k_vm->ktilde;
    }

    ICPair out;
    // coefficients at degree >= gap/2 are multiplicities with j <= 0
    if (!residual.is_zero()) {
      for (int deg = residual.degree(); 2 * deg >= gap; --deg) {
        const Int& coeff = residual.coeff(deg);
        if (coeff == 0) continue;
        int j = gap - 2 * deg;  // <= 0
        if (coeff < 0)
          throw InternalError("negative multiplicity for " +
                              pair_name(poset, l, m));
        if (-j > gap)
          throw InternalError("residual degree exceeds the codimension for " +
                              pair_name(poset, l, m));
        out.a[j] = coeff;
        if (j != 0) out.a[-j] = coeff;
      }
    }
    out.ktilde = residual - shift_poly(out.a, gap);
    if (out.ktilde.is_zero() || out.ktilde.coeff(0) != 1)
      throw InternalError("local IC polynomial without constant term 1 for " +
                          pair_name(poset, l, m));
    if (!out.ktilde.all_coeffs_nonnegative())
      throw InternalError("local IC polynomial with negative coefficient for " +
                          pair_name(poset, l, m));
    if (2 * out.ktilde.degree() >= gap)
      throw InternalError("local IC polynomial violates the degree bound for " +
                          pair_name(poset, l, m));
    table.pairs[l][m] = std::move(out);
  }
  return table;
}

}  // namespace

ICTable deconvolve(const OrbitPoset& poset, const GMatrix& g) {
  return deconvolve_impl(poset, g, [](int, int) { return true; });
}

ICPair deconvolve_interval(const OrbitPoset& poset, const GMatrix& g,
                           int lam_idx, int mu_idx) {
  if (!poset.leq(mu_idx, lam_idx))
    throw std::invalid_argument("deconvolve_interval needs mu <= lam");
  auto allowed = [&](int l, int m) {
    return poset.leq(l, lam_idx) && poset.leq(mu_idx, m);
  };
  ICTable table = deconvolve_impl(poset, g, allowed);
  return *table.pairs[lam_idx][mu_idx];
}

GMatrix reconstruct_g(const OrbitPoset& poset, const ICTable& table) {
  size_t N = poset.size();
  GMatrix g(N, std::vector<IntPoly>(N));
  for (size_t l = 0; l < N; ++l)
    for (size_t m = 0; m < N; ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      IntPoly acc;
      for (size_t nu = 0; nu < N; ++nu) {
        int v = static_cast<int>(nu);
        if (!poset.leq(static_cast<int>(m), v) ||
            !poset.leq(v, static_cast<int>(l)))
          continue;
        const auto& a_lv = table.pairs[l][v];
        const auto& k_vm = table.pairs[v][m];
        if (!a_lv || !k_vm)
          throw InternalError("incomplete table during reconstruction");
        acc += shift_poly(a_lv->a, poset.eps[v] - poset.eps[l]) * k_vm->ktilde;
      }
      g[l][m] = std::move(acc);
    }
  return g;
}

TworowReport verify_tworow(const DimVector& d, ffcount::CountContext& ctx,
                           const PosetOptions& opt) {
  TworowReport report;
  report.d = d;
  report.poset = build_poset(d, /*two_row_only=*/true, ctx, opt);
  const OrbitPoset& poset = report.poset;
  size_t N = poset.size();

  GMatrix g_closed = g_matrix_closed(poset);
  GMatrix g_counted = g_matrix_counted(poset, ctx);
  ICTable table = deconvolve(poset, g_counted);

  GMatrix rebuilt = reconstruct_g(poset, table);
  report.reconstruction_ok = true;
  for (size_t l = 0; l < N; ++l)
    for (size_t m = 0; m < N; ++m)
      if (rebuilt[l][m] != g_counted[l][m]) report.reconstruction_ok = false;
  if (!report.reconstruction_ok) report.consistency_ok = false;

  for (size_t l = 0; l < N; ++l) {
    for (size_t m = 0; m < N; ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      PairCheck check;
      check.lam = static_cast<int>(l);
      check.mu = static_cast<int>(m);
      const ICPair& pair = *table.pairs[l][m];
      std::ostringstream detail;

      check.ktilde_is_one = (pair.ktilde == IntPoly(1));
      if (!check.ktilde_is_one)
        detail << "ktilde = " << pair.ktilde.str() << "; ";

      Int c = tworow::c_coeff(poset.orbits[l], poset.orbits[m]);
      std::map<int, Int> expected;
      if (c != 0) expected[0] = c;
      check.a_matches_c = (pair.a == expected);
      if (!check.a_matches_c) detail << "a does not equal delta_{j,0} c; ";

      check.g_methods_agree = (g_closed[l][m] == g_counted[l][m]);
      if (!check.g_methods_agree)
        detail << "closed g " << g_closed[l][m].str() << " vs counted "
               << g_counted[l][m].str() << "; ";

      IntPoly predicted =
          tworow::predicted_g(poset.orbits[l], poset.orbits[m]);
      check.predicted_identity = (predicted == g_closed[l][m]);
      if (!check.predicted_identity)
        detail << "multiplicity-sum identity fails; ";

      check.detail = detail.str();
      if (!check.ktilde_is_one || !check.a_matches_c) report.theorem_ok = false;
      if (!check.g_methods_agree || !check.predicted_identity)
        report.consistency_ok = false;
      report.pairs.push_back(std::move(check));
    }
  }
  return report;
}

bool KostkaReport::all_ok() const {
  if (!dominance_matches_closure) return false;
  for (const auto& p : pairs)
    if (!p.ok) return false;
  return true;
}

KostkaReport kostka_crosscheck_all(int d, ffcount::CountContext& ctx,
                                   bool check_pairs) {
  KostkaReport report;
  report.d = d;
  DimVector dv(1, {d});
  OrbitPoset poset = build_poset(dv, /*two_row_only=*/false, ctx,
                                 PosetOptions{std::max(d, 10), 2, 3});
  size_t N = poset.size();

  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      bool dom = kostka::dominates(kostka::to_partition(poset.orbits[b]),
                                   kostka::to_partition(poset.orbits[a]));
      if (dom != poset.leq(static_cast<int>(a), static_cast<int>(b)))
        report.dominance_matches_closure = false;
    }

  if (check_pairs) {
    GMatrix g = g_matrix_counted(poset, ctx);
    ICTable table = deconvolve(poset, g);
    for (size_t l = 0; l < N; ++l)
      for (size_t m = 0; m < N; ++m) {
        if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
        KostkaPairCheck check;
        check.lam = kostka::to_partition(poset.orbits[l]);
        check.mu = kostka::to_partition(poset.orbits[m]);
        check.deconvolved = table.pairs[l][m]->ktilde;
        check.expected = kostka::ktilde_from_kostka(check.lam, check.mu);
        check.ok = (check.deconvolved == check.expected);
        report.pairs.push_back(std::move(check));
      }
  }
  return report;
}

KostkaPairCheck kostka_crosscheck(int d, const kostka::Partition& lam,
                                  const kostka::Partition& mu,
                                  ffcount::CountContext& ctx) {
  KostkaReport report = kostka_crosscheck_all(d, ctx, true);
  if (!report.dominance_matches_closure)
    throw InternalError("closure order differs from dominance order at d = " +
                        std::to_string(d));
  for (const auto& p : report.pairs)
    if (p.lam == lam && p.mu == mu) return p;
  throw std::invalid_argument("pair is not comparable in the closure order");
}

}  // namespace cyq::decompose
