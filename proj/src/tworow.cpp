#include "cyq/tworow.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyq/errors.hpp"

namespace cyq::tworow {

TwoRowPair::TwoRowPair(int n_, int i1_, int l1_, std::optional<int> i2_, int l2_)
    : n(n_), i1(i1_), l1(l1_), i2(i2_), l2(l2_) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  if (l2 < 0 || l1 < l2) throw std::invalid_argument("need l1 >= l2 >= 0");
  if (l1 == 0 && l2 != 0) throw std::invalid_argument("need l1 >= l2");
  if (i1 < 0 || i1 >= n) throw std::invalid_argument("i1 out of range");
  if (l2 >= 1 && !i2) throw std::invalid_argument("i2 required when l2 >= 1");
  if (i2 && (*i2 < 0 || *i2 >= n)) throw std::invalid_argument("i2 out of range");
}

Multisegment TwoRowPair::to_multisegment() const {
  std::vector<Segment> rows;
  if (l1 >= 1) rows.push_back({i1, l1});
  if (l2 >= 1) rows.push_back({*i2, l2});
  return Multisegment(n, std::move(rows));
}

TwoRowPair TwoRowPair::from_multisegment(const Multisegment& ms) {
  auto p = try_from(ms);
  if (!p) throw std::invalid_argument("multisegment has more than two rows");
  return *p;
}

std::optional<TwoRowPair> TwoRowPair::try_from(const Multisegment& ms) {
  const auto& rows = ms.rows();
  if (rows.size() > 2) return std::nullopt;
  if (rows.empty()) return TwoRowPair(ms.modulus(), 0, 0, std::nullopt, 0);
  if (rows.size() == 1)
    return TwoRowPair(ms.modulus(), rows[0].start, rows[0].length, std::nullopt, 0);
  return TwoRowPair(ms.modulus(), rows[0].start, rows[0].length, rows[1].start,
                    rows[1].length);
}

int epsilon_closed(const TwoRowPair& p) {
  int n = p.n;
  int i2 = p.i2.value_or(p.i1);
  long long eps = ceil_div(p.l1, n) + ceil_div(p.l2, n) +
                  ceil_div(p.l2 - residue(p.i1 - i2 + p.l1 - 1, n), n) +
                  ceil_div(p.l2 - residue(p.i1 - i2, n), n);
  return static_cast<int>(eps);
}

namespace {

// One instantiated way of writing lam as [i1;l1)+[i2;l2), l1 >= l2.
struct Writing {
  int i1, l1, i2, l2;
};

std::vector<Writing> writings_of(const Multisegment& lam) {
  int n = lam.modulus();
  const auto& rows = lam.rows();
  std::vector<Writing> out;
  if (rows.size() >= 3) throw std::invalid_argument("not a two-row multisegment");
  if (rows.size() == 2) {
    out.push_back({rows[0].start, rows[0].length, rows[1].start, rows[1].length});
    if (rows[0].length == rows[1].length && rows[0].start != rows[1].start)
      out.push_back({rows[1].start, rows[1].length, rows[0].start, rows[0].length});
  } else {
    int i1 = rows.empty() ? 0 : rows[0].start;
    int l1 = rows.empty() ? 0 : rows[0].length;
    for (int j = 0; j < n; ++j) out.push_back({i1, l1, j, 0});
  }
  return out;
}

// Ways of reading mu as [i1;m1)+[i2;m2) on the residue pair of a writing.
std::vector<std::pair<int, int>> mu_assignments(const Multisegment& mu,
                                                const Writing& w) {
  const auto& rows = mu.rows();
  std::vector<std::pair<int, int>> out;
  if (rows.size() > 2) throw std::invalid_argument("not a two-row multisegment");
  if (rows.size() == 2) {
    int a = rows[0].start, ma = rows[0].length;
    int b = rows[1].start, mb = rows[1].length;
    if (a == w.i1 && b == w.i2) out.emplace_back(ma, mb);
    if (b == w.i1 && a == w.i2 && !(a == b && ma == mb)) out.emplace_back(mb, ma);
  } else if (rows.size() == 1) {
    if (rows[0].start == w.i1) out.emplace_back(rows[0].length, 0);
    if (rows[0].start == w.i2) out.emplace_back(0, rows[0].length);
  }
  return out;
}

bool cong_a(const Writing& w, int m1, int m2, int n) {
  return residue(m1 - w.l1, n) == 0 && residue(m2 - w.l2, n) == 0;
}

bool cong_b(const Writing& w, int m1, int m2, int n) {
  return residue(m1 - (w.i2 - w.i1 + w.l2), n) == 0 &&
         residue(m2 - (w.i1 - w.i2 + w.l1), n) == 0;
}

// Necessary membership conditions (interlacing with l2, plus congruence).
bool membership_necessary(const Writing& w, int m1, int m2, int n) {
  return m1 + m2 == w.l1 + w.l2 && w.l1 >= m1 && m1 >= w.l2 &&
         (cong_a(w, m1, m2, n) || cong_b(w, m1, m2, n));
}

// Exact membership criterion for mu != lam.
bool membership_exact(const Writing& w, int m1, int m2, int n) {
  return m1 + m2 == w.l1 + w.l2 && w.l1 >= m1 &&
         m1 >= w.l2 + residue(w.i2 - w.i1, n) &&
         (cong_a(w, m1, m2, n) || cong_b(w, m1, m2, n));
}

int family_s(const Writing& w, int n) {
  int A = residue(w.i2 - w.i1, n);
  int B = residue(w.i1 - w.i2 + w.l1 - w.l2, n);
  int num = w.l1 - w.l2 - A - B;
  if (residue(num, n) != 0)
    throw InternalError("family s is not divisible by the modulus");
  return num / n;
}

FibreShape shape_of(const Writing& w, int m1, int m2, int n) {
  int A = residue(w.i2 - w.i1, n);
  FibreShape sh;
  sh.s1 = static_cast<int>(floor_div(m1 - w.l2 - A, n));
  sh.s2 = static_cast<int>(floor_div(m2 - w.l2, n));
  sh.s = family_s(w, n);
  return sh;
}

void require_same_modulus(const Multisegment& a, const Multisegment& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("moduli differ");
}

}  // namespace

LeqResult leq_tworow(const Multisegment& lam, const Multisegment& mu) {
  require_same_modulus(lam, mu);
  if (dim_vector(lam) != dim_vector(mu)) return LeqResult::grading_mismatch;
  if (lam == mu) return LeqResult::leq;
  int n = lam.modulus();
  for (const Writing& w : writings_of(lam))
    for (auto [m1, m2] : mu_assignments(mu, w))
      if (membership_exact(w, m1, m2, n)) return LeqResult::leq;
  return LeqResult::not_leq;
}

LeqResult leq_tworow(const TwoRowPair& lam, const TwoRowPair& mu) {
  return leq_tworow(lam.to_multisegment(), mu.to_multisegment());
}

FibreShape fibre_shape(const Multisegment& lam, const Multisegment& mu) {
  require_same_modulus(lam, mu);
  if (lam == mu)
    throw std::invalid_argument("fibre shape is not defined on the diagonal");
  int n = lam.modulus();
  std::vector<FibreShape> shapes;
  for (const Writing& w : writings_of(lam))
    for (auto [m1, m2] : mu_assignments(mu, w))
      if (membership_necessary(w, m1, m2, n)) shapes.push_back(shape_of(w, m1, m2, n));
  if (shapes.empty())
    throw std::invalid_argument("pair does not satisfy the membership conditions");
  const FibreShape* first_nonempty = nullptr;
  bool any_empty = false;
  for (const FibreShape& sh : shapes) {
    if (sh.empty()) {
      any_empty = true;
      continue;
    }
    if (!first_nonempty) {
      first_nonempty = &sh;
    } else if (!(sh == *first_nonempty ||
                 (sh.s1 == first_nonempty->s2 && sh.s2 == first_nonempty->s1 &&
                  sh.s == first_nonempty->s))) {
      throw InternalError("fibre shape depends on the chosen writing: " +
                          lam.str() + " / " + mu.str());
    }
  }
  if (first_nonempty && any_empty)
    throw InternalError("writings disagree on fibre emptiness: " + lam.str() +
                        " / " + mu.str());
  if (first_nonempty) {
    FibreShape sh = *first_nonempty;
    if (sh.s1 + sh.s2 != sh.s)
      throw InternalError("fibre shape parts do not sum to s: " + lam.str() +
                          " / " + mu.str());
    return sh;
  }
  return shapes.front();  // empty fibre
}

FibreShape fibre_shape(const TwoRowPair& lam, const TwoRowPair& mu) {
  return fibre_shape(lam.to_multisegment(), mu.to_multisegment());
}

std::optional<std::pair<int, int>> strip_reduce(const Multisegment& lam,
                                                const Multisegment& mu) {
  require_same_modulus(lam, mu);
  if (lam == mu)
    throw std::invalid_argument("strip_reduce is not defined on the diagonal");
  int n = lam.modulus();
  for (const Writing& w : writings_of(lam)) {
    for (auto [m1, m2] : mu_assignments(mu, w)) {
      if (!membership_necessary(w, m1, m2, n)) continue;
      bool a = cong_a(w, m1, m2, n);
      bool b = cong_b(w, m1, m2, n);
      // stage 1: the first l2 columns are forced
      int M1 = m1 - w.l2;
      int M2 = m2 - w.l2;
      if (M1 < 0 || M2 < 0) return std::nullopt;
      // stage 2: forced initial steps until both rows start together
      int A = residue(w.i2 - w.i1, n);
      M1 -= A;
      if (M1 < 0) return std::nullopt;
      // stage 3: forced final steps strip the row ending with lam's last label
      int B = residue(w.i1 - w.i2 + w.l1 - w.l2, n);
      if (a && b) {
        if (B != 0)
          throw InternalError("both congruences hold but B != 0: " + lam.str() +
                              " / " + mu.str());
      } else if (a) {
        M1 -= B;
      } else {
        M2 -= B;
      }
      if (M1 < 0 || M2 < 0) return std::nullopt;
      if (M1 % n != 0 || M2 % n != 0)
        throw InternalError("stripped rows not divisible by modulus: " +
                            lam.str() + " / " + mu.str());
      return std::make_pair(M1 / n, M2 / n);
    }
  }
  throw std::invalid_argument("pair does not satisfy the membership conditions");
}

IntPoly green_poly(int s1, int s2) {
  if (s1 < 0 || s2 < 0)
    throw std::invalid_argument("green_poly needs nonnegative block sizes");
  int s = s1 + s2;
  std::vector<Int> coeffs;
  for (int k = 0; k <= std::min(s1, s2); ++k)
    coeffs.push_back(binomial(s, k) - binomial(s, k - 1));
  return IntPoly::from_coeffs(std::move(coeffs));
}

int TwoRowPoset::index_of(const Multisegment& ms) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].ms == ms) return static_cast<int>(i);
  return -1;
}

TwoRowPoset build_tworow_poset(const TwoRowPair& lam) {
  TwoRowPoset poset;
  poset.root = lam;
  Multisegment root = lam.to_multisegment();
  int n = lam.n;

  // Collect nodes family by family.
  std::set<Multisegment> node_set;
  node_set.insert(root);
  struct RawFamily {
    Writing w;
    FamilyCase kind;
    int s;
    std::vector<Multisegment> members;
  };
  std::vector<RawFamily> raw_families;
  for (const Writing& w : writings_of(root)) {
    // for equal-length rows the swapped writing names the same family
    if (w.l1 == w.l2 && !raw_families.empty()) break;
    RawFamily fam;
    fam.w = w;
    int A = residue(w.i2 - w.i1, n);
    bool same = (w.i1 == w.i2);
    bool cong = (residue(w.l1 - w.l2 - (w.i2 - w.i1), n) == 0);
    fam.kind = same ? (residue(w.l1 - w.l2, n) == 0 ? FamilyCase::chain_codim2
                                                    : FamilyCase::chain_same)
                    : (cong ? FamilyCase::chain_swapped : FamilyCase::ladder);
    fam.s = family_s(w, n);
    fam.members.push_back(root);
    for (int m1 = w.l2 + A; m1 <= w.l1; ++m1) {
      int m2 = w.l1 + w.l2 - m1;
      if (!membership_exact(w, m1, m2, n)) continue;
      std::vector<Segment> rows;
      if (m1 >= 1) rows.push_back({w.i1, m1});
      if (m2 >= 1) rows.push_back({w.i2, m2});
      Multisegment mu(n, std::move(rows));
      if (mu == root) continue;
      fam.members.push_back(mu);
      node_set.insert(mu);
    }
    raw_families.push_back(std::move(fam));
  }

  // Canonical node listing with attributes.
  int root_s = raw_families.empty() ? 0 : raw_families.front().s;
  for (const Multisegment& ms : node_set) {
    PosetNode node{ms, FibreShape{}, epsilon_rows(ms), 0};
    if (ms == root)
      node.shape = FibreShape{std::max(root_s, 0), 0, std::max(root_s, 0)};
    else
      node.shape = fibre_shape(root, ms);
    poset.nodes.push_back(std::move(node));
  }
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [](const PosetNode& a, const PosetNode& b) { return a.ms < b.ms; });

  int root_eps = epsilon_rows(root);
  for (const PosetNode& node : poset.nodes)
    if (node.ms != root && node.eps <= root_eps)
      throw InternalError("eps does not increase strictly below the root");

  // Covering relations within the node set.
  size_t N = poset.nodes.size();
  std::vector<std::vector<bool>> below(N, std::vector<bool>(N, false));
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      below[a][b] = (a == b) || leq_tworow(poset.nodes[b].ms,
                                           poset.nodes[a].ms) == LeqResult::leq;
  for (size_t lower = 0; lower < N; ++lower) {
    for (size_t upper = 0; upper < N; ++upper) {
      if (lower == upper || !below[lower][upper]) continue;
      bool covered = false;
      for (size_t c = 0; c < N && !covered; ++c)
        if (c != lower && c != upper && below[lower][c] && below[c][upper])
          covered = true;
      if (!covered)
        poset.edges.push_back({static_cast<int>(upper), static_cast<int>(lower),
                               poset.nodes[lower].eps - poset.nodes[upper].eps});
    }
  }
  std::sort(poset.edges.begin(), poset.edges.end(),
            [](const PosetEdge& x, const PosetEdge& y) {
              return std::tie(x.parent, x.child) < std::tie(y.parent, y.child);
            });

  // Depth as cover-graph distance from the root.
  int root_idx = poset.index_of(root);
  std::vector<int> depth(N, -1);
  depth[root_idx] = 0;
  std::vector<int> queue{root_idx};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (const PosetEdge& e : poset.edges) {
      if (e.parent != u || depth[e.child] >= 0) continue;
      depth[e.child] = depth[u] + 1;
      queue.push_back(e.child);
    }
  }
  for (size_t i = 0; i < N; ++i) poset.nodes[i].depth = depth[i];

  for (const RawFamily& raw : raw_families) {
    PosetFamily fam;
    fam.i1 = raw.w.i1;
    fam.i2 = raw.w.i2;
    fam.kind = raw.kind;
    fam.s = raw.s;
    std::set<int> ids;
    for (const Multisegment& ms : raw.members) ids.insert(poset.index_of(ms));
    fam.node_ids.assign(ids.begin(), ids.end());
    poset.families.push_back(std::move(fam));
  }
  return poset;
}

std::vector<Multisegment> interval(const Multisegment& lam,
                                   const Multisegment& mu) {
  TwoRowPoset poset = build_tworow_poset(TwoRowPair::from_multisegment(lam));
  std::vector<Multisegment> out;
  for (const PosetNode& node : poset.nodes)
    if (leq_tworow(node.ms, mu) == LeqResult::leq) out.push_back(node.ms);
  return out;
}

KSpecial k_and_special(const Multisegment& lam, const Multisegment& mu,
                       const std::vector<Multisegment>& interval_nodes) {
  auto k_of = [&](const Multisegment& nu) {
    if (nu == lam) return 0;
    FibreShape sh = fibre_shape(lam, nu);
    if (sh.empty())
      throw std::invalid_argument("k is undefined for an incomparable pair");
    return std::min(sh.s1, sh.s2);
  };
  KSpecial out;
  out.k = k_of(mu);
  out.special = true;
  for (const Multisegment& nu : interval_nodes) {
    if (nu == mu) continue;
    if (k_of(nu) == out.k) {
      out.special = false;
      break;
    }
  }
  if (out.special && mu != lam) {
    int gap = epsilon_rows(mu) - epsilon_rows(lam);
    if (gap != 2 * out.k)
      throw InternalError("special element with eps gap != 2k: " + lam.str() +
                          " / " + mu.str());
  }
  return out;
}

Int c_coeff(const Multisegment& lam, const Multisegment& mu) {
  if (lam == mu) return 1;
  if (leq_tworow(lam, mu) != LeqResult::leq)
    throw std::invalid_argument("c coefficient needs mu <= lam");
  KSpecial ks = k_and_special(lam, mu, interval(lam, mu));
  if (!ks.special) return 0;
  int s = fibre_shape(lam, mu).s;
  return binomial(s, ks.k) - binomial(s, ks.k - 1);
}

KSpecial k_and_special(const TwoRowPair& lam, const TwoRowPair& mu,
                       const std::vector<Multisegment>& interval_nodes) {
  return k_and_special(lam.to_multisegment(), mu.to_multisegment(),
                       interval_nodes);
}

Int c_coeff(const TwoRowPair& lam, const TwoRowPair& mu) {
  return c_coeff(lam.to_multisegment(), mu.to_multisegment());
}

IntPoly predicted_g(const Multisegment& lam, const Multisegment& mu) {
  if (leq_tworow(lam, mu) != LeqResult::leq)
    throw std::invalid_argument("predicted_g needs mu <= lam");
  int lam_eps = epsilon_rows(lam);
  IntPoly acc;
  for (const Multisegment& nu : interval(lam, mu)) {
    Int c = c_coeff(lam, nu);
    if (c == 0) continue;
    int gap = epsilon_rows(nu) - lam_eps;
    if (gap % 2 != 0)
      throw InternalError("nonzero multiplicity at odd eps gap: " + lam.str() +
                          " / " + nu.str());
    acc += IntPoly::monomial(c, gap / 2);
  }
  return acc;
}

IntPoly predicted_g(const TwoRowPair& lam, const TwoRowPair& mu) {
  return predicted_g(lam.to_multisegment(), mu.to_multisegment());
}

}  // namespace cyq::tworow
