#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyq/bigint.hpp"
#include "cyq/intpoly.hpp"
#include "cyq/multisegment.hpp"

namespace cyq::tworow {

// A multisegment with at most two rows, written [i1;l1) + [i2;l2) with
// l1 >= l2 >= 0. When l2 = 0 the second start is unconstrained and may be
// left unset; instantiating it to any vertex gives the same orbit.
struct TwoRowPair {
  int n = 1;
  int i1 = 0;
  int l1 = 0;
  std::optional<int> i2;
  int l2 = 0;

  TwoRowPair() = default;
  TwoRowPair(int n, int i1, int l1, std::optional<int> i2, int l2);

  Multisegment to_multisegment() const;
  static TwoRowPair from_multisegment(const Multisegment& ms);  // throws >2 rows
  static std::optional<TwoRowPair> try_from(const Multisegment& ms);
};

// Shape (s1,s2) of the two-block Springer fibre attached to a comparable
// pair, with s = s1+s2; s1 = -1 encodes the empty fibre.
struct FibreShape {
  int s1 = 0, s2 = 0, s = 0;
  bool empty() const { return s1 < 0; }
  friend bool operator==(const FibreShape&, const FibreShape&) = default;
};

enum class LeqResult { leq, not_leq, grading_mismatch };

// eps from the four-ceiling closed form; equals epsilon_rows of the
// corresponding multisegment.
int epsilon_closed(const TwoRowPair& p);

// Closure comparison for two-row orbits via the membership criterion
// (length interlacing plus one of two congruences).
LeqResult leq_tworow(const Multisegment& lam, const Multisegment& mu);
LeqResult leq_tworow(const TwoRowPair& lam, const TwoRowPair& mu);

// Fibre shape of the resolution of lam over a point of mu, mu != lam,
// by the closed floor formulas.
FibreShape fibre_shape(const Multisegment& lam, const Multisegment& mu);
FibreShape fibre_shape(const TwoRowPair& lam, const TwoRowPair& mu);

// The same shape computed by literal diagram surgery (column strip, forced
// initial steps, forced final steps); an independent code path from
// fibre_shape. nullopt encodes the empty fibre.
std::optional<std::pair<int, int>> strip_reduce(const Multisegment& lam,
                                                const Multisegment& mu);

// Green polynomial of the two-block Springer fibre:
// sum_{k<=min(s1,s2)} (C(s,k) - C(s,k-1)) t^k, s = s1+s2.
IntPoly green_poly(int s1, int s2);

// The four closure-poset shapes of a fixed residue family.
enum class FamilyCase {
  chain_codim2,   // i1 == i2, l1 == l2 mod n: chain, codim-2 links
  chain_same,     // i1 == i2, l1 != l2 mod n: chain, codim-1 links
  chain_swapped,  // i1 != i2, l1-l2 == i2-i1 mod n: chain, codim-1 links
  ladder          // i1 != i2, otherwise: two-column ladder, codim-1 covers
};

struct PosetNode {
  Multisegment ms;
  FibreShape shape;  // relative to the root
  int eps = 0;
  int depth = 0;  // cover-graph distance from the root
};

struct PosetEdge {
  int parent = 0, child = 0;  // node indices; child lies below parent
  int codim = 0;              // eps(child) - eps(parent)
};

struct PosetFamily {
  int i1 = 0, i2 = 0;
  FamilyCase kind;
  int s = 0;  // family fibre-shape total; may be negative for {root}-only
  std::vector<int> node_ids;
};

struct TwoRowPoset {
  TwoRowPair root;
  std::vector<PosetNode> nodes;   // canonical list order
  std::vector<PosetEdge> edges;   // covering relations
  std::vector<PosetFamily> families;
  int index_of(const Multisegment& ms) const;  // -1 if absent
};

// All mu <= lam with at most two rows, their covering relations and the
// per-family case classification.
TwoRowPoset build_tworow_poset(const TwoRowPair& lam);

// Interval [mu, lam] in the two-row poset, canonical order.
std::vector<Multisegment> interval(const Multisegment& lam,
                                   const Multisegment& mu);

struct KSpecial {
  int k = 0;
  bool special = false;
};

// k(mu) = min(s1,s2) relative to lam; mu is special when no other element
// of the interval shares its k value.
KSpecial k_and_special(const Multisegment& lam, const Multisegment& mu,
                       const std::vector<Multisegment>& interval_nodes);
KSpecial k_and_special(const TwoRowPair& lam, const TwoRowPair& mu,
                       const std::vector<Multisegment>& interval_nodes);

// c_{lam,mu}: 1 on the diagonal; C(s,k) - C(s,k-1) for special mu; else 0.
Int c_coeff(const Multisegment& lam, const Multisegment& mu);
Int c_coeff(const TwoRowPair& lam, const TwoRowPair& mu);

// g predicted from the multiplicity coefficients:
// sum over nu in [mu,lam] of c_{lam,nu} t^{(eps(nu)-eps(lam))/2}.
// Equals green_poly(fibre_shape(lam,mu)) for mu < lam and 1 on the diagonal.
IntPoly predicted_g(const Multisegment& lam, const Multisegment& mu);
IntPoly predicted_g(const TwoRowPair& lam, const TwoRowPair& mu);

}  // namespace cyq::tworow
