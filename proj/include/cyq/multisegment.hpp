#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyq {

// {m}: the representative of m mod n in [0, n).
int residue(long long m, int n);
// floor(m/n) = (m - {m})/n and ceil(m/n) = (m + {-m})/n, any sign of m.
long long floor_div(long long m, int n);
long long ceil_div(long long m, int n);

// A segment [i; l): the indecomposable of length l with socle at vertex i.
// One row of the labelled Young diagram, boxes labelled i, i+1, ..., i+l-1.
struct Segment {
  int start;   // 0 <= start < n
  int length;  // >= 1
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Canonical row order: length descending, then start ascending.
bool segment_canon_less(const Segment& a, const Segment& b);

// A multiset of segments over Z/n, stored canonically. Parametrizes the
// nilpotent orbits; the empty multisegment is the unique orbit in dimension 0.
class Multisegment {
 public:
  explicit Multisegment(int modulus);                             // empty
  Multisegment(int modulus, std::vector<Segment> rows);           // sorts rows

  int modulus() const { return n_; }
  const std::vector<Segment>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int total_boxes() const;
  int max_length() const;  // 0 when empty

  // Text form "i:l,i:l,..." (canonical order); "" for the empty multisegment.
  std::string str() const;
  // Direct-sum pretty form "[i;l)+[i;l)"; "0" for empty.
  std::string direct_sum_str() const;
  static Multisegment parse(std::string_view text, int modulus);

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  // Lexicographic on the canonical row sequence; total order used for
  // dedup and deterministic listings.
  bool operator<(const Multisegment& other) const;

 private:
  int n_;
  std::vector<Segment> rows_;
};

std::ostream& operator<<(std::ostream&, const Multisegment&);

// Reduces starts mod n, validates lengths, sorts. Idempotent and insensitive
// to the input order.
Multisegment canonicalize(const std::vector<std::pair<long long, int>>& raw,
                          int modulus);

// Per-vertex box counts d_i.
struct DimVector {
  int n = 1;
  std::vector<int> counts;

  DimVector() = default;
  DimVector(int modulus, std::vector<int> c);
  int total() const;
  std::string str() const;  // "3,3"
  static DimVector parse(std::string_view text);
  friend bool operator==(const DimVector&, const DimVector&) = default;
};

DimVector dim_vector(const Multisegment& ms);

// Row lengths of the rows starting with the given label, descending:
// the partition written lambda^{(i)}.
std::vector<int> rows_starting_at(const Multisegment& ms, int start);

// All row lengths, descending: the shape of the labelled diagram.
std::vector<int> underlying_partition(const Multisegment& ms);

// Keep only the first k columns of the diagram.
Multisegment truncate(const Multisegment& ms, int k);

// Delete the first column: rows [i;l) become [i+1; l-1).
Multisegment strip_first_column(const Multisegment& ms);

// dim_vector(truncate(ms, k)) for k = 0..max_length.
std::vector<DimVector> truncation_dims(const Multisegment& ms);

// eps(ms) = sum over rows R of d_{last label of R}(ms^{<=|R|});
// the stabilizer dimension of a point of the orbit.
int epsilon_rows(const Multisegment& ms);

// dim O = sum_i d_i^2 - eps.
long long orbit_dim(const Multisegment& ms);

// Dimension of the graded partial flag variety attached to the column
// dimensions; also the degree cap used for count interpolation.
long long flag_dim(const Multisegment& ms);

// Fibre dimension of the vector bundle over the flag variety;
// flag_dim + bundle_fibre_dim = orbit_dim.
long long bundle_fibre_dim(const Multisegment& ms);

// True iff for every length m >= 1 some vertex has no row [i;m).
bool is_aperiodic(const Multisegment& ms);

// All multisegments with the given dimension vector, in canonical list
// order; with two_row_only, those with at most 2 rows.
// Throws CapExceeded when d.total() > cap.
std::vector<Multisegment> enumerate_multisegments(const DimVector& d,
                                                  bool two_row_only,
                                                  int cap = 10);

// All dimension vectors over Z/n with the given total (compositions).
std::vector<DimVector> dim_vectors_with_total(int n, int total);

}  // namespace cyq
