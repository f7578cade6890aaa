#include "cyq/multisegment.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyq/errors.hpp"

namespace cyq {

int residue(long long m, int n) {
  assert(n >= 1);
  long long r = m % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

long long floor_div(long long m, int n) { return (m - residue(m, n)) / n; }

long long ceil_div(long long m, int n) { return (m + residue(-m, n)) / n; }

bool segment_canon_less(const Segment& a, const Segment& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.start < b.start;
}

Multisegment::Multisegment(int modulus) : n_(modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
}

Multisegment::Multisegment(int modulus, std::vector<Segment> rows)
    : n_(modulus), rows_(std::move(rows)) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  for (const Segment& s : rows_) {
    if (s.length < 1) throw std::invalid_argument("segment length must be >= 1");
    if (s.start < 0 || s.start >= n_)
      throw std::invalid_argument("segment start out of range");
  }
  std::sort(rows_.begin(), rows_.end(), segment_canon_less);
}

int Multisegment::total_boxes() const {
  int t = 0;
  for (const Segment& s : rows_) t += s.length;
  return t;
}

int Multisegment::max_length() const {
  return rows_.empty() ? 0 : rows_.front().length;
}

std::string Multisegment::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i].start);
    out += ':';
    out += std::to_string(rows_[i].length);
  }
  return out;
}

std::string Multisegment::direct_sum_str() const {
  if (rows_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += "+";
    out += "[" + std::to_string(rows_[i].start) + ";" +
           std::to_string(rows_[i].length) + ")";
  }
  return out;
}

Multisegment Multisegment::parse(std::string_view text, int modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<std::pair<long long, int>> raw;
  if (text.empty()) return Multisegment(modulus);
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view pair = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    size_t colon = pair.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("bad multisegment '" + std::string(text) +
                                  "': expected i:l pairs");
    long long start = 0;
    int length = 0;
    auto sv1 = pair.substr(0, colon);
    auto sv2 = pair.substr(colon + 1);
    auto r1 = std::from_chars(sv1.data(), sv1.data() + sv1.size(), start);
    auto r2 = std::from_chars(sv2.data(), sv2.data() + sv2.size(), length);
    if (r1.ec != std::errc() || r1.ptr != sv1.data() + sv1.size() ||
        r2.ec != std::errc() || r2.ptr != sv2.data() + sv2.size())
      throw std::invalid_argument("bad multisegment '" + std::string(text) +
                                  "': expected i:l pairs");
    if (length < 1)
      throw std::invalid_argument("bad multisegment '" + std::string(text) +
                                  "': lengths must be >= 1");
    raw.emplace_back(start, length);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return canonicalize(raw, modulus);
}

bool Multisegment::operator<(const Multisegment& other) const {
  return std::lexicographical_compare(rows_.begin(), rows_.end(),
                                      other.rows_.begin(), other.rows_.end(),
                                      segment_canon_less);
}

std::ostream& operator<<(std::ostream& os, const Multisegment& ms) {
  return os << ms.str();
}

Multisegment canonicalize(const std::vector<std::pair<long long, int>>& raw,
                          int modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<Segment> rows;
  rows.reserve(raw.size());
  for (auto [start, length] : raw) {
    if (length < 1) throw std::invalid_argument("segment length must be >= 1");
    rows.push_back(Segment{residue(start, modulus), length});
  }
  return Multisegment(modulus, std::move(rows));
}

DimVector::DimVector(int modulus, std::vector<int> c)
    : n(modulus), counts(std::move(c)) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  if (static_cast<int>(counts.size()) != n)
    throw std::invalid_argument("dim vector length must equal modulus");
  for (int x : counts)
    if (x < 0) throw std::invalid_argument("dim vector entries must be >= 0");
}

int DimVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string DimVector::str() const {
  std::string out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

DimVector DimVector::parse(std::string_view text) {
  std::vector<int> counts;
  size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("empty dim vector");
  while (true) {
    size_t comma = text.find(',', pos);
    auto sv = text.substr(pos, comma == std::string_view::npos
                                   ? std::string_view::npos
                                   : comma - pos);
    int v = 0;
    auto r = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (r.ec != std::errc() || r.ptr != sv.data() + sv.size() || v < 0)
      throw std::invalid_argument("bad dim vector '" + std::string(text) + "'");
    counts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  int n = static_cast<int>(counts.size());
  return DimVector(n, std::move(counts));
}

std::vector<int> rows_starting_at(const Multisegment& ms, int start) {
  std::vector<int> out;
  for (const Segment& s : ms.rows())
    if (s.start == start) out.push_back(s.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> underlying_partition(const Multisegment& ms) {
  std::vector<int> out;
  for (const Segment& s : ms.rows()) out.push_back(s.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

DimVector dim_vector(const Multisegment& ms) {
  std::vector<int> counts(ms.modulus(), 0);
  for (const Segment& s : ms.rows())
    for (int j = 0; j < s.length; ++j) ++counts[residue(s.start + j, ms.modulus())];
  return DimVector(ms.modulus(), std::move(counts));
}

Multisegment truncate(const Multisegment& ms, int k) {
  std::vector<Segment> rows;
  for (const Segment& s : ms.rows())
    if (std::min(s.length, k) >= 1) rows.push_back({s.start, std::min(s.length, k)});
  return Multisegment(ms.modulus(), std::move(rows));
}

Multisegment strip_first_column(const Multisegment& ms) {
  std::vector<Segment> rows;
  for (const Segment& s : ms.rows())
    if (s.length >= 2)
      rows.push_back({residue(s.start + 1, ms.modulus()), s.length - 1});
  return Multisegment(ms.modulus(), std::move(rows));
}

std::vector<DimVector> truncation_dims(const Multisegment& ms) {
  std::vector<DimVector> out;
  out.reserve(ms.max_length() + 1);
  std::vector<int> counts(ms.modulus(), 0);
  out.emplace_back(ms.modulus(), counts);
  for (int k = 1; k <= ms.max_length(); ++k) {
    for (const Segment& s : ms.rows())
      if (s.length >= k) ++counts[residue(s.start + k - 1, ms.modulus())];
    out.emplace_back(ms.modulus(), counts);
  }
  return out;
}

int epsilon_rows(const Multisegment& ms) {
  std::map<int, DimVector> by_len;  // truncation dims per row length
  int eps = 0;
  for (const Segment& s : ms.rows()) {
    auto it = by_len.find(s.length);
    if (it == by_len.end())
      it = by_len.emplace(s.length, dim_vector(truncate(ms, s.length))).first;
    eps += it->second.counts[residue(s.start + s.length - 1, ms.modulus())];
  }
  return eps;
}

namespace {
long long choose2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }
}  // namespace

long long orbit_dim(const Multisegment& ms) {
  DimVector d = dim_vector(ms);
  long long sq = 0;
  for (int c : d.counts) sq += static_cast<long long>(c) * c;
  return sq - epsilon_rows(ms);
}

long long flag_dim(const Multisegment& ms) {
  auto dims = truncation_dims(ms);
  const DimVector& d = dims.back();
  long long total = 0;
  for (int i = 0; i < ms.modulus(); ++i) {
    total += choose2(d.counts[i]);
    for (size_t k = 1; k < dims.size(); ++k)
      total -= choose2(dims[k].counts[i] - dims[k - 1].counts[i]);
  }
  return total;
}

long long bundle_fibre_dim(const Multisegment& ms) {
  auto dims = truncation_dims(ms);
  const DimVector& d = dims.back();
  long long total = 0;
  for (int i = 0; i < ms.modulus(); ++i) {
    total += choose2(d.counts[i]);
    for (size_t k = 1; k < dims.size(); ++k)
      total += choose2(dims[k].counts[i] - dims[k - 1].counts[i] + 1);
  }
  return total - epsilon_rows(ms);
}

bool is_aperiodic(const Multisegment& ms) {
  std::map<int, int> starts_per_length;  // length -> number of distinct starts
  std::map<std::pair<int, int>, bool> seen;
  for (const Segment& s : ms.rows()) {
    if (!seen.emplace(std::make_pair(s.length, s.start), true).second) continue;
    ++starts_per_length[s.length];
  }
  for (auto [len, cnt] : starts_per_length)
    if (cnt == ms.modulus()) return false;
  return true;
}

namespace {

struct EnumState {
  int n;
  std::vector<int> remaining;
  int remaining_total;
  size_t max_rows;
  std::vector<Segment> rows;
  std::vector<Multisegment>* out;

  bool try_subtract(int start, int length) {
    for (int j = 0; j < length; ++j) {
      int r = residue(start + j, n);
      if (remaining[r] == 0) {
        for (int u = 0; u < j; ++u) ++remaining[residue(start + u, n)];
        return false;
      }
      --remaining[r];
    }
    remaining_total -= length;
    return true;
  }

  void add_back(int start, int length) {
    for (int j = 0; j < length; ++j) ++remaining[residue(start + j, n)];
    remaining_total += length;
  }

  void rec(int prev_len, int prev_start) {
    if (remaining_total == 0) {
      out->emplace_back(n, rows);
      return;
    }
    if (rows.size() >= max_rows) return;
    for (int len = std::min(prev_len, remaining_total); len >= 1; --len) {
      int start_from = (len == prev_len) ? prev_start : 0;
      for (int start = start_from; start < n; ++start) {
        if (!try_subtract(start, len)) continue;
        rows.push_back({start, len});
        rec(len, start);
        rows.pop_back();
        add_back(start, len);
      }
    }
  }
};

}  // namespace

std::vector<Multisegment> enumerate_multisegments(const DimVector& d,
                                                  bool two_row_only, int cap) {
  if (d.total() > cap) {
    std::ostringstream msg;
    msg << "enumeration cap exceeded: total " << d.total() << " > cap " << cap;
    throw CapExceeded(msg.str());
  }
  std::vector<Multisegment> out;
  EnumState st{d.n,
               d.counts,
               d.total(),
               two_row_only ? size_t{2} : size_t{SIZE_MAX},
               {},
               &out};
  st.rec(st.remaining_total == 0 ? 1 : st.remaining_total, 0);
  return out;
}

std::vector<DimVector> dim_vectors_with_total(int n, int total) {
  std::vector<DimVector> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[pos] = rest;
      out.emplace_back(n, cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace cyq
