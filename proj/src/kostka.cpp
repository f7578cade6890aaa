#include "cyq/kostka.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyq/errors.hpp"

namespace cyq::kostka {

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d == 0 ? 1 : d);
  return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
  long long sl = std::accumulate(lam.begin(), lam.end(), 0LL);
  long long sm = std::accumulate(mu.begin(), mu.end(), 0LL);
  if (sl != sm) return false;
  long long pl = 0, pm = 0;
  size_t k = std::max(lam.size(), mu.size());
  for (size_t i = 0; i < k; ++i) {
    pl += i < lam.size() ? lam[i] : 0;
    pm += i < mu.size() ? mu[i] : 0;
    if (pl < pm) return false;
  }
  return true;
}

long long n_stat(const Partition& lam) {
  long long s = 0;
  for (size_t k = 0; k < lam.size(); ++k) s += static_cast<long long>(k) * lam[k];
  return s;
}

namespace {

// Visit all SSYT of the given shape and content; tableau passed row by row.
void for_each_ssyt(const Partition& shape, const Partition& content,
                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  long long total = std::accumulate(shape.begin(), shape.end(), 0LL);
  long long ctotal = std::accumulate(content.begin(), content.end(), 0LL);
  if (total != ctotal) return;
  std::vector<std::vector<int>> t(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
  std::vector<int> used(content.size() + 1, 0);
  int values = static_cast<int>(content.size());

  auto rec = [&](auto&& self, size_t r, int c) -> void {
    if (r == shape.size()) {
      fn(t);
      return;
    }
    size_t nr = r;
    int nc = c + 1;
    if (nc >= shape[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = (c > 0) ? t[r][c - 1] : 1;                                  // row weak
    int above = (r > 0 && c < shape[r - 1]) ? t[r - 1][c] + 1 : 1;       // col strict
    lo = std::max(lo, above);
    for (int v = lo; v <= values; ++v) {
      if (used[v] == content[v - 1]) continue;
      ++used[v];
      t[r][c] = v;
      self(self, nr, nc);
      --used[v];
    }
    t[r][c] = 0;
  };
  if (shape.empty())
    fn(t);
  else
    rec(rec, 0, 0);
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& t) {
  // rows top to bottom, each row right to left
  std::vector<int> w;
  for (const auto& row : t)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

int charge_of_standard(const std::vector<int>& word) {
  // word contains each of 1..m exactly once
  int m = static_cast<int>(word.size());
  std::vector<int> pos(m + 1, 0);
  for (int i = 0; i < m; ++i) pos[word[i]] = i;
  int charge = 0, idx = 0;
  for (int v = 2; v <= m; ++v) {
    if (pos[v] < pos[v - 1]) ++idx;
    charge += idx;
  }
  return charge;
}

}  // namespace

int charge_of_word(const std::vector<int>& word) {
  std::vector<int> w = word;
  int charge = 0;
  while (!w.empty()) {
    int maxv = *std::max_element(w.begin(), w.end());
    // extract one standard subword 1..maxv: the first 1 from the left, then
    // the first 2 to its right, and so on, wrapping around cyclically
    std::vector<bool> taken(w.size(), false);
    int cur = -1;
    std::vector<int> positions;
    for (int v = 1; v <= maxv; ++v) {
      int j = cur;
      int steps = 0;
      while (true) {
        j = (j + 1 == static_cast<int>(w.size())) ? 0 : j + 1;
        if (!taken[j] && w[j] == v) break;
        if (++steps > static_cast<int>(w.size()))
          throw std::invalid_argument("word content is not a partition");
      }
      taken[j] = true;
      positions.push_back(j);
      cur = j;
    }
    std::sort(positions.begin(), positions.end());
    std::vector<int> sub;
    for (int j : positions) sub.push_back(w[j]);
    charge += charge_of_standard(sub);
    std::vector<int> rest;
    for (size_t j = 0; j < w.size(); ++j)
      if (!taken[j]) rest.push_back(w[j]);
    w = std::move(rest);
  }
  return charge;
}

long long ssyt_count(const Partition& shape, const Partition& content) {
  long long count = 0;
  for_each_ssyt(shape, content,
                [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

IntPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  std::map<int, Int> by_charge;
  for_each_ssyt(lam, mu, [&](const std::vector<std::vector<int>>& t) {
    ++by_charge[charge_of_word(reading_word(t))];
  });
  IntPoly out;
  for (auto& [c, mult] : by_charge) out += IntPoly::monomial(mult, c);
  return out;
}

IntPoly ktilde_from_kostka(const Partition& lam, const Partition& mu) {
  IntPoly k = kostka_foulkes(lam, mu);
  if (k.is_zero()) return k;
  long long shift = n_stat(mu) - n_stat(lam);
  std::vector<Int> coeffs(static_cast<size_t>(shift) + 1, 0);
  for (int e = 0; e <= k.degree(); ++e) {
    if (k.coeff(e) == 0) continue;
    long long d = shift - e;
    if (d < 0)
      throw InternalError("Kostka-Foulkes degree exceeds the n-statistic gap");
    coeffs[static_cast<size_t>(d)] = k.coeff(e);
  }
  return IntPoly::from_coeffs(std::move(coeffs));
}

Multisegment to_multisegment(const Partition& lam) {
  std::vector<Segment> rows;
  for (int part : lam) rows.push_back({0, part});
  return Multisegment(1, std::move(rows));
}

Partition to_partition(const Multisegment& ms) {
  if (ms.modulus() != 1)
    throw std::invalid_argument("partition dictionary needs modulus 1");
  Partition out;
  for (const Segment& s : ms.rows()) out.push_back(s.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace cyq::kostka
