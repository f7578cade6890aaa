#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyq/errors.hpp"
#include "cyq/multisegment.hpp"

using namespace cyq;

TEST_SUITE_BEGIN("multisegment");

TEST_CASE("residue and rounded division") {
  CHECK(residue(-1, 3) == 2);
  CHECK(residue(5, 2) == 1);
  CHECK(residue(-6, 3) == 0);
  for (int n = 1; n <= 5; ++n)
    for (long long m = -20; m <= 20; ++m) {
      CHECK(floor_div(m, n) == (m - residue(m, n)) / n);
      CHECK(ceil_div(m, n) == (m + residue(-m, n)) / n);
      CHECK(floor_div(m, n) * n + residue(m, n) == m);
      CHECK(ceil_div(m, n) >= floor_div(m, n));
    }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize({{0, 1}}, 2).str() == "0:1");
  CHECK(canonicalize({{0, 1}, {2, 4}}, 2).str() == "0:4,0:1");
  // the running example over Z/3
  Multisegment ex = canonicalize({{2, 2}, {0, 2}, {1, 4}, {1, 1}, {0, 2}}, 3);
  CHECK(ex.str() == "1:4,0:2,0:2,2:2,1:1");

  CHECK_THROWS_AS(canonicalize({{0, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{0, -3}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{0, 1}}, 0), std::invalid_argument);

  SUBCASE("idempotent and order-insensitive") {
    std::vector<std::pair<long long, int>> raw = {
        {2, 2}, {0, 2}, {1, 4}, {1, 1}, {0, 2}};
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(raw.begin(), raw.end(), rng);
      CHECK(canonicalize(raw, 3) == ex);
    }
    std::vector<std::pair<long long, int>> back;
    for (const Segment& s : ex.rows()) back.emplace_back(s.start, s.length);
    CHECK(canonicalize(back, 3) == ex);
  }
}

TEST_CASE("parse round trip and grammar errors") {
  CHECK(Multisegment::parse("", 2).empty());
  CHECK(Multisegment::parse("0:6", 2).str() == "0:6");
  CHECK(Multisegment::parse("2:4,0:1", 2).str() == "0:4,0:1");
  CHECK(Multisegment::parse("-1:2", 3).str() == "2:2");
  CHECK_THROWS_AS(Multisegment::parse("0:0", 2), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("0", 2), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("0:1,", 2), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("a:1", 2), std::invalid_argument);
}

TEST_CASE("dim vector and derived views") {
  CHECK(dim_vector(Multisegment::parse("0:1", 2)).counts ==
        std::vector<int>{1, 0});
  Multisegment ex = Multisegment::parse("1:4,0:2,0:2,2:2,1:1", 3);
  CHECK(rows_starting_at(ex, 0) == std::vector<int>{2, 2});
  CHECK(rows_starting_at(ex, 1) == std::vector<int>{4, 1});
  CHECK(rows_starting_at(ex, 2) == std::vector<int>{2});
  CHECK(underlying_partition(ex) == std::vector<int>{4, 2, 2, 2, 1});
  // box-labelling recount
  std::vector<int> counts(3, 0);
  for (const Segment& s : ex.rows())
    for (int j = 0; j < s.length; ++j) ++counts[residue(s.start + j, 3)];
  CHECK(counts == std::vector<int>{4, 5, 2});
  CHECK(dim_vector(ex).counts == counts);
  CHECK(dim_vector(ex).total() == ex.total_boxes());
}

TEST_CASE("truncation") {
  Multisegment ms = Multisegment::parse("0:4,0:1", 2);
  CHECK(truncate(Multisegment::parse("0:6", 2), 6).str() == "0:6");
  CHECK(truncate(Multisegment::parse("0:6", 2), 9).str() == "0:6");
  CHECK(truncate(ms, 2).str() == "0:2,0:1");
  CHECK(truncate(ms, 0).empty());

  SUBCASE("counts grow monotonically to the full dim vector") {
    for (const auto& m : enumerate_multisegments(DimVector(2, {3, 2}), false)) {
      auto dims = truncation_dims(m);
      for (size_t k = 1; k < dims.size(); ++k)
        for (int i = 0; i < 2; ++i)
          CHECK(dims[k].counts[i] >= dims[k - 1].counts[i]);
      CHECK(dims.back() == dim_vector(m));
      for (size_t k = 0; k < dims.size(); ++k)
        CHECK(dims[k] == dim_vector(truncate(m, static_cast<int>(k))));
    }
  }
}

TEST_CASE("strip_first_column") {
  CHECK(strip_first_column(Multisegment::parse("0:4,0:1", 2)).str() == "1:3");
  CHECK(strip_first_column(Multisegment::parse("0:1", 2)).empty());
}

TEST_CASE("epsilon by rows") {
  CHECK(epsilon_rows(Multisegment::parse("0:1", 1)) == 1);
  CHECK(epsilon_rows(Multisegment::parse("0:6", 2)) == 3);
  CHECK(epsilon_rows(Multisegment::parse("0:4,0:1", 2)) == 4);
  CHECK(epsilon_rows(Multisegment(3)) == 0);
}

namespace {
Multisegment zero_orbit(const DimVector& d) {
  std::vector<Segment> rows;
  for (int i = 0; i < d.n; ++i)
    for (int c = 0; c < d.counts[i]; ++c) rows.push_back({i, 1});
  return Multisegment(d.n, std::move(rows));
}
}  // namespace

TEST_CASE("orbit dimension") {
  CHECK(orbit_dim(Multisegment::parse("0:6", 2)) == 15);
  CHECK(orbit_dim(Multisegment::parse("0:4,0:1", 2)) == 9);

  SUBCASE("zero exactly at the zero representation") {
    for (int n = 1; n <= 3; ++n)
      for (int total = 0; total <= 4; ++total)
        for (const DimVector& d : dim_vectors_with_total(n, total)) {
          Multisegment zero = zero_orbit(d);
          CHECK(orbit_dim(zero) == 0);
          for (const auto& ms : enumerate_multisegments(d, false)) {
            CHECK(orbit_dim(ms) >= 0);
            if (ms != zero) CHECK(orbit_dim(ms) > 0);
          }
        }
  }
}

TEST_CASE("flag and bundle dimensions") {
  CHECK(flag_dim(Multisegment::parse("0:3", 1)) == 3);
  CHECK(flag_dim(Multisegment::parse("0:2", 2)) == 0);
  // graded flags for 0:4,0:1 form Gr(2,3) x P^1
  CHECK(flag_dim(Multisegment::parse("0:4,0:1", 2)) == 3);
  CHECK(flag_dim(Multisegment::parse("0:6", 2)) == 6);
  CHECK(bundle_fibre_dim(Multisegment::parse("0:6", 2)) == 15 - 6);
  CHECK(bundle_fibre_dim(Multisegment::parse("0:4,0:1", 2)) == 9 - 3);
  CHECK(bundle_fibre_dim(zero_orbit(DimVector(2, {2, 1}))) == 0);

  SUBCASE("flag_dim equals the pair count over column jumps") {
    for (int n = 1; n <= 3; ++n)
      for (const DimVector& d : dim_vectors_with_total(n, 5))
        for (const auto& ms : enumerate_multisegments(d, false)) {
          auto dims = truncation_dims(ms);
          long long e2 = 0;
          for (int i = 0; i < n; ++i) {
            std::vector<long long> jumps;
            for (size_t k = 1; k < dims.size(); ++k)
              jumps.push_back(dims[k].counts[i] - dims[k - 1].counts[i]);
            for (size_t a = 0; a < jumps.size(); ++a)
              for (size_t b = a + 1; b < jumps.size(); ++b)
                e2 += jumps[a] * jumps[b];
          }
          CHECK(flag_dim(ms) == e2);
          CHECK(flag_dim(ms) + bundle_fibre_dim(ms) == orbit_dim(ms));
        }
  }
}

TEST_CASE("aperiodicity") {
  CHECK(is_aperiodic(Multisegment::parse("0:6", 2)));
  CHECK_FALSE(is_aperiodic(Multisegment::parse("0:1,1:1", 2)));
  CHECK_FALSE(is_aperiodic(Multisegment::parse("0:2,1:2,0:1", 2)));
  CHECK(is_aperiodic(Multisegment(1)));
  CHECK_FALSE(is_aperiodic(Multisegment::parse("0:3", 1)));
}

namespace {
// independent generator: every finite row multiset, filtered by grading
void brute_enumerate(const DimVector& d, std::vector<Segment>& cur, int from_start,
                     int from_len, std::set<Multisegment>& out) {
  int total = 0;
  for (const Segment& s : cur) total += s.length;
  if (total == d.total()) {
    Multisegment ms(d.n, cur);
    if (dim_vector(ms) == d) out.insert(ms);
    return;
  }
  for (int start = from_start; start < d.n; ++start)
    for (int len = (start == from_start ? from_len : 1);
         len + total <= d.total(); ++len) {
      cur.push_back({start, len});
      brute_enumerate(d, cur, start, len, out);
      cur.pop_back();
    }
}

std::set<Multisegment> brute_set(const DimVector& d) {
  std::set<Multisegment> out;
  std::vector<Segment> cur;
  brute_enumerate(d, cur, 0, 1, out);
  return out;
}
}  // namespace

TEST_CASE("enumeration") {
  CHECK(enumerate_multisegments(DimVector(2, {1, 0}), false).size() == 1);
  CHECK(enumerate_multisegments(DimVector(2, {1, 0}), false)[0].str() == "0:1");

  SUBCASE("the nine two-row orbits with dim vector (3,3)") {
    std::vector<std::string> expect = {"0:6",     "1:6",     "0:5,1:1",
                                       "1:5,0:1", "0:4,0:2", "0:4,1:2",
                                       "1:4,0:2", "1:4,1:2", "0:3,1:3"};
    auto got = enumerate_multisegments(DimVector(2, {3, 3}), true);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].str() == expect[i]);
  }

  SUBCASE("dim vector (2,1) over Z/2, brute-force oracle") {
    DimVector d(2, {2, 1});
    auto brute = brute_set(d);
    auto got = enumerate_multisegments(d, false);
    CHECK(got.size() == brute.size());
    CHECK(got.size() == 4);
    std::vector<std::string> expect = {"0:3", "0:2,0:1", "1:2,0:1",
                                       "0:1,0:1,1:1"};
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].str() == expect[i]);
      CHECK(brute.count(got[i]) == 1);
    }
  }

  SUBCASE("results are exactly the multisegments with the requested grading") {
    for (int n = 1; n <= 3; ++n)
      for (int total = 0; total <= 5; ++total)
        for (const DimVector& d : dim_vectors_with_total(n, total)) {
          auto all = enumerate_multisegments(d, false);
          std::set<Multisegment> seen(all.begin(), all.end());
          CHECK(seen.size() == all.size());
          CHECK(std::is_sorted(all.begin(), all.end()));
          for (const auto& ms : all) CHECK(dim_vector(ms) == d);
          CHECK(brute_set(d) == seen);
          auto two = enumerate_multisegments(d, true);
          for (const auto& ms : two) CHECK(ms.rows().size() <= 2);
          size_t expected_two = 0;
          for (const auto& ms : all)
            if (ms.rows().size() <= 2) ++expected_two;
          CHECK(two.size() == expected_two);
        }
  }

  SUBCASE("cap") {
    CHECK_THROWS_AS(enumerate_multisegments(DimVector(1, {11}), false),
                    CapExceeded);
    CHECK_NOTHROW(enumerate_multisegments(DimVector(1, {11}), false, 11));
  }
}

TEST_CASE("epsilon identities across moduli") {
  SUBCASE("over Z/1 the stabilizer dimension is 2n(lambda) + d") {
    for (int d = 0; d <= 7; ++d)
      for (const auto& ms : enumerate_multisegments(DimVector(1, {d}), false)) {
        long long nstat = 0;
        auto parts = underlying_partition(ms);
        for (size_t k = 0; k < parts.size(); ++k)
          nstat += static_cast<long long>(k) * parts[k];
        CHECK(epsilon_rows(ms) == 2 * nstat + d);
      }
  }

  SUBCASE("over Z/2 epsilon halves the ungraded value") {
    for (int d0 = 0; d0 <= 3; ++d0)
      for (int d1 = 0; d1 <= 3; ++d1)
        for (const auto& ms :
             enumerate_multisegments(DimVector(2, {d0, d1}), false)) {
          std::vector<Segment> flat;
          for (const Segment& s : ms.rows()) flat.push_back({0, s.length});
          int ungraded = epsilon_rows(Multisegment(1, std::move(flat)));
          CHECK(2 * epsilon_rows(ms) == (d0 - d1) * (d0 - d1) + ungraded);
        }
  }

  SUBCASE("for three or more vertices epsilon sees more than the shape") {
    // same dim vector (2,1,1) and same shape (2,1,1), different stabilizers
    Multisegment a = Multisegment::parse("0:2,0:1,2:1", 3);
    Multisegment b = Multisegment::parse("1:2,0:1,0:1", 3);
    CHECK(dim_vector(a) == dim_vector(b));
    CHECK(underlying_partition(a) == underlying_partition(b));
    CHECK(epsilon_rows(a) == 4);
    CHECK(epsilon_rows(b) == 5);
  }
}

TEST_CASE("direct sum pretty form") {
  CHECK(Multisegment::parse("0:4,0:1", 2).direct_sum_str() == "[0;4)+[0;1)");
  CHECK(Multisegment(2).direct_sum_str() == "0");
}

TEST_CASE("empty multisegment is its own zero-dimensional orbit") {
  Multisegment empty(3);
  CHECK(empty.total_boxes() == 0);
  CHECK(orbit_dim(empty) == 0);
  CHECK(flag_dim(empty) == 0);
  CHECK(bundle_fibre_dim(empty) == 0);
  CHECK(enumerate_multisegments(DimVector(3, {0, 0, 0}), false).size() == 1);
}

TEST_SUITE_END();
