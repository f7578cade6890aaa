#include "cyq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <limits>
#include <sstream>

#include "cyq/decompose.hpp"
#include "cyq/errors.hpp"
#include "cyq/ffcount.hpp"
#include "cyq/kostka.hpp"
#include "cyq/multisegment.hpp"
#include "cyq/tworow.hpp"

namespace cyq::cli {

namespace {

using nlohmann::json;

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw InternalError("value too large for plain integer output");
  return v.convert_to<long long>();
}

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(to_ll(c));
  return arr;
}

struct RunConfig {
  int n = 0;
  std::string dim_text;
  std::string lambda_text, mu_text;
  bool two_row = false;
  std::string method = "both";
  bool json_out = false;
  bool dot_out = false;
  int cap = 10;
  long long budget = 100'000'000;
  std::vector<int> primes;

  DimVector dim() const {
    DimVector d = DimVector::parse(dim_text);
    if (n != 0 && d.n != n)
      throw std::invalid_argument("--dim has " + std::to_string(d.n) +
                                  " entries but --n is " + std::to_string(n));
    return d;
  }
  void validate_primes() const {
    for (size_t i = 0; i < primes.size(); ++i)
      if (!is_prime(primes[i]) || (i > 0 && primes[i] <= primes[i - 1]))
        throw std::invalid_argument(
            "--primes must be a strictly increasing list of primes");
  }
};

std::string ms_display(const Multisegment& ms) {
  return ms.empty() ? "(empty)" : ms.str();
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  DimVector d = cfg.dim();
  auto orbits = enumerate_multisegments(d, cfg.two_row, cfg.cap);
  if (cfg.json_out) {
    json doc;
    doc["n"] = d.n;
    doc["dim"] = d.counts;
    doc["orbits"] = json::array();
    for (const auto& ms : orbits)
      doc["orbits"].push_back({{"ms", ms.str()},
                               {"epsilon", epsilon_rows(ms)},
                               {"dim", orbit_dim(ms)},
                               {"aperiodic", is_aperiodic(ms)}});
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "orbits with dim vector (" << d.str() << "), n = " << d.n
      << (cfg.two_row ? ", at most two rows" : "") << ":\n";
  for (const auto& ms : orbits)
    out << "  " << ms_display(ms) << "  epsilon=" << epsilon_rows(ms)
        << "  dim=" << orbit_dim(ms)
        << "  aperiodic=" << (is_aperiodic(ms) ? "yes" : "no") << "\n";
  out << orbits.size() << " orbit" << (orbits.size() == 1 ? "" : "s") << "\n";
  return 0;
}

int cmd_poset(const RunConfig& cfg, std::ostream& out) {
  DimVector d = cfg.dim();
  ffcount::CountContext ctx(cfg.budget);
  decompose::PosetOptions opt;
  opt.cap = cfg.cap;
  decompose::OrbitPoset poset =
      decompose::build_poset(d, cfg.two_row, ctx, opt);
  if (cfg.json_out) {
    json doc;
    doc["n"] = d.n;
    doc["dim"] = d.counts;
    doc["nodes"] = json::array();
    for (const auto& ms : poset.orbits)
      doc["nodes"].push_back({{"ms", ms.str()},
                              {"epsilon", epsilon_rows(ms)},
                              {"dim", orbit_dim(ms)}});
    doc["edges"] = json::array();
    for (const auto& cover : poset.covers)
      doc["edges"].push_back({{"from", poset.orbits[cover.upper].str()},
                              {"to", poset.orbits[cover.lower].str()},
                              {"codim", cover.codim}});
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "digraph poset {\n";
  for (size_t i = 0; i < poset.orbits.size(); ++i)
    out << "  \"" << poset.orbits[i].str() << "\" [label=\""
        << poset.orbits[i].str() << "\\nε=" << poset.eps[i]
        << ",dim=" << orbit_dim(poset.orbits[i]) << "\"];\n";
  for (const auto& cover : poset.covers)
    out << "  \"" << poset.orbits[cover.upper].str() << "\" -> \""
        << poset.orbits[cover.lower].str() << "\" [label=\"codim="
        << cover.codim << "\"];\n";
  out << "}\n";
  return 0;
}

int cmd_gpoly(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw std::invalid_argument("--n is required");
  Multisegment lam = Multisegment::parse(cfg.lambda_text, cfg.n);
  Multisegment mu = Multisegment::parse(cfg.mu_text, cfg.n);
  cfg.validate_primes();

  bool grading_ok = dim_vector(lam) == dim_vector(mu);
  bool comparable = false;
  IntPoly g;
  std::string note;

  auto closed_g = [&]() -> IntPoly {
    if (lam.rows().size() > 2 || mu.rows().size() > 2)
      throw std::invalid_argument(
          "--method closed needs at most two rows on both sides");
    auto r = tworow::leq_tworow(lam, mu);
    if (r != tworow::LeqResult::leq) return IntPoly();
    if (lam == mu) return IntPoly(1);
    tworow::FibreShape sh = tworow::fibre_shape(lam, mu);
    return tworow::green_poly(sh.s1, sh.s2);
  };
  auto counted_g = [&]() -> IntPoly {
    ffcount::CountContext ctx(cfg.budget);
    return ctx.interpolate_g(lam, mu, cfg.primes);
  };

  if (!grading_ok) {
    note = "incomparable by grading";
  } else if (cfg.method == "closed") {
    g = closed_g();
  } else if (cfg.method == "count") {
    g = counted_g();
  } else {
    IntPoly a = closed_g();
    IntPoly b = counted_g();
    if (!(a == b))
      throw InternalError("closed-form g " + a.str() +
                          " disagrees with counted g " + b.str() + " for " +
                          lam.str() + " / " + mu.str());
    g = a;
  }
  comparable = grading_ok && !g.is_zero();
  if (grading_ok && !comparable) note = "mu not ≤ lambda";

  if (cfg.json_out) {
    json doc;
    doc["n"] = cfg.n;
    doc["lambda"] = lam.str();
    doc["mu"] = mu.str();
    doc["method"] = cfg.method;
    doc["comparable"] = comparable;
    doc["g"] = poly_to_json(g);
    if (!note.empty()) doc["note"] = note;
    out << doc.dump(2) << "\n";
  } else {
    if (comparable)
      out << g.str() << "\n";
    else
      out << "0 (" << note << ")\n";
  }
  return 0;
}

int cmd_ic(const RunConfig& cfg, std::ostream& out) {
  DimVector d = cfg.dim();
  cfg.validate_primes();
  if (cfg.method == "closed" && !cfg.two_row)
    throw std::invalid_argument("--method closed needs --two-row");
  ffcount::CountContext ctx(cfg.budget);
  decompose::PosetOptions opt;
  opt.cap = cfg.cap;
  decompose::OrbitPoset poset =
      decompose::build_poset(d, cfg.two_row, ctx, opt);
  decompose::GMatrix g;
  if (cfg.method == "closed") {
    g = decompose::g_matrix_closed(poset);
  } else {
    size_t N = poset.size();
    g.assign(N, std::vector<IntPoly>(N));
    for (size_t l = 0; l < N; ++l)
      for (size_t m = 0; m < N; ++m)
        if (poset.leq(static_cast<int>(m), static_cast<int>(l)))
          g[l][m] = ctx.interpolate_g(poset.orbits[l], poset.orbits[m],
                                      cfg.primes);
  }
  decompose::ICTable table = decompose::deconvolve(poset, g);

  if (cfg.json_out) {
    json doc;
    doc["n"] = d.n;
    doc["dim"] = d.counts;
    doc["orbits"] = json::array();
    for (const auto& ms : poset.orbits)
      doc["orbits"].push_back({{"ms", ms.str()},
                               {"epsilon", epsilon_rows(ms)},
                               {"dim", orbit_dim(ms)},
                               {"aperiodic", is_aperiodic(ms)}});
    doc["pairs"] = json::array();
    for (size_t l = 0; l < poset.size(); ++l)
      for (size_t m = 0; m < poset.size(); ++m) {
        if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
        const decompose::ICPair& pair = *table.pairs[l][m];
        json a = json::object();
        for (const auto& [j, mult] : pair.a)
          if (mult != 0) a[std::to_string(j)] = to_ll(mult);
        doc["pairs"].push_back({{"lambda", poset.orbits[l].str()},
                                {"mu", poset.orbits[m].str()},
                                {"ktilde", poly_to_json(pair.ktilde)},
                                {"a", a}});
      }
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << "local IC data for dim vector (" << d.str() << "), n = " << d.n
      << (cfg.two_row ? ", at most two rows" : "") << ":\n";
  for (size_t l = 0; l < poset.size(); ++l)
    for (size_t m = 0; m < poset.size(); ++m) {
      if (!poset.leq(static_cast<int>(m), static_cast<int>(l))) continue;
      const decompose::ICPair& pair = *table.pairs[l][m];
      out << "  lambda=" << ms_display(poset.orbits[l])
          << "  mu=" << ms_display(poset.orbits[m])
          << "  ktilde=" << pair.ktilde.str() << "  a={";
      bool first = true;
      for (const auto& [j, mult] : pair.a) {
        if (mult == 0) continue;
        if (!first) out << ", ";
        out << j << ": " << to_ll(mult);
        first = false;
      }
      out << "}\n";
    }
  return 0;
}

struct SuiteResult {
  long long checks = 0;
  long long theorem_failures = 0;
  long long consistency_failures = 0;
};

SuiteResult suite_epsilon(int n_max, int len_max, std::ostream& out) {
  SuiteResult res;
  for (int n = 1; n <= n_max; ++n)
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int l1 = 1; l1 <= len_max; ++l1)
          for (int l2 = 0; l2 <= l1 && l1 + l2 <= len_max; ++l2) {
            tworow::TwoRowPair p(n, i1, l1, i2, l2);
            int closed = tworow::epsilon_closed(p);
            int rows = epsilon_rows(p.to_multisegment());
            ++res.checks;
            if (closed != rows) {
              ++res.consistency_failures;
              out << "FAIL epsilon: n=" << n << " [" << i1 << ";" << l1
                  << ")+[" << i2 << ";" << l2 << "): closed " << closed
                  << " vs rows " << rows << "\n";
            }
          }
  return res;
}

SuiteResult suite_green(int s_max, std::ostream& out) {
  SuiteResult res;
  for (int s1 = 0; s1 <= s_max; ++s1)
    for (int s2 = 0; s1 + s2 <= s_max; ++s2)
      for (int p : {2, 3, 5}) {
        Int direct = ffcount::springer_count(s1, s2, p);
        Int closed = tworow::green_poly(s1, s2).eval(p);
        ++res.checks;
        if (direct != closed) {
          ++res.consistency_failures;
          out << "FAIL green: (" << s1 << "," << s2 << ") at p=" << p << ": "
              << direct << " vs " << closed << "\n";
        }
      }
  return res;
}

SuiteResult suite_closure(int n_max, int d_max, std::ostream& out) {
  SuiteResult res;
  ffcount::CountContext ctx;
  for (int n = 1; n <= n_max; ++n)
    for (int total = 0; total <= d_max; ++total)
      for (const DimVector& d : dim_vectors_with_total(n, total)) {
        auto orbits = enumerate_multisegments(d, /*two_row_only=*/true,
                                              std::max(d_max, 10));
        for (const auto& lam : orbits)
          for (const auto& mu : orbits) {
            bool closed =
                tworow::leq_tworow(lam, mu) == tworow::LeqResult::leq;
            bool ne2 = ctx.count(lam, mu, 2) > 0;
            bool ne3 = ctx.count(lam, mu, 3) > 0;
            ++res.checks;
            if (closed != ne2 || ne2 != ne3) {
              ++res.consistency_failures;
              out << "FAIL closure: " << lam.str() << " / " << mu.str()
                  << " closed=" << closed << " count2=" << ne2
                  << " count3=" << ne3 << "\n";
            }
          }
      }
  return res;
}

SuiteResult suite_tworow(int n_max, int d_max, std::ostream& out) {
  SuiteResult res;
  ffcount::CountContext ctx;
  for (int n = 1; n <= n_max; ++n)
    for (int total = 0; total <= d_max; ++total)
      for (const DimVector& d : dim_vectors_with_total(n, total)) {
        decompose::PosetOptions opt;
        opt.cap = std::max(d_max, 10);
        decompose::TworowReport report =
            decompose::verify_tworow(d, ctx, opt);
        res.checks += static_cast<long long>(report.pairs.size());
        if (!report.theorem_ok) ++res.theorem_failures;
        if (!report.consistency_ok || !report.reconstruction_ok)
          ++res.consistency_failures;
        for (const auto& pair : report.pairs)
          if (!pair.ok())
            out << "FAIL tworow: d=(" << d.str() << ") pair "
                << report.poset.orbits[pair.lam].str() << " / "
                << report.poset.orbits[pair.mu].str() << ": " << pair.detail
                << "\n";
      }
  return res;
}

SuiteResult suite_kostka(int d_max, std::ostream& out) {
  SuiteResult res;
  ffcount::CountContext ctx;
  for (int d = 1; d <= d_max; ++d) {
    decompose::KostkaReport report =
        decompose::kostka_crosscheck_all(d, ctx, true);
    res.checks += static_cast<long long>(report.pairs.size()) + 1;
    if (!report.dominance_matches_closure) {
      ++res.consistency_failures;
      out << "FAIL kostka: closure order differs from dominance at d=" << d
          << "\n";
    }
    for (const auto& pair : report.pairs)
      if (!pair.ok) {
        ++res.theorem_failures;
        out << "FAIL kostka: pair mismatch at d=" << d << ": deconvolved "
            << pair.deconvolved.str() << " vs oracle " << pair.expected.str()
            << "\n";
      }
  }
  return res;
}

int cmd_verify(const std::string& suite, int n_max, int d_max, int s_max,
               int len_max, std::ostream& out) {
  SuiteResult total;
  auto add = [&](const char* name, SuiteResult r) {
    total.checks += r.checks;
    total.theorem_failures += r.theorem_failures;
    total.consistency_failures += r.consistency_failures;
    out << (r.theorem_failures + r.consistency_failures == 0 ? "ok" : "FAIL")
        << ": suite " << name << " (" << r.checks << " checks)\n";
  };
  if (suite == "epsilon" || suite == "all")
    add("epsilon", suite_epsilon(n_max == 0 ? 6 : n_max,
                                 len_max == 0 ? 30 : len_max, out));
  if (suite == "green" || suite == "all")
    add("green", suite_green(s_max == 0 ? 4 : s_max, out));
  if (suite == "closure" || suite == "all")
    add("closure",
        suite_closure(n_max == 0 ? 3 : n_max, d_max == 0 ? 6 : d_max, out));
  if (suite == "tworow" || suite == "all")
    add("tworow",
        suite_tworow(n_max == 0 ? 2 : n_max, d_max == 0 ? 6 : d_max, out));
  if (suite == "kostka" || suite == "all")
    add("kostka", suite_kostka(d_max == 0 ? 5 : std::min(d_max, 5), out));
  if (total.consistency_failures > 0) return 2;
  if (total.theorem_failures > 0) return 1;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"cyq: nilpotent orbit combinatorics of cyclic quivers"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suite = "all";
  int n_max = 0, d_max = 0, s_max = 0, len_max = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_dim) {
    cmd->add_option("--n", cfg.n, "modulus (number of quiver vertices)");
    if (needs_dim)
      cmd->add_option("--dim", cfg.dim_text, "dimension vector, e.g. 3,3")
          ->required();
    cmd->add_flag("--two-row", cfg.two_row, "restrict to at most two rows");
    cmd->add_flag("--json", cfg.json_out, "JSON output");
    cmd->add_option("--cap", cfg.cap, "enumeration size cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", cfg.budget, "fibre counting node budget")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "list the orbits with a given dimension vector");
  add_common(c_enum, true);

  CLI::App* c_poset = app.add_subcommand(
      "poset", "closure poset (Hasse diagram) for a dimension vector");
  add_common(c_poset, true);
  c_poset->add_flag("--dot", cfg.dot_out, "DOT output (default)");

  CLI::App* c_gpoly = app.add_subcommand(
      "gpoly", "fibre Poincare polynomial g for a pair of orbits");
  c_gpoly->add_option("--n", cfg.n, "modulus")->required();
  c_gpoly->add_option("--lambda", cfg.lambda_text, "upper multisegment")
      ->required();
  c_gpoly->add_option("--mu", cfg.mu_text, "lower multisegment")->required();
  c_gpoly
      ->add_option("--method", cfg.method,
                   "closed | count | both (default both)")
      ->check(CLI::IsMember({"closed", "count", "both"}));
  c_gpoly->add_flag("--json", cfg.json_out, "JSON output");
  c_gpoly->add_option("--primes", cfg.primes, "prime pool override")
      ->delimiter(',');
  c_gpoly->add_option("--budget", cfg.budget, "fibre counting node budget")
      ->check(CLI::PositiveNumber);

  CLI::App* c_ic = app.add_subcommand(
      "ic", "local IC polynomials and multiplicities for a dimension vector");
  add_common(c_ic, true);
  std::string ic_method = "count";
  c_ic->add_option("--method", ic_method,
                   "count | closed (closed needs --two-row)")
      ->check(CLI::IsMember({"closed", "count"}));
  c_ic->add_option("--primes", cfg.primes, "prime pool override")
      ->delimiter(',');

  CLI::App* c_verify =
      app.add_subcommand("verify", "run a verification sweep");
  c_verify
      ->add_option("--suite", suite,
                   "epsilon | green | closure | tworow | kostka | all")
      ->check(CLI::IsMember(
          {"epsilon", "green", "closure", "tworow", "kostka", "all"}));
  c_verify->add_option("--n-max", n_max, "largest modulus in the sweep");
  c_verify->add_option("--d-max", d_max, "largest total dimension");
  c_verify->add_option("--s-max", s_max, "largest Springer fibre size");
  c_verify->add_option("--len-max", len_max, "largest l1+l2");

  std::vector<const char*> argv;
  argv.push_back("cyq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(cfg, out);
    if (c_poset->parsed()) return cmd_poset(cfg, out);
    if (c_gpoly->parsed()) return cmd_gpoly(cfg, out);
    if (c_ic->parsed()) {
      cfg.method = ic_method;
      return cmd_ic(cfg, out);
    }
    if (c_verify->parsed())
      return cmd_verify(suite, n_max, d_max, s_max, len_max, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cyq::cli
