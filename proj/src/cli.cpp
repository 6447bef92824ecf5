#include "singlift/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "singlift/harness.hpp"
#include "singlift/invariants.hpp"
#include "singlift/jets.hpp"
#include "singlift/lifting.hpp"
#include "singlift/polyhedra.hpp"
#include "singlift/polynomial.hpp"

namespace singlift {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_exponent(const std::string& text, int line) {
  std::optional<Rational> e = Rational::parse(text);
  if (!e) throw ParseError(line, "bad exponent '" + text + "'");
  if (e->sign() <= 0) throw ParseError(line, "exponent must be positive");
  return *e;
}

}  // namespace

ProblemFile parse_problem_file(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(trimmed(line));

  std::size_t i = 0;
  auto eof = [&] { return i >= lines.size(); };
  auto lineno = [&] { return static_cast<int>(i) + 1; };

  if (eof() || lines[i].rfind("dim ", 0) != 0)
    throw ParseError(lineno(), "expected 'dim N'");
  Int dim = 0;
  {
    std::istringstream ss(lines[i].substr(4));
    if (!(ss >> dim) || !(ss >> std::ws).eof() || dim < 1)
      throw ParseError(lineno(), "expected 'dim N' with N >= 1");
  }
  ++i;

  std::optional<Int> characteristic;
  if (!eof() && lines[i].rfind("char ", 0) == 0) {
    Int p = 0;
    std::istringstream ss(lines[i].substr(5));
    if (!(ss >> p) || !(ss >> std::ws).eof() || !is_prime(p))
      throw ParseError(lineno(), "expected 'char p' with p prime");
    characteristic = p;
    ++i;
  }

  std::vector<MultiIdealFactor> factors;
  while (true) {
    while (!eof() && lines[i].empty()) ++i;
    if (eof()) break;
    if (lines[i].rfind("ideal e=", 0) != 0)
      throw ParseError(lineno(), "expected 'ideal e=a/b'");
    int factor_line = lineno();
    Rational e = parse_exponent(lines[i].substr(8), factor_line);
    ++i;

    std::vector<ExponentVec> gens;
    while (!eof() && !lines[i].empty()) {
      std::istringstream ss(lines[i]);
      ExponentVec u;
      Int x;
      while (ss >> x) u.push_back(x);
      if (!ss.eof() || static_cast<Int>(u.size()) != dim)
        throw ParseError(lineno(),
                         "expected " + std::to_string(dim) + " nonnegative integers");
      for (Int v : u)
        if (v < 0) throw ParseError(lineno(), "negative exponent entry");
      gens.push_back(std::move(u));
      ++i;
    }
    if (gens.empty()) throw ParseError(lineno(), "factor has no generators");
    try {
      factors.push_back({MonomialIdeal(dim, std::move(gens)), e});
    } catch (const std::exception& ex) {
      throw ParseError(factor_line, ex.what());
    }
  }
  if (factors.empty()) throw ParseError(lineno(), "no factors");
  try {
    return ProblemFile{dim, characteristic, MultiIdeal(std::move(factors))};
  } catch (const std::exception& ex) {
    throw ParseError(static_cast<int>(lines.size()), ex.what());
  }
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_problem_file(in);
}

std::string ProblemFile::canonical() const {
  std::ostringstream os;
  os << "dim " << dim << '\n';
  if (characteristic) os << "char " << *characteristic << '\n';
  for (const auto& f : ideal.factors()) {
    os << "ideal e=" << f.exponent.str() << '\n';
    for (const auto& u : f.ideal.generators()) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (j) os << ' ';
        os << u[j];
      }
      os << '\n';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

const MonomialIdeal& single_factor(const ProblemFile& pf, const char* cmd) {
  if (pf.ideal.factor_count() != 1)
    throw std::invalid_argument(std::string(cmd) + " requires a single-factor ideal file");
  return pf.ideal.factor(0).ideal;
}

std::string cert_str(Certificate c) {
  return c == Certificate::Certified ? "certified" : "box-bounded";
}

int cmd_lct(const ProblemFile& pf, std::optional<Int> bound, std::ostream& out) {
  const MonomialIdeal& a = single_factor(pf, "lct");
  NewtonPolyhedron P(a);
  LctResult det = lct_howald_detailed(P);
  Int S;
  if (bound) {
    if (*bound < 1) throw std::invalid_argument("--bound must be >= 1");
    S = *bound;
  } else {
    Int max_offset = 0;
    for (const auto& f : det.attaining) max_offset = std::max(max_offset, f.offset);
    S = std::max<Int>(1, max_offset - 1);
  }
  InvariantResult jets = lct_via_jets(a, S);
  out << det.value.str() << ", witness w=" << vec_str(det.attaining.front().normal) << ", "
      << cert_str(jets.certificate) << '\n';
  return jets.certificate == Certificate::Certified ? 0 : 2;
}

int cmd_mld(const ProblemFile& pf, std::optional<Int> bound, int threads, std::ostream& out) {
  InvariantResult res = mld_toric(pf.ideal, bound, threads);
  if (res.value.is_minus_infinity()) {
    out << "-inf, witness w=" << vec_str(res.weight_witness->entries()) << '\n';
    return 0;
  }
  out << res.value.str() << ", witness w=" << vec_str(res.weight_witness->entries()) << ", "
      << cert_str(res.certificate) << '\n';
  return res.certificate == Certificate::Certified ? 0 : 2;
}

int cmd_md(const ProblemFile& pf, Int cap, std::ostream& out) {
  const MonomialIdeal& a = single_factor(pf, "md");
  MdResult res = md_lct_toric(a, cap);
  if (!res.found) {
    out << "not-found, cap=" << cap << '\n';
    return 2;
  }
  out << res.k_min << ", witness w=" << vec_str(res.witnesses.front().entries()) << '\n';
  return 0;
}

int cmd_jets(const ProblemFile& pf, const std::vector<Int>& m, std::optional<Int> p,
             std::ostream& out) {
  if (m.size() != pf.ideal.factor_count())
    throw std::invalid_argument("jets: need one jet order per factor");
  Ring ring = Ring::integers();
  if (pf.characteristic) {
    if (p) throw std::invalid_argument("jets: file already fixes the characteristic");
    ring = Ring::prime_field(*pf.characteristic);
  }
  std::vector<std::vector<SparsePolynomial>> gens;
  for (const auto& f : pf.ideal.factors()) gens.push_back(f.ideal.generator_polynomials(ring));
  JetSystem sys = jet_system(gens, m);
  if (p) sys = reduce_jet_system_mod_p(sys, *p);
  if (sys.fiber_only) out << "# all jet orders zero: fiber constraints only\n";
  out << export_cas(sys);
  return 0;
}

int cmd_lift(const ProblemFile& pf, Int p, const std::vector<Int>& w_entries,
             std::ostream& out) {
  if (pf.characteristic && *pf.characteristic != p)
    throw std::invalid_argument("lift: p contradicts the file characteristic");
  if (static_cast<Int>(w_entries.size()) != pf.dim)
    throw std::invalid_argument("lift: weight needs one entry per variable");
  const MonomialIdeal& a = single_factor(pf, "lift");
  WeightVector w(w_entries);
  auto records = lift_ideal_valuation_preserving(a.generator_polynomials(Ring::prime_field(p)), w);
  out << "p=" << p << " w=" << vec_str(w.entries()) << '\n';
  for (std::size_t i = 0; i < records.size(); ++i)
    out << "lift[" << i << "]: " << records[i].lifted.str()
        << " val=" << *records[i].truncation_degree << '\n';
  return 0;
}

int cmd_suite(const std::string& name, std::uint64_t seed, int threads,
              const std::string& format, std::ostream& out) {
  SuiteReport rep;
  if (name == "threshold-family") {
    rep = suite_threshold_family(20, threads);
  } else if (name == "mld-consistency") {
    rep = suite_mld_consistency(standard_mld_corpus(), threads);
  } else if (name == "lct-consistency") {
    rep = suite_lct_consistency(standard_lct_corpus(), threads);
  } else if (name == "lifting-descent") {
    rep = suite_lifting_descent({2, 3, 5, 7, 13}, 50, seed, threads);
  } else if (name == "jets-modp") {
    rep = suite_jets_modp({2, 3, 5, 7, 13}, threads);
  } else {
    throw std::invalid_argument(
        "unknown suite '" + name +
        "' (expected threshold-family, mld-consistency, lct-consistency, lifting-descent or "
        "jets-modp)");
  }
  out << (format == "tsv" ? rep.to_tsv() : rep.summary());
  return rep.ok() ? 0 : 3;
}

int cmd_scan(Int n, Int mu, Int cap, std::optional<std::uint64_t> seed, Int samples,
             int threads, const std::string& format, std::ostream& out) {
  ScanReport rep = scan_md_bound(n, mu, cap, seed, samples, threads);
  out << (format == "tsv" ? rep.to_tsv() : rep.to_text());
  return rep.unresolved.empty() ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact singularity invariants of monomial multiideals"};
  app.name("singlift");
  app.require_subcommand(1);

  std::string file;
  std::optional<Int> bound;
  Int cap = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;
  int threads = 1;
  std::string format = "text";
  std::vector<Int> mvec;
  Int zm_order = 0;
  std::optional<Int> jets_p;
  Int lift_p = 0;
  std::vector<Int> lift_w;
  std::string suite_name;
  Int scan_n = 0, scan_mu = 0;
  Int samples = 64;

  auto* lct = app.add_subcommand("lct", "log canonical threshold with a dual-route certificate");
  lct->add_option("file", file)->required();
  lct->add_option("--bound", bound, "jet search bound override");

  auto* mld = app.add_subcommand("mld", "minimal log discrepancy over toric valuations");
  mld->add_option("file", file)->required();
  mld->add_option("--bound", bound, "box bound override");
  mld->add_option("--threads", threads);

  auto* sm = app.add_subcommand("sm", "jet codimension statistic s_m");
  sm->add_option("file", file)->required();
  sm->add_option("m", mvec, "jet orders, one per factor")->required();

  auto* zm = app.add_subcommand("zm", "normalized jet codimension z_m");
  zm->add_option("file", file)->required();
  zm->add_option("m", zm_order)->required();

  auto* md = app.add_subcommand("md", "minimal discrepancy among lct-computing divisors");
  md->add_option("file", file)->required();
  md->add_option("--cap", cap, "discrepancy cap")->required();

  auto* jets = app.add_subcommand("jets", "jet-scheme equations, CAS export");
  jets->add_option("file", file)->required();
  jets->add_option("m", mvec, "jet orders, one per factor")->required();
  jets->add_option("--p", jets_p, "reduce the integer system mod p");

  auto* lift = app.add_subcommand("lift", "valuation-preserving lift to characteristic zero");
  lift->add_option("file", file)->required();
  lift->add_option("p", lift_p)->required();
  lift->add_option("w", lift_w, "weight vector entries")->required();

  auto* suite = app.add_subcommand("suite", "run a named cross-check suite");
  suite->add_option("name", suite_name)->required();
  suite->add_option("--seed", seed);
  suite->add_option("--threads", threads);
  suite->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

  auto* scan = app.add_subcommand("scan", "empirical maximum of md(lct) between m^mu and m");
  scan->add_option("N", scan_n)->required();
  scan->add_option("mu", scan_mu)->required();
  scan->add_option("--cap", cap, "discrepancy cap")->required();
  scan->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  scan->add_option("--samples", samples);
  scan->add_option("--threads", threads);
  scan->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

  std::vector<std::string> full;
  full.push_back("singlift");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*lct) return cmd_lct(load_problem_file(file), bound, out);
    if (*mld) return cmd_mld(load_problem_file(file), bound, threads, out);
    if (*sm) {
      ProblemFile pf = load_problem_file(file);
      out << s_m(pf.ideal, mvec).str() << '\n';
      return 0;
    }
    if (*zm) {
      ProblemFile pf = load_problem_file(file);
      out << z_m(single_factor(pf, "zm"), zm_order).str() << '\n';
      return 0;
    }
    if (*md) return cmd_md(load_problem_file(file), cap, out);
    if (*jets) return cmd_jets(load_problem_file(file), mvec, jets_p, out);
    if (*lift) return cmd_lift(load_problem_file(file), lift_p, lift_w, out);
    if (*suite) return cmd_suite(suite_name, seed, threads, format, out);
    if (*scan)
      return cmd_scan(scan_n, scan_mu, cap,
                      seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt, samples,
                      threads, format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no command\n";
  return 1;
}

}  // namespace singlift
