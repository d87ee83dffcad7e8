// hecke_cli: element arithmetic, structure constants, verification suites
// and table export for BL-Hecke algebras.

#include "hecke/bases.hpp"
#include "hecke/errors.hpp"
#include "hecke/extended.hpp"
#include "hecke/geometry.hpp"
#include "hecke/io.hpp"
#include "hecke/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>

using namespace hecke;

namespace {

struct Config {
  std::string datum = "A1";
  std::string basis = "T";
  bool extended = false;
  std::string q;
  std::string format = "pretty";
  std::uint64_t seed = 1;
  long cap_terms = 200000;
  int cap_depth = -1;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WPlusIndex parse_index(const RootDatum& d, const std::string& s) {
  auto semi = s.find_first_of(";:");
  if (semi == std::string::npos) throw ParseError("index '" + s + "' must be lambda;word or lambda:word");
  return {parse_coweight(d, s.substr(0, semi)), parse_word(d, s.substr(semi + 1))};
}

AlgElt plain(const ExtAlgElt& e, const std::string& expr) {
  for (const auto& [k, c] : e.terms())
    for (std::size_t i = 0; i < k.omega.size(); ++i)
      if (k.omega[i] != static_cast<int>(i)) throw Usage("'" + expr + "' uses Tomega; pass --extended");
  return e.component(diagram_automorphisms(e.datum()).front());
}

int cmd_mul(const Config& c, const std::string& a, const std::string& b) {
  DatumPtr d = load_datum(c.datum);
  if (c.extended) d = omega_compatible(d);
  Basis basis = parse_basis(c.basis);
  Format fmt = parse_format(c.format);
  if (!c.q.empty()) throw Usage("--q applies to sc and table");
  ExtAlgElt x = parse_element(d, a), y = parse_element(d, b);
  ExtAlgElt p = ext_mul(x, y);
  if (!c.extended) p = ExtAlgElt::lift(plain(p, a + " * " + b));
  std::cout << render_element(p, basis, fmt) << "\n";
  return 0;
}

std::optional<std::vector<mpq_class>> q_values(const RootDatum& d, const Config& c) {
  if (c.q.empty()) return std::nullopt;
  return parse_q_values(d, c.q);
}

int cmd_sc(const Config& c, const std::string& ws, const std::string& vs, bool geometric) {
  DatumPtr d = load_datum(c.datum);
  Format fmt = parse_format(c.format);
  WPlusIndex w = parse_index(*d, ws), v = parse_index(*d, vs);
  TCoords sc = structure_constants(d, w, v);
  std::cout << render_constants(*d, sc, fmt, q_values(*d, c));
  if (!geometric) return 0;
  int mism = 0;
  for (const auto& [u, a] : sc) {
    LaurentPoly g = geometric_structure_constant(d, w, v, u, c.cap_depth);
    if (g != a) {
      ++mism;
      std::cerr << "mismatch at T[" << format_coweight(*d, u.lambda) << ";" << u.w.to_string()
                << "]: geometric " << g.to_string() << "\n";
    }
  }
  std::cout << (mism == 0 ? "MATCH" : "MISMATCH") << "\n";
  return mism == 0 ? 0 : 1;
}

int cmd_verify(const Config& c, const std::string& suite, int n, bool fault) {
  DatumPtr d = load_datum(c.datum);
  if (c.extended) d = omega_compatible(d);
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& s : names) {
    SuiteReport r = run_suite(d, s, c.seed, n, fault);
    std::cout << s << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.passed << " passed, " << r.failed
              << " failed, " << r.skipped << " skipped)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

int cmd_table(const Config& c, int lambda_bound, int length_bound) {
  DatumPtr d = load_datum(c.datum);
  Format fmt = parse_format(c.format);
  auto qv = q_values(*d, c);
  std::vector<Coweight> lams;
  // every Y^+ coordinate vector with L1 norm <= bound
  std::vector<Coweight> frontier{d->zero()};
  std::set<Coweight> seen{d->zero()};
  for (int r = 0; r < lambda_bound; ++r) {
    std::vector<Coweight> next;
    for (const auto& y : frontier)
      for (int t = 0; t < d->y_rank(); ++t)
        for (int s : {1, -1}) {
          Coweight z = y;
          z[t] += s;
          if (seen.insert(z).second) next.push_back(z);
        }
    frontier = next;
  }
  for (const auto& y : seen)
    if (d->tits_cone_membership(y).status == ConeStatus::Positive) lams.push_back(y);
  auto ws = enumerate_up_to_length(*d, length_bound);
  std::vector<WPlusIndex> idx;
  for (const auto& l : lams)
    for (const auto& w : ws) idx.push_back({l, w});
  auto key = [&](const WPlusIndex& k) { return format_coweight(*d, k.lambda) + ";" + k.w.to_string(); };
  if (fmt == Format::Csv) std::cout << (qv ? "w,v,lambda_u,word_u,coeff,value\n" : "w,v,lambda_u,word_u,coeff\n");
  if (fmt == Format::Json) std::cout << "[";
  bool first = true;
  for (const auto& w : idx)
    for (const auto& v : idx) {
      TCoords sc = structure_constants(d, w, v);
      if (fmt == Format::Pretty) {
        std::cout << "T[" << key(w) << "] * T[" << key(v) << "]\n" << render_constants(*d, sc, fmt, qv);
      } else if (fmt == Format::Csv) {
        std::string rows = render_constants(*d, sc, fmt, qv);
        std::size_t p = rows.find('\n') + 1;
        while (p < rows.size()) {
          std::size_t e = rows.find('\n', p);
          std::cout << "\"" << key(w) << "\",\"" << key(v) << "\"," << rows.substr(p, e - p) << "\n";
          p = e + 1;
        }
      } else {
        std::cout << (first ? "" : ",") << "{\"w\":\"" << key(w) << "\",\"v\":\"" << key(v)
                  << "\",\"constants\":" << render_constants(*d, sc, fmt, qv) << "}";
      }
      first = false;
    }
  if (fmt == Format::Json) std::cout << "]\n";
  return 0;
}

int cmd_paths(const Config& c, const std::string& shape, const std::string& from, const std::string& to) {
  DatumPtr d = load_datum(c.datum);
  auto ps = enumerate_hecke_paths(d, parse_coweight(*d, shape), to_rat_vec(parse_coweight(*d, from)),
                                  to_rat_vec(parse_coweight(*d, to)), c.cap_depth);
  std::cout << paths_to_json(*d, ps) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein-Lusztig-Hecke algebra calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--datum", c.datum, "datum JSON file or built-in name (" + [] {
    std::string s;
    for (const auto& n : builtin_datum_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + ")");
  app.add_option("--basis", c.basis, "output basis Z, X or T")->check(CLI::IsMember({"Z", "X", "T"}));
  app.add_flag("--extended", c.extended, "allow Tomega and identify parameters along diagram automorphisms");
  app.add_option("--q", c.q, "specialization, e.g. \"q1=2,q1p=3\" or \"all=2\"");
  app.add_option("--format", c.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", c.seed, "RNG seed for verify");
  app.add_option("--cap-terms", c.cap_terms, "maximum support size of one product")->check(CLI::PositiveNumber);
  app.add_option("--cap-depth", c.cap_depth, "maximum fold events per Hecke path")->check(CLI::NonNegativeNumber);

  std::string e1, e2;
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("a", e1, "first element")->required();
  mul->add_option("b", e2, "second element")->required();

  std::string ws, vs;
  bool geometric = false;
  auto* sc = app.add_subcommand("sc", "structure constants of T_w * T_v, indices as lambda;word or lambda:word");
  sc->add_option("w", ws)->required();
  sc->add_option("v", vs)->required();
  sc->add_flag("--geometric", geometric, "cross-check with Hecke paths (finite type, mu regular)");

  std::string suite = "all";
  int n = 100;
  bool fault = false;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--n", n, "samples per suite")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", fault, "negative control: corrupt every comparison");

  int lb = 0, len = 1;
  auto* table = app.add_subcommand("table", "multiplication table of T_w over bounded indices");
  table->add_option("--lambda-bound", lb, "L1 bound on lambda coordinates")->check(CLI::NonNegativeNumber);
  table->add_option("--length-bound", len, "bound on l(w)")->check(CLI::NonNegativeNumber);

  std::string shape, from = "0", to;
  auto* paths = app.add_subcommand("paths", "dump Hecke paths as JSON");
  paths->add_option("--shape", shape)->required();
  paths->add_option("--from", from);
  paths->add_option("--to", to)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  set_term_cap(static_cast<std::size_t>(c.cap_terms));
  try {
    if (*mul) return cmd_mul(c, e1, e2);
    if (*sc) return cmd_sc(c, ws, vs, geometric);
    if (*verify) return cmd_verify(c, suite, n, fault);
    if (*table) return cmd_table(c, lb, len);
    if (*paths) return cmd_paths(c, shape, from, to);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
