#include "hecke/io.hpp"

#include "hecke/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hecke {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<Int>()));
  if (v.is_string()) {
    Rat r;
    if (r.set_str(v.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + v.get<std::string>() + "'");
    r.canonicalize();
    return r;
  }
  throw ParseError("y_basis entries must be integers or \"p/q\" strings");
}

const std::map<std::string, std::string>& builtins() {
  static const std::map<std::string, std::string> m = {
      {"A1", R"({"cartan": [[2]]})"},
      {"A1_P", R"({"cartan": [[2]], "y_basis": [["1/2"]]})"},
      {"A2", R"({"cartan": [[2,-1],[-1,2]]})"},
      {"A2_P", R"({"cartan": [[2,-1],[-1,2]], "y_basis": [["2/3","1/3"],["1/3","2/3"]]})"},
      {"B2", R"({"cartan": [[2,-1],[-2,2]]})"},
      {"G2", R"({"cartan": [[2,-1],[-3,2]]})"},
      {"A1_AFF", R"({"cartan": [[2,-2],[-2,2]], "ties": [[1,2]]})"},
      {"A1_AFF_D", R"({"cartan": [[2,-2],[-2,2]], "y_basis": [[1,0,0],[0,1,0],[0,0,1]], "ties": [[1,2]]})"},
      {"A2_AFF", R"({"cartan": [[2,-1,-1],[-1,2,-1],[-1,-1,2]]})"},
      {"HYP33", R"({"cartan": [[2,-3],[-3,2]]})"},
  };
  return m;
}

class ElementParser {
 public:
  ElementParser(DatumPtr d, std::string s) : d_(std::move(d)), s_(std::move(s)) {}

  ExtAlgElt run() {
    ExtAlgElt e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("element '" + s_ + "': " + why + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string until(char close) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != close) ++pos_;
    if (pos_ == s_.size()) fail(std::string("missing '") + close + "'");
    std::string r = s_.substr(start, pos_ - start);
    ++pos_;
    return r;
  }
  int index_arg() {
    expect('(');
    std::string body = until(')');
    int i = 0;
    try {
      i = std::stoi(body);
    } catch (const std::exception&) {
      fail("bad index '" + body + "'");
    }
    if (i < 1 || i > d_->rank()) fail("index out of range");
    return i - 1;
  }

  ExtAlgElt expr() {
    bool neg = accept('-');
    if (!neg) accept('+');
    ExtAlgElt acc = term();
    if (neg) acc = acc.scaled(LaurentPoly(d_->ring(), -1));
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }
  ExtAlgElt term() {
    ExtAlgElt acc = factor();
    while (accept('*')) acc = ext_mul(acc, factor());
    return acc;
  }
  ExtAlgElt lift(const AlgElt& e) { return ExtAlgElt::lift(e); }

  ExtAlgElt factor() {
    skip();
    if (accept('(')) {
      ExtAlgElt e = expr();
      expect(')');
      return e;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int v = std::stoll(s_.substr(start, pos_ - start));
      return lift(AlgElt::scalar(d_, LaurentPoly(d_->ring(), v)));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id == "Z" || id == "X" || id == "Tw" || id == "Hw" || id == "T" || id == "TL" || id == "Tomega") {
      expect('[');
      std::string body = until(']');
      if (id == "Z") return lift(AlgElt::Z(d_, parse_coweight(*d_, body)));
      if (id == "X") return lift(X_elt(d_, parse_coweight(*d_, body)));
      if (id == "Tw") return lift(AlgElt::Tw(d_, parse_word(*d_, body)));
      if (id == "Hw") return lift(AlgElt::H(d_, parse_word(*d_, body)));
      if (id == "TL") return lift(T_lambda(d_, parse_coweight(*d_, body)));
      if (id == "T") {
        auto semi = body.find(';');
        if (semi == std::string::npos) fail("T[lambda;word] needs ';'");
        return lift(T_bold(d_, {parse_coweight(*d_, body.substr(0, semi)), parse_word(*d_, body.substr(semi + 1))}));
      }
      std::vector<int> perm;
      std::stringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          perm.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
          fail("bad permutation");
        }
      }
      return ExtAlgElt::T_omega(d_, omega_from_perm(d_, perm));
    }
    if (id == "Ti" || id == "Tinv" || id == "Hi") {
      int i = index_arg();
      if (id == "Ti") return lift(AlgElt::Ti(d_, i));
      if (id == "Tinv") return lift(AlgElt::Ti_inv(d_, i));
      return lift(AlgElt::Hi(d_, i));
    }
    // coefficient symbol with optional exponent
    if (accept('^')) {
      skip();
      if (accept('(')) {
        until(')');
      } else {
        accept('-');
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    std::string text = s_.substr(start, pos_ - start);
    try {
      return lift(AlgElt::scalar(d_, LaurentPoly::parse(d_->ring(), text)));
    } catch (const ParseError&) {
      fail("unknown identifier '" + id + "'");
    }
  }

  DatumPtr d_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

json coweight_json(const Coweight& y) {
  json a = json::array();
  for (Int x : y) a.push_back(x);
  return a;
}

struct Row {
  std::string omega;
  Coweight lambda;
  std::string word;
  LaurentPoly coeff;
};

// rows in print order (largest key first, matching the pretty printers)
std::vector<Row> element_rows(const ExtAlgElt& e, Basis b) {
  std::vector<Row> rows;
  const DatumPtr& d = e.datum();
  std::set<std::vector<int>> omegas;
  for (const auto& [k, c] : e.terms()) omegas.insert(k.omega);
  for (const auto& p : omegas) {
    OmegaElt om = omega_from_perm(d, p);
    std::string os = om.is_identity() ? "" : om.to_string();
    AlgElt part = e.component(om);
    if (b == Basis::Z) {
      for (auto it = part.terms().rbegin(); it != part.terms().rend(); ++it)
        rows.push_back({os, it->first.lambda, it->first.w.to_string(), it->second});
    } else if (b == Basis::X) {
      XCoords x = to_x_coords(part);
      for (auto it = x.rbegin(); it != x.rend(); ++it)
        rows.push_back({os, it->first.lambda, it->first.w.to_string(), it->second});
    } else {
      TCoords t = express_in_TW_basis(part);
      for (auto it = t.rbegin(); it != t.rend(); ++it)
        rows.push_back({os, it->first.lambda, it->first.w.to_string(), it->second});
    }
  }
  return rows;
}

std::string basis_name(Basis b) { return b == Basis::Z ? "Z" : b == Basis::X ? "X" : "T"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

}  // namespace

std::string rat_to_string(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  return c.get_str();
}

DatumPtr parse_datum(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("datum JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cartan")) throw ParseError("datum JSON needs a \"cartan\" matrix");
  IntMat a;
  try {
    a = j.at("cartan").get<IntMat>();
  } catch (const json::exception&) {
    throw ParseError("\"cartan\" must be an integer matrix");
  }
  std::optional<RatMat> yb;
  if (j.contains("y_basis")) {
    RatMat m;
    for (const auto& row : j.at("y_basis")) {
      RatVec r;
      for (const auto& v : row) r.push_back(rat_from_json(v));
      m.push_back(r);
    }
    yb = m;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> ties;
  if (j.contains("ties"))
    for (const auto& t : j.at("ties")) {
      if (!t.is_array() || t.size() != 2) throw ParseError("ties are [i, j] pairs");
      ties.push_back({t[0].get<int>() - 1, t[1].get<int>() - 1});
    }
  return RootDatum::build(a, yb, labels, ties);
}

std::vector<std::string> builtin_datum_names() {
  std::vector<std::string> r;
  for (const auto& [k, v] : builtins()) r.push_back(k);
  return r;
}

DatumPtr load_datum(const std::string& src) {
  auto it = builtins().find(src);
  if (it != builtins().end()) return parse_datum(it->second);
  std::ifstream in(src);
  if (!in) throw ParseError("cannot open datum file '" + src + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

std::string datum_to_json(const RootDatum& d) {
  json j;
  j["cartan"] = d.cartan();
  json yb = json::array();
  for (const auto& row : d.y_basis()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    yb.push_back(r);
  }
  j["y_basis"] = yb;
  j["labels"] = d.labels();
  // every identified pair, including those the lattice already forces
  json ties = json::array();
  for (int a = 0; a < d.rank(); ++a)
    for (int b = a + 1; b < d.rank(); ++b)
      if (d.symbol(a, false) == d.symbol(b, false) && d.symbol(a, true) == d.symbol(b, true))
        ties.push_back({a + 1, b + 1});
  if (!ties.empty()) j["ties"] = ties;
  return j.dump();
}

Coweight parse_coweight(const RootDatum& d, const std::string& raw) {
  std::string s = trim(raw);
  Coweight y(d.y_rank(), 0);
  if (s.empty() || s == "0") return y;
  bool named = std::any_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
  if (!named) {
    std::stringstream ss(s);
    std::string tok;
    std::size_t t = 0;
    while (std::getline(ss, tok, ',')) {
      if (t >= y.size()) throw ParseError("coweight '" + s + "' has too many coordinates");
      try {
        y[t++] = std::stoll(trim(tok));
      } catch (const std::exception&) {
        throw ParseError("bad coordinate in '" + s + "'");
      }
    }
    if (t != y.size()) throw ParseError("coweight '" + s + "' needs " + std::to_string(y.size()) + " coordinates");
    return y;
  }
  const auto& names = d.y_names();
  std::size_t p = 0;
  while (p < s.size()) {
    Int sign = 1;
    if (s[p] == '+' || s[p] == '-') sign = s[p++] == '-' ? -1 : 1;
    std::size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    Int k = st == p ? 1 : std::stoll(s.substr(st, p - st));
    std::size_t ns = p;
    while (p < s.size() && std::isalnum(static_cast<unsigned char>(s[p]))) ++p;
    std::string name = s.substr(ns, p - ns);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown coweight name '" + name + "' in '" + s + "'");
    y[it - names.begin()] += sign * k;
  }
  return y;
}

WeylElt parse_word(const RootDatum& d, const std::string& raw) {
  std::string s = trim(raw);
  std::vector<int> w;
  if (s.empty() || s == "e") return WeylElt::identity(d);
  if (s[0] == 'r') {
    std::size_t p = 0;
    while (p < s.size()) {
      if (s[p] != 'r') throw ParseError("bad word '" + s + "'");
      std::size_t st = ++p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (st == p) throw ParseError("bad word '" + s + "'");
      w.push_back(std::stoi(s.substr(st, p - st)) - 1);
    }
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        w.push_back(std::stoi(trim(tok)) - 1);
      } catch (const std::exception&) {
        throw ParseError("bad word '" + s + "'");
      }
    }
  }
  for (int i : w)
    if (i < 0 || i >= d.rank()) throw ParseError("index out of range in word '" + s + "'");
  return WeylElt::from_word(d, w);
}

ExtAlgElt parse_element(const DatumPtr& d, const std::string& text) { return ElementParser(d, text).run(); }

std::vector<mpq_class> parse_q_values(const RootDatum& d, const std::string& text) {
  std::vector<std::optional<mpq_class>> v(d.num_symbols());
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("--q entries are name=value");
    std::string key = trim(tok.substr(0, eq));
    mpq_class val;
    if (val.set_str(trim(tok.substr(eq + 1)), 10) != 0) throw ParseError("bad value in '" + tok + "'");
    val.canonicalize();
    if (key == "all" || key == "q") {
      for (auto& x : v) x = val;
      continue;
    }
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(key) - 1;
      if (i < 0 || i >= d.rank()) throw ParseError("index out of range in --q");
      v[d.symbol(i, false)] = val;
      v[d.symbol(i, true)] = val;
      continue;
    }
    const Ring& r = *d.ring();
    auto it = r.aliases.find(key);
    int s = -1;
    if (it != r.aliases.end()) s = it->second;
    for (std::size_t k = 0; k < r.names.size(); ++k)
      if (r.names[k] == key) s = static_cast<int>(k);
    if (s < 0) throw ParseError("unknown parameter '" + key + "'");
    if (v[s] && *v[s] != val) throw ParseError("conflicting values for '" + key + "'");
    v[s] = val;
  }
  std::vector<mpq_class> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) throw ParseError("no value for parameter " + d.ring()->names[k]);
    if (*v[k] == 0) throw ParseError("parameter values must be nonzero");
    out.push_back(*v[k]);
  }
  return out;
}

Basis parse_basis(const std::string& s) {
  if (s == "Z") return Basis::Z;
  if (s == "X") return Basis::X;
  if (s == "T") return Basis::T;
  throw ParseError("basis must be Z, X or T");
}

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ParseError("format must be json, csv or pretty");
}

std::string render_element(const ExtAlgElt& e, Basis b, Format f) {
  const RootDatum& d = *e.datum();
  if (f == Format::Pretty) {
    if (e.is_zero()) return "0";
    std::string out;
    std::set<std::vector<int>> omegas;
    for (const auto& [k, c] : e.terms()) omegas.insert(k.omega);
    bool first = true;
    for (auto it = omegas.rbegin(); it != omegas.rend(); ++it) {
      OmegaElt om = omega_from_perm(e.datum(), *it);
      AlgElt part = e.component(om);
      std::string body = b == Basis::Z   ? part.to_string()
                         : b == Basis::X ? to_x_string(part)
                                         : format_t_coords(d, express_in_TW_basis(part));
      std::string s = om.is_identity() ? body : body == "1" ? "Tomega[" + om.to_string() + "]"
                                                           : "Tomega[" + om.to_string() + "]*(" + body + ")";
      if (om.is_identity() && omegas.size() > 1) s = "(" + body + ")";
      out += (first ? "" : " + ") + s;
      first = false;
    }
    return out;
  }
  auto rows = element_rows(e, b);
  if (f == Format::Json) {
    json terms = json::array();
    for (const auto& r : rows) {
      json t;
      if (!r.omega.empty()) t["omega"] = r.omega;
      t["lambda"] = coweight_json(r.lambda);
      t["lambda_name"] = format_coweight(d, r.lambda);
      t["word"] = r.word;
      t["coeff"] = r.coeff.to_string();
      terms.push_back(t);
    }
    json j;
    j["basis"] = basis_name(b);
    j["terms"] = terms;
    return j.dump();
  }
  std::string out = "omega,lambda,word,coeff\n";
  for (const auto& r : rows)
    out += csv_field(r.omega) + "," + csv_field(format_coweight(d, r.lambda)) + "," + r.word + "," +
           csv_field(r.coeff.to_string()) + "\n";
  return out;
}

std::string render_constants(const RootDatum& d, const TCoords& c, Format f,
                             const std::optional<std::vector<mpq_class>>& values) {
  std::map<WPlusIndex, mpq_class> spec;
  if (values) spec = specialize_constants(c, *values);
  if (f == Format::Pretty) {
    std::string out;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      out += "T[" + format_coweight(d, it->first.lambda) + ";" + it->first.w.to_string() + "]  " + it->second.to_string();
      if (values) out += "  = " + rat_to_string(spec.at(it->first));
      out += "\n";
    }
    return out.empty() ? "(empty)\n" : out;
  }
  if (f == Format::Json) {
    json rows = json::array();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      json r;
      r["lambda_u"] = coweight_json(it->first.lambda);
      r["word_u"] = it->first.w.to_string();
      r["coeff"] = it->second.to_string();
      if (values) r["value"] = rat_to_string(spec.at(it->first));
      rows.push_back(r);
    }
    return rows.dump();
  }
  std::string out = values ? "lambda_u,word_u,coeff,value\n" : "lambda_u,word_u,coeff\n";
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out += csv_field(format_coweight(d, it->first.lambda)) + "," + it->first.w.to_string() + "," +
           csv_field(it->second.to_string());
    if (values) out += "," + rat_to_string(spec.at(it->first));
    out += "\n";
  }
  return out;
}

std::string paths_to_json(const RootDatum& d, const std::vector<HeckePath>& paths) {
  auto rv = [](const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  json out = json::array();
  for (const auto& p : paths) {
    json j;
    json verts = json::array(), dirs = json::array(), folds = json::array();
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      json v;
      v["t"] = p.times[k].get_str();
      v["point"] = rv(p.vertices[k]);
      verts.push_back(v);
    }
    for (const auto& x : p.directions) dirs.push_back(coweight_json(x));
    for (const auto& f : p.folds) {
      json fj;
      fj["t"] = f.t.get_str();
      json roots = json::array(), xis = json::array();
      for (const auto& r : f.roots) roots.push_back(coweight_json(r));
      for (const auto& x : f.xis) xis.push_back(coweight_json(x));
      fj["roots"] = roots;
      fj["xis"] = xis;
      folds.push_back(fj);
    }
    j["shape"] = format_coweight(d, p.shape);
    j["vertices"] = verts;
    j["directions"] = dirs;
    j["folds"] = folds;
    j["monotone"] = p.monotone;
    out.push_back(j);
  }
  return out.dump();
}

}  // namespace hecke
