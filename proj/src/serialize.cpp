#include "qschur/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

Json big_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long long>());
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

} // namespace

Json to_json(const Laurent& x) {
  Json j = Json::object();
  for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = big_to_json(c);
  return j;
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent JSON must be an object of exponent -> coefficient");
  std::map<int, BigInt> t;
  for (const auto& [k, c] : j.items()) t[std::stoi(k)] += big_from_json(c);
  return Laurent::from_terms(t);
}

Json to_json(const FlagSymbol& p) { return Json{{"n", p.n()}, {"D", p.rank()}, {"values", p.values()}}; }

FlagSymbol flag_from_json(const Json& j) {
  FlagSymbol p(j.at("n").get<int>(), ints(j.at("values")));
  if (j.contains("D") && j.at("D").get<int>() != p.rank()) throw std::invalid_argument("flag JSON: D differs from window length");
  return p;
}

Json to_json(const PeriodicMatrix& s) {
  Json e = Json::array();
  for (const auto& [k, v] : s.entries()) e.push_back({k.first, k.second, v});
  return Json{{"n", s.n()}, {"D", s.rank()}, {"entries", e}};
}

PeriodicMatrix matrix_from_json(const Json& j) {
  std::vector<std::tuple<int, int, int>> e;
  for (const auto& t : j.at("entries")) e.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
  PeriodicMatrix s(j.at("n").get<int>(), e);
  if (j.contains("D") && j.at("D").get<int>() != s.rank()) throw std::invalid_argument("matrix JSON: D differs from total mass");
  return s;
}

PeriodicMatrix parse_matrix_text(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("cannot parse matrix '" + text + "' at position " + std::to_string(pos) + ": " + what);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&] {
    skip();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  };
  expect('n');
  expect('=');
  const int n = number();
  expect(';');
  expect('{');
  std::vector<std::tuple<int, int, int>> e;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      expect('(');
      const int i = number();
      expect(',');
      const int jj = number();
      expect(')');
      expect(':');
      const int v = number();
      e.emplace_back(i, jj, v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (pos != text.size()) fail("trailing characters");
  if (n < 1) fail("n must be positive");
  return PeriodicMatrix(n, e);
}

Json to_json(const ModuleVector& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back({{"p", p.values()}, {"coeff", to_json(c)}});
  return Json{{"n", x.n()}, {"D", x.rank()}, {"terms", terms}};
}

ModuleVector module_vector_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  ModuleVector x(n, j.at("D").get<int>());
  for (const auto& t : j.at("terms")) x.add_term(FlagSymbol(n, ints(t.at("p"))), laurent_from_json(t.at("coeff")));
  return x;
}

Json to_json(const SchurElement& x) {
  Json blocks = Json::array();
  for (const auto& [key, part] : x.blocks()) {
    Json terms = Json::array();
    for (const auto& [s, c] : part.terms()) terms.push_back({{"matrix", to_json(s).at("entries")}, {"coeff", to_json(c)}});
    blocks.push_back({{"lambda", key.first.values()}, {"mu", key.second.values()}, {"terms", terms}});
  }
  return Json{{"n", x.n()}, {"D", x.rank()}, {"blocks", blocks}};
}

SchurElement schur_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  SchurElement x(n, j.at("D").get<int>());
  for (const auto& b : j.at("blocks"))
    for (const auto& t : b.at("terms")) {
      const PeriodicMatrix s = matrix_from_json(Json{{"n", n}, {"entries", t.at("matrix")}});
      if (s.row_dominant().values() != ints(b.at("lambda")) || s.col_dominant().values() != ints(b.at("mu")))
        throw std::invalid_argument("Schur JSON: matrix " + s.to_text() + " is not in its block");
      x.add_term(s, laurent_from_json(t.at("coeff")));
    }
  return x;
}

namespace {

Json kl_json(const KlData& k) {
  Json pairs = Json::array();
  for (const auto& [i, d] : k.pairs) pairs.push_back({i, big_to_json(d)});
  return pairs;
}

template <typename Label>
Json expansion_json(const CanonicalExpansion<Label>& b, const char* kind) {
  Json terms = Json::array();
  for (const auto& [q, c] : b.terms) {
    const KlData k = kl_coefficients(b, q);
    terms.push_back({{"label", to_json(q)}, {"coeff", to_json(c)}, {"kl", kl_json(k)}, {"ic_consistent", k.consistent}});
  }
  return Json{{"kind", kind}, {"leading", to_json(b.leading)}, {"terms", terms}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Label>
std::string table_csv(const std::vector<CanonicalExpansion<Label>>& table) {
  std::ostringstream os;
  os << "leading,term,coefficient,kl_pairs\n";
  for (const auto& b : table)
    for (const auto& [q, c] : b.terms)
      os << csv_field(b.leading.to_text()) << "," << csv_field(q.to_text()) << "," << csv_field(to_json(c).dump()) << ","
         << csv_field(kl_json(kl_coefficients(b, q)).dump()) << "\n";
  return os.str();
}

} // namespace

Json to_json(const CanonicalT& b) { return expansion_json(b, "T"); }
Json to_json(const CanonicalS& b) { return expansion_json(b, "S"); }

CanonicalT canonical_t_from_json(const Json& j) {
  if (j.at("kind") != "T") throw std::invalid_argument("expected a T_D canonical expansion");
  CanonicalT b{flag_from_json(j.at("leading")), {}};
  for (const auto& t : j.at("terms")) b.terms.emplace(flag_from_json(t.at("label")), laurent_from_json(t.at("coeff")));
  return b;
}

CanonicalS canonical_s_from_json(const Json& j) {
  if (j.at("kind") != "S") throw std::invalid_argument("expected an S_D canonical expansion");
  CanonicalS b{matrix_from_json(j.at("leading")), {}};
  for (const auto& t : j.at("terms")) b.terms.emplace(matrix_from_json(t.at("label")), laurent_from_json(t.at("coeff")));
  return b;
}

std::string canonical_csv(const std::vector<CanonicalT>& table) { return table_csv(table); }
std::string canonical_csv(const std::vector<CanonicalS>& table) { return table_csv(table); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"' && k + 1 < text.size() && text[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && k + 1 < text.size() && text[k + 1] == '\n') {
      continue;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("parse_csv: unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (const auto& p : g.vertices) vertices.push_back(p.values());
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from.values()}, {"to", e.to.values()}, {"residue", e.residue}, {"leaves_window", e.leaves_window}});
  return Json{{"n", g.n}, {"D", g.rank}, {"lo", g.lo}, {"hi", g.hi}, {"vertices", vertices}, {"edges", edges}};
}

CrystalGraph crystal_graph_from_json(const Json& j) {
  CrystalGraph g;
  g.n = j.at("n").get<int>();
  g.rank = j.at("D").get<int>();
  g.lo = j.at("lo").get<int>();
  g.hi = j.at("hi").get<int>();
  for (const auto& v : j.at("vertices")) g.vertices.emplace_back(g.n, ints(v));
  for (const auto& e : j.at("edges"))
    g.edges.push_back({FlagSymbol(g.n, ints(e.at("from"))), FlagSymbol(g.n, ints(e.at("to"))), e.at("residue").get<int>(),
                       e.at("leaves_window").get<bool>()});
  return g;
}

namespace {

std::string dot_id(const FlagSymbol& p) {
  std::string s = "\"";
  for (std::size_t k = 0; k < p.values().size(); ++k) s += (k ? "," : "") + std::to_string(p.values()[k]);
  return s + "\"";
}

} // namespace

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // n=" << g.n << " D=" << g.rank << " window=[" << g.lo << "," << g.hi << "]\n";
  for (const auto& p : g.vertices) os << "  " << dot_id(p) << ";\n";
  for (const auto& e : g.edges) {
    os << "  " << dot_id(e.from) << " -> " << dot_id(e.to) << " [label=\"" << e.residue << "\"";
    if (e.leaves_window) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const TransferRecord& r) {
  return Json{{"input", to_json(r.input)},       {"route_a", to_json(r.route_a)}, {"route_b", to_json(r.route_b)},
              {"expected", to_json(r.expected)}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}};
}

// ------------------------------------------------------------------ cache

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "-" : "") + std::to_string(v[k]);
  return s;
}

} // namespace

std::filesystem::path CanonicalDiskCache::file_for(const FlagSymbol& p) const {
  return root_ / ("t_n" + std::to_string(p.n()) + "_D" + std::to_string(p.rank()) + "_l" + join(p.dominant().values()) + ".json");
}

std::filesystem::path CanonicalDiskCache::file_for(const PeriodicMatrix& s) const {
  return root_ / ("s_n" + std::to_string(s.n()) + "_D" + std::to_string(s.rank()) + "_l" + join(s.row_dominant().values()) +
                  "_m" + join(s.col_dominant().values()) + ".json");
}

Json CanonicalDiskCache::load(const std::filesystem::path& f) const {
  std::ifstream in(f);
  if (!in) return Json::object();
  try {
    return Json::parse(in);
  } catch (const Json::exception&) {
    return Json::object();
  }
}

void CanonicalDiskCache::save(const std::filesystem::path& f, const Json& j) const {
  std::filesystem::create_directories(root_);
  const auto tmp = f.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, f);
}

std::optional<CanonicalT> CanonicalDiskCache::find(const FlagSymbol& p) const {
  const Json j = load(file_for(p));
  auto it = j.find(p.to_text());
  if (it == j.end()) return std::nullopt;
  return canonical_t_from_json(*it);
}

std::optional<CanonicalS> CanonicalDiskCache::find(const PeriodicMatrix& s) const {
  const Json j = load(file_for(s));
  auto it = j.find(s.to_text());
  if (it == j.end()) return std::nullopt;
  return canonical_s_from_json(*it);
}

void CanonicalDiskCache::store(const CanonicalT& b) const {
  const auto f = file_for(b.leading);
  Json j = load(f);
  j[b.leading.to_text()] = to_json(b);
  save(f, j);
}

void CanonicalDiskCache::store(const CanonicalS& b) const {
  const auto f = file_for(b.leading);
  Json j = load(f);
  j[b.leading.to_text()] = to_json(b);
  save(f, j);
}

} // namespace qschur
