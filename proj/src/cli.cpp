#include "qschur/cli.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qschur {

int RunConfig::window_lo() const { return lo.value_or(1 - (window.value_or(2 * n) - n) / 2); }

int RunConfig::window_hi() const { return window_lo() + window.value_or(2 * n) - 1; }

SuiteConfig RunConfig::suite_config() const {
  SuiteConfig s;
  s.n = n;
  s.rank = rank;
  s.lo = window_lo();
  s.hi = window_hi();
  s.band = band;
  s.psi = psi;
  s.commutator = commutator;
  s.span.max_length = span_length;
  s.threads = threads;
  return s;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("QSCHUR_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::vector<std::string> compute_entities() {
  return {"xstat", "ystat", "canonical-t", "canonical-s", "crystal-graph", "transfer"};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <typename Expansion, typename Label, typename Compute>
Expansion cached(const std::optional<std::filesystem::path>& dir, const Label& x, Compute&& compute) {
  if (!dir) return compute();
  CanonicalDiskCache cache(*dir);
  if (auto hit = cache.find(x)) return *hit;
  Expansion b = compute();
  cache.store(b);
  return b;
}

template <typename Expansion>
std::string render_canonical(const Expansion& b, const std::string& format) {
  if (format == "json") return dump(to_json(b));
  if (format == "csv") return canonical_csv(std::vector<Expansion>{b});
  throw std::invalid_argument("format " + format + " is not available for canonical bases (json, csv)");
}

CommandResult run_compute(const std::string& entity, const RunConfig& c) {
  const auto dir = resolve_cache_dir(c.cache_dir);
  if (entity == "xstat") {
    require(!c.flag.empty(), "xstat needs --p");
    return {0, std::to_string(x_stat(FlagSymbol::parse(c.flag))) + "\n", ""};
  }
  if (entity == "ystat") {
    require(!c.matrix.empty(), "ystat needs --s");
    return {0, std::to_string(y_stat(parse_matrix_text(c.matrix))) + "\n", ""};
  }
  if (entity == "canonical-t") {
    require(!c.flag.empty(), "canonical-t needs --p");
    const FlagSymbol p = FlagSymbol::parse(c.flag);
    return {0, render_canonical(cached<CanonicalT>(dir, p, [&] { return canonical_tmodule(p); }), c.format), ""};
  }
  if (entity == "canonical-s") {
    require(!c.matrix.empty(), "canonical-s needs --s");
    const PeriodicMatrix s = parse_matrix_text(c.matrix);
    return {0, render_canonical(cached<CanonicalS>(dir, s, [&] { return canonical_schur(s); }), c.format), ""};
  }
  if (entity == "crystal-graph") {
    require(c.n >= 2, "crystal-graph needs n >= 2");
    const CrystalGraph g = crystal_graph(c.n, c.rank, c.window_lo(), c.window_hi());
    if (c.format == "dot") return {0, to_dot(g), ""};
    require(c.format == "json", "format " + c.format + " is not available for crystal graphs (json, dot)");
    return {0, dump(to_json(g)), ""};
  }
  if (entity == "transfer") {
    require(c.format == "json", "transfer output is json");
    SpanOptions span;
    span.max_length = c.span_length;
    std::vector<TransferRecord> records;
    if (!c.matrix.empty())
      records.push_back(check_transfer_canonical(parse_matrix_text(c.matrix), c.psi, span));
    else
      records = transfer_sweep(c.n, c.rank + c.n, c.band, c.psi, span);
    Json out = Json::array();
    bool bad = false;
    for (const auto& r : records) {
      out.push_back(to_json(r));
      bad = bad || r.verdict == Verdict::counterexample;
    }
    Json doc{{"psi_reading", to_string(c.psi)}, {"records", out}};
    return {bad ? 1 : 0, dump(doc), bad ? "counterexample found" : ""};
  }
  throw std::invalid_argument("unknown entity: " + entity);
}

template <typename F>
CommandResult guarded(F&& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    return {3, "", e.what()};
  } catch (const NotInSpan& e) {
    return {3, "", e.what()};
  } catch (const std::exception& e) {
    return {2, "", e.what()};
  }
}

} // namespace

CommandResult compute_command(const std::string& entity, const RunConfig& c) {
  return guarded([&] { return run_compute(entity, c); });
}

CommandResult suite_command(const std::string& name, const RunConfig& c) {
  return guarded([&] {
    const SuiteConfig sc = c.suite_config();
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    Json out = Json::array();
    bool ok = true;
    int failed = 0;
    for (const auto& s : names) {
      const SuiteReport r = run_suite(s, sc);
      ok = ok && r.passed();
      failed += r.count("fail");
      out.push_back(r.to_json());
    }
    const Json doc = names.size() == 1 ? out[0] : out;
    return CommandResult{ok ? 0 : 1, dump(doc), ok ? "" : std::to_string(failed) + " failing cases"};
  });
}

} // namespace qschur
