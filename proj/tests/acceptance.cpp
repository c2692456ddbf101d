// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include "qschur/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace qschur;

namespace {

struct Tally {
  int configs = 0;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void add(const SuiteReport& r, const std::string& where) {
    ++configs;
    pass += r.count("pass");
    fail += r.count("fail");
    skip += r.count("skip");
    for (const auto& c : r.cases) {
      if (c.status == "fail") failures.push_back(where + " " + c.id + ": " + c.detail);
      if (c.status == "skip") notes.push_back(where + " " + c.id + ": " + c.detail);
    }
  }
  void check(bool ok, const std::string& what) {
    ok ? ++pass : ++fail;
    if (!ok) failures.push_back(what);
  }
  bool ok() const { return fail == 0 && pass > 0; }
};

SuiteConfig config(int n, int d, int band = 2) {
  SuiteConfig c;
  c.n = n;
  c.rank = d;
  c.band = band;
  return c;
}

std::string where(int n, int d) { return "n=" + std::to_string(n) + ",D=" + std::to_string(d); }

int failed_lines = 0;

void report(int k, const std::string& title, const Tally& t, const std::string& extra, double seconds) {
  std::ostringstream line;
  line << (t.ok() ? "PASS" : "FAIL") << "  criterion " << k << " (" << title << "): " << t.configs << " configurations, "
       << t.pass << " checks passed, " << t.fail << " failed, " << t.skip << " skipped";
  if (!extra.empty()) line << "; " << extra;
  line.precision(2);
  line << std::fixed << " [" << seconds << " s]";
  std::cout << line.str() << std::endl;
  for (const auto& f : t.failures) std::cout << "      fail " << f << "\n";
  for (const auto& s : t.notes) std::cout << "      skip " << s << "\n";
  failed_lines += !t.ok();
}

template <typename F>
void criterion(int k, const std::string& title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::string extra;
  try {
    extra = body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  report(k, title, t, extra, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

const CaseResult* find_case(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.cases)
    if (c.id == id) return &c;
  return nullptr;
}

} // namespace

int main() {
  criterion(1, "Hecke presentation, D <= 3, words to length 5", [](Tally& t) {
    for (int d = 1; d <= 3; ++d) t.add(hecke_suite(config(2, d)), "D=" + std::to_string(d));
    return std::string("X_j = [t(omega_{j-1})][t(omega_j)]^-1");
  });

  criterion(2, "U-dot relations on T_D, n <= 3, D <= 4, window 2n", [](Tally& t) {
    int spaces = 0;
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 4; ++d) {
        const SuiteReport r = relations_suite(config(n, d));
        t.add(r, where(n, d));
        for (const auto& c : r.cases) spaces += c.id.rfind("commutator/", 0) == 0;
      }
    return "commutator scalar [mu_i - mu_{i+1}] constant on all " + std::to_string(spaces) + " (residue, weight) spaces";
  });

  criterion(3, "x-difference identities and y-statistics", [](Tally& t) {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 4; ++d) t.add(statistics_suite(config(n, d)), where(n, d));
    return std::string("x identities for n <= 3; y remark for n in {2, 3} (n = 1 outside affine sl_n, see skips)");
  });

  criterion(4, "crystal axioms, oracle, string relations, n in {2, 3}, D <= 4", [](Tally& t) {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 4; ++d) t.add(crystal_suite(config(n, d)), where(n, d));
    return std::string("window width 2n");
  });

  criterion(5, "canonical bases, KL data, compatibility (n=2, D=2)", [](Tally& t) {
    const SuiteReport r = canonical_suite(config(2, 2));
    t.add(r, where(2, 2));
    std::string sizes;
    for (const char* id : {"T/parallel-vs-serial", "S/parallel-vs-serial"})
      if (const auto* c = find_case(r, id)) sizes += (sizes.empty() ? "" : ", ") + std::string(id).substr(0, 1) + " table " + c->detail;
    return sizes;
  });

  criterion(6, "Phi_D relations, tau-compatibility, action consistency", [](Tally& t) {
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 3; ++d) t.add(schur_suite(config(n, d)), where(n, d));
    t.add(schur_suite(config(3, 2)), where(3, 2));
    return std::string("200 random monomials per configuration");
  });

  criterion(7, "transfer identity, routes, leading terms, canonical sweep", [](Tally& t) {
    std::string extra;
    for (int d = 1; d <= 2; ++d) {
      const SuiteReport r = transfer_suite(config(2, d, 2));
      t.add(r, where(2, d));
      if (d == 2) {
        if (const auto* c = find_case(r, "sweep/canonical-to-canonical")) extra += c->detail;
        if (const auto* c = find_case(r, "psi/unique-reading")) extra += "; psi: " + c->detail;
      }
    }
    return extra;
  });

  criterion(8, "determinism, round trips, warm cache", [](Tally& t) {
    t.add(roundtrip_suite(config(2, 2)), where(2, 2));
    t.add(roundtrip_suite(config(3, 2)), where(3, 2));
    // Processing order: random tie-breaks in the solver, serial vs parallel suites.
    const SuiteReport c = canonical_suite(config(2, 2));
    for (const auto& r : c.cases)
      if (r.id.find("determinism") != std::string::npos || r.id.find("parallel") != std::string::npos)
        t.check(r.status == "pass", r.id + ": " + r.detail);
    SuiteConfig serial = config(3, 3);
    serial.threads = 1;
    t.check(relations_suite(serial).to_json() == relations_suite(config(3, 3)).to_json(), "relations report independent of threads");
    // Warm cache: second run served from disk, byte-identical output.
    const auto dir = std::filesystem::temp_directory_path() / "qschur_acceptance_cache";
    std::filesystem::remove_all(dir);
    RunConfig rc;
    rc.cache_dir = dir;
    int compared = 0;
    for (const auto& p : flag_symbols_in_window(2, 2, 0, 3)) {
      rc.flag = p.to_text();
      clear_canonical_caches();
      const CommandResult cold = compute_command("canonical-t", rc);
      clear_canonical_caches();
      const CommandResult warm = compute_command("canonical-t", rc);
      t.check(cold.exit_code == 0 && cold.output == warm.output, "warm cache " + rc.flag);
      ++compared;
    }
    rc.flag.clear();
    for (const auto& s : matrices_in_band(2, 2, 2)) {
      rc.matrix = s.to_text();
      clear_canonical_caches();
      const CommandResult cold = compute_command("canonical-s", rc);
      clear_canonical_caches();
      const CommandResult warm = compute_command("canonical-s", rc);
      t.check(cold.exit_code == 0 && cold.output == warm.output, "warm cache " + rc.matrix);
      ++compared;
    }
    std::filesystem::remove_all(dir);
    return std::to_string(compared) + " cold/warm cache outputs compared";
  });

  std::cout << (failed_lines ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << 8 - failed_lines << "/8 criteria)\n";
  return failed_lines ? 1 : 0;
}
