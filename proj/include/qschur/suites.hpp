#pragma once

// Verification suites. Each returns a report whose cases are sorted by id;
// cases run concurrently (OpenMP) up to the configured thread count.

#include "qschur/serialize.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qschur {

/// Which difference the commutator [e_i, f_i] is checked against.
enum class CommutatorForm {
  next_difference,     // [mu_i - mu_{i+1}], the form that holds
  previous_difference, // [mu_i - mu_{i-1}]
};
std::string to_string(CommutatorForm f);
std::optional<CommutatorForm> commutator_form_from_string(const std::string& s);

struct SuiteConfig {
  int n = 2;
  int rank = 2;
  // Window of values for basis enumeration; default width 2n around [1, n].
  std::optional<int> lo;
  std::optional<int> hi;
  int band = 2;
  PsiReading psi = PsiReading::matrix_degree;
  CommutatorForm commutator = CommutatorForm::next_difference;
  SpanOptions span;
  int random_monomials = 200;
  std::uint64_t seed = 1;
  int threads = 0; // 0: OpenMP default

  int window_lo() const { return lo.value_or(1 - n / 2); }
  int window_hi() const { return hi.value_or(window_lo() + 2 * n - 1); }
  Json to_json() const;
};

struct CaseResult {
  std::string id;
  std::string status; // pass | fail | skip
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  Json config;
  std::vector<CaseResult> cases;
  bool passed() const;
  int count(const std::string& status) const;
  Json to_json() const;
};

using CaseFn = std::function<std::vector<CaseResult>()>;
/// Runs independent case groups concurrently; output sorted by id.
std::vector<CaseResult> run_cases(const std::vector<CaseFn>& groups, int threads);
/// Serial reference for run_cases.
std::vector<CaseResult> run_cases_serial(const std::vector<CaseFn>& groups);

/// Presentation of H_D: quadratic, braid, rotation and Bernstein relations.
SuiteReport hecke_suite(const SuiteConfig& c);
/// Relations of U-dot under the generator action on every basis vector of a window.
SuiteReport relations_suite(const SuiteConfig& c);
/// x-difference identities and y-statistics of the generator matrices.
SuiteReport statistics_suite(const SuiteConfig& c);
/// Crystal base axioms, bracketing rule vs sl_2 oracle, string relations.
SuiteReport crystal_suite(const SuiteConfig& c);
/// Canonical bases of T_D and S_D, KL data, compatibility, determinism.
SuiteReport canonical_suite(const SuiteConfig& c);
/// Phi_D: relations, tau-compatibility, action consistency.
SuiteReport schur_suite(const SuiteConfig& c);
/// Omega route, transfer identity, route agreement, leading terms, canonical sweep.
SuiteReport transfer_suite(const SuiteConfig& c);
/// Serialization round trips.
SuiteReport roundtrip_suite(const SuiteConfig& c);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& c);

/// Commutator scalar [e_i, f_i] on weight mu: [mu_i - mu_{i+1}] (or the
/// previous difference), indices read modulo n in [1, n].
Laurent commutator_scalar(const std::vector<int>& mu, int i, CommutatorForm form = CommutatorForm::next_difference);

} // namespace qschur
