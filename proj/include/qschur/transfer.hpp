#pragma once

// Delta on generators, Omega on Im Phi, and the transfer map Phi_{D+n,D}
// computed two ways.

#include "qschur/canonical.hpp"
#include "qschur/rational.hpp"
#include "qschur/schur.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

// ------------------------------------------------------------------ Delta

/// scale * left (x) right, both monomials.
struct TensorTerm {
  Laurent scale;
  UdotMonomial left;
  UdotMonomial right;
};

/// Delta(a_lambda), Delta(a_lambda e_i) or Delta(f_i a_lambda); lambda is the
/// weight of the idempotent in the displayed product. Splittings run over
/// lambda_1 + lambda_2 = lambda with nonnegative parts.
std::vector<TensorTerm> delta_generator(GeneratorKind g, int i, const std::vector<int>& lambda);

/// Element of S_{D1} (x) S_{D2} in the basis [s] (x) [t].
class TensorElement {
public:
  using Key = std::pair<PeriodicMatrix, PeriodicMatrix>;
  TensorElement() = default;
  TensorElement(int n, int d1, int d2) : n_(n), d1_(d1), d2_(d2) {}

  int n() const { return n_; }
  int d1() const { return d1_; }
  int d2() const { return d2_; }
  const std::map<Key, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PeriodicMatrix& a, const PeriodicMatrix& b, const Laurent& c);
  /// += c * (a (x) b), expanded.
  void add_product(const SchurElement& a, const SchurElement& b, const Laurent& c = 1);
  TensorElement& operator+=(const TensorElement& o);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
  std::string to_string() const;

private:
  int n_ = 1;
  int d1_ = 0;
  int d2_ = 0;
  std::map<Key, Laurent> terms_;
};

/// (Phi_{D1} (x) Phi_{D2})(Delta(m)), built letter by letter from
/// delta_generator and leg-wise products.
TensorElement omega_route(const UdotMonomial& m, int d1, int d2);

/// (epsilon (x) 1) on S_n (x) S_D.
SchurElement epsilon_first_leg(const TensorElement& x);

/// phi(m): weight lowered by (1, ..., 1), scalar v^{#e - #f}.
struct ScaledMonomial {
  Laurent scale;
  UdotMonomial monomial;
};
ScaledMonomial phi_twist(const UdotMonomial& m);
/// m with weight lowered by (1, ..., 1).
UdotMonomial lower_weight(const UdotMonomial& m);

/// Phi'(Phi_{D+n}(m)) = (epsilon (x) 1) omega_route(m, n, D).
SchurElement phi_prime(const UdotMonomial& m, int rank);
/// psi o Phi' on one monomial.
SchurElement route_b(const UdotMonomial& m, int rank, PsiReading psi);
/// Phi_D(lowered m): the value the transfer identity prescribes.
SchurElement route_a_value(const UdotMonomial& m, int rank);

// ------------------------------------------------------------ monomial span

using RationalVector = std::map<PeriodicMatrix, Rational>;
using Combination = std::map<UdotMonomial, Rational>;

struct SpanOptions {
  int max_length = 6;
  int max_power = 0; // 0 means up to the rank
  friend auto operator<=>(const SpanOptions&, const SpanOptions&) = default;
};

/// Images Phi_D(m) for monomials m acting on a_{#mu}, grown breadth-first by
/// word length. Per output weight only words with independent images are kept;
/// rejected words give relations in Ker Phi_D.
class MonomialSpan {
public:
  MonomialSpan(int n, int rank, const FlagSymbol& mu, SpanOptions opts = {});

  int n() const { return n_; }
  int rank() const { return rank_; }
  const FlagSymbol& mu() const { return mu_; }
  int length() const { return length_; }
  /// Adds one word-length layer; false once max_length is reached.
  bool extend();

  struct Solution {
    bool found = false;
    Combination coefficients;
    std::vector<PeriodicMatrix> residual_support;
  };
  /// x = sum c_m Phi_D(m); extends layers as needed. Thread-safe.
  Solution solve(const SchurElement& x);

  /// Kept words and their images.
  std::vector<std::pair<UdotMonomial, SchurElement>> generators() const;
  /// Relations sum c_m m with sum c_m Phi_D(m) = 0.
  std::vector<Combination> relations() const;

private:
  struct Row {
    PeriodicMatrix pivot;
    RationalVector vec;
    Combination combo;
  };
  struct Layer {
    std::vector<Row> rows;
    std::vector<std::pair<UdotMonomial, SchurElement>> fresh;
  };
  std::vector<UdotLetter> letters() const;
  void insert(std::vector<Row>& rows, RationalVector vec, Combination combo);
  static void reduce(const std::vector<Row>& rows, RationalVector& vec, Combination& combo);
  Solution solve_locked(const SchurElement& x) const;

  int n_;
  int rank_;
  FlagSymbol mu_;
  SpanOptions opts_;
  int length_ = 0;
  std::map<std::vector<int>, Layer> by_weight_;
  std::vector<std::pair<UdotMonomial, SchurElement>> kept_;
  std::vector<Combination> relations_;
  mutable std::mutex mutex_;
};

/// Shared span for (n, rank, mu, opts).
MonomialSpan& shared_span(int n, int rank, const FlagSymbol& mu, SpanOptions opts = {});
void clear_span_cache();

/// Schur element from a rational combination of monomial images.
SchurElement evaluate_combination(const Combination& c, int rank, PsiReading psi, bool route_b_side);

// --------------------------------------------------------------- transfer

class NotInSpan : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

struct TransferResult {
  SchurElement route_a;
  SchurElement route_b;
  bool routes_agree = false;
};

/// Phi_{D+n,D}(x) for x in Im Phi_{D+n} (rank of x = D + n). Throws
/// NotInSpan when x is outside the span within the length cap.
TransferResult transfer_map(const SchurElement& x, PsiReading psi, SpanOptions opts = {});

/// Checks every recorded relation of the span against Phi_D; returns the
/// number of violations.
int check_kernel_inclusion(MonomialSpan& span);

/// Coefficients of x in the canonical basis {b_u} (unitriangular inversion).
std::map<PeriodicMatrix, Laurent> canonical_coordinates(const SchurElement& x);
/// Independent membership test: x lies in the span of b_u with u aperiodic.
bool in_aperiodic_span(const SchurElement& x);

struct LeadingTermReport {
  bool applicable = false; // all diagonal entries >= 1 and [s] in the span
  bool passed = false;
  std::string detail;
};
LeadingTermReport check_leading_term(const PeriodicMatrix& s, PsiReading psi, SpanOptions opts = {});

enum class Verdict { matches_a, matches_b, counterexample };
std::string to_string(Verdict v);

struct TransferRecord {
  PeriodicMatrix input;
  SchurElement route_a;
  SchurElement route_b;
  SchurElement expected;
  Verdict verdict = Verdict::counterexample;
  std::string detail;
};
TransferRecord check_transfer_canonical(const PeriodicMatrix& s, PsiReading psi, SpanOptions opts = {});

/// Aperiodic s of rank `rank` with |j - i| <= band. Parallel over s; the
/// serial version is the reference.
std::vector<TransferRecord> transfer_sweep(int n, int rank, int band, PsiReading psi, SpanOptions opts = {});
std::vector<TransferRecord> transfer_sweep_serial(int n, int rank, int band, PsiReading psi, SpanOptions opts = {});

/// Exhaustive monomials of at most `max_letters` letters (powers up to
/// max_power) on weights of rank `rank`.
std::vector<UdotMonomial> monomials_up_to(int n, int rank, int max_letters, int max_power);

} // namespace qschur
