#include "qschur/transfer.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

UdotMonomial M(std::vector<UdotLetter> l, std::vector<int> w) { return {std::move(l), std::move(w)}; }

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

} // namespace

TEST_CASE("Delta on generators") {
  const auto a = delta_generator(GeneratorKind::a, 0, {1, 1});
  CHECK(a.size() == 4);
  for (const auto& t : a) CHECK(add(t.left.weight, t.right.weight) == std::vector<int>{1, 1});
  for (const auto& lambda : std::vector<std::vector<int>>{{2, 1}, {0, 3}, {2, 2}}) {
    int splits = 1;
    for (int x : lambda) splits *= x + 1;
    CHECK(delta_generator(GeneratorKind::e, 1, lambda).size() == static_cast<std::size_t>(2 * splits));
    CHECK(delta_generator(GeneratorKind::f, 0, lambda).size() == static_cast<std::size_t>(2 * splits));
  }
}

TEST_CASE("omega route on idempotents") {
  const std::vector<int> lambda{2, 2};
  TensorElement expected(2, 2, 2);
  for (int a = 0; a <= 2; ++a) {
    const std::vector<int> l1{a, 2 - a}, l2{2 - a, a};
    expected.add_product(SchurElement::idempotent(dominant_from_weight(l1)), SchurElement::idempotent(dominant_from_weight(l2)));
  }
  CHECK(omega_route(M({}, lambda), 2, 2) == expected);
}

TEST_CASE("omega route respects kernel relations") {
  // Phi_4(e_1 e_1) = [2] Phi_4(e_1^(2)), so the tensor images must agree too.
  const UdotLetter e{Chevalley::e, 1, 1}, e2{Chevalley::e, 1, 2};
  const TensorElement lhs = omega_route(M({e, e}, {1, 3}), 2, 2);
  TensorElement rhs(2, 2, 2);
  const TensorElement divided = omega_route(M({e2}, {1, 3}), 2, 2);
  for (const auto& [key, c] : divided.terms()) rhs.add_term(key.first, key.second, quantum_integer(2) * c);
  CHECK(lhs == rhs);
}

TEST_CASE("transfer of idempotents") {
  const FlagSymbol lambda = dominant_from_weight({2, 2});
  const TransferResult r = transfer_map(SchurElement::idempotent(lambda), PsiReading::matrix_degree);
  CHECK(r.routes_agree);
  CHECK(r.route_a == SchurElement::idempotent(dominant_from_weight({1, 1})));
  // Transfer identity by construction on monomial images.
  const UdotMonomial m = M({{Chevalley::f, 0, 1}, {Chevalley::e, 1, 1}}, {2, 2});
  const TransferResult t = transfer_map(phi_monomial(m, 4), PsiReading::matrix_degree);
  CHECK(t.routes_agree);
  CHECK(t.route_a == route_a_value(m, 2));
}

TEST_CASE("canonical transfer checks") {
  const PeriodicMatrix d = diagonal_matrix(dominant_from_weight({2, 2}));
  const TransferRecord b = check_transfer_canonical(d, PsiReading::matrix_degree);
  CHECK(b.verdict == Verdict::matches_b);
  CHECK(b.expected == SchurElement::idempotent(dominant_from_weight({1, 1})));
  const PeriodicMatrix gap(2, {{1, 2, 2}, {2, 1, 2}});
  const TransferRecord a = check_transfer_canonical(gap, PsiReading::matrix_degree);
  CHECK(a.verdict == Verdict::matches_a);
  CHECK(a.route_a.is_zero());
  CHECK_FALSE(check_leading_term(gap, PsiReading::matrix_degree).applicable);
  const LeadingTermReport lem = check_leading_term(d, PsiReading::matrix_degree);
  CHECK(lem.applicable);
  CHECK(lem.passed);
  CHECK(transfer_sweep(2, 3, 1, PsiReading::matrix_degree).size() ==
        transfer_sweep_serial(2, 3, 1, PsiReading::matrix_degree).size());
}

TEST_CASE("span membership agrees with canonical coordinates") {
  for (const auto& s : matrices_in_band(2, 3, 1)) {
    const SchurElement x = SchurElement::basis(s);
    const bool in_span = shared_span(2, 3, s.col_dominant()).solve(x).found;
    CHECK(in_span == in_aperiodic_span(x));
  }
}
