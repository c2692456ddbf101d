#include "qschur/schur.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

UdotMonomial M(std::vector<UdotLetter> l, std::vector<int> w) { return {std::move(l), std::move(w)}; }
const UdotLetter e0{Chevalley::e, 0, 1}, e1{Chevalley::e, 1, 1}, f0{Chevalley::f, 0, 1}, f1{Chevalley::f, 1, 1};

} // namespace

TEST_CASE("idempotents") {
  const auto lambdas = dominant_symbols(2, 2);
  SchurElement unit;
  for (const auto& a : lambdas) {
    unit += SchurElement::idempotent(a);
    for (const auto& b : lambdas) {
      const SchurElement p = schur_mul(SchurElement::idempotent(a), SchurElement::idempotent(b));
      if (a == b)
        CHECK(p == SchurElement::idempotent(a));
      else
        CHECK(p.is_zero());
    }
  }
  for (const auto& s : matrices_in_band(2, 2, 1)) {
    const SchurElement x = SchurElement::basis(s, Laurent::v(2) - 3);
    CHECK(schur_mul(unit, x) == x);
    CHECK(schur_mul(x, unit) == x);
  }
}

TEST_CASE("generators") {
  for (const auto& lambda : dominant_symbols(2, 2)) CHECK(phi_generator(GeneratorKind::a, 0, lambda) == SchurElement::idempotent(lambda));
  const FlagSymbol lambda(2, {1, 2});
  CHECK(phi_generator(GeneratorKind::e, 1, lambda) == SchurElement::basis(generator_matrices(lambda, 1)->first));
  CHECK(phi_generator(GeneratorKind::e, 1, FlagSymbol(2, {2, 2})).is_zero());
  CHECK(phi_monomial(M({}, {2, 0}), 2) == SchurElement::idempotent(FlagSymbol(2, {1, 1})));
  CHECK(phi_monomial(M({}, {2, 1}), 2).is_zero());
}

TEST_CASE("commutator at n = 2, D = 1") {
  for (const auto& mu : std::vector<std::vector<int>>{{1, 0}, {0, 1}})
    for (int i = 0; i < 2; ++i) {
      const UdotLetter e{Chevalley::e, i, 1}, f{Chevalley::f, i, 1};
      const SchurElement z = phi_monomial(M({e, f}, mu), 1) - phi_monomial(M({f, e}, mu), 1);
      const int a = mu[static_cast<std::size_t>(residue_index(i, 2) - 1)] - mu[static_cast<std::size_t>(residue_index(i + 1, 2) - 1)];
      CHECK(z == (a >= 0 ? quantum_integer(a) : -quantum_integer(-a)) * phi_monomial(M({}, mu), 1));
    }
}

TEST_CASE("monomials act as on T_D") {
  const UdotMonomial m = M({{Chevalley::f, 1, 2}}, {2, 0});
  const SchurElement x = phi_monomial(m, 2);
  CHECK_FALSE(x.is_zero());
  for (const auto& p : flag_symbols_in_window(2, 2, 0, 3))
    CHECK(schur_act(x, ModuleVector::basis(p)) == act_monomial(m, ModuleVector::basis(p)));
  const UdotMonomial w = M({e0, f1, e1, f0}, {1, 2});
  for (const auto& p : flag_symbols_in_window(2, 3, 0, 3))
    CHECK(schur_act(phi_monomial(w, 3), ModuleVector::basis(p)) == act_monomial(w, ModuleVector::basis(p)));
}

TEST_CASE("products and tau") {
  const auto mats = matrices_in_band(2, 2, 1);
  for (std::size_t a = 0; a < mats.size(); a += 2)
    for (std::size_t b = 0; b < mats.size(); b += 3) {
      const SchurElement x = SchurElement::basis(mats[a]), y = SchurElement::basis(mats[b]);
      CHECK(schur_mul(x, y) == schur_mul_reference(x, y));
      const SchurElement t = tau_schur(schur_mul(x, y));
      CHECK(t == schur_mul(tau_schur(x), tau_schur(y)));
    }
  for (const auto& s : mats) CHECK(tau_schur(tau_schur(SchurElement::basis(s))) == SchurElement::basis(s));
  for (const auto& s : matrices_in_band(2, 3, 1))
    CHECK(collapse_to_schur(standard_vector(s), s.col_dominant()) == SchurElement::basis(s, Laurent::v(-y_stat(s))));
}

TEST_CASE("sign character and twist") {
  const PeriodicMatrix id = identity_matrix(2);
  CHECK(epsilon_sign(SchurElement::basis(id)) == 1);
  const PeriodicMatrix sw(2, {{1, 2, 1}, {2, 1, 1}});
  CHECK(epsilon_sign(SchurElement::basis(sw)) == -Laurent::v(y_stat(sw)));
  CHECK(epsilon_sign(SchurElement::basis(diagonal_matrix(FlagSymbol(2, {1, 1})))).is_zero());

  const SchurElement d = SchurElement::idempotent(FlagSymbol(2, {1, 2}));
  for (PsiReading r : {PsiReading::dominant_window, PsiReading::weight, PsiReading::matrix_degree}) CHECK(psi_twist(d, r) == d);
  // Block (lambda, mu) = ((1,1), (1,2)).
  const PeriodicMatrix s = matrix_of_pair(FlagSymbol(2, {1, 1}), FlagSymbol(2, {1, 2}));
  CHECK(psi_twist(SchurElement::basis(s), PsiReading::dominant_window) == SchurElement::basis(s, Laurent::v(-1)));
  const SchurElement x = SchurElement::basis(s, 3) + SchurElement::basis(sw);
  for (PsiReading r : {PsiReading::dominant_window, PsiReading::weight, PsiReading::matrix_degree})
    CHECK(psi_twist(psi_twist(x, r), r, true) == x);
}
