#include "qschur/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

const Laurent& q_minus_one() {
  static const Laurent x = Laurent::v(-2) - Laurent(1);
  return x;
}

} // namespace

HeckeElement HeckeElement::basis(const AffinePermutation& w, const Laurent& c) {
  HeckeElement h(w.rank());
  h.add_term(w, c);
  return h;
}

Laurent HeckeElement::coeff(const AffinePermutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElement::add_term(const AffinePermutation& w, const Laurent& c) {
  if (c.is_zero()) return;
  if (w.rank() != rank_) throw std::invalid_argument("HeckeElement: rank mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement operator*(const Laurent& c, const HeckeElement& h) {
  HeckeElement r(h.rank_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : h.terms_) r.terms_.emplace(w, c * x);
  return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return mul(a, b); }

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")*T[" << w.to_text() << "]";
    first = false;
  }
  return os.str();
}

HeckeElement mul_by_simple(const HeckeElement& h, int i, Side side) {
  HeckeElement r(h.rank());
  for (const auto& [w, c] : h.terms()) {
    const bool ascent = side == Side::right ? right_ascent(w, i) : left_ascent(w, i);
    const AffinePermutation ws = side == Side::right ? w.times_simple(i) : w.simple_times(i);
    if (ascent) {
      r.add_term(ws, c);
    } else {
      r.add_term(w, c * q_minus_one());
      r.add_term(ws, c.shifted(-2));
    }
  }
  return r;
}

HeckeElement mul_by_rotation(const HeckeElement& h, int k, Side side) {
  if (k == 0) return h;
  const AffinePermutation rho = AffinePermutation::rotation(h.rank(), k);
  HeckeElement r(h.rank());
  for (const auto& [w, c] : h.terms()) r.add_term(side == Side::right ? w * rho : rho * w, c);
  return r;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("HeckeElement: rank mismatch");
  HeckeElement out(a.rank());
  for (const auto& [w, c] : b.terms()) {
    const ReducedWord word = reduced_word(w);
    HeckeElement x = mul_by_rotation(a, word.rotation, Side::right);
    for (int s : word.letters) x = mul_by_simple(x, s, Side::right);
    out += c * x;
  }
  return out;
}

namespace {

// T_s^{-1} = v^2 T_s + (v^2 - 1), applied on the right.
HeckeElement mul_by_simple_inverse(const HeckeElement& h, int i) {
  HeckeElement r = Laurent::v(2) * mul_by_simple(h, i, Side::right);
  r += (Laurent::v(2) - Laurent(1)) * h;
  return r;
}

} // namespace

HeckeElement inverse_of_Tw(const AffinePermutation& w) {
  // w = rho^k s_1 ... s_l, so T_w^{-1} = T_{s_l}^{-1} ... T_{s_1}^{-1} T_rho^{-k}.
  const ReducedWord word = reduced_word(w);
  HeckeElement x = HeckeElement::one(w.rank());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) x = mul_by_simple_inverse(x, *it);
  return mul_by_rotation(x, -word.rotation, Side::right);
}

HeckeElement bar(const HeckeElement& h) {
  HeckeElement out(h.rank());
  for (const auto& [w, c] : h.terms()) {
    // bar(T_w) = T_rho^k * prod bar(T_s) along the reduced word.
    const ReducedWord word = reduced_word(w);
    HeckeElement x = HeckeElement::basis(AffinePermutation::rotation(w.rank(), word.rotation));
    for (int s : word.letters) x = mul_by_simple_inverse(x, s);
    out += bar(c) * x;
  }
  return out;
}

HeckeElement coset_sum(const FlagSymbol& lambda, const FlagSymbol& p) {
  if (!lambda.is_dominant() || p.dominant() != lambda)
    throw std::invalid_argument("coset_sum: " + p.to_text() + " is not in the orbit of " + lambda.to_text());
  HeckeElement h(p.rank());
  for (const auto& w : coset_elements(p)) h.add_term(w, 1);
  return h;
}

HeckeElement double_coset_sum(const FlagSymbol& lambda, const FlagSymbol& mu, const PeriodicMatrix& s) {
  if (s.row_dominant() != lambda || s.col_dominant() != mu)
    throw std::invalid_argument("double_coset_sum: matrix " + s.to_text() + " is not in the given block");
  const auto flags = flags_of_matrix(s);
  const AffinePermutation rep = min_double_coset_rep(lambda.values(), min_coset_rep(flags.front()), mu.values());
  HeckeElement h(lambda.rank());
  for (const auto& w : enumerate_double_coset(lambda.values(), mu.values(), rep)) {
    if (matrix_of_pair(act_on_flag_symbol(lambda, w), mu) != s)
      throw AlgebraError("double_coset_sum: enumerated element outside the class");
    h.add_term(w, 1);
  }
  return h;
}

HeckeElement translation_T(const std::vector<int>& mu) {
  return HeckeElement::basis(AffinePermutation::translation(mu));
}

namespace {

std::vector<int> omega(int rank, int j) {
  std::vector<int> w(static_cast<std::size_t>(rank), 0);
  for (int k = 0; k < j; ++k) w[static_cast<std::size_t>(k)] = 1;
  return w;
}

} // namespace

// With [w] = v^{l(w)} T_w, X_j = [t(omega_{j-1})] [t(omega_j)]^{-1}.
HeckeElement bernstein_X(int rank, int j) {
  if (j < 1 || j > rank) throw std::invalid_argument("bernstein_X: index out of range");
  const Laurent scale = Laurent::v(2 * j - rank - 1);
  return scale * (translation_T(omega(rank, j - 1)) * inverse_of_Tw(AffinePermutation::translation(omega(rank, j))));
}

HeckeElement bernstein_X_inverse(int rank, int j) {
  if (j < 1 || j > rank) throw std::invalid_argument("bernstein_X_inverse: index out of range");
  const Laurent scale = Laurent::v(rank + 1 - 2 * j);
  return scale * (translation_T(omega(rank, j)) * inverse_of_Tw(AffinePermutation::translation(omega(rank, j - 1))));
}

} // namespace qschur
