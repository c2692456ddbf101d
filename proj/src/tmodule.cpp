#include "qschur/tmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

ModuleVector ModuleVector::basis(const FlagSymbol& p, const Laurent& c) {
  ModuleVector x(p.n(), p.rank());
  x.add_term(p, c);
  return x;
}

Laurent ModuleVector::coeff(const FlagSymbol& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Laurent() : it->second;
}

void ModuleVector::add_term(const FlagSymbol& p, const Laurent& c) {
  if (c.is_zero()) return;
  if (p.n() != n_ || p.rank() != rank_) {
    if (terms_.empty() && n_ == 1 && rank_ == 1) {
      n_ = p.n();
      rank_ = p.rank();
    } else {
      throw std::invalid_argument("ModuleVector: symbol " + p.to_text() + " has the wrong shape");
    }
  }
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

ModuleVector operator*(const Laurent& c, const ModuleVector& x) {
  ModuleVector r(x.n_, x.rank_);
  if (c.is_zero()) return r;
  for (const auto& [p, a] : x.terms_) r.terms_.emplace(p, c * a);
  return r;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")[" << p.to_text() << "]";
    first = false;
  }
  return os.str();
}

namespace {

void check_residue(int i, int n) {
  if (i < 0 || i >= n) throw std::invalid_argument("residue " + std::to_string(i) + " out of range [0, n-1]");
}

int count_greater(const std::vector<int>& s, int k) {
  int c = 0;
  for (int l : s) c += l > k;
  return c;
}

int count_less(const std::vector<int>& s, int k) {
  int c = 0;
  for (int l : s) c += l < k;
  return c;
}

} // namespace

ModuleVector apply_e(int i, const ModuleVector& x) {
  check_residue(i, x.n());
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) {
    const auto lo = p.preimage(i);
    const auto hi = p.preimage(i + 1);
    for (int k : hi) {
      const int e = count_greater(hi, k) - count_greater(lo, k);
      out.add_term(p.with_value(k, i), c.shifted(e));
    }
  }
  return out;
}

ModuleVector apply_f(int i, const ModuleVector& x) {
  check_residue(i, x.n());
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) {
    const auto lo = p.preimage(i);
    const auto hi = p.preimage(i + 1);
    for (int k : lo) {
      const int e = count_less(lo, k) - count_less(hi, k);
      out.add_term(p.with_value(k, i + 1), c.shifted(e));
    }
  }
  return out;
}

ModuleVector apply_divided(int i, int k, const ModuleVector& x, Chevalley which) {
  if (k < 0) throw std::invalid_argument("apply_divided: negative power");
  ModuleVector y = x;
  for (int t = 0; t < k; ++t) y = which == Chevalley::e ? apply_e(i, y) : apply_f(i, y);
  if (k <= 1) return y;
  const Laurent fact = quantum_factorial(k);
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : y.terms()) out.add_term(p, divide_exact(c, fact));
  return out;
}

ModuleVector apply_idempotent(const std::vector<int>& mu, const ModuleVector& x) {
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms())
    if (p.weight() == mu) out.add_term(p, c);
  return out;
}

ModuleVector to_standard(const ModuleVector& x) {
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) out.add_term(p, c.shifted(x_stat(p)));
  return out;
}

ModuleVector from_standard(const ModuleVector& x) {
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) out.add_term(p, c.shifted(-x_stat(p)));
  return out;
}

ModuleVector standard_times_simple(const ModuleVector& x, int i) {
  const int d = x.rank();
  if (d < 2 || i < 0 || i >= d) throw std::invalid_argument("simple reflection index out of range");
  static const Laurent qm1 = Laurent::v(-2) - Laurent(1);
  const AffinePermutation s = AffinePermutation::simple(d, i);
  ModuleVector out(x.n(), d);
  for (const auto& [p, c] : x.terms()) {
    const int a = p(i);
    const int b = p(i + 1);
    if (a < b) {
      out.add_term(act_on_flag_symbol(p, s), c);
    } else if (a == b) {
      out.add_term(p, c.shifted(-2));
    } else {
      out.add_term(p, c * qm1);
      out.add_term(act_on_flag_symbol(p, s), c.shifted(-2));
    }
  }
  return out;
}

ModuleVector standard_times_rotation(const ModuleVector& x, int k) {
  if (k == 0) return x;
  const AffinePermutation rho = AffinePermutation::rotation(x.rank(), k);
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) out.add_term(act_on_flag_symbol(p, rho), c);
  return out;
}

ModuleVector standard_times(const ModuleVector& x, const HeckeElement& h) {
  if (h.rank() != x.rank()) throw std::invalid_argument("standard_times: rank mismatch");
  ModuleVector out(x.n(), x.rank());
  for (const auto& [w, c] : h.terms()) {
    const ReducedWord word = reduced_word(w);
    ModuleVector y = standard_times_rotation(x, word.rotation);
    for (int s : word.letters) y = standard_times_simple(y, s);
    out += c * y;
  }
  return out;
}

ModuleVector right_hecke(const ModuleVector& x, const HeckeElement& h) {
  return from_standard(standard_times(to_standard(x), h));
}

ModuleVector right_hecke_reference(const ModuleVector& x, const HeckeElement& h) {
  if (h.rank() != x.rank()) throw std::invalid_argument("right_hecke: rank mismatch");
  ModuleVector out(x.n(), x.rank());
  // Products of different lambda-components can share a window w, so the
  // collapse is done per component.
  std::map<FlagSymbol, HeckeElement> per_lambda;
  for (const auto& [p, c] : x.terms()) {
    const FlagSymbol lambda = p.dominant();
    auto it = per_lambda.try_emplace(lambda, HeckeElement(x.rank())).first;
    it->second += c.shifted(x_stat(p)) * coset_sum(lambda, p);
  }
  for (auto& [lambda, part] : per_lambda) {
    const HeckeElement y = mul(part, h);
    std::map<FlagSymbol, std::map<AffinePermutation, Laurent>> by_flag;
    for (const auto& [w, c] : y.terms()) by_flag[act_on_flag_symbol(lambda, w)].emplace(w, c);
    for (const auto& [q, ws] : by_flag) {
      const auto coset = coset_elements(q);
      const Laurent& c0 = ws.begin()->second;
      if (ws.size() != coset.size())
        throw AlgebraError("right_hecke_reference: product is not a combination of coset sums");
      for (const auto& [w, c] : ws)
        if (!(c == c0)) throw AlgebraError("right_hecke_reference: unequal coefficients on a coset");
      out.add_term(q, c0.shifted(-x_stat(q)));
    }
  }
  return out;
}

int x_dominant(const FlagSymbol& lambda) {
  int s = 0;
  for (int m : lambda.weight()) s += m * (m - 1) / 2;
  return s;
}

ModuleVector tau(const ModuleVector& x) {
  ModuleVector out(x.n(), x.rank());
  for (const auto& [p, c] : x.terms()) {
    const FlagSymbol lambda = p.dominant();
    const AffinePermutation w = min_coset_rep(p);
    // tau(T_p) = v^{2 x_lambda} T_lambda bar(T_w), applied letter by letter.
    const ReducedWord word = reduced_word(w);
    ModuleVector y = ModuleVector::basis(lambda, Laurent::v(2 * x_dominant(lambda)));
    y = standard_times_rotation(y, word.rotation);
    for (int s : word.letters) {
      // bar(T_s) = v^2 T_s + (v^2 - 1).
      ModuleVector z = Laurent::v(2) * standard_times_simple(y, s);
      z += (Laurent::v(2) - Laurent(1)) * y;
      y = std::move(z);
    }
    out += bar(c).shifted(-x_stat(p)) * from_standard(y);
  }
  return out;
}

} // namespace qschur
