#include "qschur/schur.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace qschur {

SchurElement SchurElement::basis(const PeriodicMatrix& s, const Laurent& c) {
  SchurElement x(s.n(), s.rank());
  x.add_term(s, c);
  return x;
}

SchurElement SchurElement::idempotent(const FlagSymbol& lambda) { return basis(diagonal_matrix(lambda)); }

Laurent SchurElement::coeff(const PeriodicMatrix& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Laurent() : it->second;
}

void SchurElement::add_term(const PeriodicMatrix& s, const Laurent& c) {
  if (c.is_zero()) return;
  if (s.n() != n_ || s.rank() != rank_) {
    if (terms_.empty() && rank_ == 0) {
      n_ = s.n();
      rank_ = s.rank();
    } else {
      throw std::invalid_argument("SchurElement: matrix " + s.to_text() + " has the wrong shape");
    }
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

SchurElement operator*(const Laurent& c, const SchurElement& x) {
  SchurElement r(x.n_, x.rank_);
  if (c.is_zero()) return r;
  for (const auto& [s, a] : x.terms_) r.terms_.emplace(s, c * a);
  return r;
}

std::map<std::pair<FlagSymbol, FlagSymbol>, SchurElement> SchurElement::blocks() const {
  std::map<std::pair<FlagSymbol, FlagSymbol>, SchurElement> out;
  for (const auto& [s, c] : terms_) {
    auto key = std::make_pair(s.row_dominant(), s.col_dominant());
    auto it = out.try_emplace(key, SchurElement(n_, rank_)).first;
    it->second.add_term(s, c);
  }
  return out;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")[" << s.to_text() << "]";
    first = false;
  }
  return os.str();
}

ModuleVector standard_vector(const PeriodicMatrix& s) {
  ModuleVector x(s.n(), s.rank());
  for (const auto& p : flags_of_matrix(s)) x.add_term(p, 1);
  return x;
}

SchurElement collapse_to_schur(const ModuleVector& standard, const FlagSymbol& mu) {
  std::map<PeriodicMatrix, std::vector<Laurent>> groups;
  for (const auto& [p, c] : standard.terms()) groups[matrix_of_pair(p, mu)].push_back(c);
  SchurElement out(standard.n(), standard.rank());
  for (const auto& [s, cs] : groups) {
    if (cs.size() != flags_of_matrix_count(s))
      throw AlgebraError("collapse_to_schur: vector is not a combination of double coset sums");
    for (const auto& c : cs)
      if (!(c == cs.front())) throw AlgebraError("collapse_to_schur: unequal coefficients on a double coset");
    out.add_term(s, cs.front().shifted(-y_stat(s)));
  }
  return out;
}

namespace {

template <typename Key, typename Value>
class Memo {
public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Key& k, const Value& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

Memo<std::pair<PeriodicMatrix, FlagSymbol>, ModuleVector>& act_memo() {
  static Memo<std::pair<PeriodicMatrix, FlagSymbol>, ModuleVector> m;
  return m;
}

Memo<std::pair<PeriodicMatrix, PeriodicMatrix>, SchurElement>& mul_memo() {
  static Memo<std::pair<PeriodicMatrix, PeriodicMatrix>, SchurElement> m;
  return m;
}

Memo<PeriodicMatrix, SchurElement>& tau_memo() {
  static Memo<PeriodicMatrix, SchurElement> m;
  return m;
}

// T_s * T_{x_q}, q in the orbit of the column dominant of s (T_p basis).
ModuleVector act_basis_uncached(const PeriodicMatrix& s, const FlagSymbol& q) {
  const ReducedWord word = reduced_word(min_coset_rep(q));
  ModuleVector y = standard_times_rotation(standard_vector(s), word.rotation);
  for (int letter : word.letters) y = standard_times_simple(y, letter);
  return y;
}

ModuleVector act_basis(const PeriodicMatrix& s, const FlagSymbol& q, bool use_memo) {
  if (!use_memo) return act_basis_uncached(s, q);
  const auto key = std::make_pair(s, q);
  if (auto hit = act_memo().find(key)) return *hit;
  ModuleVector y = act_basis_uncached(s, q);
  act_memo().store(key, y);
  return y;
}

// a acting on a T_p-basis vector; result in the T_p basis.
ModuleVector act_standard(const SchurElement& a, const ModuleVector& x, bool use_memo) {
  ModuleVector out(a.n(), a.rank());
  std::map<FlagSymbol, FlagSymbol> dominant_cache;
  for (const auto& [q, c] : x.terms()) {
    const FlagSymbol mu = q.dominant();
    for (const auto& [s, a_s] : a.terms()) {
      if (s.col_dominant() != mu) continue;
      out += (c * a_s.shifted(y_stat(s))) * act_basis(s, q, use_memo);
    }
  }
  return out;
}

SchurElement mul_basis(const PeriodicMatrix& s, const PeriodicMatrix& t, bool use_memo) {
  if (s.col_dominant() != t.row_dominant()) return SchurElement(s.n(), s.rank());
  const auto key = std::make_pair(s, t);
  if (use_memo)
    if (auto hit = mul_memo().find(key)) return *hit;
  const ModuleVector image = act_standard(SchurElement::basis(s), Laurent::v(y_stat(t)) * standard_vector(t), use_memo);
  SchurElement r = collapse_to_schur(image, t.col_dominant());
  if (use_memo) mul_memo().store(key, r);
  return r;
}

SchurElement mul_impl(const SchurElement& a, const SchurElement& b, bool use_memo) {
  if (a.is_zero() || b.is_zero()) return SchurElement(std::max(a.n(), b.n()), std::max(a.rank(), b.rank()));
  if (a.n() != b.n() || a.rank() != b.rank()) throw std::invalid_argument("schur_mul: shape mismatch");
  SchurElement out(a.n(), a.rank());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      const SchurElement st = mul_basis(s, t, use_memo);
      if (!st.is_zero()) out += (cs * ct) * st;
    }
  return out;
}

} // namespace

void clear_schur_caches() {
  act_memo().clear();
  mul_memo().clear();
  tau_memo().clear();
}

ModuleVector schur_act(const SchurElement& a, const ModuleVector& x) {
  if (a.is_zero() || x.is_zero()) return ModuleVector(x.n(), x.rank());
  if (a.n() != x.n() || a.rank() != x.rank()) throw std::invalid_argument("schur_act: shape mismatch");
  return from_standard(act_standard(a, to_standard(x), true));
}

SchurElement schur_mul(const SchurElement& a, const SchurElement& b) { return mul_impl(a, b, true); }

SchurElement schur_mul_reference(const SchurElement& a, const SchurElement& b) { return mul_impl(a, b, false); }

SchurElement tau_schur(const SchurElement& x) {
  SchurElement out(x.n(), x.rank());
  for (const auto& [s, c] : x.terms()) {
    std::optional<SchurElement> img = tau_memo().find(s);
    if (!img) {
      const FlagSymbol mu = s.col_dominant();
      // [s] = v^{y_s} T_s and T_s lies in T_lambda H_D.
      const ModuleVector as_vector = from_standard(Laurent::v(y_stat(s)) * standard_vector(s));
      const ModuleVector barred = to_standard(tau(as_vector));
      img = Laurent::v(-2 * x_dominant(mu)) * collapse_to_schur(barred, mu);
      tau_memo().store(s, *img);
    }
    out += bar(c) * *img;
  }
  return out;
}

// ------------------------------------------------------------- monomials

std::string UdotMonomial::to_text() const {
  std::ostringstream os;
  for (const auto& l : letters) {
    os << (l.which == Chevalley::e ? "e" : "f") << l.residue;
    if (l.power != 1) os << "^(" << l.power << ")";
    os << " ";
  }
  os << "a[";
  for (std::size_t i = 0; i < weight.size(); ++i) os << (i ? "," : "") << weight[i];
  os << "]";
  return os.str();
}

std::vector<int> letter_weight_shift(int n, const UdotLetter& l) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  const int up = l.residue == 0 ? n - 1 : l.residue - 1; // omega_i, omega_0 = omega_n
  const int down = l.residue;                            // omega_{i+1}
  const int sign = l.which == Chevalley::e ? 1 : -1;
  d[static_cast<std::size_t>(up)] += sign * l.power;
  d[static_cast<std::size_t>(down % n)] -= sign * l.power;
  return d;
}

std::vector<int> output_weight(const UdotMonomial& m) {
  std::vector<int> w = m.weight;
  for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) {
    const auto d = letter_weight_shift(static_cast<int>(w.size()), *it);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += d[k];
  }
  return w;
}

int monomial_degree(const UdotMonomial& m) {
  int d = 0;
  for (const auto& l : m.letters) d += (l.which == Chevalley::f ? 1 : -1) * l.power;
  return d;
}

SchurElement phi_generator(GeneratorKind kind, int i, const FlagSymbol& lambda) {
  if (i < 0 || i >= lambda.n()) throw std::invalid_argument("phi_generator: residue out of range");
  if (kind == GeneratorKind::a) return SchurElement::idempotent(lambda);
  const auto mats = generator_matrices(lambda, i);
  if (!mats) return SchurElement(lambda.n(), lambda.rank());
  return SchurElement::basis(kind == GeneratorKind::e ? mats->first : mats->second);
}

namespace {

bool nonnegative(const std::vector<int>& w) {
  for (int x : w)
    if (x < 0) return false;
  return true;
}

int weight_sum(const std::vector<int>& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

} // namespace

SchurElement phi_monomial(const UdotMonomial& m, int rank) {
  const int n = static_cast<int>(m.weight.size());
  SchurElement zero(n, rank);
  if (weight_sum(m.weight) != rank || !nonnegative(m.weight)) return zero;
  std::vector<int> nu = m.weight;
  SchurElement cur = SchurElement::idempotent(dominant_from_weight(nu));
  for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) {
    UdotLetter single = *it;
    single.power = 1;
    const auto d = letter_weight_shift(n, single);
    for (int t = 0; t < it->power; ++t) {
      std::vector<int> next = nu;
      for (int k = 0; k < n; ++k) next[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k)];
      if (!nonnegative(next)) return zero;
      const SchurElement gen = it->which == Chevalley::e
                                   ? phi_generator(GeneratorKind::e, it->residue, dominant_from_weight(next))
                                   : phi_generator(GeneratorKind::f, it->residue, dominant_from_weight(nu));
      cur = schur_mul(gen, cur);
      nu = std::move(next);
      if (cur.is_zero()) return zero;
    }
    if (it->power >= 2) {
      const Laurent fact = quantum_factorial(it->power);
      SchurElement divided(n, rank);
      for (const auto& [s, c] : cur.terms()) divided.add_term(s, divide_exact(c, fact));
      cur = std::move(divided);
    }
  }
  return cur;
}

ModuleVector act_monomial(const UdotMonomial& m, const ModuleVector& x) {
  ModuleVector y = apply_idempotent(m.weight, x);
  for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) y = apply_divided(it->residue, it->power, y, it->which);
  return y;
}

Laurent epsilon_sign(const SchurElement& x) {
  if (x.is_zero()) return {};
  if (x.n() != x.rank()) throw std::invalid_argument("epsilon_sign: defined on S_n only (rank == n)");
  const std::vector<int> ones(static_cast<std::size_t>(x.n()), 1);
  Laurent out;
  for (const auto& [s, c] : x.terms()) {
    if (s.row_weight() != ones || s.col_weight() != ones) continue;
    const auto flags = flags_of_matrix(s);
    const AffinePermutation w(flags.front().values());
    const Laurent sign = length(w) % 2 ? Laurent(-1) : Laurent(1);
    out += c * sign.shifted(y_stat(s));
  }
  return out;
}

std::string to_string(PsiReading r) {
  switch (r) {
  case PsiReading::dominant_window: return "dominant-window";
  case PsiReading::weight: return "weight";
  case PsiReading::matrix_degree: return "matrix-degree";
  }
  return "?";
}

std::optional<PsiReading> psi_reading_from_string(const std::string& s) {
  for (auto r : {PsiReading::dominant_window, PsiReading::weight, PsiReading::matrix_degree})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

SchurElement psi_twist(const SchurElement& x, PsiReading reading, bool inverse) {
  SchurElement out(x.n(), x.rank());
  for (const auto& [s, c] : x.terms()) {
    int e = 0;
    switch (reading) {
    case PsiReading::dominant_window: {
      const FlagSymbol lam = s.row_dominant();
      const FlagSymbol mu = s.col_dominant();
      for (int v : lam.values()) e += v;
      for (int v : mu.values()) e -= v;
      break;
    }
    case PsiReading::weight: {
      const auto r = s.row_weight();
      const auto k = s.col_weight();
      for (std::size_t i = 0; i < r.size(); ++i) e += r[i] - k[i];
      break;
    }
    case PsiReading::matrix_degree: e = s.shift_degree(); break;
    }
    out.add_term(s, c.shifted(inverse ? -e : e));
  }
  return out;
}

} // namespace qschur
