#include "qschur/transfer.hpp"

#include <sstream>
#include <tuple>

namespace qschur {

namespace {

int component(const std::vector<int>& w, int index) {
  const int n = static_cast<int>(w.size());
  return w[static_cast<std::size_t>((index == 0 ? n : index) - 1)];
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b, int sign = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += sign * b[k];
  return a;
}

bool nonnegative(const std::vector<int>& w) {
  for (int x : w)
    if (x < 0) return false;
  return true;
}

int total(const std::vector<int>& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

// lambda_1 with 0 <= lambda_1 <= lambda entrywise.
std::vector<std::vector<int>> splittings(const std::vector<int>& lambda) {
  std::vector<std::vector<int>> out;
  if (!nonnegative(lambda)) return out;
  std::vector<int> cur(lambda.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == lambda[k]) cur[k++] = 0;
    if (k == cur.size()) break;
    ++cur[k];
  }
  return out;
}

UdotMonomial idem(const std::vector<int>& w) { return UdotMonomial{{}, w}; }

UdotMonomial single(Chevalley which, int i, const std::vector<int>& input) {
  return UdotMonomial{{UdotLetter{which, i, 1}}, input};
}

} // namespace

std::vector<TensorTerm> delta_generator(GeneratorKind g, int i, const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<TensorTerm> out;
  const auto alpha = letter_weight_shift(n, UdotLetter{Chevalley::e, i, 1});
  for (const auto& l1 : splittings(lambda)) {
    const auto l2 = plus(lambda, l1, -1);
    switch (g) {
    case GeneratorKind::a: out.push_back({1, idem(l1), idem(l2)}); break;
    case GeneratorKind::e:
      // a_lambda e_i: lambda is the output weight.
      out.push_back({Laurent::v(component(l1, i)), idem(l1), single(Chevalley::e, i, plus(l2, alpha, -1))});
      out.push_back({Laurent::v(-component(l2, i)), single(Chevalley::e, i, plus(l1, alpha, -1)), idem(l2)});
      break;
    case GeneratorKind::f:
      // f_i a_lambda: lambda is the input weight.
      out.push_back({Laurent::v(-component(l1, i + 1)), idem(l1), single(Chevalley::f, i, l2)});
      out.push_back({Laurent::v(component(l2, i + 1)), single(Chevalley::f, i, l1), idem(l2)});
      break;
    }
  }
  return out;
}

void TensorElement::add_term(const PeriodicMatrix& a, const PeriodicMatrix& b, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_product(const SchurElement& a, const SchurElement& b, const Laurent& c) {
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) add_term(s, t, c * x * y);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")[" << k.first.to_text() << "](x)[" << k.second.to_text()
       << "]";
    first = false;
  }
  return os.str();
}

TensorElement omega_route(const UdotMonomial& m, int d1, int d2) {
  const int n = static_cast<int>(m.weight.size());
  TensorElement cur(n, d1, d2);
  if (!nonnegative(m.weight) || total(m.weight) != d1 + d2) return cur;
  for (const auto& l1 : splittings(m.weight)) {
    if (total(l1) != d1) continue;
    cur.add_term(diagonal_matrix(dominant_from_weight(l1)), diagonal_matrix(dominant_from_weight(plus(m.weight, l1, -1))), 1);
  }
  std::vector<int> nu = m.weight;
  for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) {
    const auto shift = letter_weight_shift(n, UdotLetter{it->which, it->residue, 1});
    for (int step = 0; step < it->power; ++step) {
      const auto next_nu = plus(nu, shift);
      const auto gens = it->which == Chevalley::e ? delta_generator(GeneratorKind::e, it->residue, next_nu)
                                                  : delta_generator(GeneratorKind::f, it->residue, nu);
      TensorElement next(n, d1, d2);
      for (const auto& g : gens) {
        const SchurElement left = phi_monomial(g.left, d1);
        const SchurElement right = phi_monomial(g.right, d2);
        if (left.is_zero() || right.is_zero()) continue;
        for (const auto& [k, c] : cur.terms())
          next.add_product(schur_mul(left, SchurElement::basis(k.first)), schur_mul(right, SchurElement::basis(k.second)),
                           g.scale * c);
      }
      cur = std::move(next);
      nu = next_nu;
      if (cur.is_zero()) return cur;
    }
    if (it->power >= 2) {
      const Laurent fact = quantum_factorial(it->power);
      TensorElement divided(n, d1, d2);
      for (const auto& [k, c] : cur.terms()) divided.add_term(k.first, k.second, divide_exact(c, fact));
      cur = std::move(divided);
    }
  }
  return cur;
}

SchurElement epsilon_first_leg(const TensorElement& x) {
  SchurElement out(x.n(), x.d2());
  for (const auto& [k, c] : x.terms()) {
    const Laurent e = epsilon_sign(SchurElement::basis(k.first));
    if (!e.is_zero()) out.add_term(k.second, c * e);
  }
  return out;
}

UdotMonomial lower_weight(const UdotMonomial& m) {
  UdotMonomial r = m;
  for (int& x : r.weight) --x;
  return r;
}

ScaledMonomial phi_twist(const UdotMonomial& m) { return {Laurent::v(-monomial_degree(m)), lower_weight(m)}; }

SchurElement phi_prime(const UdotMonomial& m, int rank) {
  const int n = static_cast<int>(m.weight.size());
  return epsilon_first_leg(omega_route(m, n, rank));
}

SchurElement route_b(const UdotMonomial& m, int rank, PsiReading psi) { return psi_twist(phi_prime(m, rank), psi); }

SchurElement route_a_value(const UdotMonomial& m, int rank) { return phi_monomial(lower_weight(m), rank); }

// ------------------------------------------------------------ monomial span

namespace {

RationalVector to_rational(const SchurElement& x) {
  RationalVector r;
  for (const auto& [s, c] : x.terms()) r.emplace(s, Rational(c));
  return r;
}

template <typename K>
void axpy(std::map<K, Rational>& y, const Rational& a, const std::map<K, Rational>& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, Rational());
    it->second -= a * c;
    if (it->second.is_zero()) y.erase(it);
  }
}

} // namespace

MonomialSpan::MonomialSpan(int n, int rank, const FlagSymbol& mu, SpanOptions opts)
    : n_(n), rank_(rank), mu_(mu), opts_(opts) {
  if (opts_.max_power <= 0) opts_.max_power = rank;
  const UdotMonomial empty{{}, mu.weight()};
  const SchurElement img = SchurElement::idempotent(mu);
  Layer& layer = by_weight_[mu.weight()];
  insert(layer.rows, to_rational(img), Combination{{empty, Rational(1)}});
  layer.fresh.emplace_back(empty, img);
}

std::vector<UdotLetter> MonomialSpan::letters() const {
  std::vector<UdotLetter> out;
  for (int i = 0; i < n_; ++i)
    for (int p = 1; p <= opts_.max_power; ++p) {
      out.push_back({Chevalley::e, i, p});
      out.push_back({Chevalley::f, i, p});
    }
  return out;
}

void MonomialSpan::reduce(const std::vector<Row>& rows, RationalVector& vec, Combination& combo) {
  for (const auto& row : rows) {
    auto it = vec.find(row.pivot);
    if (it == vec.end()) continue;
    const Rational a = it->second / row.vec.at(row.pivot);
    axpy(vec, a, row.vec);
    axpy(combo, a, row.combo);
  }
}

void MonomialSpan::insert(std::vector<Row>& rows, RationalVector vec, Combination combo) {
  reduce(rows, vec, combo);
  if (vec.empty()) {
    relations_.push_back(std::move(combo));
    return;
  }
  // Pivot of lowest complexity; ties by matrix order.
  auto best = vec.begin();
  for (auto it = vec.begin(); it != vec.end(); ++it)
    if (it->second.complexity() < best->second.complexity()) best = it;
  const PeriodicMatrix pivot = best->first;
  const Rational pc = best->second;
  for (auto& row : rows) {
    auto it = row.vec.find(pivot);
    if (it == row.vec.end()) continue;
    const Rational a = it->second / pc;
    axpy(row.vec, a, vec);
    axpy(row.combo, a, combo);
  }
  rows.push_back(Row{pivot, std::move(vec), std::move(combo)});
}

bool MonomialSpan::extend() {
  std::lock_guard lock(mutex_);
  if (length_ >= opts_.max_length) return false;
  std::map<std::vector<int>, std::vector<std::pair<UdotMonomial, SchurElement>>> produced;
  const auto alphabet = letters();
  for (const auto& [nu, layer] : by_weight_)
    for (const auto& [w, img] : layer.fresh)
      for (const auto& g : alphabet) {
        const auto next = plus(nu, letter_weight_shift(n_, g));
        if (!nonnegative(next)) continue;
        const SchurElement gen = phi_monomial(UdotMonomial{{g}, nu}, rank_);
        if (gen.is_zero()) continue;
        SchurElement image = schur_mul(gen, img);
        UdotMonomial word = w;
        word.letters.insert(word.letters.begin(), g);
        produced[next].emplace_back(std::move(word), std::move(image));
      }
  for (auto& [nu, layer] : by_weight_) layer.fresh.clear();
  for (auto& [nu, items] : produced) {
    Layer& layer = by_weight_[nu];
    for (auto& [word, image] : items) {
      const std::size_t before = layer.rows.size();
      if (image.is_zero()) {
        relations_.push_back(Combination{{word, Rational(1)}});
        continue;
      }
      insert(layer.rows, to_rational(image), Combination{{word, Rational(1)}});
      if (layer.rows.size() > before) {
        layer.fresh.emplace_back(word, image);
        kept_.emplace_back(word, image);
      }
    }
  }
  ++length_;
  return true;
}

MonomialSpan::Solution MonomialSpan::solve_locked(const SchurElement& x) const {
  Solution sol;
  std::map<std::vector<int>, RationalVector> parts;
  for (const auto& [s, c] : x.terms()) {
    if (s.col_weight() != mu_.weight()) {
      sol.residual_support.push_back(s);
      continue;
    }
    parts[s.row_weight()].emplace(s, Rational(c));
  }
  Combination acc;
  for (auto& [nu, vec] : parts) {
    auto it = by_weight_.find(nu);
    Combination combo;
    if (it != by_weight_.end()) reduce(it->second.rows, vec, combo);
    for (const auto& [s, c] : vec) sol.residual_support.push_back(s);
    axpy(acc, Rational(1), combo); // acc = -combo
  }
  sol.found = sol.residual_support.empty();
  if (sol.found) sol.coefficients = std::move(acc);
  return sol;
}

MonomialSpan::Solution MonomialSpan::solve(const SchurElement& x) {
  while (true) {
    Solution sol;
    {
      std::lock_guard lock(mutex_);
      sol = solve_locked(x);
    }
    if (sol.found || !extend()) return sol;
  }
}

std::vector<std::pair<UdotMonomial, SchurElement>> MonomialSpan::generators() const {
  std::lock_guard lock(mutex_);
  std::vector<std::pair<UdotMonomial, SchurElement>> out{{UdotMonomial{{}, mu_.weight()}, SchurElement::idempotent(mu_)}};
  out.insert(out.end(), kept_.begin(), kept_.end());
  return out;
}

std::vector<Combination> MonomialSpan::relations() const {
  std::lock_guard lock(mutex_);
  return relations_;
}

namespace {

std::mutex& span_registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<int, int, FlagSymbol, int, int>, std::unique_ptr<MonomialSpan>>& span_registry() {
  static std::map<std::tuple<int, int, FlagSymbol, int, int>, std::unique_ptr<MonomialSpan>> r;
  return r;
}

} // namespace

MonomialSpan& shared_span(int n, int rank, const FlagSymbol& mu, SpanOptions opts) {
  std::lock_guard lock(span_registry_mutex());
  auto& slot = span_registry()[{n, rank, mu, opts.max_length, opts.max_power}];
  if (!slot) slot = std::make_unique<MonomialSpan>(n, rank, mu, opts);
  return *slot;
}

void clear_span_cache() {
  std::lock_guard lock(span_registry_mutex());
  span_registry().clear();
}

SchurElement evaluate_combination(const Combination& c, int rank, PsiReading psi, bool route_b_side) {
  int n = 1;
  RationalVector acc;
  for (const auto& [m, a] : c) {
    n = static_cast<int>(m.weight.size());
    const SchurElement img = route_b_side ? route_b(m, rank, psi) : route_a_value(m, rank);
    for (const auto& [s, x] : img.terms()) {
      auto [it, inserted] = acc.try_emplace(s, Rational());
      it->second += a * Rational(x);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  SchurElement out(n, rank);
  for (const auto& [s, x] : acc) out.add_term(s, x.to_laurent());
  return out;
}

// --------------------------------------------------------------- transfer

TransferResult transfer_map(const SchurElement& x, PsiReading psi, SpanOptions opts) {
  const int n = x.n();
  const int target = x.rank() - n;
  if (target < 1) throw std::invalid_argument("transfer_map: rank must exceed n");
  std::map<std::vector<int>, SchurElement> by_mu;
  for (const auto& [s, c] : x.terms())
    by_mu.try_emplace(s.col_weight(), SchurElement(n, x.rank())).first->second.add_term(s, c);
  TransferResult r{SchurElement(n, target), SchurElement(n, target), false};
  for (const auto& [mu, part] : by_mu) {
    auto sol = shared_span(n, x.rank(), dominant_from_weight(mu), opts).solve(part);
    if (!sol.found) {
      std::string support;
      for (const auto& s : sol.residual_support) support += " " + s.to_text();
      throw NotInSpan("transfer_map: not in the span of monomial images; residual support:" + support);
    }
    r.route_a += evaluate_combination(sol.coefficients, target, psi, false);
    r.route_b += evaluate_combination(sol.coefficients, target, psi, true);
  }
  r.routes_agree = r.route_a == r.route_b;
  return r;
}

int check_kernel_inclusion(MonomialSpan& span) {
  const int target = span.rank() - span.n();
  int bad = 0;
  for (const auto& rel : span.relations()) {
    RationalVector acc;
    for (const auto& [m, a] : rel) {
      const SchurElement img = route_a_value(m, target);
      for (const auto& [s, x] : img.terms()) {
        auto [it, inserted] = acc.try_emplace(s, Rational());
        it->second += a * Rational(x);
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    bad += !acc.empty();
  }
  return bad;
}

namespace {

bool diagonal_at_least_one(const PeriodicMatrix& s) {
  for (int i = 1; i <= s.n(); ++i)
    if (s.at(i, i) < 1) return false;
  return true;
}

} // namespace

std::map<PeriodicMatrix, Laurent> canonical_coordinates(const SchurElement& x) {
  std::map<PeriodicMatrix, Laurent> out;
  SchurElement rest = x;
  while (!rest.is_zero()) {
    // A support element lying below no other support element.
    std::optional<PeriodicMatrix> top;
    for (const auto& [u, c] : rest.terms()) {
      bool below = false;
      for (const auto& [z, d] : rest.terms())
        if (!(z == u) && canonical_schur(z).terms.count(u)) {
          below = true;
          break;
        }
      if (!below) {
        top = u;
        break;
      }
    }
    if (!top) throw AlgebraError("canonical_coordinates: no maximal support element");
    const Laurent c = rest.coeff(*top);
    out.emplace(*top, c);
    rest -= c * to_element(canonical_schur(*top));
  }
  return out;
}

bool in_aperiodic_span(const SchurElement& x) {
  for (const auto& [u, c] : canonical_coordinates(x))
    if (!is_aperiodic(u)) return false;
  return true;
}

LeadingTermReport check_leading_term(const PeriodicMatrix& s, PsiReading psi, SpanOptions opts) {
  LeadingTermReport rep;
  if (!diagonal_at_least_one(s)) {
    rep.detail = "precondition: a diagonal entry is 0";
    return rep;
  }
  const PeriodicMatrix t = *s.minus(identity_matrix(s.n()));
  TransferResult tr;
  try {
    tr = transfer_map(SchurElement::basis(s), psi, opts);
  } catch (const NotInSpan& e) {
    rep.detail = std::string("precondition: ") + e.what();
    return rep;
  }
  rep.applicable = true;
  std::ostringstream os;
  const Laurent c = tr.route_a.coeff(t);
  bool ok = !c.is_zero() && tr.routes_agree;
  for (const auto& [u, a] : tr.route_a.terms())
    if (!(u == t) && order_hint(u, t) == OrderHint::definitely_not_leq) {
      ok = false;
      os << "term " << u.to_text() << " not below " << t.to_text() << "; ";
    }
  if (c.is_zero()) os << "leading coefficient is 0; ";
  if (!tr.routes_agree) os << "routes disagree; ";
  os << "c = " << c.to_string();
  rep.passed = ok;
  rep.detail = os.str();
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::matches_a: return "matches-(a)";
  case Verdict::matches_b: return "matches-(b)";
  case Verdict::counterexample: return "counterexample";
  }
  return "?";
}

TransferRecord check_transfer_canonical(const PeriodicMatrix& s, PsiReading psi, SpanOptions opts) {
  TransferRecord rec;
  rec.input = s;
  const int target = s.rank() - s.n();
  rec.route_a = rec.route_b = rec.expected = SchurElement(s.n(), target);
  const bool case_b = diagonal_at_least_one(s);
  try {
    if (case_b) rec.expected = to_element(canonical_schur(*s.minus(identity_matrix(s.n()))));
    const TransferResult tr = transfer_map(to_element(canonical_schur(s)), psi, opts);
    rec.route_a = tr.route_a;
    rec.route_b = tr.route_b;
  } catch (const AlgebraError& e) {
    rec.detail = e.what();
    return rec;
  }
  std::ostringstream os;
  if (!(rec.route_a == rec.route_b)) os << "routes disagree; ";
  if (!(rec.route_a == rec.expected)) os << "transfer differs from the predicted value; ";
  // The image of b_s is 0 or b_t with t aperiodic; lower terms of b_t may be periodic.
  if (case_b && !is_aperiodic(*s.minus(identity_matrix(s.n())))) os << "leading matrix of the output is periodic; ";
  rec.detail = os.str();
  if (rec.detail.empty()) rec.verdict = case_b ? Verdict::matches_b : Verdict::matches_a;
  return rec;
}

namespace {

std::vector<PeriodicMatrix> aperiodic_in_band(int n, int rank, int band) {
  std::vector<PeriodicMatrix> out;
  for (auto& s : matrices_in_band(n, rank, band))
    if (is_aperiodic(s)) out.push_back(std::move(s));
  return out;
}

} // namespace

std::vector<TransferRecord> transfer_sweep(int n, int rank, int band, PsiReading psi, SpanOptions opts) {
  const auto inputs = aperiodic_in_band(n, rank, band);
  std::vector<TransferRecord> out(inputs.size());
  const auto count = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = check_transfer_canonical(inputs[static_cast<std::size_t>(k)], psi, opts);
  return out;
}

std::vector<TransferRecord> transfer_sweep_serial(int n, int rank, int band, PsiReading psi, SpanOptions opts) {
  std::vector<TransferRecord> out;
  for (const auto& s : aperiodic_in_band(n, rank, band)) out.push_back(check_transfer_canonical(s, psi, opts));
  return out;
}

std::vector<UdotMonomial> monomials_up_to(int n, int rank, int max_letters, int max_power) {
  std::vector<UdotLetter> alphabet;
  for (int i = 0; i < n; ++i)
    for (int p = 1; p <= max_power; ++p) {
      alphabet.push_back({Chevalley::e, i, p});
      alphabet.push_back({Chevalley::f, i, p});
    }
  std::vector<UdotMonomial> out;
  for (const auto& w : compositions(rank, n)) {
    std::vector<std::vector<UdotLetter>> words{{}};
    std::size_t start = 0;
    for (int len = 1; len <= max_letters; ++len) {
      const std::size_t end = words.size();
      for (std::size_t k = start; k < end; ++k)
        for (const auto& l : alphabet) {
          auto word = words[k];
          word.push_back(l);
          words.push_back(std::move(word));
        }
      start = end;
    }
    for (auto& word : words) out.push_back(UdotMonomial{std::move(word), w});
  }
  return out;
}

} // namespace qschur
