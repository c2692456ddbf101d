#include "qschur/rational.hpp"

#include <numeric>

namespace qschur {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

Poly primitive_part(const Poly& p) {
  BigInt g = content(p);
  if (g == 0) return {};
  Poly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] / g;
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

Poly pseudo_remainder(Poly a, const Poly& b) {
  const BigInt& lc = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lc;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    trim(a);
  }
  return a;
}

// Laurent -> polynomial after removing the v-power.
Poly to_poly(const Laurent& x) { return x.dense(); }

} // namespace

std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  const BigInt g = boost::multiprecision::gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& c : a) c *= g;
  return a;
}

Rational::Rational(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  // Move the v-power of the denominator to the numerator.
  const int shift = den_.low_degree();
  Laurent d = den_.shifted(-shift);
  Laurent n = num_.shifted(-shift);
  if (!d.is_one()) {
    Poly g = poly_gcd(to_poly(n), to_poly(d));
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
      Laurent gl = Laurent::from_dense(0, g);
      n = divide_exact(n, gl);
      d = divide_exact(d, gl);
    }
    BigInt cn = content(n.dense());
    BigInt cd = content(d.dense());
    BigInt c = boost::multiprecision::gcd(cn, cd);
    if (d.constant_term() < 0) c = -c;
    if (c != 1) {
      n = divide_exact(n, Laurent(c));
      d = divide_exact(d, Laurent(c));
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Laurent Rational::to_laurent() const {
  if (!is_laurent()) throw AlgebraError("Rational value " + to_string() + " is not a Laurent polynomial");
  return num_;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

int Rational::complexity() const {
  if (num_.is_zero()) return 0;
  return (num_.high_degree() - num_.low_degree()) + (den_.high_degree() - den_.low_degree()) +
         static_cast<int>(num_.dense().size());
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational bar(const Rational& x) { return Rational(bar(x.num()), bar(x.den())); }

} // namespace qschur
