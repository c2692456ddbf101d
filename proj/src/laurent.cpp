#include "qschur/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qschur {

Laurent::Laurent(long long c) {
  if (c != 0) coeffs_.push_back(BigInt(c));
}

Laurent::Laurent(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

Laurent Laurent::monomial(int exponent, const BigInt& c) {
  Laurent r;
  if (c != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_terms(const std::map<int, BigInt>& terms) {
  Laurent r;
  for (const auto& [e, c] : terms) r += monomial(e, c);
  return r;
}

Laurent Laurent::from_dense(int low, std::vector<BigInt> coeffs) {
  Laurent r;
  r.low_ = low;
  r.coeffs_ = std::move(coeffs);
  r.normalize();
  return r;
}

void Laurent::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

bool Laurent::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

bool Laurent::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

int Laurent::low_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero Laurent polynomial");
  return low_;
}

int Laurent::high_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero Laurent polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt Laurent::coeff(int exponent) const {
  const long idx = static_cast<long>(exponent) - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

std::map<int, BigInt> Laurent::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

namespace {

template <typename Op>
void add_into(int& low, std::vector<BigInt>& c, const Laurent& o, Op op) {
  if (o.is_zero()) return;
  if (c.empty()) {
    low = o.low();
    c.assign(o.dense().size(), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) op(c[i], o.dense()[i]);
    return;
  }
  const int new_low = std::min(low, o.low());
  const int new_high = std::max(low + static_cast<int>(c.size()) - 1,
                                o.low() + static_cast<int>(o.dense().size()) - 1);
  if (new_low < low) c.insert(c.begin(), static_cast<std::size_t>(low - new_low), BigInt(0));
  c.resize(static_cast<std::size_t>(new_high - new_low + 1), BigInt(0));
  low = new_low;
  const auto off = static_cast<std::size_t>(o.low() - low);
  for (std::size_t i = 0; i < o.dense().size(); ++i) op(c[off + i], o.dense()[i]);
}

} // namespace

Laurent& Laurent::operator+=(const Laurent& o) {
  add_into(low_, coeffs_, o, [](BigInt& a, const BigInt& b) { a += b; });
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  add_into(low_, coeffs_, o, [](BigInt& a, const BigInt& b) { a -= b; });
  normalize();
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Laurent::from_dense(a.low_ + b.low_, std::move(out));
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

std::strong_ordering operator<=>(const Laurent& a, const Laurent& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  if (a.low_ != b.low_) return a.low_ <=> b.low_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Laurent Laurent::positive_part() const {
  Laurent r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (low_ + static_cast<int>(i) > 0) r += monomial(low_ + static_cast<int>(i), coeffs_[i]);
  return r;
}

Laurent Laurent::negative_part() const {
  Laurent r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (low_ + static_cast<int>(i) < 0) r += monomial(low_ + static_cast<int>(i), coeffs_[i]);
  return r;
}

BigRational Laurent::eval(const BigRational& at) const {
  if (at == 0) throw std::domain_error("Laurent polynomial evaluated at v = 0");
  BigRational acc = 0;
  // Horner from the top, then scale by at^low.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + BigRational(*it);
  BigRational scale = 1;
  const int e = low_ < 0 ? -low_ : low_;
  for (int i = 0; i < e; ++i) scale *= at;
  if (low_ < 0) return BigRational(acc / scale);
  return BigRational(acc * scale);
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(idx);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.to_string(); }

Laurent bar(const Laurent& x) {
  if (x.is_zero()) return {};
  std::vector<BigInt> rev(x.dense().rbegin(), x.dense().rend());
  return Laurent::from_dense(-x.high_degree(), std::move(rev));
}

Laurent quantum_integer(int k) {
  if (k == 0) return {};
  if (k < 0) return -quantum_integer(-k);
  // v^{k-1} + v^{k-3} + ... + v^{1-k}
  Laurent r;
  for (int e = 1 - k; e <= k - 1; e += 2) r += Laurent::v(e);
  return r;
}

Laurent quantum_factorial(int k) {
  if (k < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  Laurent r = 1;
  for (int i = 2; i <= k; ++i) r *= quantum_integer(i);
  return r;
}

Laurent quantum_binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) return {};
  return divide_exact(quantum_factorial(m), quantum_factorial(k) * quantum_factorial(m - k));
}

bool try_divide_exact(const Laurent& num, const Laurent& den, Laurent& out) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (num.is_zero()) {
    out = {};
    return true;
  }
  // Long division on the dense coefficient arrays from the top degree down.
  std::vector<BigInt> rem = num.dense();
  const auto& d = den.dense();
  if (rem.size() < d.size()) return false;
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<BigInt> q(qlen, BigInt(0));
  const BigInt& lead = d.back();
  for (std::size_t step = qlen; step-- > 0;) {
    const BigInt& top = rem[step + d.size() - 1];
    if (top == 0) continue;
    BigInt qc, r;
    boost::multiprecision::divide_qr(top, lead, qc, r);
    if (r != 0) return false;
    q[step] = qc;
    for (std::size_t j = 0; j < d.size(); ++j) rem[step + j] -= qc * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  out = Laurent::from_dense(num.low() - den.low(), std::move(q));
  return true;
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
  Laurent q;
  if (!try_divide_exact(num, den, q))
    throw AlgebraError("divide_exact: " + den.to_string() + " does not divide " + num.to_string());
  return q;
}

} // namespace qschur
