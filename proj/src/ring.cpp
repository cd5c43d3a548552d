#include "threept/ring.hpp"

#include <sstream>
#include <stdexcept>

#include "threept/text.hpp"

namespace threept {

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

RingElem RingElem::monomial(int k, int eps, const Rational& c) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("RingElem: u-exponent must be 0 or 1");
  RingElem r;
  r.add_term(k, eps, c);
  return r;
}

Rational RingElem::coeff(int k, int eps) const {
  auto it = terms_.find({k, eps});
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElem::add_term(int k, int eps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{k, eps}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

RingElem& RingElem::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

RingElem basis_product(int k, int e1, int l, int e2) {
  if (e1 + e2 < 2) return RingElem::monomial(k + l, e1 + e2);
  // u^2 = t^2 + 4t
  RingElem r;
  r.add_term(k + l + 2, 0, 1);
  r.add_term(k + l + 1, 0, 4);
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  RingElem r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const Rational c = ca * cb;
      if (ka.second + kb.second < 2) {
        r.add_term(ka.first + kb.first, ka.second + kb.second, c);
      } else {
        r.add_term(ka.first + kb.first + 2, 0, c);
        r.add_term(ka.first + kb.first + 1, 0, c * 4);
      }
    }
  }
  return r;
}

RingElem RingElem::pow(unsigned e) const {
  RingElem result(1);
  RingElem base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

RingElem RingElem::conjugate() const {
  RingElem r = *this;
  for (auto& [key, c] : r.terms_)
    if (key.second == 1) c = -c;
  return r;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    if (key.first != 0) mono = "t^" + std::to_string(key.first);
    if (key.second == 1) mono += mono.empty() ? "u" : "*u";
    text::write_term(os, c, mono, first);
    first = false;
  }
  return os.str();
}

RingElem RingElem::parse(std::string_view text) {
  text::Cursor cur(text);
  RingElem r = text::parse_ring_sum(cur);
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing input");
  return r;
}

RingElem ring_add(const RingElem& x, const RingElem& y) { return x + y; }
RingElem ring_mul(const RingElem& x, const RingElem& y) { return x * y; }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::divide_linear(const Rational& root, Rational& remainder) const {
  if (c_.empty()) {
    remainder = 0;
    return {};
  }
  std::vector<Rational> q(c_.size() - 1);
  Rational carry;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational v = c_[i] + carry * root;
    if (i == 0) {
      remainder = v;
    } else {
      q[i - 1] = v;
      carry = v;
    }
  }
  return Poly(std::move(q));
}

Poly Poly::affine_substitute(const Rational& scale, const Rational& shift) const {
  const Poly lin({shift, scale});
  Poly result;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + Poly::constant(*it);
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(Poly a, const Rational& c) {
  for (auto& v : a.c_) v *= c;
  a.trim();
  return a;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

// ---------------------------------------------------------------------------
// SFraction

SFraction SFraction::from_parts(Poly numer, int e0, int e1, Rational r0, Rational r1) {
  if (r0 == r1) throw std::invalid_argument("SFraction: denominator roots must differ");
  SFraction f(std::move(r0), std::move(r1));
  if (e0 > 0) numer = numer * Poly::linear(f.r0_).pow(static_cast<unsigned>(e0));
  if (e1 > 0) numer = numer * Poly::linear(f.r1_).pow(static_cast<unsigned>(e1));
  f.numer_ = std::move(numer);
  f.p0_ = e0 < 0 ? -e0 : 0;
  f.p1_ = e1 < 0 ? -e1 : 0;
  f.canonicalize();
  return f;
}

SFraction SFraction::from_laurent(const std::map<int, Rational>& terms, Rational r1) {
  SFraction sum(0, r1);
  for (const auto& [k, c] : terms) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k > 0 ? k : 0) + 1);
    coeffs.back() = c;
    sum = sum + from_parts(Poly(std::move(coeffs)), k < 0 ? k : 0, 0, 0, r1);
  }
  return sum;
}

void SFraction::canonicalize() {
  if (numer_.is_zero()) {
    p0_ = p1_ = 0;
    return;
  }
  auto cancel = [this](const Rational& root, int& p) {
    while (p > 0) {
      Rational rem;
      Poly q = numer_.divide_linear(root, rem);
      if (!rem.is_zero()) break;
      numer_ = std::move(q);
      --p;
    }
  };
  cancel(r0_, p0_);
  cancel(r1_, p1_);
}

void SFraction::check_compatible(const SFraction& o) const {
  if (r0_ != o.r0_ || r1_ != o.r1_)
    throw std::invalid_argument("SFraction: operands live in different rings");
}

SFraction operator+(const SFraction& a, const SFraction& b) {
  a.check_compatible(b);
  const int p0 = std::max(a.p0_, b.p0_);
  const int p1 = std::max(a.p1_, b.p1_);
  auto lift = [&](const SFraction& f) {
    return f.numer_ * Poly::linear(f.r0_).pow(static_cast<unsigned>(p0 - f.p0_)) *
           Poly::linear(f.r1_).pow(static_cast<unsigned>(p1 - f.p1_));
  };
  return SFraction::from_parts(lift(a) + lift(b), -p0, -p1, a.r0_, a.r1_);
}

SFraction operator-(const SFraction& a, const SFraction& b) {
  SFraction nb = b;
  nb.numer_ = nb.numer_ * Rational(-1);
  return a + nb;
}

SFraction operator*(const SFraction& a, const SFraction& b) {
  a.check_compatible(b);
  return SFraction::from_parts(a.numer_ * b.numer_, -(a.p0_ + b.p0_), -(a.p1_ + b.p1_), a.r0_, a.r1_);
}

bool operator==(const SFraction& a, const SFraction& b) {
  return a.r0_ == b.r0_ && a.r1_ == b.r1_ && a.p0_ == b.p0_ && a.p1_ == b.p1_ && a.numer_ == b.numer_;
}

std::string SFraction::str(char var) const {
  std::ostringstream os;
  const auto& c = numer_.coeffs();
  if (c.empty()) return "0";
  const std::string v(1, var);
  os << "(";
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? v : v + "^" + std::to_string(i));
    text::write_term(os, c[i], mono, first);
    first = false;
  }
  os << ")";
  auto factor = [&](const Rational& root) {
    if (root.is_zero()) return v;
    const Rational neg = -root;
    return "(" + v + (neg.sign() > 0 ? " + " + neg.str() : " - " + root.str()) + ")";
  };
  if (p0_ || p1_) {
    os << "/(";
    bool need_star = false;
    if (p0_) {
      os << factor(r0_) << (p0_ > 1 ? "^" + std::to_string(p0_) : "");
      need_star = true;
    }
    if (p1_) os << (need_star ? "*" : "") << factor(r1_) << (p1_ > 1 ? "^" + std::to_string(p1_) : "");
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Isomorphisms

SFraction to_s(const RingElem& x) {
  SFraction sum(0, 1);
  for (const auto& [key, c] : x.terms()) {
    const auto [k, eps] = key;
    // t^k u^eps = (s-1)^(2k+eps) (s+1)^eps s^(-k-eps)
    Poly numer = eps ? Poly({Rational(c), Rational(c)}) : Poly::constant(c);
    sum = sum + SFraction::from_parts(std::move(numer), -k - eps, 2 * k + eps, 0, 1);
  }
  return sum;
}

RingElem from_s(const SFraction& y) {
  if (y.root0() != 0 || y.root1() != 1) throw std::invalid_argument("from_s: argument is not an element of S");
  const Rational half(1, 2);
  const RingElem s = (RingElem::t() + RingElem(2) + RingElem::u()) * half;
  const RingElem s_inv = (RingElem::t() + RingElem(2) - RingElem::u()) * half;
  const RingElem sm1_inv = (RingElem::monomial(-1, 1) - RingElem(1)) * half;
  RingElem numer;
  RingElem s_pow(1);
  for (const auto& c : y.numerator().coeffs()) {
    numer += s_pow * c;
    s_pow = s_pow * s;
  }
  return numer * s_inv.pow(static_cast<unsigned>(y.pow0())) * sm1_inv.pow(static_cast<unsigned>(y.pow1()));
}

SFraction to_a(const RingElem& x, const Rational& a) {
  if (a.is_zero()) throw std::invalid_argument("to_a: parameter a must be nonzero");
  const SFraction in_s = to_s(x);
  // s = (z + a) / (2a); s^-p0 (s-1)^-p1 contributes (2a)^(p0+p1) / ((z+a)^p0 (z-a)^p1).
  const Rational two_a = a * 2;
  Poly numer = in_s.numerator().affine_substitute(Rational(1) / two_a, Rational(1, 2));
  Rational scale = 1;
  for (int i = 0; i < in_s.pow0() + in_s.pow1(); ++i) scale *= two_a;
  return SFraction::from_parts(numer * scale, -in_s.pow0(), -in_s.pow1(), -a, a);
}

RingElem from_a(const SFraction& y, const Rational& a) {
  if (a.is_zero()) throw std::invalid_argument("from_a: parameter a must be nonzero");
  if (y.root0() != -a || y.root1() != a) throw std::invalid_argument("from_a: argument is not an element of A_a");
  const RingElem z = (RingElem::t() + RingElem::u() + RingElem(1)) * a;
  const Rational inv4a = Rational(1) / (a * 4);
  const RingElem zpa_inv = (RingElem::t() + RingElem(2) - RingElem::u()) * inv4a;
  const RingElem zma_inv = (RingElem::monomial(-1, 1) - RingElem(1)) * inv4a;
  RingElem numer;
  RingElem z_pow(1);
  for (const auto& c : y.numerator().coeffs()) {
    numer += z_pow * c;
    z_pow = z_pow * z;
  }
  return numer * zpa_inv.pow(static_cast<unsigned>(y.pow0())) * zma_inv.pow(static_cast<unsigned>(y.pow1()));
}

}  // namespace threept
