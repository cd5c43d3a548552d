#include "threept/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace threept {
namespace {

using i128 = __int128;

constexpr std::int64_t kMax = INT64_MAX;

// INT64_MIN is excluded so negation never overflows.
bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), n);
  mpz_set_si(q.get_den_mpz_t(), d);
  return q;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (n == INT64_MIN || d == INT64_MIN) {
    mpq_class q = small_to_mpq(n, d);
    q.canonicalize();
    assign_big(std::move(q));
    return;
  }
  if (d == 1) {
    num_ = n;
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = gcd64(n, d);
  num_ = g ? n / g : 0;
  den_ = g ? d / g : 1;
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

void Rational::assign_big(mpq_class q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    const long n = q.get_num().get_si();
    const long d = q.get_den().get_si();
    if (n != INT64_MIN && d != INT64_MIN) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpq_class q;
  q.get_num() = mpz_class(num_s, 10);
  q.get_den() = mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), num_);
  return z;
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), den_);
  return z;
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (big_) {
    r.big_ = std::make_shared<const mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
        num_ = s;
        return *this;
      }
    } else {
      const std::int64_t g = std::gcd(den_, o.den_);
      const std::int64_t db = den_ / g;
      const std::int64_t dd = o.den_ / g;
      const i128 n = static_cast<i128>(num_) * dd + static_cast<i128>(o.num_) * db;
      if (n == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      const std::int64_t g2 = std::gcd(static_cast<std::int64_t>(n % g < 0 ? -(n % g) : n % g), g);
      const i128 nn = n / g2;
      const i128 d = static_cast<i128>(den_ / g2) * dd;
      if (fits(nn) && fits(d)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = gcd64(num_, o.den_);
    const std::int64_t g2 = gcd64(o.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!o.big_) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (!a.big_ || !b.big_) return false;  // canonical: big values never fit inline
  return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace threept
