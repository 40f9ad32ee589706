#include "tessparam/scalar.hpp"

#include "tessparam/errors.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tessparam {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(Pi2Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b, int sign = 1) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0) r[i] += b[i];
    else r[i] -= b[i];
  }
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Quotient and remainder of a / b (b nonzero).
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly monic_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly to_q(const Pi2Poly& p) {
  QPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

Integer integer_abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void pi_squared_into(mpfr_ptr out) {
  mpfr_const_pi(out, MPFR_RNDN);
  mpfr_sqr(out, out, MPFR_RNDN);
}

// Horner evaluation of `p` at x; `mag` receives the same for |coefficients|.
void horner(const Pi2Poly& p, mpfr_ptr x, mpfr_ptr acc, mpfr_ptr mag) {
  mpfr_set_zero(acc, 1);
  if (mag) mpfr_set_zero(mag, 1);
  for (std::size_t i = p.size(); i-- > 0;) {
    mpfr_mul(acc, acc, x, MPFR_RNDN);
    mpfr_add_z(acc, acc, p[i].backend().data(), MPFR_RNDN);
    if (mag) {
      Integer a = integer_abs(p[i]);
      mpfr_mul(mag, mag, x, MPFR_RNDN);
      mpfr_add_z(mag, mag, a.backend().data(), MPFR_RNDN);
    }
  }
}

// Evaluates the scalar into `out` (initialised with the desired precision).
void evaluate(const Scalar& s, mpfr_ptr out) {
  if (s.is_rational()) {
    mpfr_set_q(out, s.rational().backend().data(), MPFR_RNDN);
    return;
  }
  mpfr_prec_t prec = mpfr_get_prec(out) + 32;
  MpfrValue x(prec), n(prec), d(prec);
  pi_squared_into(x.get());
  horner(s.fraction()->num, x.get(), n.get(), nullptr);
  horner(s.fraction()->den, x.get(), d.get(), nullptr);
  mpfr_div(out, n.get(), d.get(), MPFR_RNDN);
}

}  // namespace

Scalar Scalar::canonical(std::vector<Rational> num, std::vector<Rational> den) {
  trim(num);
  trim(den);
  if (den.empty()) throw std::domain_error("division by zero");
  if (num.empty()) return Scalar();
  if (den.size() > 1 && num.size() > 1) {
    QPoly g = monic_gcd(num, den);
    if (g.size() > 1) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  if (num.size() == 1 && den.size() == 1) return Scalar(Rational(num[0] / den[0]));

  Integer lcm_den = 1;
  for (const auto* poly : {&num, &den})
    for (const auto& c : *poly) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  Pi2Poly n, d;
  Integer content = 0;
  for (const auto* poly : {&num, &den}) {
    Pi2Poly& target = poly == &num ? n : d;
    for (const auto& c : *poly) {
      Integer v = boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c));
      content = boost::multiprecision::gcd(content, v);
      target.push_back(v);
    }
  }
  content = integer_abs(content);
  for (auto& c : n) c /= content;
  for (auto& c : d) c /= content;
  if (sign_at_pi_squared(d) < 0) {
    for (auto& c : n) c = -c;
    for (auto& c : d) c = -c;
  }
  return Scalar::from_canonical(std::move(n), std::move(d));
}

namespace {

std::pair<QPoly, QPoly> as_quotient(const Scalar& s) {
  if (s.is_rational()) {
    if (s.rational() == 0) return {QPoly{}, QPoly{Rational(1)}};
    return {QPoly{s.rational()}, QPoly{Rational(1)}};
  }
  return {to_q(s.fraction()->num), to_q(s.fraction()->den)};
}

// ---------------------------------------------------------------------------
// Expression parser.

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  struct Atom {
    Scalar value;
    bool is_pi = false;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar '" + std::string(s_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Atom a = primary();
    if (eat('^')) {
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg) e = -e;
      if (a.is_pi) {
        if (e % 2 != 0) fail("odd powers of pi are not representable");
        return pow(Scalar::pi_squared(), e / 2);
      }
      if (a.value.is_zero() && e < 0) fail("division by zero");
      return pow(a.value, e);
    }
    if (a.is_pi) fail("pi must appear with an even exponent");
    return a.value;
  }

  Atom primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return {v, false};
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return {Scalar(), true};
    }
    if (s_.substr(pos_, 2) == "\xCF\x80") {
      pos_ += 2;
      return {Scalar(), true};
    }
    return {number(), false};
  }

  Scalar number() {
    std::size_t start = pos_;
    Integer digits = 0;
    int frac_digits = 0;
    bool any = false, dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = digits * 10 + (c - '0');
        if (dot) ++frac_digits;
        any = true;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!any) {
      pos_ = start;
      fail("expected a number");
    }
    long exponent = -frac_digits;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      std::size_t es = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (es == pos_) fail("malformed exponent");
      long e = std::stol(std::string(s_.substr(es, pos_ - es)));
      exponent += neg ? -e : e;
    }
    Rational v(digits);
    Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
    if (exponent >= 0) v *= ten_pow;
    else v /= ten_pow;
    return Scalar(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string format_poly(const Pi2Poly& p) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    Integer c = p[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    first = false;
    if (k == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str() + "*";
    out += "pi^" + std::to_string(2 * k);
  }
  return out.empty() ? "0" : out;
}

std::size_t term_count(const Pi2Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p)
    if (c != 0) ++n;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------

Scalar Scalar::ratio(long long p, long long q) {
  if (q == 0) throw std::domain_error("division by zero");
  return Scalar(Rational(p, q));
}

Scalar Scalar::linear_fraction(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d) {
  return Scalar::canonical({a, b}, {c, d});
}

Scalar Scalar::from_polys(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  return canonical(num, den);
}

Scalar Scalar::from_canonical(Pi2Poly num, Pi2Poly den) {
  Scalar s;
  s.repr_ = Fraction{std::move(num), std::move(den)};
  return s;
}

Scalar Scalar::pi_squared() { return from_polys({Rational(0), Rational(1)}, {Rational(1)}); }

bool Scalar::is_zero() const { return is_rational() && std::get<Rational>(repr_) == 0; }

const Rational& Scalar::rational() const {
  if (!is_rational()) throw std::logic_error("scalar " + to_string() + " is not rational");
  return std::get<Rational>(repr_);
}

Pi2Poly Scalar::numerator() const {
  if (auto* f = fraction()) return f->num;
  const Rational& q = std::get<Rational>(repr_);
  if (q == 0) return {};
  return {boost::multiprecision::numerator(q)};
}

Pi2Poly Scalar::denominator() const {
  if (auto* f = fraction()) return f->den;
  return {boost::multiprecision::denominator(std::get<Rational>(repr_))};
}

int Scalar::degree() const {
  if (auto* f = fraction()) {
    return static_cast<int>(std::max(f->num.size(), f->den.size())) - 1;
  }
  return 0;
}

int Scalar::sign() const {
  if (is_rational()) {
    const Rational& q = std::get<Rational>(repr_);
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
  }
  return sign_at_pi_squared(fraction()->num);
}

double Scalar::to_double() const {
  if (is_rational()) return std::get<Rational>(repr_).convert_to<double>();
  MpfrValue v(128);
  evaluate(*this, v.get());
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

std::string Scalar::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  MpfrValue v(prec);
  evaluate(*this, v.get());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Scalar::to_string() const {
  if (is_rational()) return std::get<Rational>(repr_).str();
  const Fraction& f = *fraction();
  std::string num = format_poly(f.num);
  bool den_one = f.den.size() == 1 && f.den[0] == 1;
  if (den_one) return term_count(f.num) > 1 ? "(" + num + ")" : num;
  std::string den = format_poly(f.den);
  if (term_count(f.num) > 1) num = "(" + num + ")";
  if (term_count(f.den) > 1 || f.den.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

Scalar Scalar::parse(std::string_view text) { return ExprParser(text).run(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* q = std::get_if<Rational>(&r.repr_)) {
    *q = -*q;
  } else {
    for (auto& c : std::get<Fraction>(r.repr_).num) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(repr_) += std::get<Rational>(o.repr_);
    return *this;
  }
  auto [an, ad] = as_quotient(*this);
  auto [bn, bd] = as_quotient(o);
  *this = Scalar::canonical(add(mul(an, bd), mul(bn, ad)), mul(ad, bd));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(repr_) *= std::get<Rational>(o.repr_);
    return *this;
  }
  auto [an, ad] = as_quotient(*this);
  auto [bn, bd] = as_quotient(o);
  *this = Scalar::canonical(mul(an, bn), mul(ad, bd));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(repr_) /= std::get<Rational>(o.repr_);
    return *this;
  }
  auto [an, ad] = as_quotient(*this);
  auto [bn, bd] = as_quotient(o);
  *this = Scalar::canonical(mul(an, bd), mul(ad, bn));
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s;
  if (a.is_rational() && b.is_rational()) {
    const Rational& x = a.rational();
    const Rational& y = b.rational();
    s = x < y ? -1 : (x > y ? 1 : 0);
  } else {
    s = (a - b).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) return Scalar(1) / pow(base, -exponent);
  Scalar result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Scalar abs(const Scalar& v) { return v.sign() < 0 ? -v : v; }
const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.to_string(); }

int sign_at_pi_squared(const Pi2Poly& poly) {
  Pi2Poly p = poly;
  trim(p);
  if (p.empty()) return 0;
  if (p.size() == 1) return p[0] > 0 ? 1 : -1;
  long slack = 4;
  for (std::size_t n = p.size() * 4 + 8; n > 1; n >>= 1) ++slack;
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    MpfrValue x(prec), acc(prec), mag(prec), bound(prec);
    pi_squared_into(x.get());
    horner(p, x.get(), acc.get(), mag.get());
    mpfr_mul_2si(bound.get(), mag.get(), slack - static_cast<long>(prec), MPFR_RNDU);
    if (mpfr_cmpabs(acc.get(), bound.get()) > 0) return mpfr_sgn(acc.get());
  }
}

std::string rational_to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
  Scalar s = Scalar::parse(text);
  if (!s.is_rational()) throw ParseError("expected a rational number, got '" + std::string(text) + "'");
  return s.rational();
}

Integer floor_rational(const Rational& q) {
  Integer r;
  Integer n = numerator(q), d = denominator(q);
  mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
  return r;
}

Integer ceil_rational(const Rational& q) {
  Integer r;
  Integer n = numerator(q), d = denominator(q);
  mpz_cdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
  return r;
}

}  // namespace tessparam
