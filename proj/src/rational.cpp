#include "cta/rational.hpp"

#include <cmath>

#include "cta/error.hpp"

namespace cta {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::Domain, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view raw) {
  std::string s = trim(raw);
  // Accept the unicode minus sign as well.
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  bool neg = false;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
    mpz_class den(d, 10);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    out = Rational(mpz_class(n, 10), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::Parse, "bad decimal '" + s + "'");
    mpz_class den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    out = Rational(mpz_class(ip + fp, 10), den);
  } else {
    if (!all_digits(body)) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
    out = Rational(mpz_class(body, 10));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorCode::Domain, "non-finite double has no rational value");
  Rational q(d);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

namespace {

// Smallest-denominator rational in [lo, hi], by continued fractions.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  mpz_class a;
  mpz_fdiv_q(a.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational fa(a);
  if (fa == lo) return fa;
  if (fa + 1 <= hi) return fa + 1;
  Rational r = fa + 1 / simplest_between(1 / (hi - fa), 1 / (lo - fa));
  r.canonicalize();
  return r;
}

}  // namespace

Rational simplest_rational_near(double d, double tol) {
  Rational x = rational_from_double(d);
  if (!(tol > 0)) return x;
  Rational e = rational_from_double(tol);
  return simplest_between(x - e, x + e);
}

long floor_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw Error(ErrorCode::LimitExceeded, "integer part out of range");
  return f.get_si();
}

long ceil_long(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw Error(ErrorCode::LimitExceeded, "integer part out of range");
  return c.get_si();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

const Rational& ExtRational::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::Domain, "infinite value has no rational part");
  return value_;
}

ExtRational ExtRational::negated() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return ExtRational(Rational(-value_));
  }
}

double ExtRational::to_double() const {
  switch (kind_) {
    case Kind::NegInf: return -INFINITY;
    case Kind::PosInf: return INFINITY;
    default: return value_.get_d();
  }
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return format_rational(value_);
  }
}

ExtRational ExtRational::parse(std::string_view raw) {
  std::string s = trim(raw);
  if (s == "-inf" || s == "-oo" || s == "\xE2\x88\x92\xE2\x88\x9E" || s == "-\xE2\x88\x9E") return neg_inf();
  if (s == "+inf" || s == "inf" || s == "+oo" || s == "\xE2\x88\x9E" || s == "+\xE2\x88\x9E") return pos_inf();
  return ExtRational(parse_rational(s));
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  auto rank = [](ExtRational::Kind k) { return k == ExtRational::Kind::NegInf ? 0 : k == ExtRational::Kind::Finite ? 1 : 2; };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (a.kind_ != ExtRational::Kind::Finite) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

DyadicRational::DyadicRational(const mpz_class& numerator, unsigned exponent) : num_(numerator), exp_(exponent) {
  while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
    num_ /= 2;
    --exp_;
  }
}

std::optional<DyadicRational> DyadicRational::from_rational(const Rational& q) {
  const mpz_class& den = q.get_den();
  // A power of two has exactly one set bit.
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  unsigned k = static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0));
  return DyadicRational(q.get_num(), k);
}

Rational DyadicRational::value() const {
  mpz_class den = 1;
  den <<= exp_;
  Rational q(num_, den);
  q.canonicalize();
  return q;
}

std::optional<unsigned> relative_dyadic_depth(const Rational& x, const Rational& l, const Rational& r) {
  Rational t = (x - l) / (r - l);
  auto d = DyadicRational::from_rational(t);
  if (!d) return std::nullopt;
  return d->depth();
}

}  // namespace cta
