#include "cta/anchors.hpp"

#include <climits>

#include "cta/error.hpp"

namespace cta {

namespace {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

}  // namespace

long floor_log2(const Rational& q) {
  if (sgn(q) <= 0) throw Error(ErrorCode::Domain, "floor_log2 of a nonpositive value");
  long k = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  return q >= pow2(k) ? k : k - 1;
}

namespace anchors {

Rational at(long i) {
  if (i >= 0) return Rational(1) - pow2(-(i + 1));
  return pow2(i - 1);
}

ExtRational limit_low() { return ExtRational(0); }
ExtRational limit_high() { return ExtRational(1); }

Rational vertex(long v) {
  if (v == LONG_MIN) return Rational(0);
  if (v == LONG_MAX) return Rational(1);
  return at(v);
}

std::optional<long> floor_index(const Rational& x) {
  if (sgn(x) <= 0 || x >= 1) return std::nullopt;
  if (x >= Rational(1, 2)) {
    const Rational y = Rational(1) - x;
    long fl = floor_log2(y);
    long cl = (y == pow2(fl)) ? fl : fl + 1;
    return -cl - 1;
  }
  return floor_log2(x) + 1;
}

std::optional<long> index_of(const Rational& x) {
  auto k = floor_index(x);
  if (k && at(*k) == x) return k;
  return std::nullopt;
}

}  // namespace anchors
}  // namespace cta
