#include "cta/interval.hpp"

#include <vector>

#include "cta/error.hpp"

namespace cta {

Interval::Interval(ExtRational lo, bool lo_in, ExtRational hi, bool hi_in)
    : lo_(std::move(lo)), lo_in_(lo_in), hi_(std::move(hi)), hi_in_(hi_in) {
  if (lo_.is_pos_inf() || hi_.is_neg_inf()) throw Error(ErrorCode::InvalidInterval, "endpoint on the wrong infinity");
  if ((!lo_.is_finite() && lo_in_) || (!hi_.is_finite() && hi_in_))
    throw Error(ErrorCode::InvalidInterval, "an infinite endpoint cannot be included");
  if (hi_ < lo_) throw Error(ErrorCode::InvalidInterval, "lower endpoint exceeds upper endpoint");
  if (lo_ == hi_ && !(lo_in_ && hi_in_)) throw Error(ErrorCode::InvalidInterval, "empty interval");
}

Interval Interval::parse(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 3 && s.front() == '{' && s.back() == '}') return singleton(parse_rational(s.substr(1, s.size() - 2)));
  if (s.size() < 5) throw Error(ErrorCode::Parse, "bad interval '" + s + "'");
  char l = s.front(), r = s.back();
  if ((l != '[' && l != '(') || (r != ']' && r != ')')) throw Error(ErrorCode::Parse, "bad interval brackets '" + s + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::Parse, "missing comma in '" + s + "'");
  return Interval(ExtRational::parse(s.substr(1, comma - 1)), l == '[', ExtRational::parse(s.substr(comma + 1, s.size() - comma - 2)),
                  r == ']');
}

bool Interval::contains(const ExtRational& x) const {
  if (!x.is_finite()) return false;
  bool above = lo_in_ ? lo_ <= x : lo_ < x;
  bool below = hi_in_ ? x <= hi_ : x < hi_;
  return above && below;
}

std::string Interval::str() const {
  if (is_singleton()) return "{" + lo_.str() + "}";
  return std::string(lo_in_ ? "[" : "(") + lo_.str() + "," + hi_.str() + (hi_in_ ? "]" : ")");
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
  if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
  // Included lower end first, matching the endpoint order.
  if (a.lo_in_ != b.lo_in_) return a.lo_in_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
  if (a.hi_in_ != b.hi_in_) return a.hi_in_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string ProjectiveClass::str() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Full: return "P(" + a.str() + ")";
    case Kind::OpenLow: return "P((" + a.str() + ")";
    case Kind::OpenHigh: return "P(" + a.str() + "))";
  }
  return "none";
}

namespace {

// The down set of a is the closed hull [lo, hi] intersected with the real line.
bool matches(const ExtRational& lo, bool lo_in, const ExtRational& hi, bool hi_in, const Interval& m) {
  if (hi < lo || (lo == hi && !(lo_in && hi_in))) return false;
  lo_in = lo_in && lo.is_finite();
  hi_in = hi_in && hi.is_finite();
  return m.lo() == lo && m.lo_in() == lo_in && m.hi() == hi && m.hi_in() == hi_in;
}

}  // namespace

ProjectiveClass classify_projective(const Quiver& q, const Interval& m) {
  std::vector<ExtRational> cands{m.lo(), m.hi()};
  for (long n = q.neg_slot(); n <= q.pos_slot(); ++n) cands.push_back(q.slot_position(n));
  for (const auto& a : cands) {
    auto [lo, hi] = q.down_hull(a);
    if (matches(lo, true, hi, true, m)) return {ProjectiveClass::Kind::Full, a};
    if (lo <= a && a < hi && matches(a, false, hi, true, m)) return {ProjectiveClass::Kind::OpenLow, a};
    if (lo < a && a <= hi && matches(lo, true, a, false, m)) return {ProjectiveClass::Kind::OpenHigh, a};
  }
  return {};
}

ProjectiveClass classify_injective(const Quiver& q, const Interval& m) { return classify_projective(q.reversed(), m); }

namespace {

// lambda(M) = (a, 0 if a in I else 1), upsilon(M) = (b, 1 if b in I else 0), compared lexicographically.
struct Code {
  ExtRational v;
  int e;
  friend std::strong_ordering operator<=>(const Code& x, const Code& y) {
    if (auto c = x.v <=> y.v; c != 0) return c;
    return x.e <=> y.e;
  }
  friend bool operator==(const Code& x, const Code& y) { return (x <=> y) == 0; }
};

Code lambda(const Interval& m) { return {m.lo(), m.lo_in() ? 0 : 1}; }
Code upsilon(const Interval& m) { return {m.hi(), m.hi_in() ? 1 : 0}; }

}  // namespace

bool straight_compat_oracle(const Interval& a, const Interval& b) {
  Code l1 = lambda(a), u1 = upsilon(a), l2 = lambda(b), u2 = upsilon(b);
  bool cross = (l1 < l2 && l2 <= u1 && u1 < u2) || (l2 < l1 && l1 <= u2 && u2 < u1);
  return !cross;
}

}  // namespace cta
