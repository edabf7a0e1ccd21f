#include "cta/arc.hpp"

#include "cta/error.hpp"

namespace cta {

namespace {

int sign_rank(Sign s) { return s == Sign::Minus ? 0 : 1; }
Sign flip(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }

template <class T>
int cmp3(const T& a, const T& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int cmp3(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

bool odd(long n) { return (n % 2 + 2) % 2 == 1; }

void check_endpoint(const Quiver& q, const Endpoint& e) {
  if (q.is_straight()) {
    if (e.kind == Endpoint::Kind::Segment) throw Error(ErrorCode::Domain, "segment endpoint on a straight quiver");
    return;
  }
  if (e.kind == Endpoint::Kind::NegInf || e.kind == Endpoint::Kind::PosInf)
    throw Error(ErrorCode::Domain, "infinity symbol on a quiver with markers");
  if (e.kind == Endpoint::Kind::Point && q.slot_at(ExtRational(e.x)))
    throw Error(ErrorCode::Domain, "point endpoint on a marker");
  if (e.kind == Endpoint::Kind::Segment && !q.has_segment(e.n)) throw Error(ErrorCode::Domain, "segment index out of range");
}

}  // namespace

std::string Endpoint::str() const {
  std::string s = side == Sign::Minus ? "-" : "+";
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Point: return "(" + format_rational(x) + "," + s + ")";
    case Kind::Segment: return "(|s" + std::to_string(n) + ",s" + std::to_string(n + 1) + "|," + s + ")";
  }
  return "?";
}

bool operator==(const Endpoint& a, const Endpoint& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  switch (a.kind) {
    case Endpoint::Kind::NegInf:
    case Endpoint::Kind::PosInf: return std::strong_ordering::equal;
    case Endpoint::Kind::Point:
      if (auto c = compare(a.x, b.x); c != 0) return c;
      break;
    case Endpoint::Kind::Segment:
      if (auto c = a.n <=> b.n; c != 0) return c;
      break;
  }
  return sign_rank(a.side) <=> sign_rank(b.side);
}

Arc::Arc(Endpoint x, Endpoint y) : a(std::move(x)), b(std::move(y)) {
  if (a == b) throw Error(ErrorCode::Domain, "arc endpoints must differ");
  if (b < a) std::swap(a, b);
}

std::string Arc::str() const { return "{" + a.str() + ", " + b.str() + "}"; }

Lane lane_of(const Quiver& q, const Endpoint& e) {
  check_endpoint(q, e);
  if (q.is_straight()) return Lane::Down;
  if (e.kind == Endpoint::Kind::Segment) return odd(e.n) ? Lane::Down : Lane::Up;
  // A point lies in E-down iff the slot on its left is a sink.
  Location loc = q.locate(ExtRational(e.x));
  return q.slot_is_sink(loc.n) ? Lane::Down : Lane::Up;
}

int endpoint_compare(const Quiver& q, const Endpoint& x, const Endpoint& y) {
  using K = Endpoint::Kind;
  if (q.is_straight()) {
    auto rank = [](K k) { return k == K::NegInf ? 0 : k == K::Point ? 1 : 2; };
    if (rank(x.kind) != rank(y.kind)) return cmp3(rank(x.kind), rank(y.kind));
    if (x.kind != K::Point) return 0;
    if (int c = cmp3(x.x, y.x); c != 0) return c;
    return cmp3(sign_rank(x.side), sign_rank(y.side));
  }
  if (lane_of(q, x) != lane_of(q, y)) throw Error(ErrorCode::Domain, "endpoints lie in different lanes");
  if (x.kind == K::Point && y.kind == K::Point) {
    if (int c = cmp3(x.x, y.x); c != 0) return c;
    return cmp3(sign_rank(x.side), sign_rank(y.side));
  }
  if (x.kind == K::Segment && y.kind == K::Segment) {
    if (int c = cmp3(x.n, y.n); c != 0) return c;
    return cmp3(sign_rank(x.side), sign_rank(y.side));
  }
  // Within a lane a point never sits inside a segment of the same lane.
  if (x.kind == K::Point) return ExtRational(x.x) < q.slot_position(y.n) ? -1 : 1;
  return -endpoint_compare(q, y, x);
}

Arc phi(const Quiver& q, const Interval& m) {
  if (q.is_straight()) {
    Endpoint lo = m.lo().is_neg_inf() ? Endpoint::neg_inf() : Endpoint::point(m.lo().value(), m.lo_in() ? Sign::Minus : Sign::Plus);
    Endpoint hi = m.hi().is_pos_inf() ? Endpoint::pos_inf() : Endpoint::point(m.hi().value(), m.hi_in() ? Sign::Plus : Sign::Minus);
    return Arc(lo, hi);
  }
  Endpoint lo, hi;
  if (auto s = q.slot_at(m.lo())) {
    if (m.lo().is_neg_inf() || m.lo_in())
      lo = Endpoint::segment(*s, Sign::Minus);
    else
      lo = Endpoint::segment(*s - 1, Sign::Plus);
  } else {
    lo = Endpoint::point(m.lo().value(), m.lo_in() ? Sign::Minus : Sign::Plus);
  }
  if (auto s = q.slot_at(m.hi())) {
    if (m.hi().is_pos_inf() || m.hi_in())
      hi = Endpoint::segment(*s - 1, Sign::Plus);
    else
      hi = Endpoint::segment(*s, Sign::Minus);
  } else {
    hi = Endpoint::point(m.hi().value(), m.hi_in() ? Sign::Plus : Sign::Minus);
  }
  return Arc(lo, hi);
}

namespace {

// Position deciding orientation of a segment endpoint against the opposite lane.
ExtRational segment_pivot(const Quiver& q, const Endpoint& e) {
  return e.side == Sign::Minus ? q.slot_position(e.n) : q.slot_position(e.n + 1);
}

bool first_is_source(const Quiver& q, const Endpoint& x, const Endpoint& y) {
  using K = Endpoint::Kind;
  if (q.is_straight() || lane_of(q, x) == lane_of(q, y)) return endpoint_compare(q, x, y) < 0;
  if (x.kind == K::Point && y.kind == K::Point) return x.x < y.x;
  if (x.kind == K::Segment && y.kind == K::Segment) {
    ExtRational px = segment_pivot(q, x), py = segment_pivot(q, y);
    if (px != py) return px < py;
    return x.side == Sign::Minus;
  }
  if (x.kind == K::Point) return !first_is_source(q, y, x);
  // x is a segment, y a point.
  ExtRational p(y.x);
  if (p < q.slot_position(x.n)) return false;
  if (q.slot_position(x.n + 1) < p) return true;
  return x.side == Sign::Minus;
}

}  // namespace

OrientedArc orient(const Quiver& q, const Arc& arc) {
  if (first_is_source(q, arc.a, arc.b)) return {arc.a, arc.b};
  return {arc.b, arc.a};
}

Interval phi_inverse(const Quiver& q, const Arc& arc) {
  using K = Endpoint::Kind;
  OrientedArc o = orient(q, arc);
  ExtRational c, d;
  bool c_in = false, d_in = false;
  const Endpoint& s = o.source;
  const Endpoint& t = o.target;
  switch (s.kind) {
    case K::NegInf: c = ExtRational::neg_inf(); break;
    case K::PosInf: throw Error(ErrorCode::Unorientable, "source at +inf");
    case K::Point:
      c = s.x;
      c_in = s.side == Sign::Minus;
      break;
    case K::Segment:
      if (s.side == Sign::Plus) {
        c = q.slot_position(s.n + 1);
      } else {
        c = q.slot_position(s.n);
        c_in = c.is_finite();
      }
      break;
  }
  switch (t.kind) {
    case K::PosInf: d = ExtRational::pos_inf(); break;
    case K::NegInf: throw Error(ErrorCode::Unorientable, "target at -inf");
    case K::Point:
      d = t.x;
      d_in = t.side == Sign::Plus;
      break;
    case K::Segment:
      if (t.side == Sign::Minus) {
        d = q.slot_position(t.n);
      } else {
        d = q.slot_position(t.n + 1);
        d_in = d.is_finite();
      }
      break;
  }
  if (c.is_pos_inf() || d.is_neg_inf() || d < c || (c == d && !(c_in && d_in)))
    throw Error(ErrorCode::Unorientable, "arc " + arc.str() + " has no interval preimage");
  return Interval(c, c_in, d, d_in);
}

namespace {

// a < c <= b < d or c < a <= d < b, for a < b and c < d in one total order.
bool interleave(const Quiver& q, Endpoint a, Endpoint b, Endpoint c, Endpoint d) {
  if (endpoint_compare(q, b, a) < 0) std::swap(a, b);
  if (endpoint_compare(q, d, c) < 0) std::swap(c, d);
  auto lt = [&](const Endpoint& x, const Endpoint& y) { return endpoint_compare(q, x, y) < 0; };
  auto le = [&](const Endpoint& x, const Endpoint& y) { return endpoint_compare(q, x, y) <= 0; };
  return (lt(a, c) && le(c, b) && lt(b, d)) || (lt(c, a) && le(a, d) && lt(d, b));
}

}  // namespace

bool crossing(const Quiver& q, const Arc& x, const Arc& y) {
  if (x == y) return false;
  if (q.is_straight()) return interleave(q, x.a, x.b, y.a, y.b);

  // A shared endpoint decides by roles: crossing iff it is the source of one and the target of the other.
  const Endpoint* shared = nullptr;
  for (const Endpoint* e : {&x.a, &x.b})
    if (*e == y.a || *e == y.b) shared = e;
  if (shared) {
    bool src_x = orient(q, x).source == *shared;
    bool src_y = orient(q, y).source == *shared;
    return src_x != src_y;
  }

  Lane xa = lane_of(q, x.a), xb = lane_of(q, x.b), ya = lane_of(q, y.a), yb = lane_of(q, y.b);
  bool x_span = xa != xb, y_span = ya != yb;
  if (!x_span && !y_span) {
    if (xa != ya) return false;
    return interleave(q, x.a, x.b, y.a, y.b);
  }
  if (x_span && y_span) {
    const Endpoint& a = xa == Lane::Down ? x.a : x.b;
    const Endpoint& b = xa == Lane::Down ? x.b : x.a;
    const Endpoint& c = ya == Lane::Down ? y.a : y.b;
    const Endpoint& d = ya == Lane::Down ? y.b : y.a;
    int ac = endpoint_compare(q, a, c), db = endpoint_compare(q, d, b);
    return (ac < 0 && db < 0) || (ac > 0 && db > 0);
  }
  const Arc& span = x_span ? x : y;
  const Arc& one = x_span ? y : x;
  Lane lane = lane_of(q, one.a);
  const Endpoint& p = lane_of(q, span.a) == lane ? span.a : span.b;
  Endpoint lo = one.a, hi = one.b;
  if (endpoint_compare(q, hi, lo) < 0) std::swap(lo, hi);
  return endpoint_compare(q, lo, p) < 0 && endpoint_compare(q, p, hi) < 0;
}

bool e_compatible(const Quiver& q, const Interval& m1, const Interval& m2) { return !crossing(q, phi(q, m1), phi(q, m2)); }

Endpoint reverse_endpoint(const Quiver& q, const Endpoint& e) {
  check_endpoint(q, e);
  if (e.kind != Endpoint::Kind::Segment) return e;
  Quiver r = q.reversed();
  return Endpoint::segment(*r.slot_at(q.slot_position(e.n)), e.side);
}

Endpoint mirror_endpoint(const Quiver& q, const Endpoint& e) {
  check_endpoint(q, e);
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return Endpoint::pos_inf();
    case Endpoint::Kind::PosInf: return Endpoint::neg_inf();
    case Endpoint::Kind::Point: return Endpoint::point(Rational(-e.x), flip(e.side));
    case Endpoint::Kind::Segment: {
      Quiver m = q.mirrored();
      return Endpoint::segment(*m.slot_at(q.slot_position(e.n + 1).negated()), flip(e.side));
    }
  }
  return e;
}

Arc reverse_arc(const Quiver& q, const Arc& arc) { return Arc(reverse_endpoint(q, arc.a), reverse_endpoint(q, arc.b)); }
Arc mirror_arc(const Quiver& q, const Arc& arc) { return Arc(mirror_endpoint(q, arc.a), mirror_endpoint(q, arc.b)); }

Interval mirror_interval(const Interval& m) { return Interval(m.hi().negated(), m.hi_in(), m.lo().negated(), m.lo_in()); }

}  // namespace cta
