#include "cta/family.hpp"

#include <algorithm>
#include <sstream>

#include "cta/anchors.hpp"
#include "cta/arc.hpp"
#include "cta/error.hpp"

namespace cta {

namespace {

bool unbounded_low(long v) { return v == LONG_MIN; }
bool unbounded_high(long v) { return v == LONG_MAX; }

Rational pow2_inv(unsigned k) {
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), k);
  return w;
}

bool is_open_finite(const Interval& m) {
  return !m.lo_in() && !m.hi_in() && m.lo().is_finite() && m.hi().is_finite() && m.lo() < m.hi();
}

void push_unique(std::vector<Rational>& v, const Rational& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::vector<Rational> finite_ends(const Interval& m) {
  std::vector<Rational> out;
  if (m.lo().is_finite()) out.push_back(m.lo().value());
  if (m.hi().is_finite() && m.hi() != m.lo()) out.push_back(m.hi().value());
  return out;
}

bool tiling_contains(const Rational& l, const Rational& r, const Interval& m) {
  if (!is_open_finite(m)) return false;
  const Rational& lo = m.lo().value();
  const Rational& hi = m.hi().value();
  if (lo < l || hi > r) return false;
  Rational w = (hi - lo) / (r - l);
  if (w > 1 || w.get_num() != 1 || mpz_popcount(w.get_den_mpz_t()) != 1) return false;
  Rational j = ((lo - l) / (r - l)) / w;
  return j.get_den() == 1;
}

bool is_subdivision_point(const Rational& x, const Rational& l, const Rational& r) {
  return relative_dyadic_depth(x, l, r).has_value();
}

// Members of DyadicTiling(l,r) touching or straddling a critical point, down to one level below the deepest.
void tiling_reps(const Rational& l, const Rational& r, const std::vector<Rational>& crit, std::set<Interval>& out) {
  out.insert(Interval::open(l, r));
  unsigned deepest = 0;
  std::vector<Rational> pts;
  for (const Rational& c : crit) {
    if (c < l || c > r) continue;
    auto d = relative_dyadic_depth(c, l, r);
    if (!d) continue;
    pts.push_back(c);
    deepest = std::max(deepest, *d);
  }
  for (const Rational& c : pts) {
    for (unsigned k = 0; k <= deepest + 1; ++k) {
      Rational w = (r - l) * pow2_inv(k);
      Rational j = (c - l) / w;
      if (j.get_den() == 1) {
        if (c > l) out.insert(Interval::open(Rational(c - w), c));
        if (c < r) out.insert(Interval::open(c, Rational(c + w)));
      } else {
        Rational a = l + w * Rational(floor_long(j));
        out.insert(Interval::open(a, Rational(a + w)));
      }
    }
  }
}

// A point of (s,t) that is not a dyadic subdivision point of (l,r).
Rational non_dyadic_between(const Rational& s, const Rational& t, const Rational& l, const Rational& r) {
  for (long den : {3L, 5L, 7L, 11L, 13L}) {
    Rational p = s + (t - s) / Rational(den);
    if (!is_subdivision_point(p, l, r)) return p;
  }
  throw Error(ErrorCode::Domain, "no non-dyadic sample point found");
}

void complement_reps(const Rational& l, const Rational& r, const std::vector<Rational>& crit, std::set<Interval>& out) {
  std::vector<Rational> cuts{l, r};
  for (const Rational& c : crit) {
    if (c <= l || c >= r) continue;
    if (!is_subdivision_point(c, l, r)) out.insert(Interval::singleton(c));
    push_unique(cuts, c);
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) out.insert(Interval::singleton(non_dyadic_between(cuts[i], cuts[i + 1], l, r)));
}

// One parameter value per region of the range cut by the critical points, plus the critical points themselves.
std::vector<Rational> range_points(const Range& range, const std::vector<Rational>& crit) {
  std::vector<Rational> cuts;
  if (range.lo.is_finite()) push_unique(cuts, range.lo.value());
  if (range.hi.is_finite()) push_unique(cuts, range.hi.value());
  for (const Rational& c : crit) push_unique(cuts, c);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> cand = cuts;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) cand.push_back((cuts[i] + cuts[i + 1]) / 2);
  if (range.lo.is_neg_inf()) cand.push_back(cuts.empty() ? Rational(-1) : Rational(cuts.front() - 1));
  if (range.hi.is_pos_inf()) cand.push_back(cuts.empty() ? Rational(1) : Rational(cuts.back() + 1));
  std::vector<Rational> out;
  for (const Rational& x : cand)
    if (range.contains(x)) push_unique(out, x);
  return out;
}

Interval left_ray_member(const Rational& x, RayStyle s) {
  return Interval(ExtRational::neg_inf(), false, x, s == RayStyle::Closed);
}

Interval right_ray_member(const Rational& x, RayStyle s) {
  return Interval(x, s == RayStyle::Closed, ExtRational::pos_inf(), false);
}

std::optional<long> gap_index(Coord c, const Rational& x) {
  if (c == Coord::Integer) return floor_long(x);
  return anchors::floor_index(x);
}

std::optional<long> vertex_index(Coord c, const Rational& x) {
  if (c == Coord::Integer) {
    if (x.get_den() == 1) return floor_long(x);
    return std::nullopt;
  }
  return anchors::index_of(x);
}

// Gaps i in [first,last] whose closure contains x.
std::vector<long> touched_gaps(Coord c, long first, long last, const Rational& x) {
  std::vector<long> out;
  auto g = gap_index(c, x);
  if (!g) {
    // Only the upper limit of the anchors can border a gap from outside; it borders none.
    return out;
  }
  for (long i : {*g - 1, *g})
    if (i >= first && i <= last && coord_value(c, i) <= x && x <= coord_value(c, i + 1)) out.push_back(i);
  return out;
}

// Gap indices used when a family must be sampled without a query: a window around the origin and the finite ends.
std::vector<long> window_gaps(Coord c, long first, long last) {
  std::vector<long> out;
  const long w = c == Coord::Anchor ? 3 : 2;
  long lo = unbounded_low(first) ? -w : first;
  long hi = unbounded_high(last) ? w : last;
  if (!unbounded_low(first) && unbounded_high(last)) hi = first + 2 * w;
  if (unbounded_low(first) && !unbounded_high(last)) lo = last - 2 * w;
  for (long i = lo; i <= hi && i - lo <= 4 * w; ++i) out.push_back(i);
  if (!unbounded_high(last) && (out.empty() || out.back() != last)) out.push_back(last);
  return out;
}

std::vector<long> critical_vertices(Coord c, const std::vector<Rational>& crit) {
  std::vector<long> out;
  for (const Rational& x : crit) {
    if (c == Coord::Integer) {
      out.push_back(floor_long(x));
      out.push_back(ceil_long(x));
    } else if (auto k = anchors::floor_index(x)) {
      out.push_back(*k);
      out.push_back(*k + 1);
    }
  }
  return out;
}

Interval image_of(const Diagonal& d, Coord c) { return Interval::open(coord_value(c, d.i), coord_value(c, d.j)); }

template <class Rng>
long uniform_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

template <class Rng>
Rational random_point(const Range& range, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rational x;
    if (range.lo.is_finite() && range.hi.is_finite()) {
      Rational u(uniform_long(rng, 0, 256), 256);
      u.canonicalize();
      x = range.lo.value() + (range.hi.value() - range.lo.value()) * u;
    } else {
      Rational base = range.lo.is_finite() ? range.lo.value() : range.hi.is_finite() ? range.hi.value() : Rational(0);
      Rational off(uniform_long(rng, -64, 64), 8);
      off.canonicalize();
      x = base + off;
    }
    if (range.contains(x)) return x;
  }
  throw Error(ErrorCode::Domain, "empty range " + range.str());
}

template <class Rng>
Interval random_tiling_member(const Rational& l, const Rational& r, Rng& rng) {
  unsigned k = static_cast<unsigned>(uniform_long(rng, 0, 6));
  long j = uniform_long(rng, 0, (1L << k) - 1);
  Rational w = (r - l) * pow2_inv(k);
  return Interval::open(Rational(l + w * Rational(j)), Rational(l + w * Rational(j + 1)));
}

template <class Rng>
Interval random_complement_member(const Rational& l, const Rational& r, Rng& rng) {
  for (;;) {
    long j = uniform_long(rng, 1, 3 * 64 - 1);
    Rational x = l + (r - l) * Rational(j) / Rational(3 * 64);
    if (!is_subdivision_point(x, l, r)) return Interval::singleton(x);
  }
}

std::string bound_str(long v) {
  if (v == LONG_MIN) return "-inf";
  if (v == LONG_MAX) return "+inf";
  return std::to_string(v);
}

}  // namespace

Rational coord_value(Coord c, long i) { return c == Coord::Integer ? Rational(i) : anchors::vertex(i); }

bool Range::contains(const ExtRational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_in) return false;
  if (x == hi && !hi_in) return false;
  return true;
}

bool Range::empty() const { return hi < lo || (lo == hi && !(lo_in && hi_in)); }

std::string Range::str() const {
  return std::string(lo_in ? "[" : "(") + lo.str() + "," + hi.str() + (hi_in ? "]" : ")");
}

Family Family::dyadic_tiling(const Rational& l, const Rational& r) {
  if (!(l < r)) throw Error(ErrorCode::InvalidInterval, "tiling base needs l < r");
  Family f;
  f.kind = Kind::DyadicTiling;
  f.l = l;
  f.r = r;
  return f;
}

Family Family::singleton_complement(const Rational& l, const Rational& r) {
  Family f = dyadic_tiling(l, r);
  f.kind = Kind::SingletonComplement;
  return f;
}

Family Family::singleton_range(Range range) {
  Family f;
  f.kind = Kind::SingletonRange;
  f.range = std::move(range);
  return f;
}

Family Family::left_ray(RayStyle s, Range range) {
  Family f;
  f.kind = Kind::LeftRay;
  f.style = s;
  f.range = std::move(range);
  return f;
}

Family Family::right_ray(RayStyle s, Range range) {
  Family f = left_ray(s, std::move(range));
  f.kind = Kind::RightRay;
  return f;
}

Family Family::gap_tilings(Coord c, long first, long last) {
  Family f;
  f.kind = Kind::GapTilings;
  f.coord = c;
  f.first = first;
  f.last = last;
  return f;
}

Family Family::gap_complements(Coord c, long first, long last) {
  Family f = gap_tilings(c, first, last);
  f.kind = Kind::GapComplements;
  return f;
}

Family Family::integer_rays(RayStyle s, long first, long last) {
  Family f;
  f.kind = Kind::IntegerRays;
  f.style = s;
  f.first = first;
  f.last = last;
  return f;
}

Family Family::diagonal_images(const Tail& t, Coord c) {
  Family f;
  f.kind = Kind::DiagonalImages;
  f.tail = t;
  f.coord = c;
  return f;
}

bool Family::is_tiling_kind() const { return kind == Kind::DyadicTiling || kind == Kind::GapTilings; }

bool Family::contains(const Interval& m) const {
  if (excluded.count(m)) return false;
  switch (kind) {
    case Kind::DyadicTiling:
      return tiling_contains(l, r, m);
    case Kind::SingletonComplement:
      return m.is_singleton() && m.lo().value() > l && m.lo().value() < r && !is_subdivision_point(m.lo().value(), l, r);
    case Kind::SingletonRange:
      return m.is_singleton() && range.contains(m.lo());
    case Kind::LeftRay:
      return m.lo().is_neg_inf() && m.hi().is_finite() && m.hi_in() == (style == RayStyle::Closed) && range.contains(m.hi());
    case Kind::RightRay:
      return m.hi().is_pos_inf() && m.lo().is_finite() && m.lo_in() == (style == RayStyle::Closed) && range.contains(m.lo());
    case Kind::GapTilings: {
      if (!is_open_finite(m)) return false;
      auto g = gap_index(coord, m.lo().value());
      if (!g || *g < first || *g > last) return false;
      return tiling_contains(coord_value(coord, *g), coord_value(coord, *g + 1), m);
    }
    case Kind::GapComplements: {
      if (!m.is_singleton()) return false;
      const Rational& x = m.lo().value();
      auto g = gap_index(coord, x);
      if (!g || *g < first || *g > last) return false;
      Rational a = coord_value(coord, *g), b = coord_value(coord, *g + 1);
      return x > a && !is_subdivision_point(x, a, b);
    }
    case Kind::IntegerRays: {
      if (!m.lo().is_neg_inf() || !m.hi().is_finite() || m.hi_in() != (style == RayStyle::Closed)) return false;
      const Rational& k = m.hi().value();
      return k.get_den() == 1 && k >= Rational(first) && k <= Rational(last);
    }
    case Kind::DiagonalImages: {
      if (!is_open_finite(m)) return false;
      auto i = vertex_index(coord, m.lo().value());
      auto j = vertex_index(coord, m.hi().value());
      return i && j && tail.contains({*i, *j});
    }
  }
  return false;
}

std::vector<Interval> Family::representatives(const std::vector<Rational>& critical) const {
  std::vector<Rational> crit = critical;
  for (const Interval& e : excluded)
    for (const Rational& x : finite_ends(e)) push_unique(crit, x);
  std::set<Interval> out;
  switch (kind) {
    case Kind::DyadicTiling:
      tiling_reps(l, r, crit, out);
      break;
    case Kind::SingletonComplement:
      complement_reps(l, r, crit, out);
      break;
    case Kind::SingletonRange:
      for (const Rational& x : range_points(range, crit)) out.insert(Interval::singleton(x));
      break;
    case Kind::LeftRay:
      for (const Rational& x : range_points(range, crit)) out.insert(left_ray_member(x, style));
      break;
    case Kind::RightRay:
      for (const Rational& x : range_points(range, crit)) out.insert(right_ray_member(x, style));
      break;
    case Kind::GapTilings:
    case Kind::GapComplements: {
      std::set<long> gaps;
      for (const Rational& c : crit)
        for (long g : touched_gaps(coord, first, last, c)) gaps.insert(g);
      if (gaps.empty()) gaps.insert(window_gaps(coord, first, last).front());
      for (long g : gaps) {
        Rational a = coord_value(coord, g), b = coord_value(coord, g + 1);
        if (kind == Kind::GapTilings)
          tiling_reps(a, b, crit, out);
        else
          complement_reps(a, b, crit, out);
      }
      break;
    }
    case Kind::IntegerRays: {
      std::set<long> ks;
      for (const Rational& c : crit)
        for (long k = floor_long(c) - 1; k <= ceil_long(c) + 1; ++k) ks.insert(k);
      if (!unbounded_low(first)) ks.insert(first);
      if (!unbounded_high(last)) ks.insert(last);
      if (ks.empty()) ks.insert(0);
      long lo = *ks.begin() - 2, hi = *ks.rbegin() + 2;
      if (unbounded_low(first)) ks.insert(lo);
      if (unbounded_high(last)) ks.insert(hi);
      for (long k : ks)
        if (k >= first && k <= last) out.insert(left_ray_member(Rational(k), style));
      break;
    }
    case Kind::DiagonalImages:
      for (const Diagonal& d : tail.representatives(critical_vertices(coord, crit))) out.insert(image_of(d, coord));
      break;
  }
  std::vector<Interval> v;
  for (const Interval& m : out)
    if (!excluded.count(m) && contains(m)) v.push_back(m);
  return v;
}

std::vector<Rational> Family::critical_points() const {
  std::vector<Rational> out;
  switch (kind) {
    case Kind::DyadicTiling:
    case Kind::SingletonComplement:
      out = {l, r, (l + r) / 2};
      break;
    case Kind::SingletonRange:
    case Kind::LeftRay:
    case Kind::RightRay:
      if (range.lo.is_finite()) out.push_back(range.lo.value());
      if (range.hi.is_finite()) out.push_back(range.hi.value());
      if (out.empty()) out.push_back(Rational(0));
      break;
    case Kind::GapTilings:
    case Kind::GapComplements:
      for (long g : window_gaps(coord, first, last)) {
        push_unique(out, coord_value(coord, g));
        push_unique(out, coord_value(coord, g + 1));
      }
      break;
    case Kind::IntegerRays:
      for (long k : window_gaps(Coord::Integer, first, last)) push_unique(out, Rational(k));
      break;
    case Kind::DiagonalImages:
      for (const Diagonal& d : tail.representatives({})) {
        push_unique(out, coord_value(coord, d.i));
        push_unique(out, coord_value(coord, d.j));
      }
      break;
  }
  for (const Interval& e : excluded)
    for (const Rational& x : finite_ends(e)) push_unique(out, x);
  return out;
}

std::vector<ExtRational> Family::nearby_points(const std::vector<Rational>& ends) const {
  std::vector<Rational> pts;
  auto grid = [&](const Rational& a, const Rational& b) {
    unsigned deepest = 0;
    bool any = false;
    for (const Rational& e : ends)
      if (e >= a && e <= b)
        if (auto d = relative_dyadic_depth(e, a, b)) {
          deepest = std::max(deepest, *d);
          any = true;
        }
    if (!any) return;
    push_unique(pts, a);
    push_unique(pts, b);
    Rational cell = (b - a) * pow2_inv(deepest + 1);
    for (const Rational& e : ends) {
      if (e < a || e > b || !relative_dyadic_depth(e, a, b)) continue;
      for (long k = -4; k <= 4; ++k) {
        Rational p = e + cell * Rational(k);
        if (p >= a && p <= b) push_unique(pts, p);
      }
    }
  };
  switch (kind) {
    case Kind::DyadicTiling:
      grid(l, r);
      break;
    case Kind::GapTilings: {
      std::set<long> gaps;
      for (const Rational& e : ends)
        for (long g : touched_gaps(coord, first, last, e)) gaps.insert(g);
      for (long g : gaps) grid(coord_value(coord, g), coord_value(coord, g + 1));
      break;
    }
    case Kind::SingletonComplement:
    case Kind::GapComplements:
    case Kind::SingletonRange:
      break;
    case Kind::LeftRay:
    case Kind::RightRay:
      for (const Rational& e : ends)
        for (const Rational& d : {Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1)}) {
          Rational p = e + d;
          if (range.contains(p)) push_unique(pts, p);
        }
      if (range.lo.is_finite()) push_unique(pts, range.lo.value());
      if (range.hi.is_finite()) push_unique(pts, range.hi.value());
      break;
    case Kind::IntegerRays:
      for (const Rational& e : ends)
        for (long k = floor_long(e) - 1; k <= ceil_long(e) + 1; ++k)
          if (k >= first && k <= last) push_unique(pts, Rational(k));
      break;
    case Kind::DiagonalImages:
      for (const Diagonal& d : tail.representatives(critical_vertices(coord, ends))) {
        push_unique(pts, coord_value(coord, d.i));
        push_unique(pts, coord_value(coord, d.j));
      }
      break;
  }
  return {pts.begin(), pts.end()};
}

Interval Family::sample(std::mt19937_64& rng) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::optional<Interval> m;
    switch (kind) {
      case Kind::DyadicTiling:
        m = random_tiling_member(l, r, rng);
        break;
      case Kind::SingletonComplement:
        m = random_complement_member(l, r, rng);
        break;
      case Kind::SingletonRange:
        m = Interval::singleton(random_point(range, rng));
        break;
      case Kind::LeftRay:
        m = left_ray_member(random_point(range, rng), style);
        break;
      case Kind::RightRay:
        m = right_ray_member(random_point(range, rng), style);
        break;
      case Kind::GapTilings:
      case Kind::GapComplements: {
        auto gaps = window_gaps(coord, first, last);
        long g = gaps[static_cast<size_t>(uniform_long(rng, 0, static_cast<long>(gaps.size()) - 1))];
        Rational a = coord_value(coord, g), b = coord_value(coord, g + 1);
        m = kind == Kind::GapTilings ? random_tiling_member(a, b, rng) : random_complement_member(a, b, rng);
        break;
      }
      case Kind::IntegerRays: {
        auto ks = window_gaps(Coord::Integer, first, last);
        m = left_ray_member(Rational(ks[static_cast<size_t>(uniform_long(rng, 0, static_cast<long>(ks.size()) - 1))]), style);
        break;
      }
      case Kind::DiagonalImages: {
        long radius = 12;
        for (long v : tail.critical_vertices()) radius = std::max(radius, (v < 0 ? -v : v) + 6);
        auto members = tail.members_in_window(radius);
        m = image_of(members[static_cast<size_t>(uniform_long(rng, 0, static_cast<long>(members.size()) - 1))], coord);
        break;
      }
    }
    if (m && !excluded.count(*m)) return *m;
  }
  throw Error(ErrorCode::Domain, "could not sample a member of " + str());
}

std::vector<Interval> Family::truncation(long radius, unsigned depth) const {
  std::set<Interval> out;
  const Rational R(radius);
  auto in_window = [&](const Rational& x) { return x >= -R && x <= R; };
  auto tiling = [&](const Rational& a, const Rational& b) {
    for (unsigned k = 0; k <= depth; ++k) {
      Rational w = (b - a) * pow2_inv(k);
      for (long j = 0; j < (1L << k); ++j) out.insert(Interval::open(Rational(a + w * Rational(j)), Rational(a + w * Rational(j + 1))));
    }
  };
  auto complement = [&](const Rational& a, const Rational& b) {
    long n = 3L << depth;
    for (long j = 1; j < n; ++j) {
      Rational x = a + (b - a) * Rational(j) / Rational(n);
      if (!is_subdivision_point(x, a, b)) out.insert(Interval::singleton(x));
    }
  };
  auto grid_points = [&](const Range& rg) {
    std::vector<Rational> v;
    long n = radius << depth;
    for (long j = -n; j <= n; ++j) {
      Rational x = Rational(j) * pow2_inv(depth);
      if (rg.contains(x)) v.push_back(x);
    }
    return v;
  };
  auto gaps = [&]() {
    std::vector<long> v;
    if (coord == Coord::Integer) {
      for (long g = std::max(first, -radius); g <= std::min(last, radius - 1); ++g) v.push_back(g);
    } else {
      // Anchor gaps accumulate at 0 and 1; a bounded window of them stands in for all.
      for (long g = std::max(first, -static_cast<long>(depth) - 3); g <= std::min(last, static_cast<long>(depth) + 3); ++g) v.push_back(g);
    }
    return v;
  };
  switch (kind) {
    case Kind::DyadicTiling:
      tiling(l, r);
      break;
    case Kind::SingletonComplement:
      complement(l, r);
      break;
    case Kind::SingletonRange:
      for (const Rational& x : grid_points(range)) out.insert(Interval::singleton(x));
      break;
    case Kind::LeftRay:
      for (const Rational& x : grid_points(range)) out.insert(left_ray_member(x, style));
      break;
    case Kind::RightRay:
      for (const Rational& x : grid_points(range)) out.insert(right_ray_member(x, style));
      break;
    case Kind::GapTilings:
      for (long g : gaps()) tiling(coord_value(coord, g), coord_value(coord, g + 1));
      break;
    case Kind::GapComplements:
      for (long g : gaps()) complement(coord_value(coord, g), coord_value(coord, g + 1));
      break;
    case Kind::IntegerRays:
      for (long k = std::max(first, -radius); k <= std::min(last, radius); ++k) out.insert(left_ray_member(Rational(k), style));
      break;
    case Kind::DiagonalImages:
      for (const Diagonal& d : tail.members_in_window(coord == Coord::Integer ? radius : radius + 2 * static_cast<long>(depth))) {
        Interval m = image_of(d, coord);
        if (coord == Coord::Anchor || (in_window(m.lo().value()) && in_window(m.hi().value()))) out.insert(m);
      }
      break;
  }
  std::vector<Interval> v;
  for (const Interval& m : out)
    if (!excluded.count(m)) v.push_back(m);
  return v;
}

std::string Family::str() const {
  std::ostringstream os;
  auto coord_name = [](Coord c) { return c == Coord::Integer ? "INTEGER" : "ANCHOR"; };
  auto style_name = [](RayStyle s) { return s == RayStyle::Open ? "OPEN" : "CLOSED"; };
  switch (kind) {
    case Kind::DyadicTiling:
      os << "DYADIC_TILING(" << format_rational(l) << "," << format_rational(r) << ")";
      break;
    case Kind::SingletonComplement:
      os << "SINGLETON_COMPLEMENT(" << format_rational(l) << "," << format_rational(r) << ")";
      break;
    case Kind::SingletonRange:
      os << "SINGLETON_RANGE(" << range.str() << ")";
      break;
    case Kind::LeftRay:
      os << "LEFT_RAY(" << style_name(style) << "," << range.str() << ")";
      break;
    case Kind::RightRay:
      os << "RIGHT_RAY(" << style_name(style) << "," << range.str() << ")";
      break;
    case Kind::GapTilings:
      os << "GAP_TILINGS(" << coord_name(coord) << "," << bound_str(first) << ".." << bound_str(last) << ")";
      break;
    case Kind::GapComplements:
      os << "GAP_COMPLEMENTS(" << coord_name(coord) << "," << bound_str(first) << ".." << bound_str(last) << ")";
      break;
    case Kind::IntegerRays:
      os << "INTEGER_RAYS(" << style_name(style) << "," << bound_str(first) << ".." << bound_str(last) << ")";
      break;
    case Kind::DiagonalImages:
      os << "DIAGONAL_IMAGES(" << tail.str() << "," << coord_name(coord) << ")";
      break;
  }
  if (!excluded.empty()) {
    os << " minus {";
    bool firstm = true;
    for (const Interval& e : excluded) {
      os << (firstm ? "" : ", ") << e.str();
      firstm = false;
    }
    os << "}";
  }
  return os.str();
}

bool compatible_with_family(const Quiver& q, const Interval& m, const Family& f) {
  if (!q.is_straight()) throw Error(ErrorCode::Unsupported, "families require a straight quiver");
  const std::vector<Rational> ends = finite_ends(m);
  if (f.is_tiling_kind()) {
    auto check_base = [&](const Rational& a, const Rational& b) {
      for (const Rational& c : ends)
        if (c > a && c < b && !is_subdivision_point(c, a, b)) {
          // A non-dyadic singleton never shares an endpoint with a tiling member and nests or is disjoint.
          if (m.is_singleton()) return false;
          throw Error(ErrorCode::Unsupported,
                      m.str() + " has a non-dyadic endpoint inside the base of " + f.str());
        }
      return true;
    };
    if (f.kind == Family::Kind::DyadicTiling) {
      if (!check_base(f.l, f.r)) return true;
    } else {
      for (const Rational& c : ends)
        for (long g : touched_gaps(f.coord, f.first, f.last, c))
          if (!check_base(coord_value(f.coord, g), coord_value(f.coord, g + 1))) return true;
    }
  }
  for (const Interval& rep : f.representatives(ends))
    if (!e_compatible(q, m, rep)) return false;
  return true;
}

bool families_compatible(const Quiver& q, const Family& a, const Family& b) {
  std::vector<Rational> crit = a.critical_points();
  for (const Rational& x : b.critical_points()) push_unique(crit, x);
  for (const Interval& rep : a.representatives(crit))
    if (!compatible_with_family(q, rep, b)) return false;
  for (const Interval& rep : b.representatives(crit))
    if (!compatible_with_family(q, rep, a)) return false;
  return true;
}

}  // namespace cta
