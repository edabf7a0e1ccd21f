#include "cta/embeddings.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cta/anchors.hpp"
#include "cta/error.hpp"

namespace cta::embed {

namespace {

// Outer integer gaps: i < a_{-inf} = 0 or i >= a_{+inf} = 1.
constexpr long kLowGapLast = -1;
constexpr long kHighGapFirst = 1;

void add_image(ClusterRep& c, const Diagonal& d, Coord coord) { c.explicit_members.insert(diagonal_image(d, coord)); }

void add_tails(ClusterRep& c, const GonTriangulation& t, Coord coord) {
  for (const Tail& tl : t.tails()) c.families.push_back(Family::diagonal_images(tl, coord));
}

GonTriangulation shifted_finite(const GonTriangulation& t, int n, long by, std::vector<Diagonal> extra) {
  std::vector<Diagonal> ds;
  for (const Diagonal& d : t.explicit_part()) ds.push_back({d.i + by, d.j + by});
  for (const Diagonal& d : extra) ds.push_back(d);
  return GonTriangulation::finite(n, ds);
}

void require_arena(const GonTriangulation& t, Arena a, const char* what) {
  if (t.arena() != a) throw Error(ErrorCode::Domain, std::string(what) + ": wrong arena for " + t.str());
}

}  // namespace

Interval diagonal_image(const Diagonal& d, Coord c) {
  if (c == Coord::Integer && (d.is_adic() || d.is_prufer()))
    throw Error(ErrorCode::Domain, "integer coordinates have no image for " + d.str());
  return Interval::open(coord_value(c, d.i), coord_value(c, d.j));
}

ClusterRep build_T_infinity() {
  ClusterRep c(Quiver::straight());
  c.explicit_members.insert(Interval::open(anchors::limit_low(), anchors::limit_high()));
  c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  c.families.push_back(Family::gap_tilings(Coord::Anchor, LONG_MIN, LONG_MAX));
  c.families.push_back(Family::gap_complements(Coord::Anchor, LONG_MIN, LONG_MAX));
  c.families.push_back(Family::gap_tilings(Coord::Integer, LONG_MIN, kLowGapLast));
  c.families.push_back(Family::gap_complements(Coord::Integer, LONG_MIN, kLowGapLast));
  c.families.push_back(Family::gap_tilings(Coord::Integer, kHighGapFirst, LONG_MAX));
  c.families.push_back(Family::gap_complements(Coord::Integer, kHighGapFirst, LONG_MAX));
  c.families.push_back(Family::integer_rays(RayStyle::Open, LONG_MIN, LONG_MAX));
  return c;
}

ClusterRep build_T_n(int n) {
  if (n < 1) throw Error(ErrorCode::Domain, "n must be at least 1");
  ClusterRep c = build_T_infinity();
  c.families.push_back(Family::diagonal_images(Tail::fan(1, TailSide::Left, -1), Coord::Anchor));
  c.families.push_back(Family::diagonal_images(Tail::fan(1, TailSide::Right, n + 3), Coord::Anchor));
  add_image(c, {kNegInfVertex, 1}, Coord::Anchor);
  add_image(c, {1, kPosInfVertex}, Coord::Anchor);
  return c;
}

ClusterRep build_T_pi() {
  ClusterRep c(Quiver::straight(), Universe::OpenIntervals);
  c.explicit_members.insert(Interval::open(anchors::limit_low(), anchors::limit_high()));
  c.families.push_back(Family::gap_tilings(Coord::Anchor, LONG_MIN, LONG_MAX));
  c.families.push_back(Family::gap_tilings(Coord::Integer, LONG_MIN, kLowGapLast));
  c.families.push_back(Family::gap_tilings(Coord::Integer, kHighGapFirst, LONG_MAX));
  // Rays (-inf, i+1) of the outer gaps together with (-inf, a_{+inf}) = (-inf, 1).
  c.families.push_back(Family::integer_rays(RayStyle::Open, LONG_MIN, LONG_MAX));
  return c;
}

GonTriangulation F_m_to_m1(const GonTriangulation& t) {
  require_arena(t, Arena::Finite, "F_m^m+1");
  return shifted_finite(t, t.n() + 1, 0, {{1, t.n() + 3}});
}

GonTriangulation F_m_to_n(const GonTriangulation& t, int n) {
  if (n < t.n()) throw Error(ErrorCode::Domain, "target polygon is smaller than the source");
  GonTriangulation r = t;
  while (r.n() < n) r = F_m_to_m1(r);
  return r;
}

GonTriangulation F_n_to_inf(const GonTriangulation& t) {
  require_arena(t, Arena::Finite, "F_n^inf");
  std::vector<Diagonal> ds(t.explicit_part().begin(), t.explicit_part().end());
  return GonTriangulation::infinite(ds, {Tail::fan(1, TailSide::Left, -1), Tail::fan(1, TailSide::Right, t.n() + 3)});
}

GonTriangulation F_inf_to_infbar(const GonTriangulation& t) {
  require_arena(t, Arena::Infinite, "F_inf^infbar");
  return t.adic_completion().prufer_completion();
}

ClusterRep F_n_to_R(const GonTriangulation& t) {
  require_arena(t, Arena::Finite, "F_n^R");
  ClusterRep c = build_T_n(t.n());
  for (const Diagonal& d : t.explicit_part()) add_image(c, d, Coord::Anchor);
  return c;
}

ClusterRep F_inf_to_R(const GonTriangulation& t) {
  require_arena(t, Arena::Infinite, "F_inf^R");
  ClusterRep c = build_T_infinity();
  for (const Diagonal& d : t.explicit_part()) add_image(c, d, Coord::Anchor);
  add_tails(c, t, Coord::Anchor);
  FountainClass fc = t.classify_fountains();
  if (!fc.locally_finite) {
    add_image(c, {kNegInfVertex, fc.left}, Coord::Anchor);
    add_image(c, {kNegInfVertex, fc.right}, Coord::Anchor);
    add_image(c, {fc.right, kPosInfVertex}, Coord::Anchor);
  }
  return c;
}

ClusterRep F_infbar_to_R(const GonTriangulation& t) {
  require_arena(t, Arena::Completed, "F_infbar^R");
  ClusterRep c = build_T_infinity();
  for (const Diagonal& d : t.explicit_part()) add_image(c, d, Coord::Anchor);
  add_tails(c, t, Coord::Anchor);
  return c;
}

ClusterRep F_infbar_to_pi(const GonTriangulation& t) {
  require_arena(t, Arena::Completed, "F_infbar^pi");
  ClusterRep c = build_T_pi();
  for (const Diagonal& d : t.explicit_part()) add_image(c, d, Coord::Anchor);
  add_tails(c, t, Coord::Anchor);
  return c;
}

GonTriangulation G_m_to_m1(const GonTriangulation& t) {
  require_arena(t, Arena::Finite, "G_m^m+1");
  const int m = t.n();
  if (m % 2 == 0) return F_m_to_m1(t);
  return shifted_finite(t, m + 1, 1, {{2, m + 4}});
}

GonTriangulation G_m_to_n(const GonTriangulation& t, int n) {
  if (n < t.n()) throw Error(ErrorCode::Domain, "target polygon is smaller than the source");
  GonTriangulation r = t;
  while (r.n() < n) r = G_m_to_m1(r);
  return r;
}

long G_shift(int n) { return n % 2 == 0 ? (n + 4) / 2 : (n + 3) / 2; }

GonTriangulation G_n_to_inf(const GonTriangulation& t) {
  require_arena(t, Arena::Finite, "G_n^inf");
  const int n = t.n();
  const long s = G_shift(n);
  std::vector<Diagonal> ds;
  for (const Diagonal& d : t.explicit_part()) ds.push_back({d.i - s, d.j - s});
  // The closing edge of the shifted polygon is the innermost member of the zigzag.
  if (n % 2 == 0) {
    const long c = (n + 2) / 2;
    ds.push_back({-c, c});
    return GonTriangulation::infinite(ds, {Tail::zigzag(c + 1)});
  }
  return GonTriangulation::infinite(ds, {Tail::zigzag((n + 3) / 2)});
}

ClusterRep G_inf_to_pi(const GonTriangulation& t) {
  require_arena(t, Arena::Infinite, "G_inf^pi");
  ClusterRep c(Quiver::straight(), Universe::OpenIntervals);
  // S_{pi,i}: unit dyadic tilings of every integer gap, without the rays.
  c.families.push_back(Family::gap_tilings(Coord::Integer, LONG_MIN, LONG_MAX));
  for (const Diagonal& d : t.explicit_part()) add_image(c, d, Coord::Integer);
  add_tails(c, t, Coord::Integer);
  FountainClass fc = t.classify_fountains();
  if (!fc.locally_finite) {
    c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), Rational(fc.left)));
    c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), Rational(fc.right)));
  }
  return c;
}

bool pi_composite_member(const ClusterRep& pi_side, const Interval& m) {
  if (in_universe(pi_side.universe, m)) return pi_side.member(m);
  return pi_side.compatible_with_all(m);
}

std::vector<Interval> embedding_probes(size_t random_count, std::uint64_t seed) {
  std::vector<ExtRational> pts;
  for (const char* s : {"-2", "-1", "-1/2", "0", "1/16", "1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8", "15/16", "1",
                        "3/2", "2", "3", "5"})
    pts.emplace_back(parse_rational(s));
  std::vector<Interval> out;
  for (size_t a = 0; a < pts.size(); ++a) {
    out.push_back(Interval::singleton(pts[a].value()));
    for (int f = 0; f < 2; ++f) {
      out.emplace_back(ExtRational::neg_inf(), false, pts[a], f != 0);
      out.emplace_back(pts[a], f != 0, ExtRational::pos_inf(), false);
    }
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (int f = 0; f < 4; ++f) out.emplace_back(pts[a], (f & 1) != 0, pts[b], (f & 2) != 0);
  }
  // Diagonal images and their closed variants for vertices -4..9 and the two limits.
  std::vector<Rational> anchor_pts{anchors::limit_low().value()};
  for (long i = -4; i <= 9; ++i) anchor_pts.push_back(anchors::at(i));
  anchor_pts.push_back(anchors::limit_high().value());
  for (size_t a = 0; a < anchor_pts.size(); ++a)
    for (size_t b = a + 1; b < anchor_pts.size(); ++b)
      for (int f = 0; f < 4; ++f) out.emplace_back(anchor_pts[a], (f & 1) != 0, anchor_pts[b], (f & 2) != 0);
  out.push_back(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  for (const char* s : {"1/3", "2/3", "-1/3", "7/3"}) out.push_back(Interval::singleton(parse_rational(s)));
  auto extra = random_probes(Universe::Full, random_count, seed, 3, 4);
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CommutativityReport::ok() const {
  for (const auto& l : legs)
    if (!l.ok) return false;
  return true;
}

std::string CommutativityReport::str() const {
  std::ostringstream os;
  os << fixture << ":";
  for (const auto& l : legs) os << " [" << l.name << (l.ok ? " ok" : " MISMATCH " + l.witness) << "]";
  return os.str();
}

LegResult compare_reps(const std::string& name, const ClusterRep& a, const ClusterRep& b,
                       const std::vector<Interval>& probes) {
  LegResult r{name, true, ""};
  for (const Interval& p : probes) {
    bool ia = a.member(p), ib = b.member(p);
    if (ia != ib) {
      r.ok = false;
      r.witness = p.str() + (ia ? " only in the composite" : " only in the direct image");
      break;
    }
  }
  return r;
}

namespace {

LegResult compare_pi_composite(const ClusterRep& pi_side, const ClusterRep& direct, const std::vector<Interval>& probes) {
  LegResult r{"F_pi^R . F_infbar^pi = F_infbar^R", true, ""};
  for (const Interval& p : probes) {
    bool ia = pi_composite_member(pi_side, p), ib = direct.member(p);
    if (ia != ib) {
      r.ok = false;
      r.witness = p.str() + (ia ? " only in the composite" : " only in the direct image");
      break;
    }
  }
  return r;
}

LegResult compare_gons(const std::string& name, const GonTriangulation& a, const GonTriangulation& b) {
  constexpr long kWindow = 40;
  LegResult r{name, true, ""};
  if (!same_on_window(a, b, kWindow)) {
    r.ok = false;
    r.witness = a.str() + " vs " + b.str();
  }
  return r;
}

void infinite_legs(CommutativityReport& rep, const GonTriangulation& s, const std::vector<Interval>& probes) {
  GonTriangulation u = F_inf_to_infbar(s);
  ClusterRep via_infbar = F_infbar_to_R(u);
  rep.legs.push_back(compare_reps("F_infbar^R . F_inf^infbar = F_inf^R", via_infbar, F_inf_to_R(s), probes));
  rep.legs.push_back(compare_pi_composite(F_infbar_to_pi(u), via_infbar, probes));
}

}  // namespace

CommutativityReport check_commutativity(const GonTriangulation& t, int n, const std::vector<Interval>& probes) {
  require_arena(t, Arena::Finite, "check_commutativity");
  if (n <= t.n()) throw Error(ErrorCode::Domain, "n must exceed m");
  CommutativityReport rep;
  rep.fixture = "m=" + std::to_string(t.n()) + " n=" + std::to_string(n) + " " + t.str();

  GonTriangulation tn = F_m_to_n(t, n);
  ClusterRep direct_m = F_n_to_R(t);
  rep.legs.push_back(compare_reps("F_n^R . F_m^n = F_m^R", F_n_to_R(tn), direct_m, probes));
  rep.legs.push_back(compare_reps("F_inf^R . F_m^inf = F_m^R", F_inf_to_R(F_n_to_inf(t)), direct_m, probes));
  GonTriangulation s = F_n_to_inf(tn);
  rep.legs.push_back(compare_reps("F_inf^R . F_n^inf = F_n^R", F_inf_to_R(s), F_n_to_R(tn), probes));
  infinite_legs(rep, s, probes);

  GonTriangulation g_direct = G_n_to_inf(t);
  GonTriangulation g_comp = G_n_to_inf(G_m_to_n(t, n));
  rep.legs.push_back(compare_gons("G_n^inf . G_m^n = G_m^inf", g_comp, g_direct));
  rep.legs.push_back(compare_reps("G_n^pi . G_m^n = G_m^pi", G_inf_to_pi(g_comp), G_inf_to_pi(g_direct), probes));
  LegResult lf{"G_n^inf image locally finite", g_direct.classify_fountains().locally_finite && g_comp.classify_fountains().locally_finite, ""};
  if (!lf.ok) lf.witness = g_direct.str();
  rep.legs.push_back(lf);
  return rep;
}

CommutativityReport check_commutativity_infinite(const GonTriangulation& t, const std::vector<Interval>& probes) {
  require_arena(t, Arena::Infinite, "check_commutativity_infinite");
  CommutativityReport rep;
  rep.fixture = t.str();
  infinite_legs(rep, t, probes);
  return rep;
}

void require_commutes(const CommutativityReport& r) {
  for (const auto& l : r.legs)
    if (!l.ok) throw Error(ErrorCode::Mismatch, r.fixture + ": " + l.name + ": " + l.witness);
}

}  // namespace cta::embed
