#include "cta/mutation_engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <sstream>

#include "cta/arc.hpp"
#include "cta/error.hpp"

namespace cta::engine {

namespace {

constexpr double kPi = std::numbers::pi;

Range empty_range() { return Range::open(ExtRational(Rational(0)), ExtRational(Rational(0))); }

bool is_all(const Range& r) { return r == Range::all(); }

// Complement of a range that is empty, everything, or unbounded on one side.
Range complement(const Range& r) {
  if (r.empty()) return Range::all();
  if (is_all(r)) return empty_range();
  if (r.lo.is_neg_inf()) return Range{r.hi, !r.hi_in, ExtRational::pos_inf(), false};
  if (r.hi.is_pos_inf()) return Range{ExtRational::neg_inf(), false, r.lo, !r.lo_in};
  throw Error(ErrorCode::Domain, "complement of a bounded range " + r.str());
}

std::optional<Rational> parameter_of(const Family& f, const Interval& m) {
  switch (f.kind) {
    case Family::Kind::LeftRay: {
      bool closed = f.style == RayStyle::Closed;
      if (m.lo().is_neg_inf() && m.hi().is_finite() && m.hi_in() == closed) return m.hi().value();
      return std::nullopt;
    }
    case Family::Kind::RightRay: {
      bool closed = f.style == RayStyle::Closed;
      if (m.hi().is_pos_inf() && m.lo().is_finite() && m.lo_in() == closed) return m.lo().value();
      return std::nullopt;
    }
    case Family::Kind::SingletonRange:
      if (m.is_singleton()) return m.lo().value();
      return std::nullopt;
    default:
      throw Error(ErrorCode::Unsupported, "channel families must be rays or singletons");
  }
}

Interval member_of(const Family& f, const Rational& x) {
  bool closed = f.style == RayStyle::Closed;
  switch (f.kind) {
    case Family::Kind::LeftRay:
      return Interval(ExtRational::neg_inf(), false, x, closed);
    case Family::Kind::RightRay:
      return Interval(x, closed, ExtRational::pos_inf(), false);
    case Family::Kind::SingletonRange:
      return Interval::singleton(x);
    default:
      throw Error(ErrorCode::Unsupported, "channel families must be rays or singletons");
  }
}

// Forward (non-inverted) evaluation.
ClusterRep forward_cluster(const ContinuousSchedule& s, double t, bool inclusive) {
  ClusterRep c = s.fixed;
  for (const auto& ch : s.channels) {
    if (ch.kind == Channel::Kind::Single) {
      bool moved = inclusive ? ch.at <= t : ch.at < t;
      c.explicit_members.insert(moved ? ch.y : ch.x);
      continue;
    }
    Range in_r = ch.clock.swapped(t, inclusive);
    Range out_r = complement(in_r);
    if (!out_r.empty()) c.families.push_back(restrict_family(ch.out, out_r));
    if (!in_r.empty()) c.families.push_back(restrict_family(ch.in, in_r));
  }
  return c;
}

Step forward_step(const ContinuousSchedule& s, double t) {
  for (const auto& ch : s.channels) {
    if (ch.kind == Channel::Kind::Single) {
      if (ch.at == t) return Step{false, ch.x, ch.y};
      continue;
    }
    if (ch.clock.in_image(t)) {
      Rational x = ch.clock.frontier(t);
      return Step{false, ch.member_out(x), ch.member_in(x)};
    }
  }
  return Step{};
}

std::optional<double> forward_f(const ContinuousSchedule& s, const Interval& m) {
  for (const auto& ch : s.channels) {
    if (ch.kind == Channel::Kind::Single) {
      if (m == ch.x) return ch.at;
    } else if (auto p = ch.parameter_out(m)) {
      return ch.clock.time(*p);
    }
  }
  return std::nullopt;
}

std::optional<double> forward_g(const ContinuousSchedule& s, const Interval& m) {
  for (const auto& ch : s.channels) {
    if (ch.kind == Channel::Kind::Single) {
      if (m == ch.y) return ch.at;
    } else if (auto p = ch.parameter_in(m)) {
      return ch.clock.time(*p);
    }
  }
  return std::nullopt;
}

std::vector<Interval> endpoint_probes(Universe u) { return random_probes(u, 200, 0x5eed, 4, 3); }

}  // namespace

// ---- Clock

double Clock::time(const Rational& x) const { return c + slope * std::atan(x.get_d()) / kPi; }

double Clock::image_lo() const { return c - std::fabs(slope) / 2; }
double Clock::image_hi() const { return c + std::fabs(slope) / 2; }

Rational Clock::frontier(double t) const {
  if (!in_image(t)) throw Error(ErrorCode::Domain, "time outside the clock image");
  // Round-off in tan is far below 1e-12; snapping recovers values like tan(pi/4) = 1.
  double x = std::tan(kPi * (t - c) / slope);
  return simplest_rational_near(x, 1e-12 * std::max(1.0, std::fabs(x)));
}

Range Clock::swapped(double t, bool inclusive) const {
  if (t <= image_lo()) return empty_range();
  if (t >= image_hi()) return Range::all();
  ExtRational x(frontier(t));
  // Decreasing clock: time < t iff x > X. Increasing: time < t iff x < X.
  if (slope < 0) return Range{x, inclusive, ExtRational::pos_inf(), false};
  return Range{ExtRational::neg_inf(), false, x, inclusive};
}

std::string Clock::str() const {
  std::ostringstream os;
  os << c << (slope < 0 ? " - " : " + ") << std::fabs(slope) << " atan(x)/pi";
  return os.str();
}

// ---- Channel

Channel Channel::family(Family out, Family in, Clock clock) {
  Channel ch;
  ch.kind = Kind::Family;
  ch.out = std::move(out);
  ch.in = std::move(in);
  ch.clock = clock;
  return ch;
}

Channel Channel::single(Interval x, Interval y, double at) {
  if (!(0.0 < at && at < 1.0)) throw Error(ErrorCode::Domain, "exchange time must lie in (0,1)");
  Channel ch;
  ch.kind = Kind::Single;
  ch.x = std::move(x);
  ch.y = std::move(y);
  ch.at = at;
  return ch;
}

std::optional<Rational> Channel::parameter_out(const Interval& m) const {
  if (kind == Kind::Single) return std::nullopt;
  auto p = parameter_of(out, m);
  if (p && out.excluded.count(m)) return std::nullopt;
  return p;
}

std::optional<Rational> Channel::parameter_in(const Interval& m) const {
  if (kind == Kind::Single) return std::nullopt;
  auto p = parameter_of(in, m);
  if (p && in.excluded.count(m)) return std::nullopt;
  return p;
}

Interval Channel::member_out(const Rational& x) const { return member_of(out, x); }
Interval Channel::member_in(const Rational& x) const { return member_of(in, x); }

Family restrict_family(const Family& f, const Range& r) {
  Family g = f;
  g.range = r;
  return g;
}

std::string Step::str() const { return trivial ? "TRIVIAL" : "MUTATION(" + x.str() + ", " + y.str() + ")"; }

// ---- ContinuousSchedule

ClusterRep ContinuousSchedule::source() const { return cluster_at(*this, 0.0, false); }
ClusterRep ContinuousSchedule::target() const { return cluster_at(*this, 1.0, true); }

std::optional<double> ContinuousSchedule::f(const Interval& m) const {
  if (!inverted) return forward_f(*this, m);
  auto g = forward_g(*this, m);
  return g ? std::optional<double>(1.0 - *g) : std::nullopt;
}

std::optional<double> ContinuousSchedule::g(const Interval& m) const {
  if (!inverted) return forward_g(*this, m);
  auto f = forward_f(*this, m);
  return f ? std::optional<double>(1.0 - *f) : std::nullopt;
}

std::optional<Interval> ContinuousSchedule::partner(const Interval& m) const {
  for (const auto& ch : channels) {
    if (ch.kind == Channel::Kind::Single) {
      if (!inverted && m == ch.x) return ch.y;
      if (inverted && m == ch.y) return ch.x;
      continue;
    }
    if (!inverted) {
      if (auto p = ch.parameter_out(m)) return ch.member_in(*p);
    } else {
      if (auto p = ch.parameter_in(m)) return ch.member_out(*p);
    }
  }
  return std::nullopt;
}

ClusterRep cluster_at(const ContinuousSchedule& s, double t, bool inclusive) {
  if (!(0.0 <= t && t <= 1.0)) throw Error(ErrorCode::Domain, "time outside [0,1]");
  if (s.inverted) return forward_cluster(s, 1.0 - t, !inclusive);
  return forward_cluster(s, t, inclusive);
}

Step step_at(const ContinuousSchedule& s, double t) {
  if (!(0.0 <= t && t <= 1.0)) throw Error(ErrorCode::Domain, "time outside [0,1]");
  if (!s.inverted) return forward_step(s, t);
  Step st = forward_step(s, 1.0 - t);
  std::swap(st.x, st.y);
  return st;
}

ContinuousSchedule invert(const ContinuousSchedule& s) {
  ContinuousSchedule r = s;
  r.inverted = !s.inverted;
  r.name = s.name.ends_with("^-1") ? s.name.substr(0, s.name.size() - 3) : s.name + "^-1";
  return r;
}

ContinuousSchedule single_exchange(const ClusterRep& c, const Interval& x, const Interval& y) {
  if (!c.member(x)) throw Error(ErrorCode::NotFound, x.str() + " is not a member");
  ContinuousSchedule s;
  s.name = "exchange " + x.str() + " -> " + y.str();
  s.fixed = c.without(x);
  s.channels.push_back(Channel::single(x, y, 0.5));
  return s;
}

ClusterRep proj_cluster() {
  ClusterRep c(Quiver::straight());
  c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  c.families.push_back(Family::left_ray(RayStyle::Open, Range::all()));
  c.families.push_back(Family::left_ray(RayStyle::Closed, Range::all()));
  return c;
}

ClusterRep middle_cluster() {
  ClusterRep c(Quiver::straight());
  c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  c.families.push_back(Family::right_ray(RayStyle::Closed, Range::all()));
  c.families.push_back(Family::singleton_range(Range::all()));
  return c;
}

ClusterRep inj_cluster() {
  ClusterRep c(Quiver::straight());
  c.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  c.families.push_back(Family::right_ray(RayStyle::Closed, Range::all()));
  c.families.push_back(Family::right_ray(RayStyle::Open, Range::all()));
  return c;
}

std::pair<ContinuousSchedule, ContinuousSchedule> proj_to_inj_schedules() {
  ContinuousSchedule mu1;
  mu1.name = "mu1";
  mu1.fixed = ClusterRep(Quiver::straight());
  mu1.fixed.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  mu1.channels.push_back(Channel::family(Family::left_ray(RayStyle::Open, Range::all()),
                                         Family::singleton_range(Range::all()), Clock::falling(0.25)));
  mu1.channels.push_back(Channel::family(Family::left_ray(RayStyle::Closed, Range::all()),
                                         Family::right_ray(RayStyle::Closed, Range::all()), Clock::falling(0.75)));

  ContinuousSchedule mu2;
  mu2.name = "mu2";
  mu2.fixed = ClusterRep(Quiver::straight());
  mu2.fixed.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  mu2.fixed.families.push_back(Family::right_ray(RayStyle::Closed, Range::all()));
  mu2.channels.push_back(Channel::family(Family::singleton_range(Range::all()),
                                         Family::right_ray(RayStyle::Open, Range::all()), Clock::rising()));
  return {mu1, mu2};
}

ContinuousSchedule level_curve_schedule() {
  ContinuousSchedule s;
  s.name = "level curves";
  s.fixed = ClusterRep(Quiver::straight());
  s.fixed.explicit_members.insert(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  s.fixed.families.push_back(Family::singleton_range(Range::all()));
  s.channels.push_back(Channel::family(Family::left_ray(RayStyle::Closed, Range::all()),
                                       Family::right_ray(RayStyle::Closed, Range::all()), Clock::reversing()));
  return s;
}

// ---- TimeWarp

TimeWarp::Point TimeWarp::at(double s) const {
  if (!(0.0 < s && s < 1.0)) throw Error(ErrorCode::Domain, "warp parameter outside (0,1)");
  if (!(0.0 < epsilon && epsilon < 0.5)) throw Error(ErrorCode::Domain, "epsilon outside (0,1/2)");
  auto a_of = [](long i) { return std::atan(static_cast<double>(i)) / kPi + 0.5; };
  long i = static_cast<long>(std::floor(std::tan(kPi * (s - 0.5))));
  while (a_of(i) > s) --i;
  while (a_of(i + 1) <= s) ++i;
  Point p;
  p.i = i;
  p.a = a_of(i);
  p.b = a_of(i + 1);
  double lo = (1 - epsilon) * p.a + epsilon * p.b;
  double hi = epsilon * p.a + (1 - epsilon) * p.b;
  if (s <= lo)
    p.t = 0.0;
  else if (s > hi)
    p.t = 1.0;
  else
    p.t = (s - lo) / ((1 - 2 * epsilon) * (p.b - p.a));
  return p;
}

// ---- Paths

MutationPath schedule_path(const ContinuousSchedule& s) {
  MutationPath p;
  p.name = s.name;
  p.eval = [s](double t, int tier) { return cluster_at(s, std::clamp(t, 0.0, 1.0), tier == 1); };
  p.step = [s](double t) { return step_at(s, std::clamp(t, 0.0, 1.0)); };
  return p;
}

MutationPath const_path(const ClusterRep& c) {
  MutationPath p;
  p.name = "const";
  p.eval = [c](double, int) { return c; };
  p.step = [](double) { return Step{}; };
  return p;
}

MutationPath path_from_long_sequence(const std::vector<ContinuousSchedule>& seq, const TimeWarp& warp) {
  if (seq.empty()) throw Error(ErrorCode::Domain, "empty mutation sequence");
  for (size_t k = 0; k + 1 < seq.size(); ++k) {
    ClusterRep tgt = seq[k].target();
    if (auto d = membership_difference(tgt, seq[k + 1].source(), endpoint_probes(tgt.universe)))
      throw Error(ErrorCode::ChainMismatch,
                  seq[k].name + " ends and " + seq[k + 1].name + " starts differently at " + d->str());
  }
  MutationPath p;
  p.name = seq.front().name;
  for (size_t k = 1; k < seq.size(); ++k) p.name += " . " + seq[k].name;
  auto first = seq.front().source();
  auto last = seq.back().target();
  long count = static_cast<long>(seq.size());
  p.eval = [seq, warp, first, last, count](double s, int tier) -> ClusterRep {
    if (s <= 0.0) return first;
    if (s >= 1.0) return last;
    auto w = warp.at(s);
    if (w.i < 0) return first;
    if (w.i >= count) return last;
    return cluster_at(seq[static_cast<size_t>(w.i)], w.t, tier == 1);
  };
  p.step = [seq, warp, count](double s) -> Step {
    if (s <= 0.0 || s >= 1.0) return Step{};
    auto w = warp.at(s);
    if (w.i < 0 || w.i >= count) return Step{};
    return step_at(seq[static_cast<size_t>(w.i)], w.t);
  };
  return p;
}

MutationPath compose_paths(const MutationPath& p1, const MutationPath& p2) {
  ClusterRep e = p1.end();
  if (auto d = membership_difference(e, p2.start(), endpoint_probes(e.universe)))
    throw Error(ErrorCode::EndpointMismatch, p1.name + " ends and " + p2.name + " starts differently at " + d->str());
  MutationPath p;
  p.name = "(" + p1.name + ") * (" + p2.name + ")";
  p.eval = [p1, p2](double s, int tier) { return s <= 0.5 ? p1(2 * s, tier) : p2(2 * s - 1, tier); };
  p.step = [p1, p2](double s) { return s <= 0.5 ? p1.step(2 * s) : p2.step(2 * s - 1); };
  return p;
}

MutationPath invert_path(const MutationPath& p) {
  MutationPath r;
  r.name = "(" + p.name + ")^-1";
  r.eval = [p](double s, int tier) { return p(1.0 - s, 1 - tier); };
  r.step = [p](double s) {
    Step st = p.step(1.0 - s);
    std::swap(st.x, st.y);
    return st;
  };
  return r;
}

// ---- Verification

std::vector<Interval> schedule_probes(const ContinuousSchedule& s, double t, size_t random_count, std::uint64_t seed) {
  std::vector<Interval> probes = random_probes(s.fixed.universe, random_count, seed, 4, 3);
  double ft = s.inverted ? 1.0 - t : t;
  const Rational nudge(1, 1024);
  for (const auto& ch : s.channels) {
    if (ch.kind == Channel::Kind::Single) {
      probes.push_back(ch.x);
      probes.push_back(ch.y);
      continue;
    }
    if (!ch.clock.in_image(ft)) continue;
    Rational x0 = ch.clock.frontier(ft);
    for (const Rational& x : {Rational(x0 - nudge), x0, Rational(x0 + nudge)}) {
      probes.push_back(Interval::singleton(x));
      for (bool in : {false, true}) {
        probes.push_back(Interval(ExtRational::neg_inf(), false, x, in));
        probes.push_back(Interval(x, in, ExtRational::pos_inf(), false));
      }
    }
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

StepCheck verify_step(const ClusterRep& before, const ClusterRep& after, const ClusterRep& source, const Step& st,
                      const std::vector<Interval>& probes) {
  if (st.trivial) {
    if (auto d = membership_difference(before, after, probes)) return {false, "trivial step changes " + d->str()};
    return {};
  }
  const Quiver& q = before.quiver;
  if (e_compatible(q, st.x, st.y)) return {false, st.x.str() + " and " + st.y.str() + " are compatible"};
  if (!before.member(st.x)) return {false, st.x.str() + " not in the cluster before"};
  if (before.member(st.y)) return {false, st.y.str() + " already in the cluster before"};
  if (source.member(st.y)) return {false, st.y.str() + " lies in the source"};
  if (after.member(st.x) || !after.member(st.y)) return {false, "exchange not reflected after the step"};
  for (const auto& p : probes) {
    if (p == st.x || p == st.y) continue;
    if (before.member(p) != after.member(p)) return {false, "bystander " + p.str() + " changes"};
  }
  if (auto c = after.conflict(st.y)) return {false, st.y.str() + " conflicts with " + *c};
  return {};
}

PrefixCheck verify_prefix(const ClusterRep& c, const std::vector<Interval>& probes, size_t pairs, std::uint64_t seed) {
  auto internal = check_internal(c);
  if (!internal.ok) return {false, "internal: " + internal.witness};
  auto members = sample_members(c, 2 * pairs, seed);
  for (size_t k = 0; k + 1 < members.size(); k += 2) {
    if (!e_compatible(c.quiver, members[k], members[k + 1]))
      return {false, "sampled pair " + members[k].str() + ", " + members[k + 1].str() + " incompatible"};
  }
  if (auto p = probe_failure(c, probes)) return {false, "not maximal at " + p->str()};
  return {};
}

// ---- Reachability

std::string ReachabilityReport::str() const {
  std::ostringstream os;
  os << "n=" << n << " nodes=" << nodes << " connected=" << (connected ? "yes" : "no") << " diameter=" << diameter
     << " witness=" << witness_flips.size() << " flips";
  return os.str();
}

ReachabilityReport reachability_demo(const ExchangeGraph& g) {
  ReachabilityReport r;
  r.n = g.n;
  r.nodes = g.nodes.size();
  r.connected = true;
  size_t from = 0, to = 0;
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    auto dist = g.distances(v);
    for (size_t w = 0; w < dist.size(); ++w) {
      if (dist[w] == SIZE_MAX) {
        r.connected = false;
      } else if (dist[w] > r.diameter) {
        r.diameter = dist[w];
        from = v;
        to = w;
      }
    }
  }
  if (g.nodes.empty()) return r;
  // Shortest flip sequence between a pair realizing the diameter.
  std::vector<size_t> parent(g.nodes.size(), SIZE_MAX);
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    for (size_t w : g.adjacency[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<size_t> chain;
  for (size_t v = to; v != SIZE_MAX; v = parent[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    for (const auto& d : g.nodes[chain[k]].explicit_part()) {
      if (!g.nodes[chain[k + 1]].contains(d)) {
        r.witness_flips.push_back(d);
        break;
      }
    }
  }
  return r;
}

}  // namespace cta::engine
