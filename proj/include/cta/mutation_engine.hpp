#ifndef CTA_MUTATION_ENGINE_HPP
#define CTA_MUTATION_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cta/cluster_rep.hpp"
#include "cta/gon.hpp"

namespace cta::engine {

// A strictly monotone time parametrization x -> c + slope * atan(x)/pi of a
// one-parameter family, with image (c - |slope|/2, c + |slope|/2) inside (0,1).
// The frontier at time t is the double inverse converted exactly to a rational; the
// clock is taken to hit t at that rational, which fixes the split point uniquely.
struct Clock {
  double c = 0.5;
  double slope = 1.0;

  // c - atan(x)/(2 pi)
  static Clock falling(double c) { return {c, -0.5}; }
  // atan(x)/pi + 1/2
  static Clock rising() { return {0.5, 1.0}; }
  // 1/2 - atan(x)/pi, an order reversing bijection onto (0,1)
  static Clock reversing() { return {0.5, -1.0}; }

  double time(const Rational& x) const;
  double image_lo() const;
  double image_hi() const;
  bool in_image(double t) const { return image_lo() < t && t < image_hi(); }
  Rational frontier(double t) const;  // requires in_image(t)
  // Parameters x with time(x) < t, or <= t when inclusive.
  Range swapped(double t, bool inclusive) const;
  std::string str() const;
};

// Out-family members are exchanged one by one for in-family members of the same parameter.
// Families are parametrized by their finite endpoint (rays) or their point (singletons).
// A Single channel exchanges the explicit pair (x, y) at time `at`.
struct Channel {
  enum class Kind { Family, Single };
  Kind kind = Kind::Family;
  Family out, in;
  Clock clock;
  Interval x = Interval::singleton(0), y = Interval::singleton(0);
  double at = 0.5;

  static Channel family(Family out, Family in, Clock clock);
  static Channel single(Interval x, Interval y, double at);

  std::optional<Rational> parameter_out(const Interval& m) const;
  std::optional<Rational> parameter_in(const Interval& m) const;
  Interval member_out(const Rational& x) const;
  Interval member_in(const Rational& x) const;
};

// Swap the out-range of a parametrized family for `r`.
Family restrict_family(const Family& f, const Range& r);

struct Step {
  bool trivial = true;
  Interval x = Interval::singleton(0), y = Interval::singleton(0);
  std::string str() const;
};

// A continuous mutation: fixed members plus channels. Inversion is recorded as a flag
// and resolved by time reflection.
struct ContinuousSchedule {
  std::string name;
  ClusterRep fixed;
  std::vector<Channel> channels;
  bool inverted = false;

  ClusterRep source() const;
  ClusterRep target() const;
  // f: time at which a source member leaves; g: time at which a target member arrives.
  std::optional<double> f(const Interval& m) const;
  std::optional<double> g(const Interval& m) const;
  // The pairing S -> S' on members that move.
  std::optional<Interval> partner(const Interval& m) const;
};

// (T \ f^-1(J)) u g^-1(J) with J = [0,t) or [0,t].
ClusterRep cluster_at(const ContinuousSchedule& s, double t, bool inclusive);
Step step_at(const ContinuousSchedule& s, double t);
ContinuousSchedule invert(const ContinuousSchedule& s);
// A discrete exchange of x for y in c, performed at time 1/2.
ContinuousSchedule single_exchange(const ClusterRep& c, const Interval& x, const Interval& y);

ClusterRep proj_cluster();
ClusterRep middle_cluster();
ClusterRep inj_cluster();
// mu1: Proj -> T2 (open rays at 1/4 - atan(x)/(2 pi), closed rays at 3/4 - atan(x)/(2 pi));
// mu2: T2 -> Inj (singletons at atan(x)/pi + 1/2).
std::pair<ContinuousSchedule, ContinuousSchedule> proj_to_inj_schedules();
// {(-inf,x], {x}} u {(-inf,+inf)} -> {[x,+inf), {x}} u {(-inf,+inf)}, exchanging
// (-inf,x] for [x,+inf) at 1/2 - atan(x)/pi; the level-curve animation.
ContinuousSchedule level_curve_schedule();

struct TimeWarp {
  double epsilon = 0.1;
  struct Point {
    long i = 0;
    double a = 0, b = 0, t = 0;
  };
  // i_s with atan(i)/pi + 1/2 <= s < atan(i+1)/pi + 1/2, and the ramp time t_s; s in (0,1).
  Point at(double s) const;
};

// s in [0,1], tier 0 or 1; (s,0) -> (s,1) is a possibly-trivial mutation.
struct MutationPath {
  std::string name;
  std::function<ClusterRep(double, int)> eval;
  std::function<Step(double)> step;

  ClusterRep operator()(double s, int tier) const { return eval(s, tier); }
  ClusterRep start() const { return eval(0.0, 0); }
  ClusterRep end() const { return eval(1.0, 1); }
};

MutationPath schedule_path(const ContinuousSchedule& s);
MutationPath const_path(const ClusterRep& c);
// Schedule k runs on the segment of index i_s = k; earlier s sit at the first source,
// later s at the last target. CHAIN_MISMATCH when a target and the next source differ.
MutationPath path_from_long_sequence(const std::vector<ContinuousSchedule>& seq, const TimeWarp& warp = {});
// ENDPOINT_MISMATCH when p1's end and p2's start differ on the probes.
MutationPath compose_paths(const MutationPath& p1, const MutationPath& p2);
MutationPath invert_path(const MutationPath& p);

// Probes for schedule checks: random intervals plus the ray/singleton shapes at the
// frontier points of each channel at time t.
std::vector<Interval> schedule_probes(const ContinuousSchedule& s, double t, size_t random_count, std::uint64_t seed);

struct StepCheck {
  bool ok = true;
  std::string witness;
};
// x and y incompatible, x in the tier-0 cluster, y not in it and not in the source,
// tier-1 cluster = tier-0 with x replaced by y on the probes, y compatible with the result.
StepCheck verify_step(const ClusterRep& before, const ClusterRep& after, const ClusterRep& source, const Step& st,
                      const std::vector<Interval>& probes);

struct PrefixCheck {
  bool ok = true;
  std::string witness;
};
// Closed-form internal check, `pairs` sampled member pairs, and probe maximality.
PrefixCheck verify_prefix(const ClusterRep& c, const std::vector<Interval>& probes, size_t pairs, std::uint64_t seed);

struct ReachabilityReport {
  int n = 0;
  size_t nodes = 0;
  bool connected = false;
  size_t diameter = 0;
  // Shortest flip sequence between two nodes at distance `diameter`.
  std::vector<Diagonal> witness_flips;
  std::string str() const;
};
ReachabilityReport reachability_demo(const ExchangeGraph& g);

}  // namespace cta::engine

#endif
