#ifndef CTA_CLUSTER_REP_HPP
#define CTA_CLUSTER_REP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cta/family.hpp"
#include "cta/interval.hpp"
#include "cta/quiver.hpp"

namespace cta {

// Which indecomposables a cluster competes against. OpenIntervals models the
// C_pi side, whose objects are open (a,b) with -inf <= a < b < +inf.
enum class Universe { Full, OpenIntervals };

bool in_universe(Universe u, const Interval& m);

// A finitely described, possibly uncountable, compatible set: explicit members plus families.
class ClusterRep {
 public:
  Quiver quiver = Quiver::straight();
  Universe universe = Universe::Full;
  std::set<Interval> explicit_members;
  std::vector<Family> families;

  ClusterRep() = default;
  explicit ClusterRep(Quiver q, Universe u = Universe::Full) : quiver(std::move(q)), universe(u) {}

  bool member(const Interval& m) const;
  // Some member other than m that is incompatible with m, described; nullopt if none.
  std::optional<std::string> conflict(const Interval& m) const;
  bool compatible_with_all(const Interval& m) const { return !conflict(m); }

  // Adds m, re-admitting it to a family that excludes it when possible.
  ClusterRep with(const Interval& m) const;
  // Removes m from the explicit part or excludes it from its family.
  ClusterRep without(const Interval& m) const;
  // Moves a family member into the explicit part.
  ClusterRep promote(const Interval& m) const;

  std::string str() const;
  friend bool operator==(const ClusterRep&, const ClusterRep&) = default;
};

struct InternalCheck {
  bool ok = true;
  std::string witness;
};

// Pairwise compatibility: explicit pairs exactly, explicit against families by the
// closed-form deciders, families against families by representatives.
InternalCheck check_internal(const ClusterRep& c);

// First probe that is neither a member nor incompatible with some member.
std::optional<Interval> probe_failure(const ClusterRep& c, const std::vector<Interval>& probes);
bool probe_maximal(const ClusterRep& c, const std::vector<Interval>& probes);

using CandidateGenerator = std::function<std::vector<Interval>(const ClusterRep&, const Interval&)>;

// Endpoints from which candidate partners of x are assembled: x's ends, the far ends of
// explicit members sharing an end with x, family refinements near x, and the infinities.
std::vector<ExtRational> mutation_points(const ClusterRep& c, const Interval& x);
// Every interval of the universe with endpoints in pts and any membership flags.
std::vector<Interval> intervals_on(const std::vector<ExtRational>& pts, Universe u);
std::vector<Interval> default_candidates(const ClusterRep& c, const Interval& x);

struct MutationResult {
  ClusterRep cluster;
  Interval y;
};

// Exchanges x (promoted first if it is a family member) for the unique candidate y that is
// incompatible with x, compatible with the rest, and leaves the result maximal on the candidates.
// FROZEN without such y, AMBIGUOUS with several.
MutationResult mutate(const ClusterRep& c, const Interval& x, const CandidateGenerator& gen = default_candidates);

// Random intervals with endpoints k/2^depth in [-radius, radius], infinities, and random flags.
std::vector<Interval> random_probes(Universe u, size_t count, std::uint64_t seed, long radius = 4, unsigned depth = 3);
// Random members: explicit ones and family samples.
std::vector<Interval> sample_members(const ClusterRep& c, size_t count, std::uint64_t seed);
// First probe on which membership differs.
std::optional<Interval> membership_difference(const ClusterRep& a, const ClusterRep& b, const std::vector<Interval>& probes);

}  // namespace cta

#endif
