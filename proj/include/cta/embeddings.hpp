#ifndef CTA_EMBEDDINGS_HPP
#define CTA_EMBEDDINGS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cta/cluster_rep.hpp"
#include "cta/gon.hpp"

// Embedding functors between the type-A cluster theories, with the default
// anchor sequence of cta::anchors. Polygon and infinity-gon diagonals i~j go to
// the open interval (a_i, a_j) on the real side and (i, j) on the C_pi side.
namespace cta::embed {

// Open interval between the images of the two vertices; sentinels map to the anchor limits.
Interval diagonal_image(const Diagonal& d, Coord c = Coord::Anchor);

// Base clusters.
ClusterRep build_T_infinity();
ClusterRep build_T_n(int n);
// C_pi side, stored by C_C coordinates in the OpenIntervals universe.
ClusterRep build_T_pi();

// Combinatorial arrows.
GonTriangulation F_m_to_m1(const GonTriangulation& t);
GonTriangulation F_m_to_n(const GonTriangulation& t, int n);
GonTriangulation F_n_to_inf(const GonTriangulation& t);
GonTriangulation F_inf_to_infbar(const GonTriangulation& t);

// Arrows into the continuous theories.
ClusterRep F_n_to_R(const GonTriangulation& t);
ClusterRep F_inf_to_R(const GonTriangulation& t);
ClusterRep F_infbar_to_R(const GonTriangulation& t);
ClusterRep F_infbar_to_pi(const GonTriangulation& t);

// Structure-preserving chain.
GonTriangulation G_m_to_m1(const GonTriangulation& t);
GonTriangulation G_m_to_n(const GonTriangulation& t, int n);
// Shift applied to polygon vertices by G_n^inf: (n+4)/2 for even n, (n+3)/2 for odd n.
long G_shift(int n);
GonTriangulation G_n_to_inf(const GonTriangulation& t);
ClusterRep G_inf_to_pi(const GonTriangulation& t);

// The composite through C_pi: members of the C_pi image, plus every object outside
// the C_pi universe that is compatible with all of them.
bool pi_composite_member(const ClusterRep& pi_side, const Interval& m);

// Probe arcs for extensional comparison: anchor, integer and dyadic endpoints with all flags, plus random arcs.
std::vector<Interval> embedding_probes(size_t random_count, std::uint64_t seed);

struct LegResult {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct CommutativityReport {
  std::string fixture;
  std::vector<LegResult> legs;
  bool ok() const;
  std::string str() const;
};

// Membership comparison of two clusters on the probes.
LegResult compare_reps(const std::string& name, const ClusterRep& a, const ClusterRep& b,
                       const std::vector<Interval>& probes);

// Every leg of both diagrams for a polygon triangulation t of the (m+3)-gon and a target n > m.
CommutativityReport check_commutativity(const GonTriangulation& t, int n, const std::vector<Interval>& probes);
// Legs C and D for an infinity-gon triangulation.
CommutativityReport check_commutativity_infinite(const GonTriangulation& t, const std::vector<Interval>& probes);
// Throws MISMATCH naming the first failing leg and its witness.
void require_commutes(const CommutativityReport& r);

}  // namespace cta::embed

#endif
