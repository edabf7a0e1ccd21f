#ifndef CTA_GON_HPP
#define CTA_GON_HPP

#include <climits>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cta {

constexpr long kNegInfVertex = LONG_MIN;
constexpr long kPosInfVertex = LONG_MAX;

// i < j; at most one end infinite. (NEG, POS) is the generic diagonal and is never a member.
struct Diagonal {
  long i = 0, j = 0;
  bool is_adic() const { return i == kNegInfVertex; }
  bool is_prufer() const { return j == kPosInfVertex; }
  std::string str() const;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline const Diagonal kGenericDiagonal{kNegInfVertex, kPosInfVertex};

bool diag_crossing(const Diagonal& a, const Diagonal& b);

enum class TailSide { Left, Right };

// FAN(v, Left, k0) = {k~v : k <= k0}; FAN(v, Right, k0) = {v~k : k >= k0};
// ZIGZAG(i0) = {-i~i : i >= i0} u {-i+1~i : i >= i0}.
struct Tail {
  enum class Kind { Fan, Zigzag };
  Kind kind = Kind::Fan;
  long v = 0;
  TailSide side = TailSide::Left;
  long start = 0;

  static Tail fan(long v, TailSide side, long start) { return {Kind::Fan, v, side, start}; }
  static Tail zigzag(long start) { return {Kind::Zigzag, 0, TailSide::Left, start}; }

  bool contains(const Diagonal& d) const;
  // Members whose crossing behaviour is representative of every member, relative to the given vertices.
  std::vector<Diagonal> representatives(const std::vector<long>& critical) const;
  bool crosses(const Diagonal& d) const;
  bool crosses(const Tail& other) const;
  std::vector<Diagonal> members_in_window(long radius) const;
  // Removes the first member(s) and returns them; the tail keeps the rest.
  std::vector<Diagonal> peel();
  std::vector<long> critical_vertices() const;
  std::string str() const;
  friend bool operator==(const Tail&, const Tail&) = default;
};

enum class Arena { Finite, Infinite, Completed };

struct FountainClass {
  bool locally_finite = true;
  long left = 0, right = 0;  // left fountain at `left`, right fountain at `right`
  std::string str() const;
};

class GonTriangulation {
 public:
  static GonTriangulation finite(int n, std::vector<Diagonal> diagonals);
  static GonTriangulation infinite(std::vector<Diagonal> diagonals, std::vector<Tail> tails);
  // Diagonals may end at the infinite vertices.
  static GonTriangulation completed(std::vector<Diagonal> diagonals, std::vector<Tail> tails);

  Arena arena() const { return arena_; }
  int n() const { return n_; }
  const std::set<Diagonal>& explicit_part() const { return explicit_; }
  const std::vector<Tail>& tails() const { return tails_; }

  bool valid_diagonal(const Diagonal& d) const;
  bool contains(const Diagonal& d) const;
  // d crosses some member other than `skip`.
  bool crosses_member(const Diagonal& d, const Diagonal* skip = nullptr) const;
  bool pairwise_noncrossing() const;
  std::vector<Diagonal> members_in_window(long radius) const;
  std::vector<Diagonal> window_diagonals(long radius) const;
  // Every valid diagonal of the window is a member or crosses one.
  bool maximal_on_window(long radius) const;

  std::pair<GonTriangulation, Diagonal> flip(const Diagonal& d) const;
  FountainClass classify_fountains() const;
  GonTriangulation adic_completion() const;
  GonTriangulation prufer_completion() const;
  GonTriangulation as_completed() const;

  size_t adic_count() const;
  size_t prufer_count() const;
  std::string str() const;

  // Vertices that matter for closed-form tail reasoning.
  std::vector<long> critical_vertices() const;
  friend bool same_on_window(const GonTriangulation& a, const GonTriangulation& b, long radius);
  friend bool operator==(const GonTriangulation& a, const GonTriangulation& b);

 private:
  Arena arena_ = Arena::Finite;
  int n_ = 0;
  std::set<Diagonal> explicit_;
  std::vector<Tail> tails_;
  void materialize(const Diagonal& d);
};

// All triangulations of the (n+3)-gon, sorted by diagonal set. LIMIT_EXCEEDED for n > 9.
std::vector<GonTriangulation> enumerate_triangulations(int n);

struct ExchangeGraph {
  int n = 0;
  std::vector<GonTriangulation> nodes;
  std::vector<std::vector<size_t>> adjacency;
  std::string dot() const;
  // Breadth-first distances from `from`; unreachable nodes get SIZE_MAX.
  std::vector<size_t> distances(size_t from) const;
};

ExchangeGraph exchange_graph(int n);

}  // namespace cta

#endif
