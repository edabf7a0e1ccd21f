#ifndef CTA_QUIVER_HPP
#define CTA_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "cta/rational.hpp"

namespace cta {

enum class MarkerKind { Sink, Source };
enum class Direction { Descending, Ascending };

struct Marker {
  Rational pos;
  MarkerKind kind;
};

// Where a point sits: on slot n (a marker or an infinity slot) or strictly inside segment (s_n, s_{n+1}).
struct Location {
  bool on_slot;
  long n;
  friend bool operator==(const Location&, const Location&) = default;
};

// Continuous type-A quiver on the extended line.
//
// Slots are -inf, the markers in increasing order, then +inf. Slot indices are
// consecutive; a slot is sink-like iff its index is even. Without markers the
// quiver is straight and the direction fixes which infinity is the sink.
class Quiver {
 public:
  static Quiver straight(Direction d = Direction::Descending);
  // Throws INVALID_QUIVER unless the merged markers are distinct and alternate.
  static Quiver from_markers(std::vector<Rational> sinks, std::vector<Rational> sources);

  bool is_straight() const { return markers_.empty(); }
  Direction direction() const { return direction_; }
  const std::vector<Marker>& markers() const { return markers_; }

  long neg_slot() const { return first_ - 1; }
  long pos_slot() const { return first_ + static_cast<long>(markers_.size()); }
  // Precondition: neg_slot() <= n <= pos_slot().
  ExtRational slot_position(long n) const;
  bool slot_is_sink(long n) const;
  std::optional<long> slot_at(const ExtRational& x) const;

  // Segment |s_n, s_{n+1}| exists for neg_slot() <= n < pos_slot().
  bool has_segment(long n) const { return n >= neg_slot() && n < pos_slot(); }
  Location locate(const ExtRational& x) const;

  // y precedes x: a path of the quiver runs from x down to y.
  bool precede(const ExtRational& y, const ExtRational& x) const;
  // Closed hull of the down set of x as [lo, hi].
  std::pair<ExtRational, ExtRational> down_hull(const ExtRational& x) const;

  Quiver reversed() const;
  Quiver mirrored() const;

  std::string describe() const;
  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<Marker> markers_;
  Direction direction_ = Direction::Descending;
  long first_ = 1;  // index of markers_[0], or of the +inf slot when straight
  void canonicalize_offset();
};

}  // namespace cta

#endif
