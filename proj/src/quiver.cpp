#include "cta/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cta/error.hpp"

namespace cta {

namespace {

long floor_mod2(long v) { return ((v % 2) + 2) % 2; }

}  // namespace

Quiver Quiver::straight(Direction d) {
  Quiver q;
  q.direction_ = d;
  q.canonicalize_offset();
  return q;
}

Quiver Quiver::from_markers(std::vector<Rational> sinks, std::vector<Rational> sources) {
  Quiver q;
  for (auto& s : sinks) q.markers_.push_back({s, MarkerKind::Sink});
  for (auto& s : sources) q.markers_.push_back({s, MarkerKind::Source});
  std::sort(q.markers_.begin(), q.markers_.end(), [](const Marker& a, const Marker& b) { return a.pos < b.pos; });
  for (size_t i = 1; i < q.markers_.size(); ++i) {
    if (q.markers_[i].pos == q.markers_[i - 1].pos)
      throw Error(ErrorCode::InvalidQuiver, "duplicate marker at " + format_rational(q.markers_[i].pos));
    if (q.markers_[i].kind == q.markers_[i - 1].kind)
      throw Error(ErrorCode::InvalidQuiver, "markers do not alternate near " + format_rational(q.markers_[i].pos));
  }
  q.canonicalize_offset();
  return q;
}

// Index 0 goes to the sink-parity slot closest to the origin; ties prefer the nonnegative side.
void Quiver::canonicalize_offset() {
  const long k = static_cast<long>(markers_.size());
  // Parity of list position p (0 = -inf slot) that makes the slot sink-like.
  long sink_parity;
  if (k == 0)
    sink_parity = direction_ == Direction::Descending ? 0 : 1;
  else
    sink_parity = floor_mod2(1 + (markers_[0].kind == MarkerKind::Sink ? 0 : 1));
  long best = -1;
  for (long p = 0; p <= k + 1; ++p) {
    if (floor_mod2(p) != sink_parity) continue;
    if (best < 0) {
      best = p;
      continue;
    }
    auto key = [&](long pp) -> std::pair<int, Rational> {
      if (pp == 0 || pp == k + 1) return {1, Rational(0)};
      return {0, abs(markers_[pp - 1].pos)};
    };
    auto a = key(p), b = key(best);
    bool better = a.first < b.first || (a.first == b.first && a.second < b.second);
    bool tie = a.first == b.first && a.second == b.second;
    // A later slot on a tie sits on the nonnegative side.
    if (better || tie) best = p;
  }
  first_ = 1 - best;
}

ExtRational Quiver::slot_position(long n) const {
  if (n == neg_slot()) return ExtRational::neg_inf();
  if (n == pos_slot()) return ExtRational::pos_inf();
  if (n < neg_slot() || n > pos_slot()) throw Error(ErrorCode::Domain, "slot index out of range");
  return ExtRational(markers_[static_cast<size_t>(n - first_)].pos);
}

bool Quiver::slot_is_sink(long n) const { return floor_mod2(n) == 0; }

std::optional<long> Quiver::slot_at(const ExtRational& x) const {
  if (x.is_neg_inf()) return neg_slot();
  if (x.is_pos_inf()) return pos_slot();
  auto it = std::lower_bound(markers_.begin(), markers_.end(), x.value(),
                             [](const Marker& m, const Rational& v) { return m.pos < v; });
  if (it != markers_.end() && it->pos == x.value()) return first_ + static_cast<long>(it - markers_.begin());
  return std::nullopt;
}

Location Quiver::locate(const ExtRational& x) const {
  if (auto s = slot_at(x)) return {true, *s};
  const Rational& v = x.value();
  auto it = std::lower_bound(markers_.begin(), markers_.end(), v,
                             [](const Marker& m, const Rational& val) { return m.pos < val; });
  // x lies strictly between slot (first_ + idx - 1) and slot (first_ + idx).
  return {false, first_ + static_cast<long>(it - markers_.begin()) - 1};
}

std::pair<ExtRational, ExtRational> Quiver::down_hull(const ExtRational& x) const {
  Location loc = locate(x);
  if (loc.on_slot) {
    if (slot_is_sink(loc.n)) return {x, x};
    ExtRational lo = loc.n > neg_slot() ? slot_position(loc.n - 1) : x;
    ExtRational hi = loc.n < pos_slot() ? slot_position(loc.n + 1) : x;
    return {lo, hi};
  }
  if (slot_is_sink(loc.n)) return {slot_position(loc.n), x};
  return {x, slot_position(loc.n + 1)};
}

bool Quiver::precede(const ExtRational& y, const ExtRational& x) const {
  auto [lo, hi] = down_hull(x);
  return lo <= y && y <= hi;
}

Quiver Quiver::reversed() const {
  if (is_straight())
    return straight(direction_ == Direction::Descending ? Direction::Ascending : Direction::Descending);
  std::vector<Rational> sinks, sources;
  for (const auto& m : markers_) (m.kind == MarkerKind::Sink ? sources : sinks).push_back(m.pos);
  return from_markers(sinks, sources);
}

Quiver Quiver::mirrored() const {
  if (is_straight())
    return straight(direction_ == Direction::Descending ? Direction::Ascending : Direction::Descending);
  std::vector<Rational> sinks, sources;
  for (const auto& m : markers_) (m.kind == MarkerKind::Sink ? sinks : sources).push_back(Rational(-m.pos));
  return from_markers(sinks, sources);
}

std::string Quiver::describe() const {
  std::ostringstream os;
  if (is_straight()) {
    os << "straight " << (direction_ == Direction::Descending ? "descending" : "ascending");
    return os.str();
  }
  for (long n = neg_slot(); n <= pos_slot(); ++n) {
    if (n != neg_slot()) os << ' ';
    os << "s" << n << "=" << slot_position(n).str() << (slot_is_sink(n) ? "(sink)" : "(source)");
  }
  return os.str();
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.markers_.size() != b.markers_.size() || a.first_ != b.first_) return false;
  if (a.is_straight()) return a.direction_ == b.direction_;
  for (size_t i = 0; i < a.markers_.size(); ++i)
    if (a.markers_[i].pos != b.markers_[i].pos || a.markers_[i].kind != b.markers_[i].kind) return false;
  return true;
}

}  // namespace cta
