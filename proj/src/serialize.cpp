#include "cta/serialize.hpp"

#include <climits>

#include "cta/error.hpp"

namespace cta::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long long_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

// Index bounds: integers, or "-inf" / "+inf" for the unbounded sentinels.
Json bound_json(long b) {
  if (b == LONG_MIN) return "-inf";
  if (b == LONG_MAX) return "+inf";
  return b;
}

long bound_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j == "-inf") return LONG_MIN;
  if (j == "+inf") return LONG_MAX;
  bad("bad index bound " + j.dump());
}

const char* style_name(RayStyle s) { return s == RayStyle::Open ? "open" : "closed"; }
RayStyle style_from(const std::string& s) {
  if (s == "open") return RayStyle::Open;
  if (s == "closed") return RayStyle::Closed;
  bad("bad ray style " + s);
}

const char* coord_name(Coord c) { return c == Coord::Integer ? "integer" : "anchor"; }
Coord coord_from(const std::string& s) {
  if (s == "integer") return Coord::Integer;
  if (s == "anchor") return Coord::Anchor;
  bad("bad coordinate " + s);
}

const char* kind_name(Family::Kind k) {
  switch (k) {
    case Family::Kind::DyadicTiling: return "dyadic_tiling";
    case Family::Kind::SingletonComplement: return "singleton_complement";
    case Family::Kind::SingletonRange: return "singleton_range";
    case Family::Kind::LeftRay: return "left_ray";
    case Family::Kind::RightRay: return "right_ray";
    case Family::Kind::GapTilings: return "gap_tilings";
    case Family::Kind::GapComplements: return "gap_complements";
    case Family::Kind::IntegerRays: return "integer_rays";
    case Family::Kind::DiagonalImages: return "diagonal_images";
  }
  return "?";
}

template <class T, class F>
T wrap(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    bad(e.what());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }
Json to_json(const ExtRational& x) { return x.str(); }

Json to_json(const Quiver& q) {
  Json markers = Json::array();
  for (const auto& m : q.markers())
    markers.push_back({{"pos", to_json(m.pos)}, {"kind", m.kind == MarkerKind::Sink ? "sink" : "source"}});
  return {{"markers", markers}, {"direction", q.direction() == Direction::Descending ? "descending" : "ascending"}};
}

Json to_json(const Interval& m) { return m.str(); }

Json to_json(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return {{"kind", "neg_inf"}};
    case Endpoint::Kind::PosInf: return {{"kind", "pos_inf"}};
    case Endpoint::Kind::Point:
      return {{"kind", "point"}, {"x", to_json(e.x)}, {"side", e.side == Sign::Minus ? "-" : "+"}};
    case Endpoint::Kind::Segment:
      return {{"kind", "segment"}, {"n", e.n}, {"side", e.side == Sign::Minus ? "-" : "+"}};
  }
  return nullptr;
}

Json to_json(const Arc& a) { return {{"e1", to_json(a.a)}, {"e2", to_json(a.b)}}; }

Json to_json(const Range& r) {
  return {{"lo", to_json(r.lo)}, {"lo_in", r.lo_in}, {"hi", to_json(r.hi)}, {"hi_in", r.hi_in}};
}

Json to_json(const Family& f) {
  Json j = {{"kind", kind_name(f.kind)}};
  switch (f.kind) {
    case Family::Kind::DyadicTiling:
    case Family::Kind::SingletonComplement:
      j["l"] = to_json(f.l);
      j["r"] = to_json(f.r);
      break;
    case Family::Kind::SingletonRange:
      j["range"] = to_json(f.range);
      break;
    case Family::Kind::LeftRay:
    case Family::Kind::RightRay:
      j["style"] = style_name(f.style);
      j["range"] = to_json(f.range);
      break;
    case Family::Kind::GapTilings:
    case Family::Kind::GapComplements:
      j["coord"] = coord_name(f.coord);
      j["first"] = bound_json(f.first);
      j["last"] = bound_json(f.last);
      break;
    case Family::Kind::IntegerRays:
      j["style"] = style_name(f.style);
      j["first"] = bound_json(f.first);
      j["last"] = bound_json(f.last);
      break;
    case Family::Kind::DiagonalImages:
      j["tail"] = to_json(f.tail);
      j["coord"] = coord_name(f.coord);
      break;
  }
  Json ex = Json::array();
  for (const auto& m : f.excluded) ex.push_back(to_json(m));
  j["excluded"] = ex;
  return j;
}

Json to_json(const Diagonal& d) { return Json::array({bound_json(d.i), bound_json(d.j)}); }

Json to_json(const Tail& t) {
  if (t.kind == Tail::Kind::Zigzag) return {{"kind", "zigzag"}, {"start", t.start}};
  return {{"kind", "fan"}, {"v", t.v}, {"side", t.side == TailSide::Left ? "left" : "right"}, {"start", t.start}};
}

Json to_json(const GonTriangulation& t) {
  Json diags = Json::array();
  for (const auto& d : t.explicit_part()) diags.push_back(to_json(d));
  switch (t.arena()) {
    case Arena::Finite: return {{"arena", "finite"}, {"n", t.n()}, {"diagonals", diags}};
    case Arena::Infinite:
    case Arena::Completed: {
      Json tails = Json::array();
      for (const auto& tl : t.tails()) tails.push_back(to_json(tl));
      return {{"arena", t.arena() == Arena::Infinite ? "infinite" : "completed"}, {"diagonals", diags}, {"tails", tails}};
    }
  }
  return nullptr;
}

Json to_json(const ClusterRep& c) {
  Json members = Json::array();
  for (const auto& m : c.explicit_members) members.push_back(to_json(m));
  Json fams = Json::array();
  for (const auto& f : c.families) fams.push_back(to_json(f));
  return {{"quiver", to_json(c.quiver)},
          {"universe", c.universe == Universe::Full ? "full" : "open_intervals"},
          {"members", members},
          {"families", fams}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational must be a string, got " + j.dump());
  return wrap<Rational>([&] { return parse_rational(j.get<std::string>()); });
}

ExtRational ext_from_json(const Json& j) {
  if (!j.is_string()) bad("extended rational must be a string, got " + j.dump());
  return wrap<ExtRational>([&] { return ExtRational::parse(j.get<std::string>()); });
}

Quiver quiver_from_json(const Json& j) {
  return wrap<Quiver>([&] {
    std::vector<Rational> sinks, sources;
    const Json& markers = j.contains("markers") ? j.at("markers") : Json::array();
    if (!markers.is_array()) bad("markers must be an array");
    for (const auto& m : markers) {
      Rational pos = rational_from_json(field(m, "pos"));
      std::string kind = str_field(m, "kind");
      if (kind == "sink")
        sinks.push_back(pos);
      else if (kind == "source")
        sources.push_back(pos);
      else
        bad("marker kind must be sink or source");
    }
    if (sinks.empty() && sources.empty()) {
      std::string dir = j.contains("direction") ? str_field(j, "direction") : "descending";
      if (dir == "descending") return Quiver::straight(Direction::Descending);
      if (dir == "ascending") return Quiver::straight(Direction::Ascending);
      bad("direction must be descending or ascending");
    }
    return Quiver::from_markers(sinks, sources);
  });
}

Interval interval_from_json(const Json& j) {
  if (!j.is_string()) bad("interval must be a string such as \"[0,1)\"");
  return wrap<Interval>([&] { return Interval::parse(j.get<std::string>()); });
}

Endpoint endpoint_from_json(const Json& j) {
  return wrap<Endpoint>([&] {
    std::string kind = str_field(j, "kind");
    if (kind == "neg_inf") return Endpoint::neg_inf();
    if (kind == "pos_inf") return Endpoint::pos_inf();
    std::string side = str_field(j, "side");
    if (side != "-" && side != "+") bad("side must be - or +");
    Sign s = side == "-" ? Sign::Minus : Sign::Plus;
    if (kind == "point") return Endpoint::point(rational_from_json(field(j, "x")), s);
    if (kind == "segment") return Endpoint::segment(long_field(j, "n"), s);
    bad("bad endpoint kind " + kind);
  });
}

Arc arc_from_json(const Json& j) {
  return wrap<Arc>([&] { return Arc(endpoint_from_json(field(j, "e1")), endpoint_from_json(field(j, "e2"))); });
}

Range range_from_json(const Json& j) {
  return Range{ext_from_json(field(j, "lo")), bool_field(j, "lo_in"), ext_from_json(field(j, "hi")),
               bool_field(j, "hi_in")};
}

Family family_from_json(const Json& j) {
  return wrap<Family>([&] {
    std::string kind = str_field(j, "kind");
    Family f;
    if (kind == "dyadic_tiling")
      f = Family::dyadic_tiling(rational_from_json(field(j, "l")), rational_from_json(field(j, "r")));
    else if (kind == "singleton_complement")
      f = Family::singleton_complement(rational_from_json(field(j, "l")), rational_from_json(field(j, "r")));
    else if (kind == "singleton_range")
      f = Family::singleton_range(range_from_json(field(j, "range")));
    else if (kind == "left_ray")
      f = Family::left_ray(style_from(str_field(j, "style")), range_from_json(field(j, "range")));
    else if (kind == "right_ray")
      f = Family::right_ray(style_from(str_field(j, "style")), range_from_json(field(j, "range")));
    else if (kind == "gap_tilings")
      f = Family::gap_tilings(coord_from(str_field(j, "coord")), bound_from_json(field(j, "first")),
                              bound_from_json(field(j, "last")));
    else if (kind == "gap_complements")
      f = Family::gap_complements(coord_from(str_field(j, "coord")), bound_from_json(field(j, "first")),
                                  bound_from_json(field(j, "last")));
    else if (kind == "integer_rays")
      f = Family::integer_rays(style_from(str_field(j, "style")), bound_from_json(field(j, "first")),
                               bound_from_json(field(j, "last")));
    else if (kind == "diagonal_images")
      f = Family::diagonal_images(tail_from_json(field(j, "tail")), coord_from(str_field(j, "coord")));
    else
      bad("bad family kind " + kind);
    if (j.contains("excluded")) {
      if (!j.at("excluded").is_array()) bad("excluded must be an array");
      for (const auto& m : j.at("excluded")) f.excluded.insert(interval_from_json(m));
    }
    return f;
  });
}

Diagonal diagonal_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("diagonal must be a pair [i, j]");
  return Diagonal{bound_from_json(j[0]), bound_from_json(j[1])};
}

Tail tail_from_json(const Json& j) {
  std::string kind = str_field(j, "kind");
  if (kind == "zigzag") return Tail::zigzag(long_field(j, "start"));
  if (kind != "fan") bad("tail kind must be fan or zigzag");
  std::string side = str_field(j, "side");
  if (side != "left" && side != "right") bad("fan side must be left or right");
  return Tail::fan(long_field(j, "v"), side == "left" ? TailSide::Left : TailSide::Right, long_field(j, "start"));
}

GonTriangulation gon_from_json(const Json& j) {
  return wrap<GonTriangulation>([&] {
    std::string arena = str_field(j, "arena");
    std::vector<Diagonal> diags;
    const Json& ds = field(j, "diagonals");
    if (!ds.is_array()) bad("diagonals must be an array");
    for (const auto& d : ds) diags.push_back(diagonal_from_json(d));
    if (arena == "finite") {
      long n = long_field(j, "n");
      if (n < 1 || n > 1000) bad("n must lie in 1..1000");
      return GonTriangulation::finite(static_cast<int>(n), diags);
    }
    std::vector<Tail> tails;
    if (j.contains("tails")) {
      if (!j.at("tails").is_array()) bad("tails must be an array");
      for (const auto& t : j.at("tails")) tails.push_back(tail_from_json(t));
    }
    if (arena == "infinite") return GonTriangulation::infinite(diags, tails);
    if (arena == "completed") return GonTriangulation::completed(diags, tails);
    bad("arena must be finite, infinite or completed");
  });
}

ClusterRep cluster_from_json(const Json& j) {
  return wrap<ClusterRep>([&] {
    Quiver q = j.contains("quiver") ? quiver_from_json(j.at("quiver")) : Quiver::straight();
    Universe u = Universe::Full;
    if (j.contains("universe")) {
      std::string s = str_field(j, "universe");
      if (s == "open_intervals")
        u = Universe::OpenIntervals;
      else if (s != "full")
        bad("universe must be full or open_intervals");
    }
    ClusterRep c(q, u);
    if (j.contains("members")) {
      if (!j.at("members").is_array()) bad("members must be an array");
      for (const auto& m : j.at("members")) c.explicit_members.insert(interval_from_json(m));
    }
    if (j.contains("families")) {
      if (!j.at("families").is_array()) bad("families must be an array");
      for (const auto& f : j.at("families")) c.families.push_back(family_from_json(f));
    }
    return c;
  });
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace cta::io
