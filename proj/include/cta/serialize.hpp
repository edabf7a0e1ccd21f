#ifndef CTA_SERIALIZE_HPP
#define CTA_SERIALIZE_HPP

#include <string>

#include "cta/arc.hpp"
#include "cta/cluster_rep.hpp"
#include "cta/gon.hpp"
#include "json.hpp"

namespace cta::io {

using Json = nlohmann::json;

// Rationals are "p/q" strings; infinities are "-inf" / "+inf".
// Every reader throws PARSE on malformed input.

Json to_json(const Rational& q);
Json to_json(const ExtRational& x);
Json to_json(const Quiver& q);
Json to_json(const Interval& m);
Json to_json(const Endpoint& e);
Json to_json(const Arc& a);
Json to_json(const Range& r);
Json to_json(const Family& f);
Json to_json(const Diagonal& d);
Json to_json(const Tail& t);
Json to_json(const GonTriangulation& t);
// Explicit members in interval order, families in descriptor order.
Json to_json(const ClusterRep& c);

Rational rational_from_json(const Json& j);
ExtRational ext_from_json(const Json& j);
Quiver quiver_from_json(const Json& j);
Interval interval_from_json(const Json& j);
Endpoint endpoint_from_json(const Json& j);
Arc arc_from_json(const Json& j);
Range range_from_json(const Json& j);
Family family_from_json(const Json& j);
Diagonal diagonal_from_json(const Json& j);
Tail tail_from_json(const Json& j);
GonTriangulation gon_from_json(const Json& j);
ClusterRep cluster_from_json(const Json& j);

// Sorted keys, no whitespace: byte-equal for equal values.
std::string canonical(const Json& j);

}  // namespace cta::io

#endif
