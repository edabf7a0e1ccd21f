#include "cta/service.hpp"

#include <algorithm>
#include <cstdio>

#include "cta/embeddings.hpp"
#include "cta/error.hpp"
#include "cta/render.hpp"
#include "httplib.h"

namespace cta::service {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Json layout_json(const render::Layout& L) {
  Json arcs = Json::array();
  for (const auto& a : L.arcs)
    arcs.push_back({{"id", a.id},
                    {"label", a.label},
                    {"role", a.role},
                    {"mutable", a.is_mutable},
                    {"x1", a.x1},
                    {"y1", a.y1},
                    {"x2", a.x2},
                    {"y2", a.y2},
                    {"d", a.d}});
  Json bands = Json::array();
  for (const auto& b : L.bands) bands.push_back({{"id", b.id}, {"label", b.label}, {"d", b.d}});
  Json marks = Json::array();
  for (const auto& m : L.marks) marks.push_back({{"label", m.label}, {"x", m.x}, {"y", m.y}});
  return {{"kind", L.kind}, {"width", L.width}, {"height", L.height}, {"boundary", L.boundary},
          {"arcs", arcs},   {"bands", bands},   {"marks", marks}};
}

render::Layout layout_of(const State& s) {
  if (const auto* c = std::get_if<ClusterRep>(&s)) return render::layout_cluster(*c);
  return render::layout_gon(std::get<GonTriangulation>(s));
}

long vertex_from_tag(const std::string& tag) {
  if (tag == "ninf") return kNegInfVertex;
  if (tag == "pinf") return kPosInfVertex;
  try {
    size_t used = 0;
    long v = std::stol(tag, &used);
    if (used == tag.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::NotFound, "unknown arc vertex " + tag);
}

Json history_json(const std::vector<HistoryEntry>& h) {
  Json out = Json::array();
  for (const auto& e : h) out.push_back({{"out", e.out}, {"in", e.in}});
  return out;
}

// Position of a polygon triangulation among all triangulations, for small n.
Json exchange_json(const GonTriangulation& t) {
  if (t.arena() != Arena::Finite || t.n() > 7) return nullptr;
  auto all = enumerate_triangulations(t.n());
  auto it = std::find(all.begin(), all.end(), t);
  return {{"nodes", all.size()}, {"node", it == all.end() ? -1 : static_cast<long>(it - all.begin())}};
}

Json session_json(const Session& s) {
  Json j = {{"id", s.id},
            {"state", state_json(s.current)},
            {"history", history_json(s.history)},
            {"layout", layout_json(layout_of(s.current))},
            {"path", s.path ? Json(s.path_name) : Json(nullptr)},
            {"cursor", s.cursor}};
  if (const auto* t = std::get_if<GonTriangulation>(&s.current)) j["exchange"] = exchange_json(*t);
  return j;
}

const Json& body_field(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key)) bad(std::string("request needs '") + key + "'");
  return body.at(key);
}

}  // namespace

State preset_state(const std::string& name, const Quiver& q) {
  auto straight_only = [&](ClusterRep c) -> State {
    if (!q.is_straight()) throw Error(ErrorCode::Domain, "preset " + name + " needs a straight quiver");
    return c;
  };
  if (name == "proj") return straight_only(engine::proj_cluster());
  if (name == "middle") return straight_only(engine::middle_cluster());
  if (name == "inj") return straight_only(engine::inj_cluster());
  if (name == "t_infinity") return straight_only(embed::build_T_infinity());
  if (name == "t_pi") return straight_only(embed::build_T_pi());
  if (name == "square") return GonTriangulation::finite(1, {{1, 3}});
  if (name == "pentagon") return GonTriangulation::finite(2, {{1, 3}, {1, 4}});
  if (name == "hexagon") return GonTriangulation::finite(3, {{1, 3}, {1, 4}, {1, 5}});
  if (name == "fan_gon")
    return GonTriangulation::infinite({}, {Tail::fan(0, TailSide::Left, -2), Tail::fan(0, TailSide::Right, 2)});
  if (name == "completed_gon")
    return embed::F_inf_to_infbar(
        GonTriangulation::infinite({}, {Tail::fan(0, TailSide::Left, -2), Tail::fan(0, TailSide::Right, 2)}));
  throw Error(ErrorCode::NotFound, "unknown preset " + name);
}

std::vector<std::string> SessionStore::presets() {
  return {"proj", "middle", "inj", "t_infinity", "t_pi", "square", "pentagon", "hexagon", "fan_gon", "completed_gon"};
}

std::vector<std::string> SessionStore::path_names() {
  return {"proj_to_inj", "long_sequence", "mu1", "mu2", "level_curves"};
}

engine::MutationPath named_path(const std::string& name) {
  auto [mu1, mu2] = engine::proj_to_inj_schedules();
  if (name == "proj_to_inj") return engine::compose_paths(engine::schedule_path(mu1), engine::schedule_path(mu2));
  if (name == "long_sequence") return engine::path_from_long_sequence({mu1, mu2});
  if (name == "mu1") return engine::schedule_path(mu1);
  if (name == "mu2") return engine::schedule_path(mu2);
  if (name == "level_curves") return engine::schedule_path(engine::level_curve_schedule());
  throw Error(ErrorCode::NotFound, "unknown path " + name);
}

Json state_json(const State& s) {
  if (const auto* c = std::get_if<ClusterRep>(&s)) return {{"kind", "cluster"}, {"cluster", io::to_json(*c)}};
  const auto& t = std::get<GonTriangulation>(s);
  return {{"kind", t.arena() == Arena::Finite ? "polygon" : "gon"}, {"triangulation", io::to_json(t)}};
}

Json arcs_json(const State& s) { return layout_json(layout_of(s))["arcs"]; }

int http_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::Frozen:
    case ErrorCode::Ambiguous:
    case ErrorCode::EndpointMismatch:
    case ErrorCode::ChainMismatch: return 409;
    case ErrorCode::Unsupported:
    case ErrorCode::LimitExceeded: return 422;
    default: return 400;
  }
}

Json error_json(const Error& e) { return {{"error", error_code_name(e.code())}, {"message", e.what()}}; }

SessionStore::SessionStore() : rng_(std::random_device{}()) {}

std::string SessionStore::fresh_id() {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
  return buf;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard<std::mutex> g(lock_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "unknown session " + id);
  return it->second;
}

size_t SessionStore::size() {
  std::lock_guard<std::mutex> g(lock_);
  return sessions_.size();
}

Json SessionStore::create(const Json& body) {
  if (!body.is_object()) bad("request body must be a JSON object");
  auto s = std::make_shared<Session>();
  if (body.contains("quiver")) s->quiver = io::quiver_from_json(body.at("quiver"));
  const Json& init = body_field(body, "initial");
  std::string default_path;
  if (init.is_string()) {
    std::string name = init.get<std::string>();
    s->initial = preset_state(name, s->quiver);
    if (name == "proj") default_path = "proj_to_inj";
  } else if (init.is_object() && init.contains("arena")) {
    s->initial = io::gon_from_json(init);
  } else if (init.is_object()) {
    ClusterRep c = io::cluster_from_json(init);
    if (!init.contains("quiver")) c.quiver = s->quiver;
    s->initial = c;
  } else {
    bad("initial must be a preset name, a cluster or a triangulation");
  }
  if (const auto* c = std::get_if<ClusterRep>(&s->initial)) s->quiver = c->quiver;
  std::string path = body.contains("path") ? body.at("path").get<std::string>() : default_path;
  if (!path.empty()) {
    s->path = named_path(path);
    s->path_name = path;
  }
  s->current = s->initial;

  std::lock_guard<std::mutex> g(lock_);
  do s->id = fresh_id();
  while (sessions_.count(s->id));
  sessions_[s->id] = s;
  return {{"id", s->id}};
}

Json SessionStore::cluster(const std::string& id) {
  auto s = find(id);
  std::lock_guard<std::mutex> g(s->lock);
  return session_json(*s);
}

Json SessionStore::mutables(const std::string& id) {
  auto s = find(id);
  std::lock_guard<std::mutex> g(s->lock);
  Json out = Json::array();
  for (const auto& a : layout_of(s->current).arcs)
    if (a.is_mutable) out.push_back({{"id", a.id}, {"label", a.label}});
  return {{"id", s->id}, {"mutables", out}};
}

Json SessionStore::mutate(const std::string& id, const Json& body) {
  auto s = find(id);
  const Json& arc = body_field(body, "arcId");
  if (!arc.is_string()) bad("arcId must be a string");
  std::string arc_id = arc.get<std::string>();

  std::lock_guard<std::mutex> g(s->lock);
  auto layout = layout_of(s->current);
  auto it = std::find_if(layout.arcs.begin(), layout.arcs.end(), [&](const auto& a) { return a.id == arc_id; });
  if (it == layout.arcs.end() || it->role == "old" || it->role == "new")
    throw Error(ErrorCode::NotFound, "unknown arc " + arc_id);

  State next;
  HistoryEntry entry;
  if (const auto* c = std::get_if<ClusterRep>(&s->current)) {
    Interval m = Interval::parse(it->label);
    auto r = cta::mutate(*c, m);
    next = r.cluster;
    entry = {m.str(), r.y.str()};
  } else {
    const auto& t = std::get<GonTriangulation>(s->current);
    size_t cut = arc_id.find('_');
    if (arc_id.size() < 2 || arc_id[0] != 'd' || cut == std::string::npos)
      throw Error(ErrorCode::NotFound, "unknown arc " + arc_id);
    Diagonal d{vertex_from_tag(arc_id.substr(1, cut - 1)), vertex_from_tag(arc_id.substr(cut + 1))};
    auto [t2, d2] = t.flip(d);
    next = t2;
    entry = {d.str(), d2.str()};
  }
  s->undo_stack.push_back(s->current);
  s->current = next;
  s->history.push_back(entry);
  Json j = session_json(*s);
  j["exchange"] = {{"out", entry.out}, {"in", entry.in}};
  return j;
}

Json SessionStore::seek(const std::string& id, const Json& body) {
  auto s = find(id);
  const Json& tj = body_field(body, "t");
  if (!tj.is_number()) bad("t must be a number");
  double t = tj.get<double>();
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::Domain, "t must lie in [0,1]");
  int tier = t > 0.0 ? 1 : 0;
  if (body.contains("tier")) {
    const Json& tr = body.at("tier");
    if (!tr.is_number_integer() || (tr != 0 && tr != 1)) bad("tier must be 0 or 1");
    tier = tr.get<int>();
  }
  std::lock_guard<std::mutex> g(s->lock);
  if (!s->path) throw Error(ErrorCode::Frozen, "session has no active path");
  ClusterRep frame = (*s->path)(t, tier);
  engine::Step step = s->path->step(t);
  s->cursor = t;
  render::Style st;
  st.mark_mutable = false;
  if (!step.trivial) st.highlight = std::pair{step.x, step.y};
  Json j = {{"id", s->id},
            {"path", s->path_name},
            {"t", t},
            {"tier", tier},
            {"state", state_json(frame)},
            {"layout", layout_json(render::layout_cluster(frame, st))}};
  j["step"] = step.trivial ? Json({{"kind", "trivial"}}) : Json({{"kind", "mutation"}, {"out", step.x.str()}, {"in", step.y.str()}});
  return j;
}

Json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard<std::mutex> g(s->lock);
  if (s->undo_stack.empty()) throw Error(ErrorCode::Frozen, "nothing to undo");
  s->current = s->undo_stack.back();
  s->undo_stack.pop_back();
  s->history.pop_back();
  return session_json(*s);
}

void install_routes(httplib::Server& server, SessionStore& store) {
  auto reply = [](httplib::Response& res, const std::function<Json()>& f) {
    try {
      res.set_content(f().dump(), "application/json");
      res.status = 200;
    } catch (const Error& e) {
      res.status = http_status(e.code());
      res.set_content(error_json(e).dump(), "application/json");
    } catch (const Json::exception& e) {
      res.status = 400;
      res.set_content(Json({{"error", "PARSE"}, {"message", e.what()}}).dump(), "application/json");
    }
  };
  auto parse_body = [](const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    try {
      return Json::parse(req.body);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
  };

  server.Post("/sessions", [&store, reply, parse_body](const httplib::Request& req, httplib::Response& res) {
    reply(res, [&] { return store.create(parse_body(req)); });
  });
  server.Get(R"(/sessions/([^/]+)/cluster)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, [&] { return store.cluster(req.matches[1]); });
  });
  server.Get(R"(/sessions/([^/]+)/mutables)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, [&] { return store.mutables(req.matches[1]); });
  });
  server.Post(R"(/sessions/([^/]+)/mutate)",
              [&store, reply, parse_body](const httplib::Request& req, httplib::Response& res) {
                reply(res, [&] { return store.mutate(req.matches[1], parse_body(req)); });
              });
  server.Post(R"(/sessions/([^/]+)/path/seek)",
              [&store, reply, parse_body](const httplib::Request& req, httplib::Response& res) {
                reply(res, [&] { return store.seek(req.matches[1], parse_body(req)); });
              });
  server.Post(R"(/sessions/([^/]+)/undo)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, [&] { return store.undo(req.matches[1]); });
  });
  server.Get("/presets", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, [] { return Json({{"presets", SessionStore::presets()}, {"paths", SessionStore::path_names()}}); });
  });
}

void serve(const std::string& host, int port) {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  if (!server.listen(host, port)) throw Error(ErrorCode::Domain, "cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace cta::service
