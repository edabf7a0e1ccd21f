#ifndef CTA_SERVICE_HPP
#define CTA_SERVICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cta/cluster_rep.hpp"
#include "cta/error.hpp"
#include "cta/gon.hpp"
#include "cta/mutation_engine.hpp"
#include "cta/serialize.hpp"

namespace httplib {
class Server;
}

namespace cta::service {

using io::Json;
using State = std::variant<ClusterRep, GonTriangulation>;

// One applied mutation: the arc exchanged and its replacement, as strings.
struct HistoryEntry {
  std::string out, in;
};

// Invariant: replaying `history` from `initial` yields `current`; `undo_stack`
// holds every earlier state in order, so undo is exact.
struct Session {
  std::string id;
  Quiver quiver = Quiver::straight();
  State initial, current;
  std::vector<HistoryEntry> history;
  std::vector<State> undo_stack;
  std::optional<engine::MutationPath> path;
  std::string path_name;
  double cursor = 0.0;
  std::mutex lock;
};

// HTTP-free core of the service. Every method throws cta::Error; http_status maps codes.
// Sessions are single-writer: each call holds the session's lock for its whole duration.
class SessionStore {
 public:
  SessionStore();

  // body: {"quiver": <quiver json>, "initial": <preset name | cluster json | triangulation json>,
  //        "path": <path name>}. Returns {"id": ...}.
  Json create(const Json& body);
  Json cluster(const std::string& id);
  Json mutables(const std::string& id);
  // body: {"arcId": ...}; FROZEN when the arc has no exchange partner.
  Json mutate(const std::string& id, const Json& body);
  // body: {"t": number in [0,1], "tier": 0|1 optional}
  Json seek(const std::string& id, const Json& body);
  Json undo(const std::string& id);
  size_t size();

  static std::vector<std::string> presets();
  static std::vector<std::string> path_names();

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string fresh_id();

  std::mutex lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
};

State preset_state(const std::string& name, const Quiver& q);
engine::MutationPath named_path(const std::string& name);
// Serialized state plus history; undo restores it byte for byte.
Json state_json(const State& s);
// Layout arcs with render coordinates and mutable flags.
Json arcs_json(const State& s);

int http_status(ErrorCode c);
Json error_json(const Error& e);

// Registers the session API on `server`, backed by `store`.
void install_routes(httplib::Server& server, SessionStore& store);
// Blocks serving on host:port.
void serve(const std::string& host, int port);

}  // namespace cta::service

#endif
