#pragma once

// Session-based game service.
//
// Routes (bodies are JSON):
//   GET  /health                    status and solver table statistics
//   GET  /presets                   the preset catalog
//   POST /games                     {"preset": token} or {"facets": [...]}, optional "policy"
//   GET  /games/{id}                session state
//   POST /games/{id}/move           {"face": ["1","4"]}
//   POST /games/{id}/engine-move    engine plays under the session policy
//   POST /games/{id}/undo           pops one ply
//   GET  /games/{id}/analysis       value, grundy, winning moves, binary stars
// Errors carry {"code", "message", "detail"}.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gale/complex.hpp"
#include "gale/solver.hpp"

namespace httplib {
class Server;
}

namespace gale {

struct GameSession
{
  struct Ply
  {
    char player = 'A';
    Face face;
    Complex before;
  };

  std::string id;
  std::optional<std::string> name;
  Complex initial;
  Complex current;
  std::vector<Ply> history;
  char to_move = 'A';
  MovePolicy policy = MovePolicy::Stall;

  bool finished() const { return current.empty(); }
  /// The player who cannot move loses; meaningful once finished.
  char winner() const { return to_move == 'A' ? 'B' : 'A'; }
};

struct HttpResponse
{
  int status = 200;
  nlohmann::json body;
};

class GameService
{
public:
  explicit GameService(SolveOptions options = {}, std::shared_ptr<TranspositionTable> table = nullptr);

  HttpResponse handle(const std::string& method, const std::string& path, const std::string& body);

  /// Registers every route on an httplib server.
  void bind(httplib::Server& server);

  Solver& solver() { return solver_; }
  /// Reported by /health so clients can tell a warm cache from a cold one.
  void set_cache_entries_loaded(std::size_t n) { cache_entries_loaded_ = n; }

  nlohmann::json snapshot() const;
  void save_snapshot(const std::filesystem::path& path) const;

  // Typed operations behind the routes.
  nlohmann::json create_game(const nlohmann::json& request);
  nlohmann::json get_game(const std::string& id);
  nlohmann::json apply_move(const std::string& id, const nlohmann::json& request);
  nlohmann::json engine_move(const std::string& id);
  nlohmann::json undo(const std::string& id);
  nlohmann::json analysis(const std::string& id);
  nlohmann::json presets() const;
  nlohmann::json health();

private:
  struct Entry
  {
    std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id);
  nlohmann::json describe(const GameSession& s) const;

  Solver solver_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
  std::size_t cache_entries_loaded_ = 0;
};

/// Error raised by service operations; maps onto an HTTP status.
class ServiceError : public Error
{
public:
  ServiceError(int status, std::string code, std::string message, std::string detail = {})
    : Error(message), status_(status), code_(std::move(code)), detail_(std::move(detail))
  {
  }

  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }

private:
  int status_;
  std::string code_;
  std::string detail_;
};

}  // namespace gale
