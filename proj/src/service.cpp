#include "gale/service.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "gale/io.hpp"
#include "gale/reductions.hpp"
#include "gale/verifier.hpp"

namespace gale {

namespace {

std::vector<std::string> split_path(const std::string& path)
{
  std::vector<std::string> parts;
  std::string p = path.substr(0, path.find('?'));
  std::stringstream ss(p);
  std::string item;
  while (std::getline(ss, item, '/'))
    if (!item.empty())
      parts.push_back(item);
  return parts;
}

nlohmann::json error_body(const std::string& code, const std::string& message, const std::string& detail)
{
  return {{"code", code}, {"message", message}, {"detail", detail}};
}

nlohmann::json faces_json(const Complex& x, const std::vector<Face>& list)
{
  nlohmann::json out = nlohmann::json::array();
  for (Face f : list)
    out.push_back(face_to_json(x, f));
  return out;
}

std::string player_name(char p)
{
  return std::string(1, p);
}

}  // namespace

GameService::GameService(SolveOptions options, std::shared_ptr<TranspositionTable> table)
  : solver_(options, table ? std::move(table) : std::make_shared<TranspositionTable>())
{
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id)
{
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end())
    throw ServiceError(404, "unknown-session", "no game with id '" + id + "'");
  return it->second;
}

nlohmann::json GameService::describe(const GameSession& s) const
{
  nlohmann::json history = nlohmann::json::array();
  for (const auto& ply : s.history)
    history.push_back({{"player", player_name(ply.player)}, {"face", face_to_json(ply.before, ply.face)}});

  nlohmann::json j = {
    {"id", s.id},
    {"status", s.finished() ? "finished" : "in-progress"},
    {"winner", s.finished() ? nlohmann::json(player_name(s.winner())) : nlohmann::json(nullptr)},
    {"toMove", player_name(s.to_move)},
    {"policy", std::string(to_string(s.policy))},
    {"initial", to_json(s.initial, s.name)},
    {"position", to_json(s.current)},
    {"moves", faces_json(s.current, faces(s.current))},
    {"history", std::move(history)},
  };
  return j;
}

nlohmann::json GameService::create_game(const nlohmann::json& request)
{
  if (!request.is_object())
    throw ServiceError(400, "bad-request", "request body must be a JSON object");

  GameSession s;
  try {
    if (request.contains("preset")) {
      if (!request["preset"].is_string())
        throw InputError("\"preset\" must be a string");
      const Preset p = preset(request["preset"].get<std::string>());
      s.name = p.name;
      s.initial = p.complex;
    } else if (request.contains("facets")) {
      NamedComplex nc = complex_from_json(request);
      s.name = nc.name;
      s.initial = nc.complex;
    } else {
      throw InputError("expected \"preset\" or \"facets\"");
    }
  } catch (const CapacityError& e) {
    throw ServiceError(400, "capacity", "position exceeds vertex capacity", e.what());
  } catch (const Error& e) {
    throw ServiceError(400, "bad-request", "cannot build position", e.what());
  }

  if (request.contains("policy")) {
    auto policy = request["policy"].is_string() ? parse_move_policy(request["policy"].get<std::string>())
                                                : std::nullopt;
    if (!policy)
      throw ServiceError(400, "bad-request", "unknown policy", "expected \"stall\" or \"first-winning\"");
    s.policy = *policy;
  }
  s.current = s.initial;

  auto entry = std::make_shared<Entry>();
  {
    std::lock_guard lock(sessions_mutex_);
    s.id = "g" + std::to_string(next_id_++);
    entry->session = std::move(s);
    sessions_[entry->session.id] = entry;
  }
  std::lock_guard lock(entry->mutex);
  return describe(entry->session);
}

nlohmann::json GameService::get_game(const std::string& id)
{
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return describe(entry->session);
}

nlohmann::json GameService::apply_move(const std::string& id, const nlohmann::json& request)
{
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  GameSession& s = entry->session;
  if (s.finished())
    throw ServiceError(409, "game-finished", "the game is over");
  if (!request.is_object() || !request.contains("face"))
    throw ServiceError(400, "bad-request", "expected {\"face\": [names...]}");

  Face face;
  try {
    face = face_from_json(s.current, request["face"]);
  } catch (const IllegalMove& e) {
    throw ServiceError(409, "illegal-move", "illegal move " + request["face"].dump(), e.what());
  } catch (const Error& e) {
    throw ServiceError(400, "bad-request", "malformed face", e.what());
  }
  if (!s.current.contains(face))
    throw ServiceError(409, "illegal-move", "illegal move " + request["face"].dump(),
                       s.current.describe(face) + " is not a face of the position");

  s.history.push_back({s.to_move, face, s.current});
  s.current = delete_cofaces(s.current, face);
  s.to_move = s.to_move == 'A' ? 'B' : 'A';
  return describe(s);
}

nlohmann::json GameService::engine_move(const std::string& id)
{
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  GameSession& s = entry->session;
  if (s.finished())
    throw ServiceError(409, "game-finished", "the game is over");

  // Answer away from the opponent's last move when that still wins;
  // pairing strategies tend to look like this.
  std::optional<Face> move;
  if (!s.history.empty()) {
    const auto last = s.history.back().before.names_of(s.history.back().face);
    for (Face f : solver_.winning_moves(s.current)) {
      const auto names = s.current.names_of(f);
      const bool disjoint = std::none_of(names.begin(), names.end(), [&](const std::string& v) {
        return std::find(last.begin(), last.end(), v) != last.end();
      });
      if (disjoint) {
        move = f;
        break;
      }
    }
  }
  if (!move)
    move = solver_.best_move(s.current, s.policy);
  const Face face = *move;
  nlohmann::json played = face_to_json(s.current, face);
  s.history.push_back({s.to_move, face, s.current});
  s.current = delete_cofaces(s.current, face);
  s.to_move = s.to_move == 'A' ? 'B' : 'A';
  return {{"face", std::move(played)}, {"game", describe(s)}};
}

nlohmann::json GameService::undo(const std::string& id)
{
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  GameSession& s = entry->session;
  if (s.history.empty())
    throw ServiceError(409, "nothing-to-undo", "no moves to undo");
  s.current = s.history.back().before;
  s.to_move = s.history.back().player;
  s.history.pop_back();
  return describe(s);
}

nlohmann::json GameService::analysis(const std::string& id)
{
  auto entry = find(id);
  Complex position;
  {
    std::lock_guard lock(entry->mutex);
    position = entry->session.current;
  }

  const GrundyValue g = solver_.grundy(position);
  const auto wins = solver_.winning_moves(position);
  nlohmann::json moves = nlohmann::json::array();
  for (Face f : faces(position)) {
    const bool winning = std::find(wins.begin(), wins.end(), f) != wins.end();
    moves.push_back({{"face", face_to_json(position, f)}, {"tag", winning ? "winning" : "losing"}});
  }
  nlohmann::json stars = nlohmann::json::array();
  for (const BinaryStar& b : find_binary_stars(position))
    stars.push_back({position.name(b.x), position.name(b.y)});

  return {
    {"value", std::string(to_string(classify(g)))},
    {"grundy", g},
    {"winningMoves", faces_json(position, wins)},
    {"binaryStars", std::move(stars)},
    {"moves", std::move(moves)},
  };
}

nlohmann::json GameService::presets() const
{
  nlohmann::json list = nlohmann::json::array();
  for (const auto& token : preset_catalog()) {
    const Preset p = preset(token);
    list.push_back({{"name", p.name},
                    {"expected", std::string(to_string(p.expected))},
                    {"citation", p.citation},
                    {"complex", to_json(p.complex)}});
  }
  return {{"presets", std::move(list)}};
}

nlohmann::json GameService::health()
{
  auto& table = solver_.table();
  return {{"status", "ok"},
          {"table",
           {{"entries", table.size()},
            {"hits", table.hits()},
            {"misses", table.misses()},
            {"loaded", cache_entries_loaded_}}}};
}

nlohmann::json GameService::snapshot() const
{
  std::vector<std::shared_ptr<Entry>> entries;
  {
    std::lock_guard lock(sessions_mutex_);
    for (const auto& [id, e] : sessions_)
      entries.push_back(e);
  }
  nlohmann::json games = nlohmann::json::array();
  for (const auto& e : entries) {
    std::lock_guard lock(e->mutex);
    games.push_back(describe(e->session));
  }
  return {{"games", std::move(games)}};
}

void GameService::save_snapshot(const std::filesystem::path& path) const
{
  std::ofstream os(path);
  if (!os)
    throw Error("cannot write snapshot " + path.string());
  os << snapshot().dump(2) << '\n';
}

HttpResponse GameService::handle(const std::string& method, const std::string& path, const std::string& body)
{
  try {
    const auto parts = split_path(path);
    auto parse_body = [&]() -> nlohmann::json {
      if (body.empty())
        return nlohmann::json::object();
      try {
        return nlohmann::json::parse(body);
      } catch (const nlohmann::json::parse_error& e) {
        throw ServiceError(400, "bad-request", "request body is not valid JSON", e.what());
      }
    };

    if (method == "GET" && parts == std::vector<std::string>{"health"})
      return {200, health()};
    if (method == "GET" && parts == std::vector<std::string>{"presets"})
      return {200, presets()};
    if (!parts.empty() && parts[0] == "games") {
      if (parts.size() == 1 && method == "POST")
        return {201, create_game(parse_body())};
      if (parts.size() == 2 && method == "GET")
        return {200, get_game(parts[1])};
      if (parts.size() == 3 && method == "POST" && parts[2] == "move")
        return {200, apply_move(parts[1], parse_body())};
      if (parts.size() == 3 && method == "POST" && parts[2] == "engine-move")
        return {200, engine_move(parts[1])};
      if (parts.size() == 3 && method == "POST" && parts[2] == "undo")
        return {200, undo(parts[1])};
      if (parts.size() == 3 && method == "GET" && parts[2] == "analysis")
        return {200, analysis(parts[1])};
    }
    throw ServiceError(404, "not-found", "no route for " + method + " " + path);
  } catch (const ServiceError& e) {
    return {e.status(), error_body(e.code(), e.what(), e.detail())};
  } catch (const CapacityError& e) {
    return {422, error_body("capacity", "solver capacity exceeded", e.what())};
  } catch (const std::exception& e) {
    return {500, error_body("internal", "internal error", e.what())};
  }
}

void GameService::bind(httplib::Server& server)
{
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/.*)", forward);
  server.Post(R"(/.*)", forward);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

}  // namespace gale
