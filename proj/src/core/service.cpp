#include "service.hpp"

#include <vector>

#include "crossout.hpp"

namespace ethdinner {
namespace {

using Response = GameService::Response;

Response json_response(int status, const Json& j) { return Response{status, j.dump()}; }

Response error(int status, const std::string& message) { return json_response(status, Json{{"error", message}}); }

std::vector<std::string_view> split_path(std::string_view path) {
    if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
    std::vector<std::string_view> parts;
    while (!path.empty()) {
        while (!path.empty() && path.front() == '/') path.remove_prefix(1);
        if (path.empty()) break;
        auto slash = path.find('/');
        parts.push_back(path.substr(0, slash));
        if (slash == std::string_view::npos) break;
        path.remove_prefix(slash);
    }
    return parts;
}

const char* status_name(SessionStatus s) {
    switch (s) {
        case SessionStatus::awaiting_human: return "awaiting_human";
        case SessionStatus::awaiting_ai: return "awaiting_ai";
        case SessionStatus::finished: return "finished";
    }
    return "finished";
}

void eat(GameSession& s, MorselId id) {
    const Player mover = s.to_move();
    const Morsel m = s.remaining.by_id(id);
    s.transcript.moves.push_back(Move{s.transcript.moves.size() + 1, mover, m});
    (mover == Player::A ? s.transcript.score_A : s.transcript.score_B) += m.utility(mover);
    s.remaining = s.remaining.without(id);
}

void run_ai(GameSession& s) {
    while (!s.remaining.empty() && s.to_move() != s.human) eat(s, s.ai.choose(s.remaining));
}

}  // namespace

SessionStatus GameSession::status() const {
    if (remaining.empty()) return SessionStatus::finished;
    return to_move() == human ? SessionStatus::awaiting_human : SessionStatus::awaiting_ai;
}

Json session_state_json(const GameSession& s) {
    Json remaining = Json::array();
    for (const auto& m : s.remaining.morsels()) remaining.push_back(morsel_to_json(m));
    Json to_move = s.remaining.empty() ? Json(nullptr) : Json(std::string(1, to_char(s.to_move())));
    return Json{{"id", s.id},
                {"dinner", dinner_to_json(s.dinner)},
                {"human", std::string(1, to_char(s.human))},
                {"ai", s.ai_name},
                {"remaining", remaining},
                {"transcript", transcript_to_json(s.transcript)},
                {"scores",
                 Json{{"A", rational_to_json(s.transcript.score_A)}, {"B", rational_to_json(s.transcript.score_B)}}},
                {"to_move", to_move},
                {"status", status_name(s.status())}};
}

std::size_t GameService::session_count() {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

void GameService::purge_expired() {
    const auto now = std::chrono::steady_clock::now();
    std::lock_guard lock(mutex_);
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        // A session busy with a request is in use, hence not expired.
        std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
        if (session_lock.owns_lock() && now - it->second->touched >= options_.ttl) {
            session_lock.unlock();
            it = sessions_.erase(it);
        } else {
            ++it;
        }
    }
}

std::shared_ptr<GameSession> GameService::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

Response GameService::handle(std::string_view method, std::string_view path, std::string_view body) {
    purge_expired();
    const auto parts = split_path(path);
    if (parts.empty() || parts[0] != "games") return error(404, "no such route");
    try {
        if (parts.size() == 1) {
            if (method != "POST") return error(405, "method not allowed");
            return create(body);
        }
        const std::string id(parts[1]);
        if (parts.size() == 2 && method == "DELETE") {
            std::lock_guard map_lock(mutex_);
            if (sessions_.erase(id) == 0) return error(404, "unknown game " + id);
            return Response{204, ""};
        }
        auto session = find(id);
        if (!session) return error(404, "unknown game " + id);
        std::lock_guard lock(session->mutex);
        session->touched = std::chrono::steady_clock::now();
        if (parts.size() == 2) {
            if (method == "GET") return json_response(200, session_state_json(*session));
            return error(405, "method not allowed");
        }
        if (parts.size() == 3 && parts[2] == "moves") {
            if (method != "POST") return error(405, "method not allowed");
            return move(*session, body);
        }
        if (parts.size() == 3 && parts[2] == "hint") {
            if (method != "GET") return error(405, "method not allowed");
            return hint(*session);
        }
        if (parts.size() == 3 && parts[2] == "board") {
            if (method != "GET") return error(405, "method not allowed");
            if (session->remaining.empty())
                return json_response(200, Json{{"sequence", Json::array()},
                                               {"a_labels", Json::array()},
                                               {"b_labels", Json::array()},
                                               {"play_labels", Json{{"A", Json::array()}, {"B", Json::array()}}}});
            return json_response(200, board_to_json(crossout_board(session->remaining)));
        }
        return error(404, "no such route");
    } catch (const ValidationError& ex) {
        return error(400, ex.what());
    } catch (const Json::exception& ex) {
        return error(400, ex.what());
    } catch (const GuardExceeded& ex) {
        return error(422, ex.what());
    } catch (const std::exception& ex) {
        return error(500, ex.what());
    }
}

Response GameService::create(std::string_view body) {
    const Json req = parse_json_exact(body);
    if (!req.is_object() || !req.contains("dinner")) throw ParseError("body needs a \"dinner\" document");
    Dinner d = dinner_from_json(req.at("dinner"));
    auto human = parse_player(req.value("human", std::string("A")));
    if (!human) throw ParseError("human must be \"A\" or \"B\"");
    std::string ai_name = req.value("ai", std::string("crossout"));
    Strategy ai = builtin_strategy(ai_name, other(*human));

    std::shared_ptr<GameSession> s;
    {
        std::lock_guard lock(mutex_);
        std::string id = "g" + std::to_string(next_id_++);
        s = std::make_shared<GameSession>(id, std::move(d), *human, ai_name, std::move(ai));
        s->touched = std::chrono::steady_clock::now();
        sessions_.emplace(id, s);
    }
    std::lock_guard lock(s->mutex);
    run_ai(*s);
    return json_response(201, Json{{"id", s->id}, {"state", session_state_json(*s)}});
}

Response GameService::move(GameSession& s, std::string_view body) {
    const Json req = parse_json_exact(body);
    if (!req.is_object() || !req.contains("morsel_id") || !req.at("morsel_id").is_number_integer())
        throw ParseError("body needs an integer \"morsel_id\"");
    const auto id = req.at("morsel_id").get<std::int64_t>();
    if (s.status() != SessionStatus::awaiting_human) return error(409, "it is not the human's turn");
    if (id < 0 || !s.remaining.contains(static_cast<MorselId>(id)))
        return error(409, "morsel " + std::to_string(id) + " is not on the plate");
    eat(s, static_cast<MorselId>(id));
    run_ai(s);
    return json_response(200, session_state_json(s));
}

Response GameService::hint(GameSession& s) {
    if (s.status() != SessionStatus::awaiting_human) return error(409, "no move to hint: not the human's turn");
    const MorselId crossout_id = crossout_strategy(s.remaining).id;
    std::vector<std::pair<MorselId, Rational>> values;
    const bool exact = s.remaining.size() <= options_.hint_exact_max_n;
    if (exact) {
        OracleLimits limits;
        limits.max_dp_n = options_.hint_exact_max_n;
        BestResponse br(s.remaining, s.ai, s.human, limits);
        values = br.what_if();
    } else {
        // Value of each move followed by crossout against the AI: a
        // concrete line of play, not the optimum.
        const Strategy me = crossout();
        const Strategy& alice = s.human == Player::A ? me : s.ai;
        const Strategy& bob = s.human == Player::A ? s.ai : me;
        for (const auto& m : s.remaining.morsels()) {
            const auto t = play(s.remaining.without(m.id), alice, bob);
            values.emplace_back(m.id, m.utility(s.human) + t.score(s.human));
        }
    }
    Rational best = values.front().second;
    for (const auto& [id, v] : values) best = std::max(best, v);
    MorselId recommended = crossout_id;
    bool crossout_optimal = false;
    for (const auto& [id, v] : values)
        if (id == crossout_id && v == best) crossout_optimal = true;
    if (!crossout_optimal && exact) {
        for (const auto& [id, v] : values)
            if (v == best) {
                recommended = id;
                break;
            }
    }
    Json what_if = Json::array();
    for (const auto& [id, v] : values) what_if.push_back(Json{{"morsel_id", id}, {"value", rational_to_json(v)}});
    return json_response(200, Json{{"recommended_morsel_id", recommended}, {"what_if", what_if}, {"exact", exact}});
}

}  // namespace ethdinner
