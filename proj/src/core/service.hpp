// In-memory game sessions for human-vs-AI play, exposed as a transport-free
// REST handler: (method, path, body) -> (status, body). The HTTP server in
// the CLI forwards requests here unchanged.

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "dinner.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "play.hpp"

namespace ethdinner {

enum class SessionStatus { awaiting_human, awaiting_ai, finished };

struct GameSession {
    std::string id;
    Dinner dinner;
    Dinner remaining;
    Transcript transcript;
    Player human = Player::A;
    std::string ai_name;
    Strategy ai;
    std::chrono::steady_clock::time_point touched;
    std::mutex mutex;  // one writer per session

    GameSession(std::string id_, Dinner d, Player human_, std::string ai_name_, Strategy ai_)
        : id(std::move(id_)),
          dinner(d),
          remaining(std::move(d)),
          human(human_),
          ai_name(std::move(ai_name_)),
          ai(std::move(ai_)) {}

    Player to_move() const { return remaining.mover_with(remaining.size()); }
    SessionStatus status() const;
};

class GameService {
public:
    struct Response {
        int status = 200;
        std::string body;
    };

    struct Options {
        std::chrono::seconds ttl{24 * 60 * 60};
        std::size_t hint_exact_max_n = 20;  // exact what-if values up to this many remaining morsels
    };

    GameService() : GameService(Options{}) {}
    explicit GameService(Options options) : options_(options) {}

    Response handle(std::string_view method, std::string_view path, std::string_view body);

    std::size_t session_count();

private:
    std::shared_ptr<GameSession> find(const std::string& id);
    void purge_expired();

    Response create(std::string_view body);
    Response move(GameSession& s, std::string_view body);
    Response hint(GameSession& s);

    Options options_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<GameSession>> sessions_;
    std::uint64_t next_id_ = 1;
};

Json session_state_json(const GameSession& s);

}  // namespace ethdinner
