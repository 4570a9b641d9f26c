// ethdinner: command-line front end over the C interface.
//
// Exit status: 0 success, 1 a check failed (verify), 2 validation error,
// 3 size guard exceeded, 4 internal error, 64 usage error.

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ethdinner/ethdinner.h"

namespace {

constexpr int kExitUsage = 64;

struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(ed_status s) {
    switch (s) {
        case ED_OK: return 0;
        case ED_ERR_VALIDATION: return 2;
        case ED_ERR_GUARD: return 3;
        case ED_ERR_ARGUMENT: return kExitUsage;
        default: return 4;
    }
}

void check(ed_status s) {
    if (s != ED_OK) throw CliFailure{exit_code_for(s), ed_last_error()};
}

struct DinnerHandle {
    ed_dinner* p = nullptr;
    ~DinnerHandle() { ed_dinner_free(p); }
};

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { ed_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw CliFailure{2, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int32_t> parse_perm(const std::string& text) {
    std::vector<int32_t> pi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            pi.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CliFailure{2, "bad permutation entry '" + item + "'"};
        }
    }
    return pi;
}

struct Common {
    std::string input;
    std::string last_mover;
    uint32_t guard_n = 0;
    bool csv = false;
    bool json = false;
};

void load(const Common& c, DinnerHandle& d) {
    check(ed_dinner_parse(read_input(c.input).c_str(), &d.p));
    if (!c.last_mover.empty()) {
        DinnerHandle swapped;
        check(ed_dinner_with_last_mover(d.p, c.last_mover[0], &swapped.p));
        std::swap(d.p, swapped.p);
    }
}

ed_limits limits_for(const Common& c) {
    ed_limits l;
    ed_limits_default(&l);
    if (c.guard_n != 0) l.max_dp_n = c.guard_n;
    return l;
}

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
    if (with_input) sub->add_option("input", c.input, "Dinner JSON file ('-' or omitted: stdin)");
    sub->add_option("--last-mover", c.last_mover, "Override the dinner's last mover")->check(CLI::IsMember({"A", "B"}));
    sub->add_option("--guard-n", c.guard_n, "Largest dinner for exhaustive subset search");
    sub->add_flag("--csv", c.csv, "CSV output where supported");
    sub->add_flag("--json", c.json, "JSON output (default)");
}

int serve(const std::string& bind) {
    auto colon = bind.rfind(':');
    std::string host = colon == std::string::npos ? "127.0.0.1" : bind.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(colon == std::string::npos ? bind : bind.substr(colon + 1));
    } catch (const std::exception&) {
        throw CliFailure{kExitUsage, "bad bind address '" + bind + "'"};
    }

    ed_service* raw = nullptr;
    check(ed_service_create(&raw));
    std::unique_ptr<ed_service, decltype(&ed_service_free)> service(raw, ed_service_free);

    httplib::Server svr;
    auto forward = [&](const httplib::Request& req, httplib::Response& res) {
        int status = 500;
        OwnedString body;
        if (ed_service_handle(service.get(), req.method.c_str(), req.path.c_str(), req.body.c_str(), &status,
                              &body.p) != ED_OK) {
            res.status = 500;
            res.set_content(std::string("{\"error\":\"") + ed_last_error() + "\"}", "application/json");
            return;
        }
        res.status = status;
        if (status != 204) res.set_content(body.str(), "application/json");
    };
    svr.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});
    svr.Get(R"(/.*)", forward);
    svr.Post(R"(/.*)", forward);
    svr.Delete(R"(/.*)", forward);
    svr.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    if (!svr.bind_to_port(host, port)) throw CliFailure{2, "cannot bind " + host + ":" + std::to_string(port)};
    std::cerr << "ethdinner: serving on http://" << host << ":" << port << std::endl;
    svr.listen_after_bind();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ethiopian Dinner: crossout strategy engine, equilibrium oracle and analysis toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ed_version()));

    Common c;

    auto* crossout_cmd = app.add_subcommand("crossout", "Crossout sequence, strategy, scores and board");
    bool board = false;
    bool text = false;
    bool play_labels = false;
    add_common(crossout_cmd, c);
    crossout_cmd->add_flag("--board", board, "Include the crossout board JSON");
    crossout_cmd->add_flag("--text", text, "Print the board as a text picture");
    crossout_cmd->add_flag("--play-labels", play_labels, "Text picture shows A_i/B_j turn labels");

    auto* play_cmd = app.add_subcommand("play", "Play two strategies against each other");
    std::string alice = "crossout";
    std::string bob = "crossout";
    std::string order = "alternating";
    std::string first = "A";
    add_common(play_cmd, c);
    play_cmd->add_option("--alice", alice, "Alice's strategy");
    play_cmd->add_option("--bob", bob, "Bob's strategy");
    play_cmd->add_option("--order", order, "Turn order")->check(CLI::IsMember({"alternating", "thue-morse"}));
    play_cmd->add_option("--first", first, "First player for thue-morse")->check(CLI::IsMember({"A", "B"}));

    auto* outcomes_cmd = app.add_subcommand("outcomes", "Outcome cloud: all partitions and play against crossout");
    std::string vs;
    add_common(outcomes_cmd, c);
    outcomes_cmd->add_option("--vs-crossout", vs, "Player whose choices are enumerated against crossout")
        ->check(CLI::IsMember({"A", "B"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check (crossout, crossout) is subgame perfect on every subdinner");
    add_common(verify_cmd, c);

    auto* pareto_cmd = app.add_subcommand("pareto", "Pareto efficiency and envy of an outcome");
    uint32_t census = 0;
    add_common(pareto_cmd, c);
    pareto_cmd->add_option("--alice", alice, "Alice's strategy");
    pareto_cmd->add_option("--bob", bob, "Bob's strategy");
    pareto_cmd->add_option("--census", census, "Scan all permutation dinners of this size instead");

    auto* experiment_cmd = app.add_subcommand("experiment", "Monte Carlo Pareto census of random permutation dinners");
    uint32_t n = 16;
    uint64_t samples = 10000;
    uint64_t seed = 1;
    uint32_t threads = 0;
    add_common(experiment_cmd, c, false);
    experiment_cmd->add_option("--n", n, "Dinner size");
    experiment_cmd->add_option("--samples", samples, "Number of dinners");
    experiment_cmd->add_option("--seed", seed, "Seed; sample i uses seed + i");
    experiment_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

    auto* catalan_cmd = app.add_subcommand("catalan", "Count attainable crossout plates over dinners of size 2k");
    uint32_t k = 3;
    catalan_cmd->add_option("--k", k, "Half size")->required();

    auto* inversions_cmd = app.add_subcommand("inversions", "Inversions of a permutation dinner, monotonicity checks");
    std::string perm;
    uint32_t mono = 0;
    inversions_cmd->add_option("--perm", perm, "Permutation, e.g. 3,1,2");
    inversions_cmd->add_option("--monotonicity", mono, "Check inversion monotonicity for all permutations of size n");

    auto* transform_cmd = app.add_subcommand("transform", "Generalized-payoff reduction to an ordinary dinner");
    std::string params = "plain";
    add_common(transform_cmd, c);
    transform_cmd->add_option("--params", params, "alpha_A,beta_A,alpha_B,beta_B or zero-sum|cooperative|plain");

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP game service");
    std::string bind = "127.0.0.1:8080";
    serve_cmd->add_option("--bind", bind, "host:port");
    serve_cmd->add_option("--seed", seed, "Unused; accepted for symmetry with other commands");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        OwnedString out;
        if (*crossout_cmd) {
            DinnerHandle d;
            load(c, d);
            if (text)
                check(ed_crossout_board_text(d.p, play_labels ? 1 : 0, &out.p));
            else
                check(ed_crossout_json(d.p, board ? 1 : 0, &out.p));
        } else if (*play_cmd) {
            DinnerHandle d;
            load(c, d);
            check(ed_play_json(d.p, alice.c_str(), bob.c_str(), order.c_str(), first[0], &out.p));
        } else if (*outcomes_cmd) {
            DinnerHandle d;
            load(c, d);
            auto l = limits_for(c);
            char who = vs.empty() ? 0 : vs[0];
            if (c.csv)
                check(ed_outcomes_csv(d.p, who, &l, &out.p));
            else
                check(ed_outcomes_json(d.p, who, &l, &out.p));
        } else if (*verify_cmd) {
            DinnerHandle d;
            load(c, d);
            auto l = limits_for(c);
            int passed = 0;
            check(ed_verify_spe_json(d.p, &l, &passed, &out.p));
            std::cout << out.str() << '\n';
            return passed != 0 ? 0 : 1;
        } else if (*pareto_cmd) {
            if (census != 0) {
                check(ed_pareto_census_json(census, &out.p));
            } else {
                DinnerHandle d;
                load(c, d);
                auto l = limits_for(c);
                check(ed_pareto_json(d.p, alice.c_str(), bob.c_str(), &l, &out.p));
            }
        } else if (*experiment_cmd) {
            auto l = limits_for(c);
            check(ed_experiment_json(n, samples, seed, threads, &l, &out.p));
        } else if (*catalan_cmd) {
            check(ed_catalan_json(k, &out.p));
        } else if (*inversions_cmd) {
            if (mono != 0) {
                check(ed_monotonicity_json(mono, &out.p));
            } else if (!perm.empty()) {
                auto pi = parse_perm(perm);
                check(ed_inversions_json(pi.data(), pi.size(), &out.p));
            } else {
                std::cerr << "error: inversions needs --perm or --monotonicity\n\n" << inversions_cmd->help();
                return kExitUsage;
            }
        } else if (*transform_cmd) {
            DinnerHandle d;
            load(c, d);
            check(ed_transform_json(d.p, params.c_str(), &out.p));
        } else if (*serve_cmd) {
            return serve(bind);
        }
        std::cout << out.str();
        if (!out.str().empty() && out.str().back() != '\n') std::cout << '\n';
        return 0;
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
}
