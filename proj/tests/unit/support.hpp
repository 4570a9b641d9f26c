#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "core/dinner.hpp"
#include "core/json_io.hpp"

namespace testing {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(ETHDINNER_TEST_DATA) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ethdinner::Dinner fixture(const std::string& name) { return ethdinner::parse_dinner(read_fixture(name)); }

inline ethdinner::Dinner make(std::initializer_list<std::pair<int, int>> ms,
                              ethdinner::Player last = ethdinner::Player::B) {
    std::vector<ethdinner::RawMorsel> raw;
    for (auto [a, b] : ms) raw.emplace_back(a, b);
    return ethdinner::Dinner::validate(raw, last);
}

}  // namespace testing
