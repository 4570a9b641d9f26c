#include "json_io.hpp"

#include <vector>

namespace ethdinner {
namespace {

// SAX consumer that builds a Json DOM, storing float lexemes as strings.
class ExactBuilder {
public:
    using number_integer_t = Json::number_integer_t;
    using number_unsigned_t = Json::number_unsigned_t;
    using number_float_t = Json::number_float_t;
    using string_t = Json::string_t;
    using binary_t = Json::binary_t;

    explicit ExactBuilder(Json& root) : root_(root) {}

    bool null() { return put(Json(nullptr)); }
    bool boolean(bool v) { return put(Json(v)); }
    bool number_integer(number_integer_t v) { return put(Json(v)); }
    bool number_unsigned(number_unsigned_t v) {
        if (v > static_cast<number_unsigned_t>(INT64_MAX)) return put(Json(std::to_string(v)));
        return put(Json(static_cast<number_integer_t>(v)));
    }
    bool number_float(number_float_t, const string_t& lexeme) { return put(Json(lexeme)); }
    bool string(string_t& v) { return put(Json(v)); }
    bool binary(binary_t&) { return put(Json(nullptr)); }

    bool start_object(std::size_t) {
        Json* slot = place(Json::object());
        stack_.push_back(slot);
        return true;
    }
    bool key(string_t& k) {
        pending_key_ = k;
        return true;
    }
    bool end_object() {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) {
        Json* slot = place(Json::array());
        stack_.push_back(slot);
        return true;
    }
    bool end_array() {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }

private:
    bool put(Json v) {
        place(std::move(v));
        return true;
    }

    Json* place(Json v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            return &root_;
        }
        Json& top = *stack_.back();
        if (top.is_array()) {
            top.push_back(std::move(v));
            return &top.back();
        }
        Json& slot = top[pending_key_];
        slot = std::move(v);
        return &slot;
    }

    Json& root_;
    std::vector<Json*> stack_;
    std::string pending_key_;
};

}  // namespace

Json parse_json_exact(std::string_view text) {
    Json root;
    ExactBuilder builder(root);
    bool ok = Json::sax_parse(text.begin(), text.end(), &builder);
    if (!ok) throw ParseError("malformed JSON");
    return root;
}

Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num());
    return Json(r.to_exact_text());
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_number_float()) return Rational::parse(j.dump());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    } catch (const std::overflow_error& ex) {
        throw ParseError(ex.what());
    }
    throw ParseError("utility must be a number or a decimal string, got " + j.dump());
}

Json dinner_to_json(const Dinner& d) {
    Json morsels = Json::array();
    for (const auto& m : d.morsels()) morsels.push_back(Json::array({rational_to_json(m.a), rational_to_json(m.b)}));
    return Json{{"last_mover", std::string(1, to_char(d.last_mover()))}, {"morsels", morsels}};
}

Dinner dinner_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("dinner document must be an object");
    Player last = Player::B;
    if (auto it = j.find("last_mover"); it != j.end()) {
        if (!it->is_string()) throw ParseError("last_mover must be \"A\" or \"B\"");
        auto p = it->get<std::string>();
        if (p != "A" && p != "B") throw ParseError("last_mover must be \"A\" or \"B\"");
        last = p == "A" ? Player::A : Player::B;
    }
    auto it = j.find("morsels");
    if (it == j.end() || !it->is_array()) throw ParseError("dinner document needs a \"morsels\" array");
    std::vector<RawMorsel> raw;
    raw.reserve(it->size());
    for (const auto& pair : *it) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("each morsel must be a pair [a, b]");
        raw.emplace_back(rational_from_json(pair[0]), rational_from_json(pair[1]));
    }
    return Dinner::validate(raw, last);
}

std::string serialize_dinner(const Dinner& d) { return dinner_to_json(d).dump(); }

Dinner parse_dinner(std::string_view text) { return dinner_from_json(parse_json_exact(text)); }

Json morsel_to_json(const Morsel& m) {
    return Json{{"id", m.id}, {"a", rational_to_json(m.a)}, {"b", rational_to_json(m.b)}};
}

}  // namespace ethdinner
