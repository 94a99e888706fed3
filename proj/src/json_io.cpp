#include "aif/json_io.hpp"

#include <limits>

#include "aif/error.hpp"

namespace aif {

SetFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("family JSON must be an object");
    for (const char* key : {"n", "k", "sets"}) {
        if (!j.contains(key)) throw ParseError(std::string("family JSON lacks \"") + key + "\"");
    }
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer()) throw ParseError("n and k must be integers");
    if (!j["sets"].is_array()) throw ParseError("\"sets\" must be an array");
    const auto n = j["n"].get<long long>();
    const auto k = j["k"].get<long long>();
    if (n < 1 || n > kMaxGround || k < 0 || k > n) {
        throw ParseError("unsupported parameters n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    const Params p = Params::derived(static_cast<int>(n), static_cast<int>(k));

    std::vector<Mask> masks;
    masks.reserve(j["sets"].size());
    for (const auto& s : j["sets"]) {
        if (!s.is_array()) throw ParseError("every set must be an array");
        if (static_cast<long long>(s.size()) != k) {
            throw ParseError("set " + s.dump() + " does not have " + std::to_string(k) + " elements");
        }
        Mask m = 0;
        long long prev = 0;
        for (const auto& e : s) {
            if (!e.is_number_integer()) throw ParseError("set " + s.dump() + " has a non-integer element");
            const auto x = e.get<long long>();
            if (x < 1 || x > n) throw ParseError("element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
            if (x <= prev) throw ParseError("set " + s.dump() + " is not strictly increasing");
            prev = x;
            m |= element_bit(static_cast<Element>(x));
        }
        masks.push_back(m);
    }
    try {
        return SetFamily(p, std::move(masks));
    } catch (const ParamError& e) {
        throw ParseError(e.what());
    }
}

SetFamily parse_family(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
}

nlohmann::json set_to_json(Mask m) { return elements_of(m); }

nlohmann::json family_to_json(const SetFamily& f) {
    nlohmann::json sets = nlohmann::json::array();
    for (Mask m : f.masks()) sets.push_back(set_to_json(m));
    return {{"n", f.params().n}, {"k", f.params().k}, {"sets", std::move(sets)}};
}

nlohmann::json big_to_json(const BigCount& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

}  // namespace aif
