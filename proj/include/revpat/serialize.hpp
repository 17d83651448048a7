#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "revpat/errors.hpp"
#include "revpat/pattern.hpp"
#include "revpat/search.hpp"
#include "revpat/word.hpp"

namespace revpat {

/*
 * Record schema:
 *   {"pattern": "aAb", "k": 2, "verdict": "unavoidable", "L": 7,
 *    "nodes_explored": 41, "wall_time_ms": 0.02}
 * with "witness": "0101..." in place of "L" when the verdict is
 * "depth-exhausted".
 */
inline nlohmann::json to_json(const SearchOutcome& o) {
    nlohmann::json j;
    j["pattern"] = o.pattern.to_string();
    j["k"] = o.alphabet_size;
    j["verdict"] = o.verdict_label();
    if (o.unavoidable())
        j["L"] = o.bound();
    else
        j["witness"] = o.witness().to_string();
    j["nodes_explored"] = o.nodes_explored;
    j["wall_time_ms"] = o.wall_time_ms;
    return j;
}

inline SearchOutcome search_outcome_from_json(const nlohmann::json& j) {
    try {
        const int k = j.at("k").get<int>();
        SearchOutcome o{Pattern::parse(j.at("pattern").get<std::string>()), k, Unavoidable{}, 0, 0};
        const std::string verdict = j.at("verdict").get<std::string>();
        if (verdict == "unavoidable")
            o.verdict = Unavoidable{j.at("L").get<std::size_t>()};
        else if (verdict == "depth-exhausted")
            o.verdict = DepthExhausted{Word::parse(j.at("witness").get<std::string>(), k)};
        else
            throw ParseError("unknown verdict '" + verdict + "'");
        o.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
        o.wall_time_ms = j.at("wall_time_ms").get<double>();
        return o;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad search record: ") + e.what());
    }
}

/// {"pattern", "lower_bound", "candidate" (null when absent), "depth", "runs": [records]}
inline nlohmann::json to_json(const IndexEstimate& e) {
    nlohmann::json j;
    j["pattern"] = e.runs.empty() ? std::string() : e.runs.front().pattern.to_string();
    j["lower_bound"] = e.lower_bound;
    j["candidate"] = e.candidate ? nlohmann::json(*e.candidate) : nlohmann::json(nullptr);
    j["depth"] = e.depth_used;
    j["runs"] = nlohmann::json::array();
    for (const auto& r : e.runs)
        j["runs"].push_back(to_json(r));
    return j;
}

inline IndexEstimate index_estimate_from_json(const nlohmann::json& j) {
    try {
        IndexEstimate e;
        e.lower_bound = j.at("lower_bound").get<int>();
        if (!j.at("candidate").is_null())
            e.candidate = j.at("candidate").get<int>();
        e.depth_used = j.at("depth").get<std::size_t>();
        for (const auto& r : j.at("runs"))
            e.runs.push_back(search_outcome_from_json(r));
        return e;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad index record: ") + e.what());
    }
}

} // namespace revpat
