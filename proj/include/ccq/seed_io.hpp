#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccq/codes.hpp"
#include "ccq/ring.hpp"

namespace ccq {

struct SeedDocument {
    std::string label;
    uint32_t p = 0;
    std::vector<std::vector<std::string>> ha, hb;

    RingMatrix ha_matrix() const { return parse_ring_matrix(ha, p); }
    RingMatrix hb_matrix() const { return parse_ring_matrix(hb, p); }
};

struct ConnectionDocument {
    uint32_t p = 0;
    std::vector<std::vector<std::string>> ha_prime, hb_prime;

    RingMatrix ha_matrix() const { return parse_ring_matrix(ha_prime, p); }
    RingMatrix hb_matrix() const { return parse_ring_matrix(hb_prime, p); }
};

namespace detail {

inline std::vector<std::vector<std::string>> grid_from_json(const nlohmann::json& j) {
    std::vector<std::vector<std::string>> g;
    for (const auto& row : j) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.get<std::string>());
        g.push_back(std::move(r));
    }
    return g;
}

inline nlohmann::ordered_json grid_to_json(const std::vector<std::vector<std::string>>& g) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& row : g) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(e);
        j.push_back(std::move(r));
    }
    return j;
}

}  // namespace detail

inline SeedDocument parse_seed_document(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SeedDocument d;
    d.label = j.at("label").get<std::string>();
    d.p = j.at("p").get<uint32_t>();
    d.ha = detail::grid_from_json(j.at("H_a"));
    d.hb = detail::grid_from_json(j.at("H_b"));
    return d;
}

// Canonical serialization: fixed key order, two-space indent, entries in the
// canonical polynomial form. Stable for golden tests.
inline std::string serialize_seed_document(const SeedDocument& d) {
    nlohmann::ordered_json j;
    j["label"] = d.label;
    j["p"] = d.p;
    j["H_a"] = detail::grid_to_json(d.ha);
    j["H_b"] = detail::grid_to_json(d.hb);
    return j.dump(2) + "\n";
}

inline SeedDocument load_seed_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed document: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_seed_document(ss.str());
}

inline ConnectionDocument parse_connection_document(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ConnectionDocument d;
    d.p = j.at("p").get<uint32_t>();
    d.ha_prime = detail::grid_from_json(j.at("H_a_prime"));
    d.hb_prime = detail::grid_from_json(j.at("H_b_prime"));
    return d;
}

inline std::string serialize_connection_document(const ConnectionDocument& d) {
    nlohmann::ordered_json j;
    j["p"] = d.p;
    j["H_a_prime"] = detail::grid_to_json(d.ha_prime);
    j["H_b_prime"] = detail::grid_to_json(d.hb_prime);
    return j.dump(2) + "\n";
}

inline ConnectionDocument load_connection_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open connection document: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_connection_document(ss.str());
}

// The ten production seed pairs, keyed by code label.
inline const std::vector<SeedDocument>& builtin_seeds() {
    static const std::vector<SeedDocument> seeds = {
        {"cc_24_8_3", 3,
         {{"1+x^2", "x+x^2"}, {"1+x", "x+x^2"}},
         {{"1+x^2", "x+x^2"}, {"1+x", "1+x"}}},
        {"cc_40_8_5", 5,
         {{"x+x^3", "x+x^4"}, {"x+x^4", "x+x^4"}},
         {{"1+x", "x^3+x^4"}, {"1+x^4", "1+x^4"}}},
        {"cc_56_8_7", 7,
         {{"x+x^5", "x+x^3"}, {"1+x^2", "1+x^3"}},
         {{"x^2+x^5", "1+x"}, {"x^5+x^6", "x^4+x^6"}}},
        {"cc_88_8_10", 11,
         {{"x+x^5", "x^5+x^6"}, {"x^2+x^3", "x^5+x^9"}},
         {{"1+x^3", "x^8+x^10"}, {"x^5+x^7", "x^3+x^7"}}},
        {"cc_104_8_11", 13,
         {{"x+x^5", "x^2+x^5"}, {"x+x^4", "x^9+x^10"}},
         {{"x^2+x^8", "1+x^8"}, {"x+x^9", "x+x^3"}}},
        {"cc_136_8_14", 17,
         {{"x^13+x^16", "x^5+x^15"}, {"x^6+x^16", "1+x^3"}},
         {{"x+x^7", "x^8+x^10"}, {"x^8+x^10", "x^5+x^16"}}},
        {"cc_54_18_3", 3,
         {{"x+x^2", "0", "1+x"}, {"x+x^2", "1+x", "0"}, {"0", "1+x^2", "1+x^2"}},
         {{"1+x", "1+x^2", "0"}, {"0", "x+x^2", "1+x^2"}, {"1+x^2", "0", "x+x^2"}}},
        {"cc_90_18_5", 5,
         {{"1+x", "0", "1+x^4"}, {"1+x^3", "1+x^2", "0"}, {"0", "1+x^4", "1+x^2"}},
         {{"1+x^4", "1+x^2", "0"}, {"0", "1+x^3", "1+x"}, {"1+x", "0", "1+x^3"}}},
        {"cc_126_18_7", 7,
         {{"x+x^4", "0", "x^2+x^4"}, {"x+x^3", "x^2+x^5", "0"}, {"0", "1+x^5", "1+x^3"}},
         {{"x^5+x^6", "x^5+x^6", "0"}, {"0", "x+x^3", "1+x"}, {"x+x^2", "0", "x^4+x^6"}}},
        {"cc_198_18_10", 11,
         {{"x^4+x^9", "0", "x^5+x^7"}, {"x^4+x^6", "x^2+x^8", "0"}, {"0", "x^7+x^10", "x^3+x^8"}},
         {{"x^3+x^4", "x^6+x^10", "0"}, {"0", "x^2+x^3", "x^8+x^10"}, {"1+x^7", "0", "x^9+x^10"}}},
    };
    return seeds;
}

inline const SeedDocument& builtin_seed(const std::string& label) {
    for (const auto& s : builtin_seeds())
        if (s.label == label) return s;
    throw std::runtime_error("unknown seed label: " + label);
}

inline CcCode builtin_code(const std::string& label) {
    const SeedDocument& d = builtin_seed(label);
    return cc_code(d.ha_matrix(), d.hb_matrix());
}

}  // namespace ccq
