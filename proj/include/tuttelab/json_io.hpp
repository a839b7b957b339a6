#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tuttelab/bigint.hpp"
#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/rankfunc.hpp"
#include "tuttelab/unipoly.hpp"

namespace tuttelab {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileIO", "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail("JsonParse", "malformed JSON in " + path);
    return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail("FileIO", "cannot write " + path);
    out << j.dump(2) << '\n';
}

inline Int int_from_decimal(const std::string& s) {
    if (s.empty()) fail("JsonParse", "empty integer string");
    size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) fail("JsonParse", "sign without digits");
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail("JsonParse", "non-decimal integer string: " + s);
    return Int(s);
}

// {"terms":[{"i":int,"j":int,"c":"decimal"}]}, descending lexicographic (i,j).
inline Json bipoly_to_json(const BiPoly& P) {
    Json terms = Json::array();
    for (auto it = P.t.rbegin(); it != P.t.rend(); ++it) {
        Json term;
        term["i"] = it->first.first;
        term["j"] = it->first.second;
        term["c"] = to_string(it->second);
        terms.push_back(std::move(term));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

inline BiPoly bipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        fail("JsonParse", "bivariate polynomial JSON needs a terms array");
    BiPoly P;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("i") || !term.contains("j") ||
            !term.contains("c") || !term["i"].is_number_integer() ||
            !term["j"].is_number_integer() || !term["c"].is_string())
            fail("JsonParse", "each term needs integer i, j and string c");
        P.add_term(term["i"].get<int>(), term["j"].get<int>(),
                   int_from_decimal(term["c"].get<std::string>()));
    }
    return P;
}

// {"coeffs":["c0","c1",...]} low degree first.
inline Json unipoly_to_json(const UniPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.c) coeffs.push_back(to_string(c));
    Json out;
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        fail("JsonParse", "univariate polynomial JSON needs a coeffs array");
    std::vector<Int> c;
    for (const auto& v : j["coeffs"]) {
        if (!v.is_string()) fail("JsonParse", "coefficients must be decimal strings");
        c.push_back(int_from_decimal(v.get<std::string>()));
    }
    return UniPoly(std::move(c));
}

// {"n":int,"ranks":[r per bitmask 0..2^n-1]}
inline Json rank_function_to_json(const RankFunction& S) {
    Json out;
    out["n"] = S.n;
    out["ranks"] = S.ranks;
    return out;
}

inline RankFunction rank_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("ranks") ||
        !j["n"].is_number_integer() || !j["ranks"].is_array())
        fail("JsonParse", "rank table JSON needs n and a ranks array");
    RankFunction S;
    S.n = j["n"].get<int>();
    if (S.n < 0 || S.n > kGroundsetCap)
        fail("GroundsetTooLarge", "rank table size out of range");
    for (const auto& v : j["ranks"]) {
        if (!v.is_number_integer()) fail("JsonParse", "ranks must be integers");
        S.ranks.push_back(v.get<int>());
    }
    validate_rank_function(S);
    return S;
}

// {"vertices":int,"edges":[[u,v],...]}
inline Json graph_to_json(const Graph& G) {
    Json edges = Json::array();
    for (auto& [u, v] : G.edges) edges.push_back(Json::array({u, v}));
    Json out;
    out["vertices"] = G.n_vertices;
    out["edges"] = std::move(edges);
    return out;
}

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j["vertices"].is_number_integer() || !j["edges"].is_array())
        fail("JsonParse", "graph JSON needs vertices and an edges array");
    Graph G;
    G.n_vertices = j["vertices"].get<int>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail("JsonParse", "each edge must be a pair of vertex indices");
        G.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return G;
}

}  // namespace tuttelab
