// tuttelab — exact Tutte-polynomial toolkit.
//
// Subcommands: tutte, brylawski, irred, galois, family-report, sieve,
// densities, verify-cert.  Success prints JSON (or CSV for densities) on
// stdout and exits 0; domain errors print {"error":{"kind","detail"}} on
// stderr and exit 1; usage errors exit 2.  All randomness comes from
// explicit seeds, so identical invocations produce identical bytes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tuttelab/brylawski.hpp"
#include "tuttelab/densities.hpp"
#include "tuttelab/families.hpp"
#include "tuttelab/galois.hpp"
#include "tuttelab/irred.hpp"
#include "tuttelab/json_io.hpp"
#include "tuttelab/rankfunc.hpp"
#include "tuttelab/sieve.hpp"

using namespace tuttelab;

namespace {

// Defaults shared by every subcommand; a --config file may override them,
// and explicit flags override the file.
struct AppConfig {
    long t_budget = 50;
    long p_budget = 500;
    uint64_t seed = 42;
    std::optional<int> threads;
    int groundset_cap = kGroundsetCap;
    std::string output = "json";
    bool output_set = false;  // densities defaults to CSV unless configured
};

long to_long(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        long out = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        fail("ConfigInvalid", "value '" + v + "' for key '" + key + "' is not an integer");
    }
}

AppConfig load_config(const std::string& path) {
    AppConfig cfg;
    std::ifstream in(path);
    if (!in) fail("FileNotFound", "cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail("ConfigInvalid", "line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "t_budget") {
            cfg.t_budget = to_long(value, key);
        } else if (key == "p_budget") {
            cfg.p_budget = to_long(value, key);
        } else if (key == "seed") {
            cfg.seed = static_cast<uint64_t>(to_long(value, key));
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(to_long(value, key));
        } else if (key == "groundset_cap") {
            cfg.groundset_cap = static_cast<int>(to_long(value, key));
            if (cfg.groundset_cap < 1 || cfg.groundset_cap > kGroundsetCap)
                fail("ConfigInvalid", "groundset_cap outside [1, " +
                                          std::to_string(kGroundsetCap) + "]");
        } else if (key == "output") {
            if (value != "json" && value != "csv" && value != "pretty")
                fail("ConfigInvalid", "output must be json, csv, or pretty");
            cfg.output = value;
            cfg.output_set = true;
        } else {
            fail("ConfigInvalid", "unknown key '" + key + "'");
        }
    }
    return cfg;
}

void emit(const Json& j, const AppConfig& cfg) {
    if (cfg.output == "csv")
        fail("OutputUnsupported", "csv output is only available for 'densities'");
    if (cfg.output == "pretty")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// "name:a,b" -> family polynomial
BiPoly family_poly(const std::string& spec) {
    std::string name = spec;
    std::vector<long> args;
    if (size_t colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            args.push_back(to_long(item, "family argument"));
    }
    auto want = [&](size_t k) {
        if (args.size() != k)
            fail("UnknownFamily", "family '" + name + "' takes " + std::to_string(k) +
                                      " argument(s)");
    };
    if (name == "cycle") {
        want(1);
        return cycle_tutte(static_cast<int>(args[0]));
    }
    if (name == "thick") {
        want(2);
        return thick_cycle_tutte(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (name == "uniform") {
        want(2);
        return uniform_tutte(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (name == "two-valued") {
        want(2);
        return two_valued_example(static_cast<int>(args[0]), static_cast<int>(args[1])).poly;
    }
    if (name == "three-valued") {
        want(1);
        return three_valued_example(static_cast<int>(args[0])).poly;
    }
    fail("UnknownFamily", "no polynomial family named '" + name + "'");
}

Json verdict_to_json(const IrredVerdict& v) {
    Json j;
    j["verdict"] = verdict_name(v.verdict);
    j["method"] = method_name(v.method);
    j["notes"] = v.notes;
    Json w = Json::array();
    for (const BiPoly& f : v.witness) w.push_back(bipoly_to_json(f));
    j["witness"] = std::move(w);
    if (v.witness_t) j["witness_t"] = *v.witness_t;
    if (v.witness_p) j["witness_p"] = *v.witness_p;
    Json poly = Json::array();
    for (auto [a, b] : v.polygon_vertices) poly.push_back(Json::array({a, b}));
    j["polygon"] = std::move(poly);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact corank-nullity polynomials, Brylawski relations, "
                 "irreducibility, symmetric-group certificates, sieve experiment"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");

    // ---- tutte ----
    auto* tutte = app.add_subcommand("tutte", "corank-nullity polynomial of a ranked set");
    std::string t_family, t_graph, t_table;
    tutte->add_option("--family", t_family,
                      "cycle:n | thick:n,j | uniform:a,b | two-valued:n,r | three-valued:n");
    tutte->add_option("--graph", t_graph, "graph JSON {vertices, edges}");
    tutte->add_option("--rank-table", t_table, "rank table JSON {n, ranks}");

    // ---- brylawski ----
    auto* bry = app.add_subcommand("brylawski", "detect (n,r,c) and check the relations");
    std::string b_poly;
    long b_hmax = -1;
    bry->add_option("--poly", b_poly, "polynomial JSON {terms:[...]}")->required();
    bry->add_option("--h-max", b_hmax, "largest relation index (default n+2)");

    // ---- irred ----
    auto* irr = app.add_subcommand("irred", "irreducibility verdict pipeline");
    std::string i_poly, i_methods = "a,b,newton,modp";
    long i_trange = 20, i_prange = 200;
    irr->add_option("--poly", i_poly, "polynomial JSON")->required();
    irr->add_option("--methods", i_methods, "subset of a,b,newton,modp");
    irr->add_option("--t-range", i_trange, "specialization range for mod-p search");
    irr->add_option("--p-range", i_prange, "prime range for mod-p search");

    // ---- galois ----
    auto* gal = app.add_subcommand("galois", "symmetric-group certificate search");
    std::string g_poly, g_family;
    long g_tb = 0, g_pb = 0;
    gal->add_option("--poly", g_poly, "polynomial JSON");
    gal->add_option("--family", g_family, "named family (see tutte --family)");
    auto* g_tb_opt = gal->add_option("--t-budget", g_tb, "specialization budget");
    auto* g_pb_opt = gal->add_option("--p-budget", g_pb, "prime budget");

    // ---- family-report ----
    auto* fam = app.add_subcommand("family-report", "closed-form hypothesis reports");
    std::string f_spec;
    fam->add_option("--family", f_spec,
                    "thick:n,j | selmer:n | uniform:a,b | two-valued:n,r | p1p2:t_max | disc:n,j")
        ->required();
    long f_tb = 0, f_pb = 0;
    auto* f_tb_opt = fam->add_option("--t-budget", f_tb, "specialization budget");
    auto* f_pb_opt = fam->add_option("--p-budget", f_pb, "prime budget");

    // ---- sieve ----
    auto* sie = app.add_subcommand("sieve", "Monte-Carlo non-maximality experiment");
    std::string s_t1, s_t2;
    long s_N = 1000, s_trials = 2000, s_tb = 0, s_pb = 0;
    uint64_t s_seed = 0;
    sie->add_option("--t1", s_t1, "first polynomial JSON")->required();
    sie->add_option("--t2", s_t2, "second polynomial JSON")->required();
    sie->add_option("--N", s_N, "sample box half-width");
    sie->add_option("--trials", s_trials, "number of samples");
    auto* s_seed_opt = sie->add_option("--seed", s_seed, "RNG seed");
    auto* s_tb_opt = sie->add_option("--t-budget", s_tb, "certificate budget");
    auto* s_pb_opt = sie->add_option("--p-budget", s_pb, "certificate budget");

    // ---- densities ----
    auto* den = app.add_subcommand("densities", "cycle-type family densities (CSV)");
    int d_r = 8;
    den->add_option("--r", d_r, "degree")->required();

    // ---- verify-cert ----
    auto* ver = app.add_subcommand("verify-cert", "re-check a stored certificate");
    std::string v_path;
    ver->add_option("cert", v_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    AppConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (cfg.threads && !std::getenv("TUTTELAB_THREADS"))
        setenv("TUTTELAB_THREADS", std::to_string(*cfg.threads).c_str(), 0);

    auto pick = [](const CLI::Option* opt, long flag_value, long fallback) {
        return opt->count() > 0 ? flag_value : fallback;
    };

    if (tutte->parsed()) {
        int sources = (!t_family.empty()) + (!t_graph.empty()) + (!t_table.empty());
        if (sources != 1)
            fail("InvalidParameters", "give exactly one of --family, --graph, --rank-table");
        BiPoly T;
        if (!t_family.empty()) {
            T = family_poly(t_family);
        } else if (!t_graph.empty()) {
            Graph G = graph_from_json(load_json_file(t_graph));
            if (static_cast<int>(G.edges.size()) > cfg.groundset_cap)
                fail("GroundsetTooLarge", "graph exceeds configured cap");
            T = corank_nullity(graphic_rank(G));
        } else {
            RankFunction S = rank_function_from_json(load_json_file(t_table));
            if (S.n > cfg.groundset_cap) fail("GroundsetTooLarge", "table exceeds configured cap");
            T = corank_nullity(S);
        }
        emit(bipoly_to_json(T), cfg);
        return 0;
    }

    if (bry->parsed()) {
        BiPoly U = bipoly_from_json(load_json_file(b_poly));
        auto params = detect_brylawski(U);
        if (!params) fail("NotBrylawski", "no (n, r, c) satisfies the hyperbola identity");
        long hmax = b_hmax >= 0 ? b_hmax : params->n + 2;
        Json j;
        j["n"] = params->n;
        j["r"] = params->r;
        j["c"] = to_string(params->c);
        Json rel = Json::array();
        for (const RelationRow& row : brylawski_relations(U, *params, hmax)) {
            Json rj;
            rj["h"] = row.h;
            rj["lhs"] = to_string(row.lhs);
            rj["rhs"] = to_string(row.rhs);
            rj["ok"] = row.ok;
            rel.push_back(std::move(rj));
        }
        j["relations"] = std::move(rel);
        emit(j, cfg);
        return 0;
    }

    if (irr->parsed()) {
        BiPoly T = bipoly_from_json(load_json_file(i_poly));
        MethodToggle toggle{false, false, false, false};
        std::stringstream ss(i_methods);
        std::string m;
        while (std::getline(ss, m, ',')) {
            if (m == "a")
                toggle.criterion_a = true;
            else if (m == "b")
                toggle.criterion_b = true;
            else if (m == "newton")
                toggle.newton = true;
            else if (m == "modp")
                toggle.modp = true;
            else
                fail("InvalidParameters", "unknown method '" + m + "'");
        }
        IrredVerdict v =
            irreducibility_verdict(T, i_trange, static_cast<uint64_t>(i_prange), toggle);
        emit(verdict_to_json(v), cfg);
        return 0;
    }

    if (gal->parsed()) {
        if (g_poly.empty() == g_family.empty())
            fail("InvalidParameters", "give exactly one of --poly, --family");
        BiPoly T = g_poly.empty() ? family_poly(g_family)
                                  : bipoly_from_json(load_json_file(g_poly));
        long tb = pick(g_tb_opt, g_tb, cfg.t_budget);
        long pb = pick(g_pb_opt, g_pb, cfg.p_budget);
        SymmetricGroupCertificate cert = certify_symmetric(T, tb, static_cast<uint64_t>(pb));
        verify_certificate(cert);  // emitted certificates always re-verify
        emit(certificate_to_json(cert), cfg);
        return 0;
    }

    if (fam->parsed()) {
        long tb = pick(f_tb_opt, f_tb, cfg.t_budget);
        long pb = pick(f_pb_opt, f_pb, cfg.p_budget);
        size_t colon = f_spec.find(':');
        std::string name = colon == std::string::npos ? f_spec : f_spec.substr(0, colon);
        std::vector<long> args;
        if (colon != std::string::npos) {
            std::stringstream ss(f_spec.substr(colon + 1));
            std::string item;
            while (std::getline(ss, item, ','))
                args.push_back(to_long(item, "family argument"));
        }
        Json j;
        if (name == "thick" && args.size() == 2) {
            j = thick_cycle_report_to_json(thick_cycle_theorem_conditions(
                static_cast<int>(args[0]), static_cast<int>(args[1]), tb,
                static_cast<uint64_t>(pb)));
        } else if (name == "selmer" && args.size() == 1) {
            j = selmer_report_to_json(
                selmer_family_report(static_cast<int>(args[0]), tb, static_cast<uint64_t>(pb)));
        } else if (name == "uniform" && args.size() == 2) {
            j = uniform_report_to_json(uniform_precondition_report(
                args[0], args[1], tb, static_cast<uint64_t>(pb)));
        } else if (name == "two-valued" && args.size() == 2) {
            int n = static_cast<int>(args[0]), r = static_cast<int>(args[1]);
            TwoValuedBound bound = two_valued_bound(n, r);
            j["family"] = "two-valued";
            j["n"] = n;
            j["r"] = r;
            j["order_bound"] = bound.bound;
            j["precondition_ok"] = bound.precondition_ok;
            j["index_at_least_3"] = bound.index_at_least_3;
            SymmetricGroupCertificate cert = certify_symmetric(
                two_valued_example(n, r).poly, tb, static_cast<uint64_t>(pb));
            verify_certificate(cert);
            j["certificate"] = certificate_to_json(cert);
        } else if (name == "p1p2" && args.size() == 1) {
            j["family"] = "p1p2";
            j["t_max"] = args[0];
            Json prods = Json::array();
            for (long v : p1p2_search(args[0])) prods.push_back(v);
            j["products"] = std::move(prods);
        } else if (name == "disc" && args.size() == 2) {
            j = disc_search_report_to_json(
                disc_transposition_evidence(static_cast<int>(args[0]),
                                            static_cast<int>(args[1])));
        } else {
            fail("UnknownFamily", "no report for '" + f_spec + "'");
        }
        emit(j, cfg);
        return 0;
    }

    if (sie->parsed()) {
        BiPoly T1 = bipoly_from_json(load_json_file(s_t1));
        BiPoly T2 = bipoly_from_json(load_json_file(s_t2));
        uint64_t seed = s_seed_opt->count() > 0 ? s_seed : cfg.seed;
        long tb = pick(s_tb_opt, s_tb, cfg.t_budget);
        long pb = pick(s_pb_opt, s_pb, cfg.p_budget);
        SieveReport rep = monte_carlo_nonmax(T1, T2, s_N, s_trials, seed, tb, pb);
        emit(sieve_report_to_json(rep), cfg);
        return 0;
    }

    if (den->parsed()) {
        const PatternFamilyKind kinds[] = {PatternFamilyKind::Irr,
                                           PatternFamilyKind::Transpositions,
                                           PatternFamilyKind::LongPrimeCycles};
        if (cfg.output_set && cfg.output != "csv") {
            Json rows = Json::array();
            for (auto kind : kinds) {
                Rat d = family_density(kind, d_r);
                Json row;
                row["kind"] = family_kind_name(kind);
                row["value"] = rat_string(d);
                rows.push_back(std::move(row));
            }
            Json j;
            j["r"] = d_r;
            j["densities"] = std::move(rows);
            emit(j, cfg);
        } else {
            std::cout << "kind,numerator,denominator,approx\n";
            for (auto kind : kinds) {
                Rat d = family_density(kind, d_r);
                double approx = numerator(d).convert_to<double>() /
                                denominator(d).convert_to<double>();
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12g", approx);
                std::cout << family_kind_name(kind) << "," << to_string(numerator(d)) << ","
                          << to_string(denominator(d)) << "," << buf << "\n";
            }
        }
        return 0;
    }

    if (ver->parsed()) {
        SymmetricGroupCertificate cert = certificate_from_json(load_json_file(v_path));
        verify_certificate(cert);
        Json j;
        j["verified"] = true;
        j["r"] = cert.r;
        j["conclusion"] = conclusion_name(cert.conclusion);
        j["evidence_count"] = cert.evidence.size();
        emit(j, cfg);
        return 0;
    }

    fail("InvalidParameters", "no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        Json j;
        j["error"] = Json{{"kind", e.kind()}, {"detail", e.detail()}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        Json j;
        j["error"] = Json{{"kind", "JsonParse"}, {"detail", e.what()}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = Json{{"kind", "Internal"}, {"detail", e.what()}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
}
