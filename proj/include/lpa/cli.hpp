#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/aperiodicity.hpp"
#include "lpa/cycles.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideals.hpp"
#include "lpa/io.hpp"
#include "lpa/matrix.hpp"
#include "lpa/paths.hpp"
#include "lpa/random.hpp"
#include "lpa/talented.hpp"

namespace lpa::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "lpa-matrix";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kPreconditionFailure = 3,
    kCapExceeded = 4,
    kCheckFailed = 5,
};

struct Caps {
    std::size_t lattice = kDefaultLatticeCap;
    std::size_t census = kDefaultCensusCap;
    std::size_t monomials = kDefaultMonomialCap;
};

/// Applies "lattice=N,census=N,monomials=N" (any subset, any order).
inline Caps apply_caps_string(Caps caps, const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "cap setting '" + item + "' needs key=value");
        const auto key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "cap value in '" + item + "' is not a number");
        }
        if (key == "lattice")
            caps.lattice = value;
        else if (key == "census")
            caps.census = value;
        else if (key == "monomials")
            caps.monomials = value;
        else
            throw Error(ErrorCode::ParseError, "unknown cap '" + key + "'");
    }
    return caps;
}

inline Caps caps_from_environment(Caps caps = {}) {
    if (const char* text = std::getenv("LPA_MATRIX_CAPS")) return apply_caps_string(caps, text);
    return caps;
}

enum class Format { Json, Table };

struct AnalysisRequest {
    std::string subcommand;
    std::optional<std::string> input_path;
    std::optional<std::string> inline_json;
    Format format = Format::Json;
    Caps caps;

    bool all = false;                      // analyze
    std::vector<std::string> subset;       // ideals: block form of this set
    bool total = false;                    // cycles
    bool census = false;
    bool acyclic_report = false;
    bool exitless = false;
    std::optional<std::size_t> k;          // paths
    bool oracle = false;
    bool table = false;
    std::optional<std::size_t> verify_shift;                            // talented
    std::optional<std::pair<std::string, std::size_t>> coefficients;
    std::uint64_t seed = 1;                // selftest
    std::size_t rounds = 25;
};

struct Report {
    json body;
    int exit_code = kOk;

    std::string serialize() const { return body.dump(2) + "\n"; }
};

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidGraph: return kParseFailure;
    case ErrorCode::TooLarge: return kCapExceeded;
    default: return kPreconditionFailure;
    }
}

inline json provenance(const Caps& caps) {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"caps", {{"lattice", caps.lattice}, {"census", caps.census}, {"monomials", caps.monomials}}}};
}

inline json graph_summary(const Graph& g) {
    return {{"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"sinks", io::names_of(g, sinks(g))},
            {"sources", io::names_of(g, sources(g))},
            {"strongly_connected", is_strongly_connected(g)}};
}

// ---- per-module payloads -------------------------------------------------

inline json lattice_payload(const Graph& g, const HereditarySaturatedLattice& lattice) {
    json sets = json::array();
    for (const auto& h : lattice.sets) sets.push_back(io::vertex_set_to_json(g, h));
    json hasse = json::array();
    for (auto [lo, hi] : lattice.hasse) hasse.push_back({lo, hi});
    return {{"sets", std::move(sets)}, {"hasse", std::move(hasse)}};
}

inline json series_payload(const Graph& g, const MatrixCompositionSeries& s) {
    json chain = json::array();
    for (const auto& h : s.chain) chain.push_back(io::vertex_set_to_json(g, h));
    json blocks = json::array();
    for (std::size_t k = 0; k < s.diagonal_blocks.size(); ++k)
        blocks.push_back({{"B", io::matrix_to_json(s.diagonal_blocks[k])}, {"A", io::matrix_to_json(s.below_blocks[k])}});
    return {{"chain", std::move(chain)},
            {"length", s.length()},
            {"permutation", io::names_of(g, s.permutation)},
            {"permuted_adjacency", io::matrix_to_json(s.permuted)},
            {"blocks", std::move(blocks)}};
}

inline json block_form_payload(const Graph& g, const VertexSet& h) {
    const auto w = block_form(g, h);
    return {{"set", io::vertex_set_to_json(g, h)},
            {"hereditary", is_hereditary(g, h)},
            {"saturated", is_saturated(g, h)},
            {"hereditary_form", w.hereditary_form},
            {"saturated_form", w.saturated_form},
            {"permutation", io::names_of(g, w.permutation)},
            {"adj_h", io::matrix_to_json(w.adj_h)},
            {"C", io::matrix_to_json(w.c)},
            {"A", io::matrix_to_json(w.a)},
            {"B", io::matrix_to_json(w.b)}};
}

inline json aperiodicity_payload(const Graph& g) {
    const auto r = analyze_aperiodicity(g);
    json out = {{"strongly_connected", r.strongly_connected},
                {"applicable", r.applicable},
                {"aperiodic", r.aperiodic},
                {"wielandt_bound", r.wielandt_bound},
                {"note", r.note},
                {"period", r.period ? json(*r.period) : json(nullptr)},
                {"index", r.index ? json(*r.index) : json(nullptr)}};
    if (r.index) out["positive_representation"] = verify_positive_representation(g, *r.index);
    return out;
}

inline json cycle_json(const Graph& g, const CycleSeq& c) {
    json edges = json::array();
    for (auto e : c.edges()) edges.push_back(g.edge(e).id);
    return {{"vertices", io::names_of(g, c.vertices())}, {"edges", std::move(edges)}, {"length", c.length()}};
}

inline json census_payload(const Graph& g, const CycleCensus& census) {
    json rows = json::array();
    for (const auto& row : census.rows)
        rows.push_back({{"order", io::names_of(g, row.order)}, {"product", row.product.str()}});
    json subsets = json::array();
    for (const auto& [subset, count] : census.per_subset)
        subsets.push_back({{"subset", io::vertex_set_to_json(g, subset)}, {"count", count.str()}});
    return {{"rows", std::move(rows)}, {"per_subset", std::move(subsets)}, {"total", census.total.str()}};
}

inline json acyclic_payload(const AcyclicityReport& r) {
    return {{"acyclic", r.acyclic},
            {"finite_dimensional", r.finite_dimensional},
            {"disjoint_cycles", r.disjoint_cycles},
            {"no_comet_quotient", r.no_comet_quotient},
            {"condition3", r.condition3},
            {"matrix_condition", r.matrix_condition},
            {"conditions_agree", r.conditions_agree}};
}

inline json nilpotency_json(const std::vector<std::optional<std::size_t>>& indices) {
    json out = json::array();
    for (const auto& i : indices) out.push_back(i ? json(*i) : json(nullptr));
    return out;
}

inline json exitless_payload(const Graph& g, std::size_t lattice_cap) {
    json cycles = json::array();
    for (const auto& c : exitless_cycles(g)) {
        const auto f = circulant_block_form(g, c);
        auto entry = cycle_json(g, c);
        entry["block_form"] = {{"permutation", io::names_of(g, f.permutation)},
                               {"N", io::matrix_to_json(f.n)},
                               {"C", io::matrix_to_json(f.c)},
                               {"c_zero", f.c_zero},
                               {"n_circulant", f.n_circulant},
                               {"leading_nilpotency", nilpotency_json(f.leading_nilpotency)}};
        cycles.push_back(std::move(entry));
    }
    json out = {{"cycles", std::move(cycles)}};
    if (auto form = cyclic_minimal_ideal_form(g, lattice_cap)) {
        out["cyclic_minimal_ideal"] = {{"cycle", cycle_json(g, form->cycle)},
                                       {"ideal_set", io::vertex_set_to_json(g, form->ideal_set)},
                                       {"permutation", io::names_of(g, form->permutation)},
                                       {"permuted_adjacency", io::matrix_to_json(form->permuted)},
                                       {"outer_hereditary", form->outer_hereditary},
                                       {"outer_saturated", form->outer_saturated},
                                       {"inner_hereditary", form->inner_hereditary},
                                       {"n_circulant", form->n_circulant}};
    } else {
        out["cyclic_minimal_ideal"] = nullptr;
    }
    return out;
}

inline json norm_table_payload(const NormTable& table) {
    json rows = json::array();
    for (std::size_t s = 0; s < table.powers.size(); ++s)
        rows.push_back({{"s", s},
                        {"row", io::integers_to_json(table.at(s).row)},
                        {"col", io::integers_to_json(table.at(s).col)},
                        {"total", table.at(s).total.str()}});
    return rows;
}

inline json paths_payload(const Graph& g, std::size_t k, bool oracle, bool table, const Caps& caps) {
    const auto formula = p_k(g, k);
    json out = {{"k", k}, {"formula", formula.str()}};
    if (oracle) {
        const auto count = enumerate_monomials(g, k, caps.monomials).size();
        out["oracle"] = std::to_string(count);
        out["match"] = formula == count;
    }
    if (table) out["table"] = norm_table_payload(norm_table(g, k));
    return out;
}

inline json shift_payload(const Graph& g, std::size_t k) {
    const auto check = verify_shift_identity(g, k);
    json vertices = json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const auto c = coefficients_at_level(g, v, k);
        vertices[g.vertex_name(v)] = {{"level", io::integers_to_json(c.level)},
                                      {"remainder", io::monoid_to_json(g, c.remainder)}};
    }
    return {{"k", k}, {"holds", check.holds}, {"counterexample", check.counterexample}, {"vertices", vertices}};
}

inline json coefficients_payload(const Graph& g, const std::string& vertex, std::size_t k) {
    const auto v = g.index_of(vertex);
    const auto expanded = expand_to_level(g, MonoidElement::generator(v, 0), static_cast<std::int64_t>(k));
    const auto c = coefficients_at_level(g, v, k);
    return {{"vertex", vertex},
            {"k", k},
            {"expansion", io::monoid_to_json(g, expanded)},
            {"level", io::integers_to_json(c.level)},
            {"remainder", io::monoid_to_json(g, c.remainder)}};
}

// ---- worked-example regression -------------------------------------------

/// Adjacency matrices of the worked examples, in their printed vertex order.
struct ExampleFixtures {
    ExactMatrix hereditary_example{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}};
    ExactMatrix four_cycle{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
    ExactMatrix four_cycle_extended{{0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {2, 0, 1, 0}};
    ExactMatrix census_example{{1, 1, 0}, {1, 0, 2}, {1, 1, 0}};
    ExactMatrix path_example{{0, 2}, {0, 1}};
};

inline Report worked_examples(const ExampleFixtures& fx = {}) {
    json checks = json::array();
    bool all_pass = true;
    auto check = [&](const std::string& name, const json& expected, const json& actual) {
        const bool pass = expected == actual;
        all_pass = all_pass && pass;
        checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
    };

    {
        const auto g = graph_from_adjacency(fx.hereditary_example);
        const auto lattice = enumerate_lattice(g);
        const auto n = g.vertex_count();
        for (const auto& members : std::vector<std::vector<VertexIndex>>{{}, {0}, {0, 1, 2}, {0, 1, 2, 3}}) {
            const VertexSet h(n, members);
            check("hereditary example: lattice contains " + io::vertex_set_to_json(g, h).dump(), true,
                  lattice.contains(h));
        }
        const VertexSet h2(n, {0, 1});
        check("hereditary example: {v1,v2} hereditary", true, is_hereditary(g, h2));
        check("hereditary example: {v1,v2} saturated", false, is_saturated(g, h2));
        const auto adj = adjacency(g);
        check("hereditary example: size-2 submatrix hereditary", true, submatrix_is_hereditary(adj, 2));
        check("hereditary example: size-2 submatrix saturated", false, submatrix_is_saturated(adj, 2));
        const auto series = composition_series(g);
        json chain = json::array();
        for (const auto& h : series.chain) chain.push_back(io::vertex_set_to_json(g, h));
        check("hereditary example: composition series chain",
              json::parse(R"([[], ["v1"], ["v1","v2","v3"], ["v1","v2","v3","v4"]])"), chain);
        check("hereditary example: composition series length", 3, series.length());
    }
    {
        const auto e = fx.four_cycle;
        const auto e2 = fx.four_cycle_extended;
        check("ordered cycle product: E (1234)", "1", cycles_on_order(e, {0, 1, 2, 3}).str());
        check("ordered cycle product: E' (1234)", "4", cycles_on_order(e2, {0, 1, 2, 3}).str());
        check("ordered cycle product: E' (4321)", "0", cycles_on_order(e2, {3, 2, 1, 0}).str());
        check("ordered cycle product: E' (34)", "1", cycles_on_order(e2, {2, 3}).str());
    }
    {
        const auto g = graph_from_adjacency(fx.census_example);
        const auto census = total_cycles(g, kDefaultCensusCap, true);
        json products = json::array();
        for (const auto& row : census.rows) products.push_back(row.product.str());
        check("cycle census: table products", json::parse(R"(["1","0","0","1","0","2","2","0"])"), products);
        check("cycle census: total", "6", census.total.str());
    }
    {
        const auto g = graph_from_adjacency(fx.path_example);
        const auto table = norm_table(g, 4);
        for (std::size_t s = 1; s <= 4; ++s) {
            check("path example: ||A^" + std::to_string(s) + "||", "3", table.at(s).total.str());
            check("path example: column norms of A^" + std::to_string(s), json::parse(R"(["0","3"])"),
                  io::integers_to_json(table.at(s).col));
        }
        check("path example: p_3 formula", "18", p_k(g, 3).str());
        check("path example: p_3 oracle", 18, enumerate_monomials(g, 3).size());
    }

    json failures = json::array();
    for (const auto& c : checks)
        if (!c["pass"].get<bool>())
            failures.push_back({{"name", c["name"]}, {"expected", c["expected"]}, {"actual", c["actual"]}});
    Report report;
    report.body = {{"subcommand", "paper-examples"},
                   {"status", all_pass ? "ok" : "fail"},
                   {"result", {{"checks", std::move(checks)}, {"diff", std::move(failures)}, {"all_pass", all_pass}}},
                   {"provenance", provenance({})}};
    report.exit_code = all_pass ? kOk : kCheckFailed;
    return report;
}

// ---- randomized self test ------------------------------------------------

inline json selftest_payload(std::uint64_t seed, std::size_t rounds) {
    random::Engine rng(seed);
    std::size_t block_mismatch = 0, cycle_mismatch = 0, path_mismatch = 0, shift_mismatch = 0,
                aperiodic_mismatch = 0;
    for (std::size_t r = 0; r < rounds; ++r) {
        const auto g = random::multigraph(rng, 5, 2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
            const auto h = VertexSet::from_mask(g.vertex_count(), mask);
            const auto w = block_form(g, h);
            if (is_hereditary_saturated(g, h) != (w.hereditary_form && w.saturated_form)) ++block_mismatch;
        }
        if (total_cycles(g).total != find_all_cycles(g).size()) ++cycle_mismatch;
        for (std::size_t k = 0; k <= 4; ++k)
            if (p_k(g, k) != enumerate_monomials(g, k).size()) ++path_mismatch;
        for (std::size_t k = 0; k <= 4; ++k)
            if (!verify_shift_identity(g, k).holds) ++shift_mismatch;
        const auto sc = random::strongly_connected(rng, 5, 2);
        if (sc.edge_count() > 0 && is_aperiodic(sc) != (period(sc) == 1)) ++aperiodic_mismatch;
    }
    const bool pass = block_mismatch + cycle_mismatch + path_mismatch + shift_mismatch + aperiodic_mismatch == 0;
    return {{"seed", seed},
            {"rounds", rounds},
            {"mismatches",
             {{"block_form", block_mismatch},
              {"cycle_formula", cycle_mismatch},
              {"path_formula", path_mismatch},
              {"shift_identity", shift_mismatch},
              {"aperiodicity", aperiodic_mismatch}}},
            {"pass", pass}};
}

// ---- dispatch ------------------------------------------------------------

inline Graph load_request_graph(const AnalysisRequest& req) {
    if (req.input_path.has_value() == req.inline_json.has_value())
        throw Error(ErrorCode::ParseError, "exactly one of --input or --json is required");
    return req.input_path ? io::load_graph(*req.input_path) : io::graph_from_string(*req.inline_json);
}

inline json dispatch(const AnalysisRequest& req, const Graph& g) {
    const auto& caps = req.caps;
    const auto& cmd = req.subcommand;
    if (cmd == "ideals") {
        auto out = lattice_payload(g, enumerate_lattice(g, caps.lattice));
        out["series"] = series_payload(g, composition_series(g, caps.lattice));
        if (!req.subset.empty()) out["block_form"] = block_form_payload(g, io::vertex_set_from_names(g, req.subset));
        return out;
    }
    if (cmd == "series") return {{"series", series_payload(g, composition_series(g, caps.lattice))}};
    if (cmd == "aperiodicity") return aperiodicity_payload(g);
    if (cmd == "cycles") {
        json out = json::object();
        const bool any = req.total || req.census || req.acyclic_report || req.exitless;
        if (req.total || req.census || !any) {
            const auto census = total_cycles(g, caps.census, req.census);
            out["total"] = census.total.str();
            out["enumerated"] = std::to_string(find_all_cycles(g).size());
            if (req.census) out["census"] = census_payload(g, census);
        }
        if (req.acyclic_report) out["acyclic_report"] = acyclic_payload(is_acyclic_equiv(g, caps.lattice, caps.census));
        if (req.exitless) out["exitless"] = exitless_payload(g, caps.lattice);
        return out;
    }
    if (cmd == "paths") {
        if (!req.k) throw Error(ErrorCode::PreconditionViolation, "paths needs --k");
        return paths_payload(g, *req.k, req.oracle, req.table, caps);
    }
    if (cmd == "talented") {
        json out = json::object();
        if (!req.verify_shift && !req.coefficients)
            throw Error(ErrorCode::PreconditionViolation, "talented needs --verify-shift or --coefficients");
        if (req.verify_shift) out["verify_shift"] = shift_payload(g, *req.verify_shift);
        if (req.coefficients)
            out["coefficients"] = coefficients_payload(g, req.coefficients->first, req.coefficients->second);
        return out;
    }
    if (cmd == "analyze") {
        json out = {{"ideals", lattice_payload(g, enumerate_lattice(g, caps.lattice))},
                    {"series", series_payload(g, composition_series(g, caps.lattice))},
                    {"aperiodicity", aperiodicity_payload(g)},
                    {"rank", rank(adjacency(g))},
                    {"adjacency", io::matrix_to_json(adjacency(g))}};
        const auto census = total_cycles(g, caps.census, req.all);
        out["cycles"] = {{"total", census.total.str()}};
        if (req.all) {
            out["cycles"]["census"] = census_payload(g, census);
            out["cycles"]["acyclic_report"] = acyclic_payload(is_acyclic_equiv(g, caps.lattice, caps.census));
            out["cycles"]["exitless"] = exitless_payload(g, caps.lattice);
            json paths = json::array();
            for (std::size_t k = 0; k <= 4; ++k) paths.push_back(paths_payload(g, k, true, false, caps));
            out["paths"] = std::move(paths);
            json shifts = json::array();
            for (std::size_t k = 0; k <= 3; ++k) {
                const auto check = verify_shift_identity(g, k);
                shifts.push_back({{"k", k}, {"holds", check.holds}});
            }
            out["talented"] = std::move(shifts);
        }
        return out;
    }
    throw Error(ErrorCode::PreconditionViolation, "unknown subcommand '" + cmd + "'");
}

inline Report error_report(const AnalysisRequest& req, ErrorCode code, const std::string& message) {
    Report report;
    report.exit_code = exit_code_for(code);
    report.body = {{"subcommand", req.subcommand},
                   {"status", "error"},
                   {"error", {{"code", std::string(to_string(code))}, {"message", message}, {"exit_code", report.exit_code}}},
                   {"provenance", provenance(req.caps)}};
    return report;
}

/// Runs one request. Module failures come back as structured error reports
/// with a nonzero exit code; nothing escapes as an exception.
inline Report run(const AnalysisRequest& req) {
    try {
        if (req.subcommand == "paper-examples") return worked_examples();
        if (req.subcommand == "selftest") {
            auto payload = selftest_payload(req.seed, req.rounds);
            const bool pass = payload["pass"].get<bool>();
            Report report{{{"subcommand", "selftest"},
                           {"status", pass ? "ok" : "fail"},
                           {"result", std::move(payload)},
                           {"provenance", provenance(req.caps)}},
                          pass ? kOk : kCheckFailed};
            return report;
        }
        const auto g = load_request_graph(req);
        Report report;
        report.body = {{"subcommand", req.subcommand},
                       {"status", "ok"},
                       {"graph", graph_summary(g)},
                       {"result", dispatch(req, g)},
                       {"provenance", provenance(req.caps)}};
        return report;
    } catch (const Error& e) {
        return error_report(req, e.code(), e.what());
    } catch (const json::exception& e) {
        return error_report(req, ErrorCode::ParseError, e.what());
    } catch (const std::exception& e) {
        return error_report(req, ErrorCode::PreconditionViolation, e.what());
    }
}

// ---- table rendering -----------------------------------------------------

namespace detail {

inline std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline bool is_flat_array(const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_object() || (x.is_array() && !x.empty() && (x[0].is_object() || x[0].is_array()))) return false;
    return true;
}

inline void render(std::ostringstream& os, const json& v, const std::string& indent) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string key = v.is_object() ? it.key() : "-";
        const auto& val = *it;
        if (val.is_object() || (val.is_array() && !is_flat_array(val))) {
            os << indent << key << ":\n";
            render(os, val, indent + "  ");
        } else {
            os << indent << key << ": " << (val.is_array() ? val.dump() : scalar_text(val)) << "\n";
        }
    }
}

}  // namespace detail

/// Plain-text rendering. A cycle census prints as a two-column table of cyclic
/// orders and their products.
inline std::string render_table(const Report& report) {
    std::ostringstream os;
    const auto& body = report.body;
    const json* census = nullptr;
    if (body.contains("result") && body["result"].is_object()) {
        const auto& result = body["result"];
        if (result.contains("census"))
            census = &result["census"];
        else if (result.contains("cycles") && result["cycles"].is_object() && result["cycles"].contains("census"))
            census = &result["cycles"]["census"];
    }
    if (census != nullptr) {
        os << "cycle order" << std::string(19, ' ') << "| product\n" << std::string(30, '-') << "+--------\n";
        for (const auto& row : (*census)["rows"]) {
            std::string order;
            for (const auto& v : row["order"]) order += (order.empty() ? "" : " -> ") + v.get<std::string>();
            if (order.size() < 30) order += std::string(30 - order.size(), ' ');
            os << order << "| " << row["product"].get<std::string>() << "\n";
        }
        os << "total: " << (*census)["total"].get<std::string>() << "\n\n";
    }
    detail::render(os, body, "");
    return os.str();
}

inline std::string format_report(const Report& report, Format format) {
    return format == Format::Table ? render_table(report) : report.serialize();
}

}  // namespace lpa::cli
