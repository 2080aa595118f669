#include "xpa/commands.hpp"

#include <chrono>
#include <set>

#include "xpa/errors.hpp"

namespace xpa {

namespace {

const std::set<std::string> kCommands{"analyze", "propa", "symmetrize", "witness", "family", "gen"};

Json opt_json(const std::optional<std::string>& s) { return s ? Json(*s) : Json(); }

Graph require_graph(const RunConfig& c) {
    if (c.graph.empty()) throw InputError(c.command + " needs --graph");
    return resolve_graph(c.graph, c.seed);
}

// Reports from this tool can be fed back: a wrapped kernel is looked up
// under result.kernel or result.symmetric_kernel.
Json unwrap_kernel(const Json& j) {
    if (!j.is_object() || !j.contains("result")) return j;
    const auto& r = j.at("result");
    for (const char* key : {"symmetric_kernel", "kernel"})
        if (r.is_object() && r.contains(key)) return r.at(key);
    throw InputError("report does not contain a kernel");
}

Kernel load_kernel(const RunConfig& c, const Graph& g, const Metric& metric, const char* default_recipe) {
    if (!c.kernel.empty())
        return kernel_from_json(unwrap_kernel(parse_json_text(read_text_file(c.kernel), "'" + c.kernel + "'")),
                                metric);
    try {
        return recipe_kernel(parse_recipe(c.recipe.value_or(default_recipe)), g, metric, c.S);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json kernel_summary(const Kernel& k) {
    return Json{{"S", k.support_radius()},
                {"rowsum_dev", k.rowsum_dev()},
                {"symmetric", k.is_symmetric()},
                {"symmetry_defect", k.symmetry_defect()}};
}

Json analyze(const RunConfig& c) {
    const Graph g = require_graph(c);
    if (g.size() < 2) throw InputError("analyze needs at least two vertices");
    const auto cut = cheeger_exact(g, c.exact_cap);
    return Json{{"n", g.size()},
                {"undirected_edges", g.num_directed_edges() / 2},
                {"valency", g.max_degree()},
                {"connected", g.is_connected()},
                {"h", cut.h().value()},
                {"gap", cut.ratio().value()},
                {"h_exact", to_json(cut.h())},
                {"gap_exact", to_json(cut.ratio())},
                {"witness_cut", to_json(cut)},
                {"spectral_lower_bound", g.is_connected() ? cheeger_spectral_lower_bound(g) : 0.0}};
}

Json propa(const RunConfig& c) {
    const Graph g = require_graph(c);
    const Metric metric(g);
    PropaOptions opts;
    opts.symmetric = c.symmetric;
    opts.tol = c.tol;
    const auto r = propa_optimum(metric, c.R, c.S, opts);
    Json j{{"R", c.R}, {"S", c.S}, {"symmetric", c.symmetric}};
    j.update(to_json(r));
    j["heuristics"] = {
        {"ball_average", variation(kernel_ball_average(metric, c.S), metric, c.R).value},
        {"lazy_walk", variation(kernel_lazy_walk(g, metric, c.S, 0.5), metric, c.R).value}};
    if (c.symmetric && c.R == 1) j["lower_bound"] = to_json(variation_lower_bound(g, c.S, 0.0, c.exact_cap));
    return j;
}

Json symmetrize(const RunConfig& c) {
    const Graph g = require_graph(c);
    const Metric metric(g);
    const Kernel phi = load_kernel(c, g, metric, "ball_average");
    SymmetriseOptions opts;
    opts.radius = c.R;
    const std::size_t s_cut = c.s_cut.value_or(2 * phi.support_radius());
    Symmetrised s;
    try {
        s = symmetrise(phi, metric, s_cut, opts);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
    const Kernel out = to_l1_symmetric(s.psi, metric);
    return Json{{"S_cut", s_cut},
                {"input", kernel_summary(phi)},
                {"report", to_json(s.report)},
                {"output", kernel_summary(out)},
                {"symmetric_kernel", kernel_to_json(out)}};
}

Json witness(const RunConfig& c) {
    const Graph g = require_graph(c);
    const Metric metric(g);
    const Kernel phi = load_kernel(c, g, metric, "symmetrised");
    if (!phi.is_symmetric()) throw InputError("witness needs a symmetric kernel");
    const auto w = extract_witness(phi, g, c.exact_cap);
    const auto lb = variation_lower_bound(g, phi.support_radius(), phi.rowsum_dev(), c.exact_cap);
    return Json{{"kernel", kernel_summary(phi)},
                {"witness", to_json(w)},
                {"lower_bound", to_json(lb)},
                {"variation_R1", w.variation_r1},
                {"bound_respected", w.variation_r1 >= lb.value - kWitnessSlack}};
}

struct FamilyRun {
    FamilyDiagnostic diagnostic;
    IncompatibilityReport incompatibility;
};

FamilyRun run_family(const RunConfig& c, const std::string& spec, const RadiusRule& radius) {
    const GraphFamily fam = resolve_family(spec, c.seed);
    IncompatibilityOptions opts;
    try {
        opts.recipe = parse_recipe(c.recipe.value_or("ball_average"));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    opts.radius = radius;
    opts.rowsum_dev = c.rowsum_dev;
    opts.cap = c.exact_cap;
    opts.floor = c.lb_floor;
    FamilyRun r;
    r.diagnostic = expander_verdict(fam, 0, c.threshold, c.exact_cap);
    try {
        r.incompatibility = family_incompatibility(fam, opts);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return r;
}

Json family_json(const FamilyRun& r) {
    return Json{{"diagnostic", to_json(r.diagnostic)}, {"incompatibility", to_json(r.incompatibility)}};
}

Json gen(const RunConfig& c) {
    const Graph g = require_graph(c);
    Json j = graph_to_json(g);
    j["valency"] = g.max_degree();
    j["connected"] = g.is_connected();
    return j;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_primitive()) {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string csv_flat(const Json& result) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(result, "", cells);
    std::string head, row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        head += (i ? "," : "") + cells[i].first;
        row += (i ? "," : "") + cells[i].second;
    }
    return head + "\n" + row + "\n";
}

Json error_json(const RunConfig& c, const std::string& type, const std::string& message) {
    Json cfg;
    try {
        cfg = c.to_json();
    } catch (...) {
        cfg = Json();
    }
    return Json{{"tool", "xpa"}, {"version", kVersion}, {"error", {{"type", type}, {"message", message}}},
                {"config", std::move(cfg)}};
}

}  // namespace

Json RunConfig::to_json() const {
    return Json{{"command", command},
                {"graph", graph},
                {"family", family},
                {"control", control},
                {"kernel", kernel},
                {"recipe", opt_json(recipe)},
                {"R", R},
                {"S", S},
                {"S_cut", s_cut ? Json(*s_cut) : Json()},
                {"S_divisor", s_divisor},
                {"control_S", control_S ? Json(*control_S) : Json()},
                {"control_S_divisor", control_s_divisor ? Json(*control_s_divisor) : Json()},
                {"tol", tol},
                {"rowsum_dev", rowsum_dev},
                {"threshold", threshold},
                {"lb_floor", lb_floor},
                {"seed", seed},
                {"format", format},
                {"exact_cap", exact_cap},
                {"symmetric", symmetric},
                {"timing", timing}};
}

void RunConfig::validate() const {
    if (!kCommands.contains(command)) throw InputError("unknown command '" + command + "'");
    if (format != "json" && format != "csv") throw InputError("format must be json or csv");
    if (!(tol > 0.0)) throw InputError("tol must be positive");
    if (!(threshold > 0.0)) throw InputError("threshold must be positive");
    if (!(lb_floor > 0.0)) throw InputError("lb_floor must be positive");
    if (!(rowsum_dev >= 0.0)) throw InputError("rowsum_dev must be non-negative");
    if (R < 1 && command == "propa") throw InputError("propa needs R >= 1");
}

namespace {

Json dispatch(const RunConfig& c, std::string* csv) {
    c.validate();
    if (c.command == "analyze") return analyze(c);
    if (c.command == "propa") return propa(c);
    if (c.command == "symmetrize") return symmetrize(c);
    if (c.command == "witness") return witness(c);
    if (c.command == "gen") return gen(c);

    if (c.family.empty()) throw InputError("family needs --family");
    const auto primary = run_family(c, c.family, {c.S, c.s_divisor});
    Json j{{"primary", family_json(primary)}};
    if (csv) *csv = incompatibility_csv_header() + incompatibility_csv_rows(primary.incompatibility, "primary");
    if (!c.control.empty()) {
        const auto control = run_family(c, c.control,
                                        {c.control_S.value_or(c.S), c.control_s_divisor.value_or(c.s_divisor)});
        j["control"] = family_json(control);
        if (csv) *csv += incompatibility_csv_rows(control.incompatibility, "control");
        const auto& cr = control.incompatibility.rows;
        j["contrast"] = {{"primary_obstructed", primary.incompatibility.obstructed},
                         {"control_obstructed", control.incompatibility.obstructed},
                         {"primary_inf_LB", primary.incompatibility.inf_bound},
                         {"control_inf_LB", control.incompatibility.inf_bound},
                         {"control_last_V", cr.empty() ? Json() : Json(cr.back().achieved)}};
    }
    return j;
}

}  // namespace

Json command_result(const RunConfig& c) { return dispatch(c, nullptr); }

CommandOutput run_command(const RunConfig& c) {
    const auto start = std::chrono::steady_clock::now();
    CommandOutput out;
    Json report;
    Json result;
    std::string csv;
    try {
        result = dispatch(c, &csv);
    } catch (const InputError& e) {
        out.exit_code = 2;
        report = error_json(c, "input", e.what());
    } catch (const CapExceeded& e) {
        out.exit_code = 3;
        report = error_json(c, "cap_exceeded", e.what());
    } catch (const std::exception& e) {
        out.exit_code = 4;
        report = error_json(c, "failure", e.what());
    }
    if (out.exit_code != 0) {
        out.text = report.dump(2) + "\n";
        return out;
    }

    const Json cfg = c.to_json();
    if (c.format == "csv") {
        out.text = c.command == "family" ? csv : csv_flat(result);
        return out;
    }

    report = Json{{"tool", "xpa"},
                  {"version", kVersion},
                  {"config", cfg},
                  {"config_hash", fnv1a_hex(cfg.dump())},
                  {"result", std::move(result)}};
    if (c.timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["duration_ms"] = ms;
    }
    out.text = report.dump(2) + "\n";
    return out;
}

}  // namespace xpa
