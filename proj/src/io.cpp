#include "xpa/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace xpa {

namespace {

std::size_t parse_index(const std::string& s, const char* what) {
    std::size_t v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || s.empty())
        throw InputError(std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
    return v;
}

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + origin + ": " + e.what());
    }
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    if (!j.contains("n") && j.contains("result")) return graph_from_json(j.at("result"));
    const std::size_t n = get_size(j, "n");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw InputError("graph JSON needs an 'edges' array");
    std::vector<DirectedEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("each edge must be a pair of vertex indices");
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InputError("edge endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(n, edges);
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.undirected_edges()) edges.push_back({u, v});
    return Json{{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph load_graph_file(const std::string& path) {
    return graph_from_json(parse_json_text(read_text_file(path), "'" + path + "'"));
}

Graph graph_from_expression(const std::string& expr, std::uint64_t seed) {
    const auto parts = split(expr, ':');
    if (parts.size() < 2) throw InputError("graph expression must look like 'name:size', got '" + expr + "'");
    const std::string& name = parts[0];
    const std::size_t a = parse_index(parts[1], "graph size");
    try {
        if (name == "random_regular") {
            if (parts.size() != 3) throw InputError("random_regular needs 'random_regular:n:k'");
            return random_regular(a, parse_index(parts[2], "valency"), seed);
        }
        if (parts.size() != 2) throw InputError("unexpected extra fields in '" + expr + "'");
        if (name == "cycle") return cycle(a);
        if (name == "path") return path(a);
        if (name == "complete") return complete(a);
        if (name == "hypercube") return hypercube(a);
        if (name == "margulis") return margulis(a);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown graph generator '" + name + "'");
}

Graph resolve_graph(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::is_regular_file(spec)) return load_graph_file(spec);
    return graph_from_expression(spec, seed);
}

Kernel kernel_from_json(const Json& j, const Metric& metric) {
    if (!j.is_object()) throw InputError("kernel JSON must be an object");
    const std::size_t S = get_size(j, "S");
    if (!j.contains("rows") || !j.at("rows").is_object()) throw InputError("kernel JSON needs a 'rows' object");
    std::vector<SparseRow> rows(metric.size());
    for (const auto& [xk, row] : j.at("rows").items()) {
        const std::size_t x = parse_index(xk, "row index");
        if (x >= metric.size()) throw InputError("kernel row " + xk + " outside the graph");
        if (!row.is_object()) throw InputError("kernel row " + xk + " must be an object");
        SparseRow r;
        for (const auto& [zk, v] : row.items()) {
            const std::size_t z = parse_index(zk, "column index");
            if (z >= metric.size()) throw InputError("kernel entry " + xk + "," + zk + " outside the graph");
            if (!v.is_number()) throw InputError("kernel entry " + xk + "," + zk + " must be a number");
            if (!metric.within(x, z, S))
                throw InputError("kernel entry " + xk + "," + zk + " lies outside B_S(x)");
            r.push_back({z, v.get<double>()});
        }
        rows[x] = canonical_row(std::move(r));
    }
    try {
        return Kernel(std::move(rows), metric);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json kernel_to_json(const KernelRows& k, std::size_t S) {
    Json rows = Json::object();
    for (Vertex x = 0; x < k.size(); ++x) {
        Json row = Json::object();
        for (const auto& e : k.row(x)) row[std::to_string(e.index)] = e.value;
        rows[std::to_string(x)] = std::move(row);
    }
    return Json{{"S", S}, {"rows", std::move(rows)}};
}

Json kernel_to_json(const Kernel& k) { return kernel_to_json(k, k.support_radius()); }

GraphFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("family JSON must be an object");
    if (!j.contains("generator") || !j.at("generator").is_string())
        throw InputError("family JSON needs a 'generator' string");
    if (!j.contains("range") || !j.at("range").is_array() || j.at("range").size() != 2)
        throw InputError("family JSON needs 'range': [first, last]");
    const Json range{{"first", j.at("range")[0]}, {"last", j.at("range")[1]}};
    GeneratorParams params;
    if (j.contains("params")) {
        const auto& p = j.at("params");
        if (!p.is_object()) throw InputError("'params' must be an object");
        if (p.contains("degree")) params.degree = get_size(p, "degree");
        if (p.contains("files")) {
            if (!p.at("files").is_array()) throw InputError("'params.files' must be an array");
            for (const auto& f : p.at("files")) {
                if (!f.is_string()) throw InputError("'params.files' entries must be strings");
                params.files.push_back(f.get<std::string>());
            }
        }
    }
    const std::uint64_t seed = j.contains("seed") ? get_size(j, "seed") : 0;
    try {
        return make_family(j.at("generator").get<std::string>(), get_size(range, "first"), get_size(range, "last"),
                           params, seed);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

GraphFamily resolve_family(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::is_regular_file(spec)) {
        Json j = parse_json_text(read_text_file(spec), "'" + spec + "'");
        if (!j.contains("seed")) j["seed"] = seed;
        return family_from_json(j);
    }
    const auto parts = split(spec, ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw InputError("family must be a JSON file or 'generator:first..last[:degree]', got '" + spec + "'");
    const auto dots = parts[1].find("..");
    if (dots == std::string::npos) throw InputError("family range must look like 'first..last'");
    GeneratorParams params;
    if (parts.size() == 3) params.degree = parse_index(parts[2], "degree");
    try {
        return make_family(parts[0], parse_index(parts[1].substr(0, dots), "range start"),
                           parse_index(parts[1].substr(dots + 2), "range end"), params, seed);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json to_json(const Ratio& r) { return Json{{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

Json to_json(const CutResult& cut) {
    return Json{{"subset", cut.subset},
                {"boundary_size", cut.boundary_size},
                {"ratio", to_json(cut.ratio())},
                {"upper_bound", cut.upper_bound},
                {"disconnected", cut.disconnected}};
}

Json to_json(const FamilyDiagnostic& d) {
    Json exact = Json::array();
    for (const auto& e : d.exact) exact.push_back(e ? to_json(*e) : Json());
    Json heuristic = Json::array();
    for (bool b : d.heuristic) heuristic.push_back(b);
    return Json{{"sizes", d.sizes},
                {"margins", d.margins},
                {"exact_h", std::move(exact)},
                {"heuristic", std::move(heuristic)},
                {"threshold", d.threshold},
                {"inf_margin", d.inf_margin},
                {"decay_exponent", d.decay_exponent ? Json(*d.decay_exponent) : Json()},
                {"sizes_increasing", d.sizes_increasing},
                {"expander_consistent", d.expander_consistent},
                {"any_heuristic", d.any_heuristic}};
}

Json to_json(const VariationProfile& p) {
    return Json{{"R", p.radius}, {"value", p.value}, {"argmax", {p.argmax.first, p.argmax.second}}};
}

Json to_json(const PropaResult& r, bool with_kernel) {
    Json j{{"V_star", r.value},
           {"upper", r.upper},
           {"lower", r.lower},
           {"certificate_gap", r.gap()},
           {"rounds", r.rounds},
           {"cuts", r.cuts},
           {"pivots", r.pivots},
           {"profile", to_json(r.profile)}};
    if (with_kernel) j["kernel"] = kernel_to_json(r.kernel);
    return j;
}

Json to_json(const SymmetrisationReport& r) {
    return Json{{"symmetry_defect", r.symmetry_defect},
                {"unital_defect", r.unital_defect},
                {"truncation_error", r.truncation_error},
                {"propagation", r.propagation},
                {"variation_before", r.variation_before},
                {"variation_after", r.variation_after},
                {"bound_check", r.bound_check},
                {"R", r.radius},
                {"rowsum_slack", r.rowsum_slack},
                {"sqrt_residual", r.sqrt_residual},
                {"isometry_defect", r.isometry_defect}};
}

Json to_json(const Inequality& q) {
    return Json{{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"slack", q.slack()}, {"holds", q.holds()}};
}

namespace {

Json to_json(const CheegerEstimate& h) {
    return Json{{"value", h.h}, {"source", h.source == HSource::Exact ? "exact" : "spectral"}};
}

Json list_json(const std::vector<Inequality>& qs) {
    Json a = Json::array();
    for (const auto& q : qs) a.push_back(to_json(q));
    return a;
}

}  // namespace

Json to_json(const WitnessReport& w) {
    return Json{{"basepoint", w.basepoint},
                {"f", std::vector<double>(w.f.values().begin(), w.f.values().end())},
                {"n", w.n},
                {"S", w.support_radius},
                {"N_S", w.ball_size},
                {"k", w.k},
                {"directed_edges", w.directed_edges},
                {"sum_f", w.sum_f},
                {"rowsum_e", w.rowsum_e},
                {"l1_norm", w.l1_norm},
                {"quotient_norm", w.quotient_norm},
                {"coboundary_l1", w.coboundary_l1},
                {"ratio", w.ratio ? Json(*w.ratio) : Json()},
                {"edge_sum_e", w.edge_sum_e},
                {"mean_edge_sum", w.mean_edge_sum},
                {"max_edge_variation", w.max_edge_variation},
                {"variation_R1", w.variation_r1},
                {"h", to_json(w.h)},
                {"sharper_bound", w.sharper_bound},
                {"bounds",
                 {{"a", list_json(w.sum_identity)},
                  {"b", to_json(w.norm_upper)},
                  {"c", to_json(w.norm_lower)},
                  {"d", list_json(w.coboundary_chain)},
                  {"gap", to_json(w.gap_check)}}},
                {"all_hold", w.holds()}};
}

Json to_json(const LowerBound& lb) {
    return Json{{"LB", lb.value},   {"h", to_json(lb.h)},  {"k", lb.k},
                {"n", lb.n},        {"N_S", lb.ball_size}, {"rowsum_dev", lb.rowsum_dev},
                {"vacuous", lb.vacuous}};
}

Json to_json(const IncompatibilityReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"index", row.index},
                            {"n", row.n},
                            {"S", row.S},
                            {"bound", to_json(row.bound)},
                            {"V_achieved", row.achieved},
                            {"kernel_symmetric", row.kernel_symmetric},
                            {"kernel_rowsum_dev", row.kernel_rowsum_dev},
                            {"kernel_bound", row.kernel_bound},
                            {"verdict", row.verdict(r.floor)}});
    return Json{{"generator", r.generator},
                {"recipe", to_string(r.recipe)},
                {"radius", {{"constant", r.radius.constant}, {"divisor", r.radius.divisor}}},
                {"rowsum_dev", r.rowsum_dev},
                {"rows", std::move(rows)},
                {"floor", r.floor},
                {"inf_LB", r.inf_bound},
                {"positive", r.positive},
                {"verdict", r.vacuous ? "vacuous" : (r.obstructed ? "obstructed" : "not obstructed")},
                {"obstructed", r.obstructed},
                {"vacuous", r.vacuous},
                {"V_slope", r.achieved_slope ? Json(*r.achieved_slope) : Json()},
                {"LB_slope", r.bound_slope ? Json(*r.bound_slope) : Json()}};
}

std::string incompatibility_csv_header() { return "family,index,n,h,k,N_S,LB,V_achieved,verdict\n"; }

std::string incompatibility_csv_rows(const IncompatibilityReport& r, const std::string& label) {
    std::string out;
    for (const auto& row : r.rows) {
        out += label + "," + std::to_string(row.index) + "," + std::to_string(row.n) + "," +
               format_double(row.bound.h.h) + "," + std::to_string(row.bound.k) + "," +
               std::to_string(row.bound.ball_size) + "," + format_double(row.bound.value) + "," +
               format_double(row.achieved) + "," + row.verdict(r.floor) + "\n";
    }
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace xpa
