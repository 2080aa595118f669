#ifndef XPA_IO_HPP
#define XPA_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

#include "xpa/cheeger.hpp"
#include "xpa/family.hpp"
#include "xpa/graph.hpp"
#include "xpa/kernel.hpp"
#include "xpa/obstruction.hpp"
#include "xpa/property_a.hpp"
#include "xpa/symmetrisation.hpp"

namespace xpa {

/// Insertion-ordered JSON, so reports keep a stable, readable key order.
using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, wrong fields, unknown generator.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
/// Parses text, turning parser failures into InputError.
Json parse_json_text(const std::string& text, const std::string& origin);

/// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph load_graph_file(const std::string& path);

/// "cycle:8", "path:5", "complete:4", "hypercube:3", "margulis:4",
/// "random_regular:n:k" (seeded by `seed`).
Graph graph_from_expression(const std::string& expr, std::uint64_t seed = 0);
/// A readable file is parsed as graph JSON, anything else as an expression.
Graph resolve_graph(const std::string& spec, std::uint64_t seed = 0);

/// {"S": int, "rows": {"x": {"z": value, ...}, ...}}; rows absent from the
/// object are empty. Entries outside B_S(x) are rejected.
Kernel kernel_from_json(const Json& j, const Metric& metric);
Json kernel_to_json(const Kernel& k);
Json kernel_to_json(const KernelRows& k, std::size_t S);

/// {"generator": str, "range": [first, last], "params": {"degree": k,
/// "files": [...]}, "seed": int}
GraphFamily family_from_json(const Json& j);
/// "generator:first..last" or a family JSON file.
GraphFamily resolve_family(const std::string& spec, std::uint64_t seed = 0);

Json to_json(const Ratio& r);
Json to_json(const CutResult& cut);
Json to_json(const FamilyDiagnostic& d);
Json to_json(const VariationProfile& p);
Json to_json(const PropaResult& r, bool with_kernel = true);
Json to_json(const SymmetrisationReport& r);
Json to_json(const Inequality& q);
Json to_json(const WitnessReport& w);
Json to_json(const LowerBound& lb);
Json to_json(const IncompatibilityReport& r);

/// index,n,h,k,N_S,LB,V_achieved,verdict rows prefixed by `label`.
std::string incompatibility_csv_rows(const IncompatibilityReport& r, const std::string& label);
std::string incompatibility_csv_header();

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace xpa

#endif
