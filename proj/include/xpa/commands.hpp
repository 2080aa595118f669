#ifndef XPA_COMMANDS_HPP
#define XPA_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "xpa/io.hpp"

namespace xpa {

inline constexpr const char* kVersion = "0.1.0";

/// Everything that determines a run. Two runs with equal configs produce
/// byte-identical reports unless `timing` is set.
struct RunConfig {
    std::string command;                ///< analyze | propa | symmetrize | witness | family | gen
    std::string graph;                  ///< graph JSON path or expression such as "cycle:8"
    std::string family;                 ///< family JSON path or "generator:first..last"
    std::string control;                ///< optional control family for `family`
    std::string kernel;                 ///< kernel JSON path; otherwise built from `recipe`
    std::optional<std::string> recipe;  ///< ball_average | lazy_walk | symmetrised | propa_symmetric
    std::size_t R = 1;
    std::size_t S = 1;
    std::optional<std::size_t> s_cut;   ///< defaults to 2S
    std::size_t s_divisor = 0;          ///< family: S = n / divisor when positive
    std::optional<std::size_t> control_S;          ///< control family radius, defaults to S
    std::optional<std::size_t> control_s_divisor;  ///< defaults to s_divisor
    double tol = 1e-9;
    double rowsum_dev = kDefaultRowsumBudget;
    double threshold = kDefaultMarginThreshold;
    double lb_floor = kDefaultBoundFloor;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::size_t exact_cap = kDefaultExactCap;
    bool symmetric = false;
    bool timing = false;

    Json to_json() const;
    /// Throws InputError on a bad command, format or non-positive tolerance.
    void validate() const;
};

struct CommandOutput {
    int exit_code = 0;  ///< 0 ok, 2 bad input, 3 cap exceeded, 4 numerical failure
    std::string text;   ///< JSON or CSV, newline terminated
};

/// Runs one command and renders its report; never throws.
CommandOutput run_command(const RunConfig& config);

/// The report object itself (without rendering). Throws on failure.
Json command_result(const RunConfig& config);

}  // namespace xpa

#endif
