#pragma once

/**
 * @file commands.hpp
 * @brief The batch commands behind the CLI, exposed as a library so tests can
 *        drive them directly.
 *
 * Exit-code contract: 0 = verified/passed, 1 = falsified (the report carries a
 * witness), 2 = usage or internal error (commands signal it by throwing).
 * JSON reports are byte-identical for identical inputs; anything human-facing
 * or timing-related goes into the summary, which the CLI prints to stderr.
 */

#include "jordangh/json_io.hpp"

#include <optional>
#include <string>

namespace jordangh {

struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;
    std::string summary;  // one stderr line; not part of the deterministic output
};

/// Computes one solution space; with a golden file, fails (exit 1) on dimension drift.
CommandResult run_solve(const std::string& algebra_spec, const std::string& field_spec,
                        const std::string& mode_spec,
                        const std::optional<std::string>& golden_path);

/// Upper-triangular theorem at size n: the corner-assumption Jordan space must
/// equal the gh space on T_n. n >= 2.
CommandResult run_verify_theorem1(std::size_t n, const std::string& field_spec,
                                  const std::optional<std::string>& golden_path);

/// Full-matrix theorem at size n: the Jordan space must equal the gh space on
/// M_n, with no corner assumption imposed. n >= 2.
CommandResult run_verify_theorem2(std::size_t n, const std::string& field_spec,
                                  const std::optional<std::string>& golden_path);

/// Reproduces the T_2 counterexample triple and both checker reports.
/// Exit 0 iff the Jordan check passes and the gh check fails at (e11, e11)
/// with defect exactly -e12.
CommandResult run_counterexample(const std::string& field_spec, std::uint64_t trials,
                                 std::uint64_t seed);

/// Cross-validates the solver against the independent oracle on one algebra:
/// dense-vs-sparse nullity agreement, solution-basis soundness under the
/// checkers, the monotonicity chain, and the swap-identity suite.
CommandResult run_oracle_check(const std::string& algebra_spec,
                               const std::string& field_spec, std::uint64_t trials,
                               std::uint64_t seed);

/// Golden-file key for one solved instance, e.g. "tn:3|Q|jordan".
std::string golden_key(const std::string& algebra_spec, const std::string& field_spec,
                       const std::string& mode_spec);

}  // namespace jordangh
