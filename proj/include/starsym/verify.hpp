#pragma once

#include "starsym/core.hpp"
#include "starsym/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starsym {

// Cross-checks of the counting formulas against the brute-force oracle on one
// parameter cell.  Each returns the first counterexample found, or nothing.
std::optional<std::string> check_generators_cell(const StarParams& params,
                                                 const OracleLimits& limits);
std::optional<std::string> check_sdefect_cell(const StarParams& params,
                                              const OracleLimits& limits);
// Sweeps monomials with exponents <= 3 (a seeded sample of 4096 when s >= 7)
// and checks membership in every symbolic power up to 3m against sdeg.
std::optional<std::string> check_sdeg_cell(const StarParams& params,
                                           const OracleLimits& limits,
                                           std::uint64_t seed);
// Checks every successive colon is spanned by single forms matching
// set_elements / set_size.
std::optional<std::string> check_sets_cell(const StarParams& params,
                                           const OracleLimits& limits);
// Checks betti_table against the table assembled from oracle colon sizes.
std::optional<std::string> check_betti_cell(const StarParams& params,
                                            const OracleLimits& limits);

struct VerifyOptions {
    int max_s = 6;
    int max_m = 4;
    int threads = 1;
    std::uint64_t seed = 0;
};

struct CellReport {
    StarParams params;
    // (suite name, counterexample); empty when the cell passed.
    std::vector<std::pair<std::string, std::string>> failures;
};

struct VerifyReport {
    std::vector<CellReport> cells;
    bool ok() const;
};

// Runs all suites over s <= max_s, c < s, m <= max_m, plus the codimension-2
// cells with s <= 5, m <= 6.  Deterministic for a fixed seed.
VerifyReport run_verification(const VerifyOptions& options);

std::string render_verify(const VerifyReport& report);

}  // namespace starsym
