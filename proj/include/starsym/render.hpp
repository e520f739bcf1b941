#pragma once

#include "starsym/betti.hpp"
#include "starsym/core.hpp"

#include <string>
#include <vector>

namespace starsym {

// "(F1 F2 F3)(F1 F2)": the layers of the normal form, outermost first.
std::string factored_form(const FMonomial& M);

// Formats: "text", "json", "csv".  Unknown formats throw invalid_input.
std::string render_generators(const StarParams& params,
                              const std::vector<FMonomial>& gens, bool module_only,
                              const std::string& format);

std::string render_invariants(const StarParams& params, const std::string& format);

std::string render_betti(const BettiTable& table, const std::string& format);

}  // namespace starsym
