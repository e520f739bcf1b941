#include "starsym/verify.hpp"

#include "starsym/betti.hpp"
#include "starsym/generators.hpp"
#include "starsym/normalform.hpp"
#include "starsym/order.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <sstream>

namespace starsym {

namespace {

std::string cell_label(const StarParams& p) {
    return "s=" + std::to_string(p.s) + " c=" + std::to_string(p.c) +
           " m=" + std::to_string(p.m);
}

std::string monomial_label(const FMonomial& M) {
    std::string out = "[";
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(M[j]);
    }
    return out + "]";
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Every monomial with exponents <= 3 for small s; a deterministic sample of
// 4096 otherwise.
std::vector<FMonomial> sweep_monomials(int s, std::uint64_t seed) {
    constexpr int kMaxExp = 3;
    std::vector<FMonomial> out;
    if (s <= 6) {
        FMonomial M(s, 0);
        while (true) {
            out.push_back(M);
            int j = 0;
            while (j < s && M[j] == kMaxExp) M[j++] = 0;
            if (j == s) break;
            ++M[j];
        }
        return out;
    }
    std::uint64_t state = seed ^ 0xC0FFEE123456789ull;
    out.reserve(4096);
    for (int n = 0; n < 4096; ++n) {
        FMonomial M(s);
        for (int j = 0; j < s; ++j)
            M[j] = static_cast<int>(splitmix64(state) % (kMaxExp + 1));
        out.push_back(M);
    }
    return out;
}

std::optional<std::string> check_sdeg_with_ladder(
    const StarParams& params, const std::vector<MonomialIdeal>& ladder,
    std::uint64_t seed) {
    const int u_max = 3 * params.m;
    for (const FMonomial& M : sweep_monomials(params.s, seed)) {
        const int d = sdeg(M, params);
        for (int u = 1; u <= u_max; ++u) {
            const bool in = contains(ladder[u - 1], M);
            if (in != (u <= d))
                return cell_label(params) + " monomial " + monomial_label(M) +
                       ": symbolic degree " + std::to_string(d) + " but membership at u=" +
                       std::to_string(u) + " is " + (in ? "true" : "false");
        }
    }
    return std::nullopt;
}

std::vector<MonomialIdeal> build_ladder(const StarParams& params, int u_max,
                                        const OracleLimits& limits) {
    OracleLimits ladder_limits = limits;
    ladder_limits.max_m = std::max(limits.max_m, u_max);
    std::vector<MonomialIdeal> ladder;
    ladder.reserve(u_max);
    for (int u = 1; u <= u_max; ++u) {
        StarParams q = params;
        q.m = u;
        ladder.push_back(symbolic_power_oracle(q, ladder_limits));
    }
    return ladder;
}

}  // namespace

std::optional<std::string> check_generators_cell(const StarParams& params,
                                                 const OracleLimits& limits) {
    std::vector<FMonomial> formula = enumerate_generators(params);
    std::vector<FMonomial> oracle = symbolic_power_oracle(params, limits).gens;
    std::sort(formula.begin(), formula.end());
    std::sort(oracle.begin(), oracle.end());
    if (formula == oracle) return std::nullopt;
    std::string detail = cell_label(params) + ": formula lists " +
                         std::to_string(formula.size()) + " generators, oracle " +
                         std::to_string(oracle.size());
    for (std::size_t k = 0; k < std::min(formula.size(), oracle.size()); ++k)
        if (formula[k] != oracle[k])
            return detail + "; first difference " + monomial_label(formula[k]) +
                   " vs " + monomial_label(oracle[k]);
    return detail;
}

std::optional<std::string> check_sdefect_cell(const StarParams& params,
                                              const OracleLimits& limits) {
    Int formula = sdefect(params);
    Int oracle = sdefect_oracle(params, limits);
    if (formula == oracle) return std::nullopt;
    return cell_label(params) + ": sdefect formula " + formula.str() + ", oracle " +
           oracle.str();
}

std::optional<std::string> check_sdeg_cell(const StarParams& params,
                                           const OracleLimits& limits,
                                           std::uint64_t seed) {
    return check_sdeg_with_ladder(params, build_ladder(params, 3 * params.m, limits),
                                  seed);
}

std::optional<std::string> check_sets_cell(const StarParams& params,
                                           const OracleLimits& limits) {
    std::vector<ColonStep> steps;
    try {
        steps = colon_steps_oracle(params, limits);
    } catch (const check_failure& e) {
        return cell_label(params) + ": " + e.what();
    }
    for (const ColonStep& step : steps) {
        FormSubset observed;
        for (const FMonomial& g : step.colon.gens) {
            if (fdegree(g) != 1)
                return cell_label(params) + " generator " + monomial_label(step.gen) +
                       ": colon generator " + monomial_label(g) + " has degree " +
                       std::to_string(fdegree(g));
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j] == 1) observed.add(static_cast<int>(j) + 1);
        }
        FormSubset predicted = set_elements(step.gen, params);
        if (observed != predicted) {
            std::string got, want;
            for (int j : observed.indices()) got += " F" + std::to_string(j);
            for (int j : predicted.indices()) want += " F" + std::to_string(j);
            return cell_label(params) + " generator " + monomial_label(step.gen) +
                   ": colon spanned by" + got + " but the formula names" + want;
        }
        if (set_size(step.gen, params) != static_cast<int>(step.colon.gens.size()))
            return cell_label(params) + " generator " + monomial_label(step.gen) +
                   ": set size mismatch";
    }
    return std::nullopt;
}

std::optional<std::string> check_betti_cell(const StarParams& params,
                                            const OracleLimits& limits) {
    std::vector<std::pair<long long, int>> pairs;
    try {
        for (const auto& [gen, size] : set_size_oracle(params, limits))
            pairs.emplace_back(fdegree(gen), size);
    } catch (const check_failure& e) {
        return cell_label(params) + ": " + e.what();
    }
    BettiTable from_oracle = betti_from_set_sizes(pairs, params.delta, params);
    BettiTable from_formula = betti_table(params);
    if (from_oracle == from_formula) return std::nullopt;
    for (const auto& [key, value] : from_formula.entries) {
        Int other = from_oracle.get(key.first, key.second);
        if (other != value)
            return cell_label(params) + ": beta(" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + ") formula " + value.str() +
                   ", oracle " + other.str();
    }
    for (const auto& [key, value] : from_oracle.entries)
        if (from_formula.get(key.first, key.second) != value)
            return cell_label(params) + ": beta(" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + ") formula 0, oracle " + value.str();
    return cell_label(params) + ": Betti tables differ";
}

bool VerifyReport::ok() const {
    for (const CellReport& cell : cells)
        if (!cell.failures.empty()) return false;
    return true;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.max_s < 2)
        throw invalid_input("invalid-range: max-s must be >= 2");
    if (options.max_m < 1)
        throw invalid_input("invalid-range: max-m must be >= 1");
    if (options.threads < 1)
        throw invalid_input("invalid-range: threads must be >= 1");

    OracleLimits limits;
    limits.max_s = std::max(limits.max_s, options.max_s);
    limits.max_m = std::max(limits.max_m, 6);
    limits.max_intermediate = 50'000'000;

    // Group the cells by (s, c) so the symbolic-power ladder is built once
    // per group and shared by the membership sweep of every m.
    struct Group {
        int s, c;
        std::vector<int> ms;
    };
    std::vector<Group> groups;
    for (int s = 2; s <= options.max_s; ++s)
        for (int c = 1; c < s; ++c) {
            Group g{s, c, {}};
            int m_top = options.max_m;
            if (c == 2 && s <= 5) m_top = std::max(m_top, 6);
            for (int m = 1; m <= m_top; ++m) g.ms.push_back(m);
            groups.push_back(g);
        }

    std::vector<std::vector<CellReport>> results(groups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= groups.size()) return;
            const Group& group = groups[idx];
            const int u_max = 3 * group.ms.back();
            StarParams base{group.s, group.c, 1, 1};
            std::vector<MonomialIdeal> ladder = build_ladder(base, u_max, limits);
            for (int m : group.ms) {
                StarParams params{group.s, group.c, m, 1};
                CellReport report{params, {}};
                auto record = [&](const char* suite,
                                  const std::optional<std::string>& failure) {
                    if (failure) report.failures.emplace_back(suite, *failure);
                };
                record("generators", check_generators_cell(params, limits));
                record("sdeg", check_sdeg_with_ladder(params, ladder, options.seed));
                record("sets", check_sets_cell(params, limits));
                record("sdefect", check_sdefect_cell(params, limits));
                record("betti", check_betti_cell(params, limits));
                results[idx].push_back(std::move(report));
            }
        }
    };
    std::vector<std::future<void>> futures;
    int thread_count = std::min<int>(options.threads, static_cast<int>(groups.size()));
    for (int k = 1; k < thread_count; ++k)
        futures.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futures) f.get();

    VerifyReport report;
    for (const auto& group_cells : results)
        for (const CellReport& cell : group_cells) report.cells.push_back(cell);
    return report;
}

std::string render_verify(const VerifyReport& report) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const CellReport& cell : report.cells) {
        out << cell_label(cell.params) << " suites generators,sdeg,sets,sdefect,betti: ";
        if (cell.failures.empty()) {
            out << "ok\n";
            continue;
        }
        ++failed;
        out << "FAIL\n";
        for (const auto& [suite, detail] : cell.failures)
            out << "  " << suite << ": " << detail << "\n";
    }
    if (failed == 0)
        out << "verification: all checks passed (" << report.cells.size() << " cells)\n";
    else
        out << "verification: FAILED (" << failed << " of " << report.cells.size()
            << " cells)\n";
    return out.str();
}

}  // namespace starsym
