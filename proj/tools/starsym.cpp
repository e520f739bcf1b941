#include "starsym/betti.hpp"
#include "starsym/generators.hpp"
#include "starsym/render.hpp"
#include "starsym/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct CommonFlags {
    int s = 0, c = 0, m = 0, delta = 1;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--s", flags.s, "number of forms")->required();
    cmd->add_option("--c", flags.c, "codimension")->required();
    cmd->add_option("--m", flags.m, "symbolic power")->required();
    cmd->add_option("--delta", flags.delta, "common degree of the forms");
    cmd->add_option("--format", flags.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

starsym::StarParams to_params(const CommonFlags& flags) {
    starsym::StarParams params{flags.s, flags.c, flags.m, flags.delta};
    params.validate();
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for symbolic powers of star configurations"};
    app.require_subcommand(1);

    CommonFlags gens_flags;
    bool module_only = false;
    std::size_t limit = 0;
    CLI::App* gens = app.add_subcommand("gens", "list the minimal generators");
    add_common(gens, gens_flags);
    gens->add_flag("--module", module_only,
                   "only the generators needed over the lower powers");
    gens->add_option("--limit", limit, "enumeration cap for this run");

    CommonFlags inv_flags;
    CLI::App* invariants =
        app.add_subcommand("invariants", "generator counts, defect, regularity");
    add_common(invariants, inv_flags);

    CommonFlags betti_flags;
    CLI::App* betti = app.add_subcommand("betti", "graded Betti table");
    add_common(betti, betti_flags);

    starsym::VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against the oracle");
    verify->add_option("--max-s", verify_options.max_s, "largest number of forms")
        ->check(CLI::Range(2, 8));
    verify->add_option("--max-m", verify_options.max_m, "largest symbolic power")
        ->check(CLI::Range(1, 6));
    verify->add_option("--threads", verify_options.threads, "parallel cell groups")
        ->check(CLI::Range(1, 256));
    verify->add_option("--seed", verify_options.seed, "sampling seed for large cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (const char* env = std::getenv("STARSYM_LIMIT")) {
            char* end = nullptr;
            unsigned long long cap = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0' || cap == 0) {
                std::cerr << "invalid STARSYM_LIMIT value: " << env << "\n";
                return kExitUsage;
            }
            starsym::set_enumeration_limit(cap);
        }

        if (gens->parsed()) {
            starsym::StarParams params = to_params(gens_flags);
            if (gens->count("--limit") > 0) starsym::set_enumeration_limit(limit);
            std::vector<starsym::FMonomial> list =
                module_only ? starsym::enumerate_module_generators(params)
                            : starsym::enumerate_generators(params);
            std::cout << starsym::render_generators(params, list, module_only,
                                                    gens_flags.format);
        } else if (invariants->parsed()) {
            starsym::StarParams params = to_params(inv_flags);
            std::cout << starsym::render_invariants(params, inv_flags.format);
        } else if (betti->parsed()) {
            starsym::StarParams params = to_params(betti_flags);
            std::cout << starsym::render_betti(starsym::betti_table(params),
                                               betti_flags.format);
        } else if (verify->parsed()) {
            starsym::VerifyReport report = starsym::run_verification(verify_options);
            std::cout << starsym::render_verify(report);
            if (!report.ok()) return kExitVerifyFailed;
        }
    } catch (const starsym::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const starsym::resource_limit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
