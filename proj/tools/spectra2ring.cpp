#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "s2r/json_io.hpp"
#include "s2r/ring_level.hpp"
#include "s2r/support.hpp"
#include "s2r/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadRingFile = 3;

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    if (const char* s = std::getenv("SPECTRA2RING_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

s2r::GradedRing load_ring(const std::string& source, std::uint64_t seed) {
    for (const std::string& name : s2r::fixture_names())
        if (source == name) return s2r::fixture_by_name(name);
    if (source == "random") return s2r::random_ring(seed);
    std::ifstream in(source);
    if (!in) throw s2r::RingFormatError("cannot open ring file: " + source);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw s2r::RingFormatError(std::string("invalid JSON: ") + e.what());
    }
    return s2r::ring_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of finite graded eps-commutative rings"};
    app.require_subcommand(1);

    std::string ring_source;
    std::string format = "json";
    std::string suite = "all";
    std::string away_selector;
    std::uint64_t seed = seed_from_env_or(1);
    int at_prime = -1;

    auto* spec_cmd = app.add_subcommand("spec", "print the homogeneous spectrum");
    spec_cmd->add_option("--ring", ring_source, "fixture name, file path, or 'random'")->required();
    spec_cmd->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    spec_cmd->add_option("--seed", seed, "seed for --ring random");

    auto* loc_cmd = app.add_subcommand("localize", "localize and print ring + spectrum");
    loc_cmd->add_option("--ring", ring_source, "fixture name, file path, or 'random'")->required();
    auto* at_opt = loc_cmd->add_option("--at", at_prime, "prime index (localize at S_p)");
    auto* away_opt =
        loc_cmd->add_option("--away", away_selector, "morphism selector (localize away, S_r)");
    at_opt->excludes(away_opt);
    away_opt->excludes(at_opt);
    loc_cmd->add_option("--seed", seed, "seed for --ring random");

    auto* rho_cmd = app.add_subcommand("rho", "print the table prime -> rho(sigma(prime))");
    rho_cmd->add_option("--ring", ring_source, "fixture name, file path, or 'random'")->required();
    rho_cmd->add_option("--seed", seed, "seed for --ring random");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--ring", ring_source, "fixture name, file path, or 'random'")
        ->required();
    verify_cmd->add_option("--suite", suite, "all, ideals, loc or support")
        ->check(CLI::IsMember({"all", "ideals", "loc", "support"}));
    verify_cmd->add_option("--seed", seed, "seed for --ring random");

    auto* ring_cmd = app.add_subcommand("ring", "fixture utilities");
    auto* list_cmd = ring_cmd->add_subcommand("list", "list fixture names");
    auto* dump_cmd = ring_cmd->add_subcommand("dump", "dump a ring as JSON");
    dump_cmd->add_option("--ring", ring_source, "fixture name, file path, or 'random'")
        ->required();
    dump_cmd->add_option("--seed", seed, "seed for --ring random");
    ring_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list_cmd) {
            for (const std::string& n : s2r::fixture_names()) std::cout << n << "\n";
            return 0;
        }

        if (*dump_cmd) {
            s2r::GradedRing R = load_ring(ring_source, seed);
            std::cout << s2r::ring_to_json(R).dump(2) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            s2r::GradedRing R = load_ring(ring_source, seed);
            auto results = s2r::run_verify(R, suite);
            for (const auto& r : results)
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
            return s2r::all_passed(results) ? 0 : kExitVerifyFailed;
        }

        s2r::GradedRing R = load_ring(ring_source, seed);
        auto violations = R.check_axioms();
        if (!violations.empty())
            throw s2r::RingFormatError("ring fails axioms: " + violations.front().kind + " (" +
                                       violations.front().detail + ")");
        auto t = std::make_shared<const s2r::TwoRing>(R);

        if (*spec_cmd) {
            s2r::SpecSpace sp = s2r::enumerate_primes(t);
            if (format == "dot")
                std::cout << s2r::spec_to_dot(sp);
            else
                std::cout << s2r::spec_to_json(sp).dump(2) << "\n";
            return 0;
        }

        if (*loc_cmd) {
            s2r::MultSystem S = [&] {
                if (at_opt->count() > 0) {
                    s2r::SpecSpace sp = s2r::enumerate_primes(t);
                    if (at_prime < 0 || at_prime >= static_cast<int>(sp.primes.size()))
                        throw CLI::ValidationError("--at", "prime index out of range");
                    return s2r::MultSystem::at_prime(t, sp.primes[at_prime]);
                }
                if (away_opt->count() > 0)
                    return s2r::MultSystem::away_from(t, s2r::parse_morphism(*t, away_selector));
                throw CLI::ValidationError("localize", "exactly one of --at/--away is required");
            }();
            s2r::Localization L(t, S);
            std::cout << s2r::localization_to_json(L).dump(2) << "\n";
            return 0;
        }

        if (*rho_cmd) {
            std::cout << s2r::rho_table_to_json(*t).dump(2) << "\n";
            return 0;
        }
    } catch (const s2r::RingFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadRingFile;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
