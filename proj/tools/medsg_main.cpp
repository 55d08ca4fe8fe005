#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "medsg/commands.hpp"
#include "medsg/errors.hpp"

namespace {

int exit_code_for(medsg::ErrorCode code) {
    switch (code) {
        case medsg::ErrorCode::ParseError:
            return 2;
        case medsg::ErrorCode::EmptyGenerators:
        case medsg::ErrorCode::ZeroGenerator:
        case medsg::ErrorCode::GeneratorTooLarge:
        case medsg::ErrorCode::NonCoprime:
            return 3;
        case medsg::ErrorCode::SearchSpaceTooLarge:
            return 5;
        case medsg::ErrorCode::InternalDisagreement:
            return 6;
        default:
            return 4; // domain preconditions (not in S, r > t, ...)
    }
}

std::vector<std::int64_t> gens_from(const std::vector<std::string>& words) {
    std::string joined;
    for (const std::string& w : words) {
        if (!joined.empty()) joined += ' ';
        joined += w;
    }
    return medsg::parse_generators(joined);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on numerical semigroups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    std::vector<std::string> info_gens, apery_gens, closure_gens, check_gens, extend_gens;

    CLI::App* info = app.add_subcommand("info", "invariants and predicate verdicts");
    info->add_option("generators", info_gens, "generators, e.g. 7,9,11,15")->required();

    CLI::App* apery = app.add_subcommand("apery", "Apery set with poset minima and maxima");
    apery->add_option("generators", apery_gens)->required();
    std::int64_t apery_element = 0;
    apery->add_option("--element", apery_element, "element of S")->required();
    bool apery_hat = false;
    apery->add_flag("--hat", apery_hat, "swap 0 for the element itself");

    CLI::App* closure = app.add_subcommand("med-closure", "MED closure of the input");
    closure->add_option("generators", closure_gens)->required();
    std::string method = "all";
    closure->add_option("--method", method, "closure method")
        ->check(CLI::IsMember({"saturation", "effective", "formula", "intersection", "all"}))
        ->capture_default_str();
    bool trace = false;
    closure->add_flag("--trace", trace, "print the saturation steps");

    CLI::App* check = app.add_subcommand("check", "predicate and bound checks");
    check->add_option("generators", check_gens)->required();
    std::int64_t arf_z = 0;
    CLI::Option* arf_opt = check->add_option("--arf-element", arf_z, "test one Arf element");
    bool w_med = false, w_arf = false, w_sym = false;
    check->add_flag("--is-med", w_med, "maximal embedding dimension?");
    check->add_flag("--is-arf", w_arf, "Arf semigroup?");
    check->add_flag("--is-symmetric", w_sym, "symmetric semigroup?");
    std::int64_t bounds_r = 0;
    CLI::Option* bounds_opt = check->add_option("--bounds", bounds_r, "eq (1) + BLV checks for r");

    CLI::App* extend = app.add_subcommand("extend", "adjoin the r largest pseudo-Frobenius gaps");
    extend->add_option("generators", extend_gens)->required();
    std::int64_t pf_r = 0;
    extend->add_option("--pf", pf_r, "how many PF gaps to adjoin")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized cross-method self checks");
    std::uint64_t seed = 0;
    std::int64_t samples = 100, m_max = 8, gen_max = 60;
    fuzz->add_option("--seed", seed)->capture_default_str();
    fuzz->add_option("--samples", samples)->capture_default_str();
    fuzz->add_option("--m-max", m_max)->capture_default_str();
    fuzz->add_option("--gen-max", gen_max)->capture_default_str();

    CLI::App* bench = app.add_subcommand("bench", "closure method timings as CSV");
    std::vector<std::string> families;
    bench->add_option("--family", families, "e.g. m=7;gens=24,33;scale=2;steps=6");
    std::int64_t reps = 5;
    bench->add_option("--reps", reps)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        medsg::Json doc;
        int rc = 0;
        if (info->parsed()) {
            doc = medsg::cmd_info(gens_from(info_gens));
        } else if (apery->parsed()) {
            doc = medsg::cmd_apery(gens_from(apery_gens), apery_element, apery_hat);
        } else if (closure->parsed()) {
            doc = medsg::cmd_med_closure(gens_from(closure_gens), method, trace);
        } else if (check->parsed()) {
            int chosen = (arf_opt->count() > 0) + w_med + w_arf + w_sym + (bounds_opt->count() > 0);
            if (chosen != 1)
                throw medsg::Error(medsg::ErrorCode::ParseError,
                                   "choose exactly one of --arf-element, --is-med, --is-arf, "
                                   "--is-symmetric, --bounds");
            std::vector<std::int64_t> gens = gens_from(check_gens);
            if (arf_opt->count() > 0)
                doc = medsg::cmd_check_arf_element(gens, arf_z);
            else if (bounds_opt->count() > 0)
                doc = medsg::cmd_check_bounds(gens, bounds_r);
            else
                doc = medsg::cmd_check_predicate(gens, w_med   ? "is-med"
                                                       : w_arf ? "is-arf"
                                                               : "is-symmetric");
        } else if (extend->parsed()) {
            doc = medsg::cmd_extend(gens_from(extend_gens), pf_r);
        } else if (fuzz->parsed()) {
            medsg::FuzzOutcome out = medsg::cmd_fuzz(seed, samples, m_max, gen_max);
            doc = std::move(out.doc);
            rc = out.failed ? 1 : 0;
        } else if (bench->parsed()) {
            doc = medsg::cmd_bench(families, reps);
        }
        std::cout << (format == "machine" ? medsg::render_machine(doc)
                                          : medsg::render_text(doc));
        return rc;
    } catch (const medsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n"; // what() already names the code
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 6;
    }
}
