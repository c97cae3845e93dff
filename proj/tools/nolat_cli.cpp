// nolat: construct lattices, analyze them, and replay the verification suite.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 usage or input error.

#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/json_io.hpp"
#include "nolat/perturbation.hpp"
#include "nolat/report.hpp"
#include "nolat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace nolat;

namespace {

struct Globals {
    std::string out;
    bool strict = false;
    std::size_t max_dim = 12;
    unsigned jobs = 1;
};

void emit(const Globals& g, const Json& j) {
    if (g.out.empty())
        std::cout << dump(j);
    else
        write_text_file(g.out, dump(j));
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw Error(Errc::InvalidArgument, std::string(what) + " must be a rational p/q, got '" + text + "'");
    }
}

Rational parse_threshold(const std::string& text) {
    if (text == "pi/3") return near_orthogonal_threshold();
    return parse_rational_arg(text, "--cos-sq");
}

EnumOptions enum_options(const Globals& g) {
    EnumOptions e;
    e.max_dim = g.max_dim;
    e.jobs = g.jobs;
    return e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice invariants for nearly orthogonal lattices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--out", g.out, "Write JSON here instead of stdout");
    app.add_flag("--strict", g.strict, "analyze: exit 1 when any field could not be computed");
    app.add_option("--max-dim", g.max_dim, "Largest rank the enumerator accepts")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Emit a lattice of a named family");
    std::string family;
    std::optional<std::size_t> opt_n, opt_m, opt_r;
    std::string epsilon_text;
    long long d_value = 0;
    construct->add_option("family", family, "z, hex, lnm, staircase, hybrid, k3prime, an, anstar, coxeter-barnes, planar")
        ->required();
    construct->add_option("--n", opt_n, "Rank parameter");
    construct->add_option("--m", opt_m, "Second parameter of lnm / hybrid");
    construct->add_option("--r", opt_r, "Coxeter-Barnes divisor");
    construct->add_option("--epsilon", epsilon_text, "planar: coherence bound p/q");
    construct->add_option("--d", d_value, "planar: squarefree D");

    auto* analyze = app.add_subcommand("analyze", "Full classification report of a lattice file");
    std::string analyze_file, threshold_text = "1/4";
    bool no_search = false;
    std::size_t max_subsets = 200000;
    analyze->add_option("file", analyze_file, "Lattice JSON")->required();
    analyze->add_option("--cos-sq", threshold_text, "cos^2 threshold as p/q, or pi/3");
    analyze->add_flag("--no-search", no_search, "Skip the search over minimal-vector bases");
    analyze->add_option("--max-subsets", max_subsets, "Guard on the minimal-basis search");

    auto* verify = app.add_subcommand("verify", "Replay the verification suite");
    std::string suite = "all";
    std::size_t max_n = 8;
    verify->add_option("--suite", suite, "all, constructions, theorems or coherence")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "Largest rank used by the suite")->check(CLI::Range(2, 12));

    auto* perturb = app.add_subcommand("perturb", "Change one basis angle and report the density ratio");
    std::string perturb_file, cos_text, mode_text, target_text;
    std::optional<std::size_t> block;
    double tol = 1e-9;
    perturb->add_option("file", perturb_file, "Lattice JSON")->required();
    perturb->add_option("--block", block, "0-based 2x2 block index (exact mode)");
    perturb->add_option("--cos", cos_text, "New |cos| of the block or planar pair, p/q");
    perturb->add_option("--mode", mode_text, "mu or nu (floating mode)")->check(CLI::IsMember({"mu", "nu"}));
    perturb->add_option("--target", target_text, "Target |cos|, p/q");
    perturb->add_option("--tol", tol, "Verification tolerance");

    auto* planar = app.add_subcommand("planar", "Integral WR planar lattice with coherence below epsilon");
    std::string planar_eps;
    long long planar_d = 0;
    planar->add_option("--epsilon", planar_eps, "p/q in (0, 1/2]")->required();
    planar->add_option("--d", planar_d, "Squarefree D >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) {
            if (family == "planar") {
                if (epsilon_text.empty() || d_value == 0)
                    throw Error(Errc::InvalidArgument, "planar needs --epsilon and --d");
                emit(g, to_json(planar_wr(parse_rational_arg(epsilon_text, "--epsilon"), d_value)));
            } else {
                emit(g, lattice_to_json(construct_family(family, opt_n, opt_m, opt_r)));
            }
            return 0;
        }
        if (*planar) {
            emit(g, to_json(planar_wr(parse_rational_arg(planar_eps, "--epsilon"), planar_d)));
            return 0;
        }
        if (*analyze) {
            const auto lattice = lattice_from_json(read_json_file(analyze_file));
            ReportOptions opts;
            opts.membership.enumeration = enum_options(g);
            opts.membership.cos_sq_threshold = parse_threshold(threshold_text);
            opts.membership.search_minimal_bases = !no_search;
            opts.membership.max_subsets = max_subsets;
            const auto report = classification_report(lattice, opts);
            emit(g, to_json(report));
            return (g.strict && !report.errors.empty()) ? 1 : 0;
        }
        if (*verify) {
            const auto report = run_suite(SuiteOptions{suite, max_n, g.jobs});
            emit(g, suite_to_json(report));
            return report.ok() ? 0 : 1;
        }
        if (*perturb) {
            const auto lattice = lattice_from_json(read_json_file(perturb_file));
            const bool exact = !cos_text.empty();
            const bool floating = !mode_text.empty();
            if (exact == floating)
                throw Error(Errc::InvalidArgument, "perturb needs either --cos (with --block for rank > 2) or --mode/--target");
            if (exact) {
                const Rational c = parse_rational_arg(cos_text, "--cos");
                if (block)
                    emit(g, to_json(perturb_block(lattice, *block, c)));
                else if (lattice.rank() == 2)
                    emit(g, to_json(perturb_2d(lattice, c)));
                else
                    throw Error(Errc::InvalidArgument, "--block is required for rank > 2");
            } else {
                if (target_text.empty()) throw Error(Errc::InvalidArgument, "--mode needs --target");
                const auto mode = mode_text == "mu" ? PerturbMode::Mu : PerturbMode::Nu;
                emit(g, to_json(perturb_general(lattice, mode, parse_rational_arg(target_text, "--target"), tol)));
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "nolat: " << e.what() << "\n";
        return e.code() == Errc::VerificationFailed ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "nolat: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
