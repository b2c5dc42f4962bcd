// qlattice: Gaussian polynomials, their lattice-path/tiling models, and
// identity sweeps from the command line.
//
//   qlattice compute 4 2
//   qlattice enumerate tilings 4 2 --count-only
//   qlattice eval 4 2 --q 2 --check-subspaces
//   qlattice stratify last-domino 5 2
//   qlattice verify all --max 12

#include <qlattice/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

struct Args {
    std::string format = "text";
    int n = 0, k = 0;
    std::string kind, criterion, identity, q = "1";
    bool count_only = false, check_subspaces = false, force = false;
    int max = -1, max_n = -1;
};

} // namespace

int main(int argc, char** argv)
{
    using namespace qlattice::cli;

    CLI::App app{"Gaussian polynomials, weighted lattice paths and board tilings"};
    app.require_subcommand(1);
    Args a;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", a.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto* compute = app.add_subcommand("compute", "print [n k]_q");
    compute->add_option("n", a.n)->required();
    compute->add_option("k", a.k)->required();
    add_format(compute);

    auto* enumerate = app.add_subcommand("enumerate", "list tilings, paths or partitions with their weights");
    enumerate->add_option("kind", a.kind)->required()->check(CLI::IsMember({"tilings", "paths", "partitions"}));
    enumerate->add_option("n", a.n)->required();
    enumerate->add_option("k", a.k)->required();
    enumerate->add_flag("--count-only", a.count_only, "print only the number of objects");
    enumerate->add_flag("--force", a.force, "allow boards longer than 30 cells");
    add_format(enumerate);

    auto* eval = app.add_subcommand("eval", "evaluate [n k]_q at an integer q");
    eval->add_option("n", a.n)->required();
    eval->add_option("k", a.k)->required();
    eval->add_option("--q", a.q, "integer evaluation point (default 1)");
    eval->add_flag("--check-subspaces", a.check_subspaces, "also count subspaces of GF(q)^n (q in 2,3,4)");
    add_format(eval);

    auto* strat = app.add_subcommand("stratify", "split tilings by last-square | last-domino | median-domino | median-square");
    strat->add_option("criterion", a.criterion)->required();
    strat->add_option("a", a.n, "n (m for median-square)")->required();
    strat->add_option("b", a.k, "k or r")->required();
    add_format(strat);

    auto* verify = app.add_subcommand("verify", "sweep an identity (or all) over a finite domain");
    verify->add_option("identity", a.identity, "thm1..thm4, cor1, cor2-printed, cor2-corrected, guoyang1/2, sun1/2, all")
        ->required();
    verify->add_option("--max", a.max, "bound for every parameter");
    verify->add_option("--max-n", a.max_n, "bound for the first parameter");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "qlattice: " << e.what() << '\n';
        return kUsage;
    }

    const OutputFormat fmt = *parse_format(a.format);
    try {
        if (*compute)
            return cmd_compute(a.n, a.k, fmt, std::cout, std::cerr);
        if (*enumerate)
            return cmd_enumerate(*parse_enumerate_kind(a.kind), a.n, a.k, fmt, a.count_only, a.force, std::cout,
                                 std::cerr);
        if (*eval)
            return cmd_eval(a.n, a.k, a.q, a.check_subspaces, fmt, std::cout, std::cerr);
        if (*strat)
            return cmd_stratify(a.criterion, a.n, a.k, fmt, std::cout, std::cerr);
        if (*verify) {
            VerifyOptions opt;
            if (verify->count("--max"))
                opt.max = a.max;
            if (verify->count("--max-n"))
                opt.max_n = a.max_n;
            return cmd_verify(a.identity, opt, fmt, std::cout, std::cerr);
        }
    } catch (const qlattice::Error& e) {
        std::cerr << "qlattice: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
