// hdcap: approximate capacity of Gaussian half-duplex diamond relay networks.
//
// Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdcap/capacity.hpp"
#include "hdcap/experiments.hpp"
#include "hdcap/format.hpp"
#include "hdcap/network.hpp"
#include "hdcap/network_json.hpp"
#include "hdcap/theory.hpp"
#include "hdcap/worst_case.hpp"

namespace {

using namespace hdcap;

struct Args {
    std::string input;
    std::string output;
    std::string schedule_path;
    std::string raw_path;
    std::string family = "even1";
    int n = 0;
    int n_min = 1;
    int n_max = 1;
    double L = 1e6;
    double tol = 1e-4;
    double sigma = 1.0;
    long trials = 1000;
    std::uint64_t seed = 0;
    bool exact = false;
    bool serial = false;
};

int run(int argc, char** argv) {
    CLI::App app{
        "Approximate capacity of Gaussian half-duplex diamond relay networks.\n"
        "Link capacities are log2(1+|h|^2) bits/channel-use; capacity ratios do\n"
        "not depend on the log base."};
    app.require_subcommand(1);
    Args args;

    auto* cap = app.add_subcommand("capacity", "Solve the full 2^n-state cut LP for a network");
    cap->add_option("-i,--input", args.input, "network JSON file")->required();
    cap->add_option("-o,--output", args.output, "write the full result JSON here");
    cap->add_flag("--exact", args.exact, "solve in exact rational arithmetic");

    auto* best = app.add_subcommand("best-relay", "Best single relay (1-based index and value)");
    best->add_option("-i,--input", args.input, "network JSON file")->required();

    auto* rat = app.add_subcommand("ratio", "Best-relay capacity over full capacity");
    rat->add_option("-i,--input", args.input, "network JSON file")->required();

    auto* bnd = app.add_subcommand("bound", "Worst-case ratio bound: prints n,bound,opt4 as CSV");
    bnd->add_option("-n", args.n, "number of relays")->required();

    auto* wrst = app.add_subcommand("worst", "Emit a worst-case network as JSON");
    wrst->add_option("--family", args.family, "even1|even2|odd1|odd2")->required();
    wrst->add_option("-n", args.n, "number of relays")->required();
    wrst->add_option("--L", args.L, "large-link parameter (default 1e6; even1 ignores it)");
    wrst->add_option("-o,--output", args.output, "output path (stdout if omitted)");

    auto* ver = app.add_subcommand("verify",
                                   "Check tightness of the bound on a worst-case family; prints "
                                   "n,family,L,C1,Cn,two_state_rate,upper_bound,bound,ratio,gap,pass");
    ver->add_option("--family", args.family, "even1|even2|odd1|odd2")->required();
    ver->add_option("-n", args.n, "number of relays")->required();
    ver->add_option("--L", args.L, "large-link parameter (default 1e6)");
    ver->add_option("--tol", args.tol, "gap tolerance (default 1e-4)");

    auto* srate = app.add_subcommand("schedule-rate", "Rate of a given schedule on a network");
    srate->add_option("-i,--input", args.input, "network JSON file")->required();
    srate->add_option("-s,--schedule", args.schedule_path,
                      "schedule JSON ({\"mask\": lambda} or a capacity result)")
        ->required();

    auto* mc = app.add_subcommand("montecarlo", "Rayleigh Monte-Carlo ratio statistics (CSV)");
    mc->add_option("--n-min", args.n_min, "smallest n")->required();
    mc->add_option("--n-max", args.n_max, "largest n")->required();
    mc->add_option("--trials", args.trials, "trials per n (default 1000)");
    mc->add_option("--seed", args.seed, "RNG seed (required; runs are reproducible)")->required();
    mc->add_option("--sigma", args.sigma, "Rayleigh scale parameter (default 1)");
    mc->add_option("-o,--output", args.output, "stats CSV path")->required();
    mc->add_option("--raw", args.raw_path, "also dump per-trial ratios to this CSV");
    mc->add_flag("--serial", args.serial, "disable the parallel trial loop");

    auto* norm = app.add_subcommand("normalize", "Rescale so every single-relay capacity is 1");
    norm->add_option("-i,--input", args.input, "network JSON file")->required();
    norm->add_option("-o,--output", args.output, "output path (stdout if omitted)");

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

    auto emit = [&](const std::string& text) {
        if (args.output.empty()) {
            std::cout << text;
        } else {
            write_text_file(args.output, text);
        }
    };

    if (cap->parsed()) {
        DiamondNetwork net = read_network_file(args.input);
        CapacityResult result = approximate_capacity(
            net, args.exact ? ArithmeticMode::ExactRational : ArithmeticMode::Float64);
        std::cout << fmt9(result.value) << "\n";
        if (!args.output.empty()) {
            write_text_file(args.output, capacity_result_to_json(result).dump(2) + "\n");
        }
    } else if (best->parsed()) {
        DiamondNetwork net = read_network_file(args.input);
        auto [index, value] = best_relay(net);
        std::cout << (index + 1) << "," << fmt9(value) << "\n";
    } else if (rat->parsed()) {
        DiamondNetwork net = read_network_file(args.input);
        std::cout << fmt9(ratio(net)) << "\n";
    } else if (bnd->parsed()) {
        std::cout << args.n << "," << fmt9(bound(args.n)) << "," << fmt9(opt4(args.n)) << "\n";
    } else if (wrst->parsed()) {
        DiamondNetwork net = worst_network(family_from_string(args.family), args.n, args.L);
        emit(network_to_json(net).dump(2) + "\n");
    } else if (ver->parsed()) {
        TightnessReport rep =
            verify_tightness(family_from_string(args.family), args.n, args.L, args.tol);
        std::cout << rep.n << "," << to_string(rep.family) << "," << fmt9(rep.L) << ","
                  << fmt9(rep.c1) << "," << fmt9(rep.cn) << "," << fmt9(rep.two_state_rate) << ","
                  << fmt9(rep.upper_bound) << "," << fmt9(rep.bound_n) << ","
                  << fmt9(rep.achieved_ratio) << "," << fmt9(rep.gap) << ","
                  << (rep.pass ? "pass" : "fail") << "\n";
        return rep.pass ? 0 : 1;
    } else if (srate->parsed()) {
        DiamondNetwork net = read_network_file(args.input);
        Schedule sched = read_schedule_file(args.schedule_path, net.size());
        std::cout << fmt9(schedule_rate(net, sched)) << "\n";
    } else if (mc->parsed()) {
        if (args.n_min < 1 || args.n_max < args.n_min) {
            throw std::invalid_argument("montecarlo: need 1 <= n-min <= n-max");
        }
        std::vector<int> ns;
        for (int n = args.n_min; n <= args.n_max; ++n) ns.push_back(n);
        MonteCarloResult result = monte_carlo(ns, args.trials, args.seed, !args.raw_path.empty(),
                                              !args.serial, args.sigma);
        write_text_file(args.output, stats_csv(result, args.seed, args.sigma));
        if (!args.raw_path.empty()) write_text_file(args.raw_path, raw_csv(result));
        long resampled = 0;
        for (const auto& s : result.stats) resampled += s.resampled;
        if (resampled > 0) {
            std::cerr << "note: " << resampled << " degenerate draw(s) were resampled\n";
        }
    } else if (norm->parsed()) {
        DiamondNetwork net = read_network_file(args.input);
        emit(normalized_to_json(normalize(net)).dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
