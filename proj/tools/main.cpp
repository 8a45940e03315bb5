#include <iostream>

#include <CLI11.hpp>

#include "blbc/errors.hpp"
#include "commands.hpp"
#include "parse.hpp"

using namespace blbc;
using namespace blbc::cli;

namespace {

json complex_json(const std::vector<cplx>& values)
{
    json out = json::array();
    for (const auto& v : values)
        out.push_back({v.real(), v.imag()});
    return out;
}

json complex_json(cplx v) { return {v.real(), v.imag()}; }

struct Pending {
    std::string command;
    std::function<json()> params;
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rate and detection-exponent computations for the bidirectional lossy bosonic channel"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BLBC_VERSION);

    std::string out_dir = "out";
    std::string k_list = "0,1";
    std::string n_list;
    double nu = 1.0, energy = 1e6, kappa = 1.0, sigma2 = 1.0;
    std::vector<std::string> conventions{"paper", "overlap"};
    bool strict = false;
    std::uint64_t seed = 1, trials = 1'000'000, chunk = 65536;
    unsigned threads = 1;
    Pending pending;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out-dir", out_dir, "Output directory")->capture_default_str(); };
    auto check_conv = CLI::IsMember({"paper", "overlap"});

    auto* region = app.add_subcommand("region", "Quantum and classical rate-detection rectangles");
    region->add_option("--nu", nu, "Transmissivity")->capture_default_str();
    region->add_option("--energy", energy, "Mean photons per use")->capture_default_str();
    region->add_option("--k-list", k_list, "Reflectivities, e.g. 0,1 or 0.5+0.2i,1")->capture_default_str();
    region->add_option("--convention", conventions, "Quantum exponent conventions")->check(check_conv)->capture_default_str();
    region->add_option("--kappa", kappa, "Homodyne gain")->capture_default_str();
    region->add_option("--sigma2", sigma2, "Homodyne noise variance")->capture_default_str();
    region->add_flag("--strict-classical", strict, "Also emit the classical region without the 1+ term");
    add_out(region);
    region->callback([&] {
        pending = {"region", [&] {
                       return json{{"nu", nu},       {"energy", energy},     {"k_list", complex_json(parse_complex_list(k_list))},
                                   {"conventions", conventions}, {"kappa", kappa}, {"sigma2", sigma2},
                                   {"strict_classical", strict}};
                   }};
    });

    int points = 11;
    auto* figure = app.add_subcommand("figure1", "Plot dataset for K={0,1}, nu=1, E=1e6: rectangle corners and time-sharing lines");
    figure->add_option("--points", points, "Samples per time-sharing segment")->capture_default_str();
    add_out(figure);
    figure->callback([&] { pending = {"figure1", [&] { return json{{"points", points}}; }}; });

    std::string beta = "1", gamma = "0";
    int cutoff = 60;
    auto* chernoff = app.add_subcommand("chernoff", "Numeric quantum Chernoff exponent of two coherent states");
    chernoff->add_option("--beta", beta, "First amplitude")->capture_default_str();
    chernoff->add_option("--gamma", gamma, "Second amplitude")->capture_default_str();
    chernoff->add_option("--cutoff", cutoff, "Fock cutoff")->capture_default_str();
    add_out(chernoff);
    chernoff->callback([&] {
        pending = {"chernoff", [&] {
                       return json{{"beta", complex_json(parse_complex(beta))},
                                   {"gamma", complex_json(parse_complex(gamma))},
                                   {"cutoff", cutoff}};
                   }};
    });

    std::string method = "auto";
    double word_energy = 1.0;
    auto* disc = app.add_subcommand("discriminate", "Finite-n Helstrom / PGM error-exponent regression");
    disc->add_option("--k-list", k_list, "Reflectivities")->capture_default_str();
    disc->add_option("--energy", word_energy, "Photons per mode")->capture_default_str();
    disc->add_option("--n-list", n_list, "Block lengths, list or first:last:step")->default_str("5:60:5");
    disc->add_option("--method", method, "helstrom, pgm, both or auto")
        ->check(CLI::IsMember({"auto", "helstrom", "pgm", "both"}))
        ->capture_default_str();
    add_out(disc);
    disc->callback([&] {
        pending = {"discriminate", [&] {
                       const auto k = parse_complex_list(k_list);
                       std::vector<std::string> methods;
                       if (method == "both" || (method == "auto" && k.size() == 2))
                           methods = {"helstrom", "pgm"};
                       else if (method == "auto")
                           methods = {"pgm"};
                       else
                           methods = {method};
                       return json{{"k_list", complex_json(k)},
                                   {"energy", word_energy},
                                   {"n_list", parse_int_list(n_list.empty() ? "5:60:5" : n_list)},
                                   {"methods", methods}};
                   }};
    });

    auto* mc = app.add_subcommand("mc-homodyne", "Monte Carlo homodyne detection-exponent regression");
    mc->add_option("--k-list", k_list, "Two real reflectivities")->capture_default_str();
    mc->add_option("--energy", word_energy, "Photons per mode")->capture_default_str();
    mc->add_option("--kappa", kappa, "Homodyne gain")->capture_default_str();
    mc->add_option("--sigma2", sigma2, "Homodyne noise variance")->capture_default_str();
    mc->add_option("--seed", seed, "Philox key")->capture_default_str();
    mc->add_option("--trials", trials, "Trials per hypothesis and block length")->capture_default_str();
    mc->add_option("--n-list", n_list, "Block lengths")->default_str("4:40:4");
    mc->add_option("--threads", threads, "Worker threads (results do not depend on it)")->capture_default_str();
    mc->add_option("--chunk-size", chunk, "Trials per work unit")->capture_default_str();
    add_out(mc);
    mc->callback([&] {
        pending = {"mc-homodyne", [&] {
                       return json{{"k_list", complex_json(parse_complex_list(k_list))},
                                   {"energy", word_energy},
                                   {"kappa", kappa},
                                   {"sigma2", sigma2},
                                   {"seed", seed},
                                   {"trials", trials},
                                   {"n_list", parse_int_list(n_list.empty() ? "4:40:4" : n_list)},
                                   {"threads", threads},
                                   {"chunk_size", chunk}};
                   }};
    });

    double alpha2 = 2.0;
    auto* trunc = app.add_subcommand("truncation", "Exact truncation fidelity against the closed-form bound");
    trunc->add_option("--alpha2", alpha2, "|alpha|^2")->capture_default_str();
    trunc->add_option("--n-list", n_list, "Cutoffs")->default_str("4:64");
    add_out(trunc);
    trunc->callback([&] {
        pending = {"truncation", [&] {
                       return json{{"alpha2", alpha2}, {"cutoffs", parse_int_list(n_list.empty() ? "4:64" : n_list)}};
                   }};
    });

    std::string mode = "constant";
    int words = 4, block = 8, phases = 4;
    double eps = 1e-3, step = 0.25, halfwidth = 5.0;
    auto* code = app.add_subcommand("codebook", "Constant-energy or sampled Gaussian codebooks");
    code->add_option("--mode", mode, "constant or gaussian")->check(CLI::IsMember({"constant", "gaussian"}))->capture_default_str();
    code->add_option("--energy", word_energy, "Per-mode energy budget E")->capture_default_str();
    code->add_option("--words", words, "Number of codewords M")->capture_default_str();
    code->add_option("--block-length", block, "Block length n")->capture_default_str();
    code->add_option("--phases", phases, "PSK order q (constant mode)")->capture_default_str();
    code->add_option("--seed", seed, "Philox key (gaussian mode)")->capture_default_str();
    code->add_option("--eps", eps, "Shaping backoff, F = E(1 - eps)")->capture_default_str();
    code->add_option("--step", step, "Grid step in units of sqrt(F)")->capture_default_str();
    code->add_option("--halfwidth", halfwidth, "Grid half-width in units of sqrt(F)")->capture_default_str();
    code->add_option("--threads", threads, "Worker threads")->capture_default_str();
    add_out(code);
    code->callback([&] {
        pending = {"codebook", [&] {
                       json p{{"mode", mode}, {"energy", word_energy}, {"words", words}, {"n", block}};
                       if (mode == "constant")
                           p["phases"] = phases;
                       else
                           p.update({{"seed", seed}, {"eps", eps}, {"step", step}, {"halfwidth", halfwidth},
                                     {"threads", threads}});
                       return p;
                   }};
    });

    std::string manifest;
    auto* rep = app.add_subcommand("replay", "Re-run a command from its manifest.json");
    rep->add_option("--manifest", manifest, "Path to manifest.json")->required();
    add_out(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rep->parsed()) {
            replay(manifest, out_dir);
        } else {
            const json params = pending.params();
            const auto outputs = run_command(pending.command, params, out_dir);
            write_manifest(pending.command, params, outputs, out_dir);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
