#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <algorithm>
#include <fstream>
#include <map>

#include "blbc/chernoff.hpp"
#include "blbc/classical.hpp"
#include "blbc/codebook.hpp"
#include "blbc/discrimination.hpp"
#include "blbc/fock.hpp"
#include "blbc/io.hpp"
#include "blbc/region.hpp"
#include "blbc/truncation.hpp"

namespace blbc::cli {

namespace fs = std::filesystem;

namespace {

class OutputDir {
public:
    explicit OutputDir(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

    void write(const std::string& name, const std::string& content)
    {
        std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + (dir_ / name).string());
        out << content;
        names_.push_back(name);
    }
    void write(const std::string& name, const json& content) { write(name, content.dump(2) + "\n"); }

    std::vector<std::string> names() const { return names_; }

private:
    fs::path dir_;
    std::vector<std::string> names_;
};

cplx to_cplx(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::vector<cplx> to_cplx_list(const json& j)
{
    std::vector<cplx> out;
    for (const auto& v : j)
        out.push_back(to_cplx(v));
    return out;
}

json unit(double value, const char* u) { return {{"value", value}, {"unit", u}}; }

void cmd_region(const json& p, OutputDir& out)
{
    const ChannelFamily family(p.at("nu"), to_cplx_list(p.at("k_list")), p.at("energy"));
    const HomodyneModel model{p.at("kappa"), p.at("sigma2"), HomodyneBranch::sense};
    std::vector<RateDetectionRegion> regions;
    json records = json::array();
    for (const auto& name : p.at("conventions")) {
        const auto q = quantum_region(family, parse_convention(name.get<std::string>()));
        regions.push_back(q.region);
        auto r = io::region_json(q.region);
        r["minimizing_pair"] = {{q.k.real(), q.k.imag()}, {q.k_prime.real(), q.k_prime.imag()}};
        records.push_back(std::move(r));
    }
    regions.push_back(classical_region(family, model, false));
    if (p.at("strict_classical").get<bool>())
        regions.push_back(classical_region(family, model, true));
    for (std::size_t i = records.size(); i < regions.size(); ++i)
        records.push_back(io::region_json(regions[i]));

    json doc{{"regions", records}};
    if (family.energy() > 0.0 && family.transmissivity() > 0.0) {
        const auto m = comparison_metrics(family, model);
        doc["detection_ratio"] = m.detection_ratio;
        doc["capacity_ratio"] = m.capacity_ratio;
    }
    out.write("region.csv", io::region_csv(regions));
    out.write("region.json", doc);
}

void cmd_figure1(const json& p, OutputDir& out)
{
    const ChannelFamily family(1.0, {0.0, 1.0}, 1e6);
    const std::vector<RateDetectionRegion> regions{quantum_region(family).region,
                                                   classical_region(family, HomodyneModel{})};
    out.write("figure1.csv", io::frontier_csv(frontier_samples(regions, p.at("points"))));
    out.write("figure1.json", json{{"regions", {io::region_json(regions[0]), io::region_json(regions[1])}},
                                   {"nu", 1.0},
                                   {"energy", 1e6},
                                   {"k_list", {0.0, 1.0}}});
}

void cmd_chernoff(const json& p, OutputDir& out)
{
    const cplx beta = to_cplx(p.at("beta"));
    const cplx gamma = to_cplx(p.at("gamma"));
    const int cutoff = p.at("cutoff");
    const auto rho = DensityOperator::pure(coherent_fock_vector(Amplitude(beta), cutoff));
    const auto sigma = DensityOperator::pure(coherent_fock_vector(Amplitude(gamma), cutoff));
    const auto curve = chernoff_exponent_numeric(rho, sigma);
    const double gap = std::norm(beta - gamma);

    std::string csv = "s,Q_s\n";
    for (std::size_t i = 0; i < curve.s_grid.size(); ++i)
        csv += io::format_double(curve.s_grid[i]) + "," + io::format_double(curve.q_values[i]) + "\n";
    out.write("chernoff_curve.csv", csv);
    out.write("chernoff.json", json{{"numeric", unit(curve.exponent_nats, io::kExponentUnit)},
                                    {"argmax_s", curve.argmax_s},
                                    {"overlap_prediction", unit(gap, io::kExponentUnit)},
                                    {"paper_prediction", unit(gap / 2.0, io::kExponentUnit)},
                                    {"cutoff", cutoff}});
}

void cmd_discriminate(const json& p, OutputDir& out)
{
    const ChannelFamily family(1.0, to_cplx_list(p.at("k_list")), p.at("energy"));
    const auto n_list = p.at("n_list").get<std::vector<int>>();
    const double energy = p.at("energy");
    json doc{{"energy_per_mode", energy}};
    const auto q = quantum_region(family, ExponentConvention::overlap);
    doc["overlap_prediction"] = unit(q.region.exponent_nats, io::kExponentUnit);
    doc["paper_prediction"] = unit(q.region.exponent_nats / 2.0, io::kExponentUnit);
    for (const auto& m : p.at("methods")) {
        const auto name = m.get<std::string>();
        const auto method = name == "helstrom" ? DiscriminationMethod::helstrom : DiscriminationMethod::pgm;
        const auto fit = exponent_regression(family, energy, n_list, method);
        out.write("fit_" + name + ".csv", io::fit_csv(fit));
        doc[name] = io::fit_json(fit);
    }
    out.write("discriminate.json", doc);
}

void cmd_mc_homodyne(const json& p, OutputDir& out)
{
    const auto k = to_cplx_list(p.at("k_list"));
    require(k.size() == 2 && k[0].imag() == 0.0 && k[1].imag() == 0.0,
            "mc-homodyne: --k-list must hold exactly two real reflectivities");
    const HomodyneModel model{p.at("kappa"), p.at("sigma2"), HomodyneBranch::sense};
    MCConfig cfg;
    cfg.trials = p.at("trials");
    cfg.seed = p.at("seed");
    cfg.threads = p.at("threads");
    cfg.chunk_size = p.at("chunk_size");
    const auto n_list = p.at("n_list").get<std::vector<int>>();
    const auto fit =
        classical_exponent_regression({k[0].real(), k[1].real()}, p.at("energy"), model, n_list, cfg);

    std::string csv = "n,errors,trials,value,wilson_low,wilson_high,exact\n";
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const auto& r = fit.points[i];
        const std::vector<double> word(n_list[i], std::sqrt(p.at("energy").get<double>()));
        csv += std::to_string(n_list[i]) + "," + std::to_string(r.errors) + "," + std::to_string(r.trials) + "," +
               io::format_double(r.error_rate) + "," + io::format_double(r.wilson_low) + "," +
               io::format_double(r.wilson_high) + "," +
               io::format_double(detection_error_exact({k[0].real(), k[1].real()}, word, model)) + "\n";
    }
    out.write("fit.csv", io::fit_csv(fit.plain));
    out.write("mc_points.csv", csv);
    out.write("mc_homodyne.json",
              json{{"plain", io::fit_json(fit.plain)},
                   {"corrected", {{"slope", unit(fit.corrected.slope, io::kExponentUnit)},
                                  {"intercept", fit.corrected.intercept},
                                  {"r2", fit.corrected.r_squared}}},
                   {"analytic", unit(fit.analytic_nats, io::kExponentUnit)}});
}

void cmd_truncation(const json& p, OutputDir& out)
{
    const Amplitude alpha(std::sqrt(p.at("alpha2").get<double>()));
    std::string csv = "N,exact,tail,bound,nonvacuous,exact_ge_bound\n";
    bool all_ok = true;
    for (int n : p.at("cutoffs").get<std::vector<int>>()) {
        const double exact = truncation_fidelity_exact(alpha, n);
        const double bound = truncation_fidelity_bound(alpha, n);
        const bool ok = exact >= bound;
        all_ok = all_ok && ok;
        csv += std::to_string(n) + "," + io::format_double(exact) + "," +
               io::format_double(truncation_tail_exact(alpha, n)) + "," + io::format_double(bound) + "," +
               (bound > 0.0 ? "1" : "0") + "," + (ok ? "1" : "0") + "\n";
    }
    out.write("truncation.csv", csv);
    out.write("truncation.json", json{{"alpha2", p.at("alpha2")}, {"exact_ge_bound_everywhere", all_ok}});
}

void cmd_codebook(const json& p, OutputDir& out)
{
    const std::string mode = p.at("mode");
    const double energy = p.at("energy");
    const int words = p.at("words");
    const int n = p.at("n");
    io::CodebookMetadata meta;
    json extra;
    Codebook book = [&] {
        if (mode == "constant")
            return constant_energy_codebook(energy, static_cast<std::uint64_t>(words), n, p.at("phases"));
        require(mode == "gaussian", "codebook: --mode must be constant or gaussian");
        const double F = default_shaping_variance(energy, p.at("eps"));
        const double scale = std::sqrt(F);
        const auto d = discretize_circular_gaussian(F, p.at("halfwidth").get<double>() * scale,
                                                    p.at("step").get<double>() * scale);
        meta.seed = p.at("seed");
        meta.shaping_variance = F;
        extra = {{"tv_gap", d.tv_gap}, {"outside_mass", d.outside_mass}, {"alphabet_size", d.distribution.size()}};
        return sample_codebook(d.distribution, words, n, meta.seed, energy, p.at("threads"));
    }();
    if (mode == "constant") {
        std::vector<Amplitude> seen;
        for (const auto& a : book.symbols())
            if (std::find(seen.begin(), seen.end(), a) == seen.end())
                seen.push_back(a);
        std::sort(seen.begin(), seen.end());
        meta.alphabet = std::move(seen);
    }
    auto doc = io::codebook_json(book, meta);
    doc.erase("words");
    doc["mode"] = mode;
    if (!extra.is_null())
        doc["discretization"] = extra;
    out.write("codebook.csv", io::codebook_csv(book));
    out.write("codebook.json", doc);
}

using Handler = void (*)(const json&, OutputDir&);

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table{
        {"region", cmd_region},           {"figure1", cmd_figure1},         {"chernoff", cmd_chernoff},
        {"discriminate", cmd_discriminate}, {"mc-homodyne", cmd_mc_homodyne}, {"truncation", cmd_truncation},
        {"codebook", cmd_codebook}};
    return table;
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

}  // namespace

std::vector<std::string> run_command(const std::string& command, const json& params, const fs::path& out_dir)
{
    const auto it = handlers().find(command);
    require(it != handlers().end(), "unknown command '" + command + "'");
    OutputDir out(out_dir);
    try {
        it->second(params, out);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed parameters: ") + e.what());
    }
    return out.names();
}

void write_manifest(const std::string& command, const json& params, const std::vector<std::string>& outputs,
                    const fs::path& out_dir)
{
    json seeds = json::array();
    if (params.contains("seed"))
        seeds.push_back(params.at("seed"));
    const json manifest{{"command", command},
                        {"params", params},
                        {"seeds", seeds},
                        {"units", {{"rate", io::kRateUnit}, {"exponent", io::kExponentUnit}, {"energy", "photons"}}},
                        {"version", BLBC_VERSION},
                        {"timestamp", utc_timestamp()},
                        {"outputs", outputs}};
    std::ofstream(out_dir / kManifestName, std::ios::trunc) << manifest.dump(2) << "\n";
}

std::vector<std::string> replay(const fs::path& manifest, const fs::path& out_dir)
{
    std::ifstream in(manifest);
    require(static_cast<bool>(in), "cannot open manifest " + manifest.string());
    json m;
    try {
        in >> m;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("manifest is not valid JSON: ") + e.what());
    }
    require(m.contains("command") && m.contains("params"), "manifest lacks command or params");
    const std::string command = m.at("command");
    const auto outputs = run_command(command, m.at("params"), out_dir);
    write_manifest(command, m.at("params"), outputs, out_dir);
    return outputs;
}

}  // namespace blbc::cli
