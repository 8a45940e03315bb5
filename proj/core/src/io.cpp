#include "blbc/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace blbc::io {

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string region_csv(const std::vector<RateDetectionRegion>& regions)
{
    std::ostringstream out;
    out << "R_bits,D_nats,kind\n";
    for (const auto& r : regions)
        out << format_double(r.rate_bits) << ',' << format_double(r.exponent_nats) << ',' << to_string(r.kind) << '\n';
    return out.str();
}

nlohmann::json region_json(const RateDetectionRegion& region)
{
    return {{"kind", to_string(region.kind)},
            {"R_max", {{"value", region.rate_bits}, {"unit", kRateUnit}}},
            {"D_max", {{"value", region.exponent_nats}, {"unit", kExponentUnit}}}};
}

std::string frontier_csv(const std::vector<FrontierPoint>& points)
{
    std::ostringstream out;
    out << "R_bits,D_nats,kind,series\n";
    for (const auto& p : points)
        out << format_double(p.rate_bits) << ',' << format_double(p.exponent_nats) << ',' << to_string(p.kind) << ','
            << p.series << '\n';
    return out.str();
}

std::string fit_csv(const ExponentFit& fit)
{
    std::ostringstream out;
    out << "n,value,neg_log,slope,r2\n";
    for (std::size_t i = 0; i < fit.block_lengths.size(); ++i)
        out << fit.block_lengths[i] << ',' << format_double(fit.error_probs[i]) << ','
            << format_double(fit.neg_log[i]) << ',' << format_double(fit.slope_nats) << ','
            << format_double(fit.r_squared) << '\n';
    return out.str();
}

nlohmann::json fit_json(const ExponentFit& fit)
{
    return {{"block_lengths", fit.block_lengths},
            {"error_probs", fit.error_probs},
            {"neg_log", fit.neg_log},
            {"slope", {{"value", fit.slope_nats}, {"unit", kExponentUnit}}},
            {"intercept", fit.intercept},
            {"r2", fit.r_squared}};
}

std::string codebook_csv(const Codebook& book)
{
    std::ostringstream out;
    for (int j = 0; j < book.block_length(); ++j)
        out << (j ? "," : "") << "re_" << j << ",im_" << j;
    out << '\n';
    for (int m = 0; m < book.size(); ++m) {
        const auto word = book.word(m);
        for (std::size_t j = 0; j < word.size(); ++j)
            out << (j ? "," : "") << format_double(word[j].re()) << ',' << format_double(word[j].im());
        out << '\n';
    }
    return out.str();
}

nlohmann::json codebook_json(const Codebook& book, const CodebookMetadata& meta)
{
    nlohmann::json alphabet = nlohmann::json::array();
    for (const auto& a : meta.alphabet)
        alphabet.push_back({a.re(), a.im()});
    nlohmann::json words = nlohmann::json::array();
    for (int m = 0; m < book.size(); ++m) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& a : book.word(m))
            w.push_back({a.re(), a.im()});
        words.push_back(std::move(w));
    }
    return {{"M", book.size()},
            {"n", book.block_length()},
            {"seed", meta.seed},
            {"E", book.energy_budget()},
            {"F", meta.shaping_variance},
            {"energy_unit", "photons_per_mode"},
            {"average_energy", book.average_energy()},
            {"power_constraint_holds", book.power_constraint_holds()},
            {"alphabet", std::move(alphabet)},
            {"words", std::move(words)}};
}

}  // namespace blbc::io
