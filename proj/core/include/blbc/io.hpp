#pragma once

// CSV and JSON encodings of regions, fits and codebooks. Every exponent carries
// the unit "nats_per_use" and every rate "bits_per_use".

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blbc/codebook.hpp"
#include "blbc/fit.hpp"
#include "blbc/region.hpp"

namespace blbc::io {

inline constexpr const char* kRateUnit = "bits_per_use";
inline constexpr const char* kExponentUnit = "nats_per_use";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Columns R_bits,D_nats,kind.
std::string region_csv(const std::vector<RateDetectionRegion>& regions);
nlohmann::json region_json(const RateDetectionRegion& region);

/// Columns R_bits,D_nats,kind,series.
std::string frontier_csv(const std::vector<FrontierPoint>& points);

/// Columns n,value,neg_log,slope,r2; slope and r2 repeat on every row.
std::string fit_csv(const ExponentFit& fit);
nlohmann::json fit_json(const ExponentFit& fit);

struct CodebookMetadata {
    std::uint64_t seed = 0;
    double shaping_variance = 0.0;  // F; 0 when not sampled from mu_F
    std::vector<Amplitude> alphabet;
};

/// One row per word: re_0,im_0,re_1,im_1,...
std::string codebook_csv(const Codebook& book);
nlohmann::json codebook_json(const Codebook& book, const CodebookMetadata& meta);

}  // namespace blbc::io
