#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blbc/amplitude.hpp"

namespace blbc::cli {

/// "1.5", "-2e3", "0.3+0.4i", "-i", "2j".
cplx parse_complex(std::string_view text);

/// Comma-separated complex values.
std::vector<cplx> parse_complex_list(std::string_view text);

/// Comma-separated integers or an inclusive range "first:last[:step]".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace blbc::cli
