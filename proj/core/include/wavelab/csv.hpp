#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "wavelab/entropy.hpp"

namespace wavelab {

inline constexpr const char* csv_header = "t,S_q,S_p,S_J,dX,dP,power_product,eur_slack,heisenberg_slack";

/// Fixed-point, locale-independent rendering; one row per report.
/// Throws ContractError on an empty series.
std::string format_csv(std::span<const EntropyReport> series, int precision);

/// Writes format_csv output to path. Throws IoError naming the path.
void emit_csv(std::span<const EntropyReport> series, const std::filesystem::path& path, int precision);

} // namespace wavelab
