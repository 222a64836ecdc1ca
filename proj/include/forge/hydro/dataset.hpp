#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "forge/hydro/types.hpp"

namespace forge::hydro {

// CSV schema: header `timestamp,level_1[,level_2,level_3],flow_m3s`,
// UTF-8, '.' decimal separator, LF endings, 9 significant digits.
Dataset load_csv(const std::filesystem::path& path);
void save_csv(const Dataset& dataset, const std::filesystem::path& path);
std::string to_csv(const Dataset& dataset);
Dataset from_csv(const std::string& text);

struct SplitFractions {
    double train = 0.8;
    double val = 0.1;
    double test = 0.1;
};

struct SplitResult {
    Dataset train;
    Dataset val;
    Dataset test;
};

// Deterministic shuffled partition. Sizes come from largest-remainder
// allocation of the floor counts; leftover units favor train, then val.
// The scaler is fitted on the train split and copied to val/test.
SplitResult split(const Dataset& dataset, const SplitFractions& fractions,
                  std::uint64_t seed);

} // namespace forge::hydro
