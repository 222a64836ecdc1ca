#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "forge/hydro/types.hpp"
#include "forge/mlp/metrics.hpp"

namespace forge::hydro {

// Runs the supplied train/quantize/evaluate procedure on the dataset
// projected to each sensor subset. The procedure receives the projected
// dataset and returns (float metrics, quantized metrics).
using AblationProcedure =
    std::function<std::pair<mlp::Metrics, mlp::Metrics>(const Dataset&)>;

struct AblationEntry {
    std::vector<int> subset;  // sorted sensor indices
    mlp::Metrics float_metrics;
    mlp::Metrics quant_metrics;
};

// Subsets are treated as sets (order-insensitive); duplicates are an
// error. Results come back in input order.
std::vector<AblationEntry> sensor_ablation(const Dataset& dataset,
                                           const std::vector<std::vector<int>>& subsets,
                                           const AblationProcedure& procedure);

} // namespace forge::hydro
