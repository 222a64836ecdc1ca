#pragma once

#include <functional>
#include <vector>

#include "forge/hydro/types.hpp"

namespace forge::mlp {

// Regression quality on denormalized flow (m^3/s).
struct Metrics {
    double mse = 0.0;
    double mae = 0.0;
    double mape_percent = 0.0;
    double r2 = 0.0;

    // Accuracy convention used in reports: 100 - MAPE.
    double accuracy_percent() const { return 100.0 - mape_percent; }
};

// Predictor maps raw sensor levels (m) to flow (m^3/s).
using Predictor = std::function<double(const std::vector<double>& levels_m)>;

// Computes metrics of `predict` over the dataset. MAPE requires strictly
// positive flow targets; zero target variance makes R^2 undefined.
Metrics evaluate_predictor(const Predictor& predict, const hydro::Dataset& dataset);

} // namespace forge::mlp
