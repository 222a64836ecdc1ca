#include "forge/mlp/metrics.hpp"

#include <cmath>

#include "forge/errors.hpp"

namespace forge::mlp {

Metrics evaluate_predictor(const Predictor& predict, const hydro::Dataset& dataset) {
    if (dataset.samples.empty()) {
        throw ArgumentError("evaluate: empty dataset");
    }
    const double n = static_cast<double>(dataset.samples.size());

    double mean_y = 0.0;
    for (const auto& s : dataset.samples) {
        mean_y += s.flow_m3s;
    }
    mean_y /= n;

    double ss_res = 0.0;
    double ss_tot = 0.0;
    double abs_sum = 0.0;
    double ape_sum = 0.0;
    for (const auto& s : dataset.samples) {
        if (!(s.flow_m3s > 0.0)) {
            throw ArgumentError("evaluate: MAPE requires positive flow targets");
        }
        const double pred = predict(s.levels_m);
        const double err = pred - s.flow_m3s;
        ss_res += err * err;
        ss_tot += (s.flow_m3s - mean_y) * (s.flow_m3s - mean_y);
        abs_sum += std::abs(err);
        ape_sum += std::abs(err) / s.flow_m3s;
    }
    if (ss_tot == 0.0) {
        throw ArgumentError("evaluate: zero-variance targets make R^2 undefined");
    }

    Metrics m;
    m.mse = ss_res / n;
    m.mae = abs_sum / n;
    m.mape_percent = 100.0 * ape_sum / n;
    m.r2 = 1.0 - ss_res / ss_tot;
    return m;
}

} // namespace forge::mlp
