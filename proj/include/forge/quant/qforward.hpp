#pragma once

#include <cstdint>
#include <vector>

#include "forge/quant/qtypes.hpp"

namespace forge::quant {

struct QForwardResult {
    std::vector<std::vector<std::int8_t>> layer_outputs;
    double y_norm = 0.0;    // dequantized network output
    double flow_m3s = 0.0;  // denormalized via the model scaler
};

// Integer-only inference on a normalized feature vector:
//   x_q = quantize(x); per layer acc_j = sum_i w_ji*(x_i - z_in) + b_j in
//   int32; y = requantize(acc); hidden layers clamp at z_out (ReLU).
// Only the final dequantize/denormalize touches floating point.
QForwardResult qforward(const QuantizedMlp& qmlp, const std::vector<double>& x_norm);

// Raw levels (m) -> flow (m^3/s); normalizes with the embedded scaler.
double predict_flow(const QuantizedMlp& qmlp, const std::vector<double>& levels_m);

} // namespace forge::quant
