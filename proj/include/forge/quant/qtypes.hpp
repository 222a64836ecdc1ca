#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/hydro/types.hpp"
#include "forge/mlp/model.hpp"

namespace forge::quant {

// Affine int8 quantization: real = (q - zero_point) * scale.
struct QuantParams {
    double scale = 1.0;
    int zero_point = 0;  // in [-128, 127]
    bool symmetric = false;

    void validate() const;
};

// Fixed-point encoding of a real multiplier in (0, 1):
//   real ~= m0 * 2^(-rshift), m0 in [2^30, 2^31).
struct FixedMultiplier {
    std::int32_t m0 = 1 << 30;
    int rshift = 31;

    void validate() const;
    double real_value() const;
};

struct QuantLayer {
    int n_in = 0;
    int n_out = 0;
    std::vector<std::int8_t> weights;  // row-major n_out x n_in, symmetric (zp=0)
    std::vector<std::int32_t> bias;    // scale = s_in * s_w
    double weight_scale = 1.0;
    QuantParams input;   // equals previous layer's output
    QuantParams output;
    FixedMultiplier requant;  // s_in * s_w / s_out
    bool relu = false;        // hidden layers clamp at output.zero_point

    std::int8_t w(int row, int col) const {
        return weights[static_cast<std::size_t>(row) * n_in + col];
    }
};

struct QuantizedMlp {
    mlp::MlpSpec spec;
    std::vector<QuantLayer> layers;
    hydro::Scaler scaler;
    // Optional source model, embedded so reports and `forge eval` can
    // compute the float/quantized accuracy delta from one file.
    std::optional<mlp::FloatMlp> source;

    const QuantParams& input_qparams() const { return layers.front().input; }
    const QuantParams& output_qparams() const { return layers.back().output; }
    std::vector<std::pair<int, int>> layer_dims() const;

    void validate() const;
};

} // namespace forge::quant
