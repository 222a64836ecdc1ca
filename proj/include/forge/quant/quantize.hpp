#pragma once

#include <cstdint>
#include <vector>

#include "forge/hydro/types.hpp"
#include "forge/mlp/model.hpp"
#include "forge/quant/qtypes.hpp"

namespace forge::quant {

// Observed activation extrema per layer boundary, widened to include 0.
struct CalibrationRanges {
    // ranges[0] covers the model input; ranges[l+1] covers the output of
    // layer l (post-activation). Size = layers + 1.
    std::vector<hydro::Bound> ranges;
};

// Runs the float model over every calibration sample (normalized
// features) and records min/max at each layer boundary, unioned with 0.
CalibrationRanges calibrate(const mlp::FloatMlp& mlp,
                            const std::vector<std::vector<double>>& calib_inputs);

// Symmetric: scale = max(|min|, max)/127, zp = 0.
// Asymmetric: scale = (max-min)/255, zp = round(-128 - min/scale),
// clamped to [-128, 127]. Requires min <= 0 <= max and min < max.
QuantParams derive_qparams(double min, double max, bool symmetric);

// q = clamp(round_half_away_from_zero(x/scale) + zp, lo, 127).
// Activations use lo = -128; weights use lo = -127 to keep symmetry.
std::vector<std::int8_t> quantize_tensor(const std::vector<double>& x,
                                         const QuantParams& qp);
std::int8_t quantize_value(double x, const QuantParams& qp, int lo = -128);
double dequantize_value(std::int8_t q, const QuantParams& qp);

// Normalizes real_m in (0,1) to m0 in [2^30, 2^31) with rshift = 31 + k
// where real_m * 2^k lands in [0.5, 1). Out-of-range input throws
// RangeError; quantize_model widens the output scale instead of failing.
FixedMultiplier quantize_multiplier(double real_m);

// y = floor((acc * m0 + 2^(rshift-1)) / 2^rshift) computed in 64-bit
// two's complement, then saturate_int8(y + zp_out). No floating point.
std::int8_t requantize(std::int32_t acc, const FixedMultiplier& fm, int zp_out);

// Post-training quantization: symmetric int8 weights, int32 biases,
// activation params chained from the calibration ranges, one fixed-point
// requantization multiplier per layer. If s_in*s_w/s_out >= 1 the output
// scale is doubled (zero point kept) until the multiplier normalizes.
QuantizedMlp quantize_model(const mlp::FloatMlp& mlp, const CalibrationRanges& calib);

// Widest layer fan-in the int32 accumulator provably cannot overflow on.
inline constexpr int kMaxFanIn = 1024;

} // namespace forge::quant
