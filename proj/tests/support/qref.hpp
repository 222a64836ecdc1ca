#pragma once

// Independent integer-inference reference. Deliberately written against
// the arithmetic definitions only, not against the library fast path:
// everything runs in 128-bit integers with explicit floor division (no
// shifts, no int32/int64 wraparound assumptions). Any divergence between
// this and quant::qforward / emu::emulate is a bug in the fast path.

#include <cmath>
#include <cstdint>
#include <vector>

#include "forge/quant/qtypes.hpp"

namespace qref {

using i128 = __int128;

// floor(a / b) for b > 0, exact for negative a.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline i128 pow2(int e) {
    i128 v = 1;
    for (int i = 0; i < e; ++i) {
        v *= 2;
    }
    return v;
}

inline long long saturate_i8(i128 v) {
    if (v > 127) return 127;
    if (v < -128) return -128;
    return static_cast<long long>(v);
}

// round half away from zero, then affine shift and saturation.
inline long long quantize_value(double x, double scale, int zp, int lo) {
    const double scaled = x / scale;
    if (scaled >= 1e9) return 127;
    if (scaled <= -1e9) return lo;
    const double r = scaled >= 0.0 ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5);
    i128 q = static_cast<i128>(static_cast<long long>(r)) + zp;
    if (q > 127) return 127;
    if (q < lo) return lo;
    return static_cast<long long>(q);
}

inline long long requantize(long long acc, std::int32_t m0, int rshift, int zp_out) {
    const i128 t = static_cast<i128>(acc) * static_cast<i128>(m0);
    i128 y;
    if (rshift == 0) {
        y = t;
    } else {
        y = floor_div(t + pow2(rshift - 1), pow2(rshift));
    }
    return saturate_i8(y + zp_out);
}

// Whole-network reference pass over normalized features.
inline std::vector<std::vector<long long>> forward(const forge::quant::QuantizedMlp& qmlp,
                                                   const std::vector<double>& x_norm) {
    std::vector<long long> act;
    act.reserve(x_norm.size());
    const auto& in_qp = qmlp.layers.front().input;
    for (double v : x_norm) {
        act.push_back(quantize_value(v, in_qp.scale, in_qp.zero_point, -128));
    }

    std::vector<std::vector<long long>> outputs;
    for (const auto& layer : qmlp.layers) {
        std::vector<long long> next(static_cast<std::size_t>(layer.n_out));
        for (int j = 0; j < layer.n_out; ++j) {
            i128 acc = layer.bias[static_cast<std::size_t>(j)];
            for (int i = 0; i < layer.n_in; ++i) {
                acc += static_cast<i128>(layer.w(j, i)) *
                       (static_cast<i128>(act[static_cast<std::size_t>(i)]) -
                        layer.input.zero_point);
            }
            long long y = requantize(static_cast<long long>(acc), layer.requant.m0,
                                     layer.requant.rshift, layer.output.zero_point);
            if (layer.relu && y < layer.output.zero_point) {
                y = layer.output.zero_point;
            }
            next[static_cast<std::size_t>(j)] = y;
        }
        outputs.push_back(next);
        act = std::move(next);
    }
    return outputs;
}

} // namespace qref
