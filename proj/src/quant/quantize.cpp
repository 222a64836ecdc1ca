#include "forge/quant/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "forge/errors.hpp"
#include "forge/quant/qforward.hpp"

namespace forge::quant {

void QuantParams::validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ConfigError("quant scale must be positive and finite");
    }
    if (zero_point < -128 || zero_point > 127) {
        throw ConfigError("zero point out of int8 range");
    }
    if (symmetric && zero_point != 0) {
        throw ConfigError("symmetric quantization requires zero point 0");
    }
}

void FixedMultiplier::validate() const {
    if (m0 < (1 << 30)) {
        throw ConfigError("fixed multiplier m0 below normalized range");
    }
    if (rshift < 0 || rshift > 62) {
        throw ConfigError("fixed multiplier rshift out of range");
    }
}

double FixedMultiplier::real_value() const {
    return std::ldexp(static_cast<double>(m0), -rshift);
}

std::vector<std::pair<int, int>> QuantizedMlp::layer_dims() const {
    std::vector<std::pair<int, int>> dims;
    dims.reserve(layers.size());
    for (const auto& l : layers) {
        dims.emplace_back(l.n_in, l.n_out);
    }
    return dims;
}

void QuantizedMlp::validate() const {
    if (layers.empty()) {
        throw ConfigError("quantized model has no layers");
    }
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const auto& layer = layers[l];
        if (layer.n_in < 1 || layer.n_out < 1 ||
            layer.weights.size() != static_cast<std::size_t>(layer.n_in) * layer.n_out ||
            layer.bias.size() != static_cast<std::size_t>(layer.n_out)) {
            throw ConfigError("quant layer " + std::to_string(l) + " shape mismatch");
        }
        for (std::int8_t w : layer.weights) {
            if (w == -128) {
                throw ConfigError("weight -128 breaks symmetric encoding");
            }
        }
        layer.input.validate();
        layer.output.validate();
        layer.requant.validate();
        if (l > 0) {
            const auto& prev = layers[l - 1].output;
            if (prev.scale != layer.input.scale || prev.zero_point != layer.input.zero_point) {
                throw ConfigError("layer " + std::to_string(l) +
                                  " input params break the chain");
            }
        }
    }
}

CalibrationRanges calibrate(const mlp::FloatMlp& mlp,
                            const std::vector<std::vector<double>>& calib_inputs) {
    mlp.validate();
    if (calib_inputs.empty()) {
        throw ArgumentError("calibrate: empty calibration set");
    }
    CalibrationRanges out;
    out.ranges.assign(mlp.layers.size() + 1, hydro::Bound{0.0, 0.0});
    for (const auto& x : calib_inputs) {
        const mlp::ForwardTrace trace = mlp::forward_trace(mlp, x);
        for (std::size_t b = 0; b < trace.inputs.size(); ++b) {
            for (double v : trace.inputs[b]) {
                out.ranges[b].min = std::min(out.ranges[b].min, v);
                out.ranges[b].max = std::max(out.ranges[b].max, v);
            }
        }
    }
    return out;
}

QuantParams derive_qparams(double min, double max, bool symmetric) {
    if (!(min <= 0.0) || !(max >= 0.0) || !(min < max)) {
        throw ArgumentError("derive_qparams requires min <= 0 <= max and min < max");
    }
    QuantParams qp;
    qp.symmetric = symmetric;
    if (symmetric) {
        qp.scale = std::max(std::abs(min), max) / 127.0;
        qp.zero_point = 0;
    } else {
        qp.scale = (max - min) / 255.0;
        const double zp = std::round(-128.0 - min / qp.scale);
        qp.zero_point = static_cast<int>(std::clamp(zp, -128.0, 127.0));
    }
    qp.validate();
    return qp;
}

std::int8_t quantize_value(double x, const QuantParams& qp, int lo) {
    const double scaled = x / qp.scale;
    if (scaled >= 1e9) {
        return 127;
    }
    if (scaled <= -1e9) {
        return static_cast<std::int8_t>(lo);
    }
    const long long r = std::llround(scaled);  // half away from zero
    const long long q = r + qp.zero_point;
    return static_cast<std::int8_t>(std::clamp<long long>(q, lo, 127));
}

double dequantize_value(std::int8_t q, const QuantParams& qp) {
    return (static_cast<double>(q) - qp.zero_point) * qp.scale;
}

std::vector<std::int8_t> quantize_tensor(const std::vector<double>& x,
                                         const QuantParams& qp) {
    qp.validate();
    std::vector<std::int8_t> out;
    out.reserve(x.size());
    const int lo = qp.symmetric ? -127 : -128;
    for (double v : x) {
        out.push_back(quantize_value(v, qp, lo));
    }
    return out;
}

FixedMultiplier quantize_multiplier(double real_m) {
    if (!(real_m > 0.0) || !(real_m < 1.0)) {
        throw RangeError("multiplier must be in (0,1), got " + std::to_string(real_m));
    }
    int exp = 0;
    const double frac = std::frexp(real_m, &exp);  // real_m = frac * 2^exp, frac in [0.5,1)
    int k = -exp;                                  // real_m * 2^k in [0.5, 1)
    long long m0 = std::llround(std::ldexp(frac, 31));
    if (m0 == (1LL << 31)) {
        m0 = 1LL << 30;
        k -= 1;
    }
    FixedMultiplier fm;
    fm.m0 = static_cast<std::int32_t>(m0);
    fm.rshift = 31 + k;
    fm.validate();
    return fm;
}

std::int8_t requantize(std::int32_t acc, const FixedMultiplier& fm, int zp_out) {
    const std::int64_t t = static_cast<std::int64_t>(acc) * fm.m0;
    std::int64_t y;
    if (fm.rshift == 0) {
        y = t;
    } else {
        // Arithmetic shift is floor division; adding 2^(rshift-1) first
        // makes it round half up in two's complement.
        y = (t + (std::int64_t(1) << (fm.rshift - 1))) >> fm.rshift;
    }
    const std::int64_t shifted = y + zp_out;
    if (shifted > 127) {
        return 127;
    }
    if (shifted < -128) {
        return -128;
    }
    return static_cast<std::int8_t>(shifted);
}

QuantizedMlp quantize_model(const mlp::FloatMlp& mlp, const CalibrationRanges& calib) {
    mlp.validate();
    if (calib.ranges.size() != mlp.layers.size() + 1) {
        throw ArgumentError("calibration ranges do not match layer count");
    }
    if (mlp.spec.input_dim > kMaxFanIn) {
        throw ConfigError("input dim exceeds accumulator-safe fan-in 1024");
    }
    for (int h : mlp.spec.hidden) {
        if (h > kMaxFanIn) {
            throw ConfigError("hidden width exceeds accumulator-safe fan-in 1024");
        }
    }

    QuantizedMlp q;
    q.spec = mlp.spec;
    q.scaler = mlp.scaler;

    auto derive_boundary = [&](std::size_t b) {
        const auto& r = calib.ranges[b];
        if (!(r.min < r.max)) {
            throw CalibrationError("degenerate activation range", static_cast<int>(b));
        }
        return derive_qparams(r.min, r.max, false);
    };

    QuantParams in_qp = derive_boundary(0);
    for (std::size_t l = 0; l < mlp.layers.size(); ++l) {
        const auto& fl = mlp.layers[l];
        QuantLayer ql;
        ql.n_in = fl.n_in;
        ql.n_out = fl.n_out;
        ql.input = in_qp;
        ql.relu = (l + 1 < mlp.layers.size());

        double w_absmax = 0.0;
        for (double w : fl.weights) {
            w_absmax = std::max(w_absmax, std::abs(w));
        }
        // All-zero weights still need a positive scale; any value maps
        // every weight to 0.
        ql.weight_scale = (w_absmax > 0.0) ? w_absmax / 127.0 : 1.0 / 127.0;

        QuantParams wq;
        wq.scale = ql.weight_scale;
        wq.zero_point = 0;
        wq.symmetric = true;
        ql.weights = quantize_tensor(fl.weights, wq);

        const double bias_scale = in_qp.scale * ql.weight_scale;
        ql.bias.reserve(fl.bias.size());
        for (double b : fl.bias) {
            const double scaled = b / bias_scale;
            // Leave generous headroom above the worst-case MAC sum.
            if (std::abs(scaled) > static_cast<double>(1LL << 30)) {
                throw CalibrationError("bias overflows int32 accumulator headroom",
                                       static_cast<int>(l));
            }
            ql.bias.push_back(static_cast<std::int32_t>(std::llround(scaled)));
        }

        QuantParams out_qp = derive_boundary(l + 1);
        // Normalize the requant multiplier by widening the output scale;
        // zero point is kept so real 0 stays exact.
        double real_m = in_qp.scale * ql.weight_scale / out_qp.scale;
        while (real_m >= 1.0) {
            out_qp.scale *= 2.0;
            real_m = in_qp.scale * ql.weight_scale / out_qp.scale;
        }
        ql.output = out_qp;
        ql.requant = quantize_multiplier(real_m);

        q.layers.push_back(std::move(ql));
        in_qp = out_qp;
    }
    q.validate();
    return q;
}

} // namespace forge::quant
