#include "forge/quant/qforward.hpp"

#include <algorithm>

#include "forge/errors.hpp"
#include "forge/quant/quantize.hpp"

namespace forge::quant {

QForwardResult qforward(const QuantizedMlp& qmlp, const std::vector<double>& x_norm) {
    if (qmlp.layers.empty()) {
        throw ArgumentError("qforward: model has no layers");
    }
    if (x_norm.size() != static_cast<std::size_t>(qmlp.layers.front().n_in)) {
        throw ArgumentError("qforward: input dim mismatch");
    }

    QForwardResult result;
    std::vector<std::int8_t> act = quantize_tensor(x_norm, qmlp.layers.front().input);
    for (const auto& layer : qmlp.layers) {
        std::vector<std::int8_t> next(static_cast<std::size_t>(layer.n_out));
        const std::int32_t zp_in = layer.input.zero_point;
        for (int j = 0; j < layer.n_out; ++j) {
            std::int32_t acc = layer.bias[static_cast<std::size_t>(j)];
            for (int i = 0; i < layer.n_in; ++i) {
                acc += static_cast<std::int32_t>(layer.w(j, i)) *
                       (static_cast<std::int32_t>(act[static_cast<std::size_t>(i)]) - zp_in);
            }
            std::int8_t y = requantize(acc, layer.requant, layer.output.zero_point);
            if (layer.relu) {
                y = std::max<std::int8_t>(y, static_cast<std::int8_t>(layer.output.zero_point));
            }
            next[static_cast<std::size_t>(j)] = y;
        }
        result.layer_outputs.push_back(next);
        act = std::move(next);
    }

    result.y_norm = dequantize_value(result.layer_outputs.back().front(),
                                     qmlp.output_qparams());
    result.flow_m3s = qmlp.scaler.fitted()
                          ? qmlp.scaler.denormalize_target(result.y_norm)
                          : result.y_norm;
    return result;
}

double predict_flow(const QuantizedMlp& qmlp, const std::vector<double>& levels_m) {
    if (!qmlp.scaler.fitted()) {
        throw ArgumentError("quantized model has no fitted scaler");
    }
    return qforward(qmlp, qmlp.scaler.normalize(levels_m)).flow_m3s;
}

} // namespace forge::quant
