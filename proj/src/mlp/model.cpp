#include "forge/mlp/model.hpp"

#include <algorithm>
#include <cmath>

#include "forge/errors.hpp"
#include "forge/util/rng.hpp"

namespace forge::mlp {

void MlpSpec::validate() const {
    if (input_dim < 1 || output_dim < 1) {
        throw ConfigError("model dims must be >= 1");
    }
    for (int h : hidden) {
        if (h < 1) {
            throw ConfigError("hidden widths must be >= 1");
        }
    }
}

std::vector<std::pair<int, int>> MlpSpec::layer_dims() const {
    std::vector<std::pair<int, int>> dims;
    int prev = input_dim;
    for (int h : hidden) {
        dims.emplace_back(prev, h);
        prev = h;
    }
    dims.emplace_back(prev, output_dim);
    return dims;
}

void FloatMlp::validate() const {
    spec.validate();
    const auto dims = spec.layer_dims();
    if (layers.size() != dims.size()) {
        throw ConfigError("layer count does not match spec");
    }
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const auto& layer = layers[l];
        if (layer.n_in != dims[l].first || layer.n_out != dims[l].second ||
            layer.weights.size() != static_cast<std::size_t>(layer.n_in) * layer.n_out ||
            layer.bias.size() != static_cast<std::size_t>(layer.n_out)) {
            throw ConfigError("layer " + std::to_string(l) + " shape mismatch");
        }
        for (double v : layer.weights) {
            if (!std::isfinite(v)) {
                throw ConfigError("non-finite weight in layer " + std::to_string(l));
            }
        }
        for (double v : layer.bias) {
            if (!std::isfinite(v)) {
                throw ConfigError("non-finite bias in layer " + std::to_string(l));
            }
        }
    }
}

std::size_t FloatMlp::parameter_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) {
        n += layer.weights.size() + layer.bias.size();
    }
    return n;
}

FloatMlp init_mlp(const MlpSpec& spec, std::uint64_t seed) {
    spec.validate();
    util::Rng rng(seed);
    FloatMlp mlp;
    mlp.spec = spec;
    for (auto [n_in, n_out] : spec.layer_dims()) {
        DenseLayer layer;
        layer.n_in = n_in;
        layer.n_out = n_out;
        const double bound = std::sqrt(6.0 / static_cast<double>(n_in));
        layer.weights.resize(static_cast<std::size_t>(n_in) * n_out);
        for (double& w : layer.weights) {
            w = rng.uniform(-bound, bound);
        }
        layer.bias.assign(static_cast<std::size_t>(n_out), 0.0);
        mlp.layers.push_back(std::move(layer));
    }
    return mlp;
}

ForwardTrace forward_trace(const FloatMlp& mlp, const std::vector<double>& x) {
    if (x.size() != static_cast<std::size_t>(mlp.spec.input_dim)) {
        throw ArgumentError("forward: input dim mismatch");
    }
    ForwardTrace trace;
    trace.inputs.push_back(x);
    trace.pre_activations.reserve(mlp.layers.size());
    for (std::size_t l = 0; l < mlp.layers.size(); ++l) {
        const auto& layer = mlp.layers[l];
        const auto& in = trace.inputs.back();
        std::vector<double> z(static_cast<std::size_t>(layer.n_out));
        for (int j = 0; j < layer.n_out; ++j) {
            double acc = layer.bias[static_cast<std::size_t>(j)];
            for (int i = 0; i < layer.n_in; ++i) {
                acc += layer.w(j, i) * in[static_cast<std::size_t>(i)];
            }
            z[static_cast<std::size_t>(j)] = acc;
        }
        trace.pre_activations.push_back(z);
        const bool is_output = (l + 1 == mlp.layers.size());
        if (!is_output) {
            for (double& v : z) {
                v = std::max(v, 0.0);
            }
        }
        trace.inputs.push_back(std::move(z));
    }
    return trace;
}

std::vector<double> forward(const FloatMlp& mlp, const std::vector<double>& x) {
    return forward_trace(mlp, x).inputs.back();
}

double predict_flow(const FloatMlp& mlp, const std::vector<double>& levels_m) {
    if (!mlp.scaler.fitted()) {
        throw ArgumentError("model has no fitted scaler");
    }
    const auto y = forward(mlp, mlp.scaler.normalize(levels_m));
    return mlp.scaler.denormalize_target(y.front());
}

} // namespace forge::mlp
