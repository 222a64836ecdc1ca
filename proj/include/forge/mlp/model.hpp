#pragma once

#include <cstdint>
#include <vector>

#include "forge/hydro/types.hpp"

namespace forge::mlp {

// Architecture: affine layers with ReLU on hidden layers and identity on
// the output layer. An empty hidden list is a plain linear model.
struct MlpSpec {
    int input_dim = 3;
    std::vector<int> hidden = {16, 16};
    int output_dim = 1;

    void validate() const;
    // Layer dims as (n_in, n_out) pairs, e.g. 3-16-16-1 -> [(3,16),(16,16),(16,1)].
    std::vector<std::pair<int, int>> layer_dims() const;
};

struct DenseLayer {
    int n_in = 0;
    int n_out = 0;
    std::vector<double> weights;  // row-major, n_out x n_in
    std::vector<double> bias;     // n_out

    double w(int row, int col) const { return weights[static_cast<std::size_t>(row) * n_in + col]; }
    double& w(int row, int col) { return weights[static_cast<std::size_t>(row) * n_in + col]; }
};

struct FloatMlp {
    MlpSpec spec;
    std::vector<DenseLayer> layers;
    hydro::Scaler scaler;  // copied from the training split

    void validate() const;
    std::size_t parameter_count() const;
};

// Weights ~ uniform(-sqrt(6/fan_in), +sqrt(6/fan_in)), biases zero.
// Deterministic per seed; the scaler is left empty.
FloatMlp init_mlp(const MlpSpec& spec, std::uint64_t seed);

// Normalized features in, normalized prediction out.
std::vector<double> forward(const FloatMlp& mlp, const std::vector<double>& x);

// Forward pass keeping everything a calibrator or backprop needs.
struct ForwardTrace {
    // inputs[l] is the input to layer l; inputs[0] is x. Size layers+1,
    // the last entry being the network output (post-activation chain).
    std::vector<std::vector<double>> inputs;
    // Pre-activation values per layer.
    std::vector<std::vector<double>> pre_activations;
};
ForwardTrace forward_trace(const FloatMlp& mlp, const std::vector<double>& x);

// Convenience: raw levels (m) -> flow (m^3/s) via the model's scaler.
double predict_flow(const FloatMlp& mlp, const std::vector<double>& levels_m);

} // namespace forge::mlp
