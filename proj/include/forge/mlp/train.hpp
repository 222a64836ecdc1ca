#pragma once

#include <cstdint>
#include <vector>

#include "forge/hydro/types.hpp"
#include "forge/mlp/model.hpp"

namespace forge::mlp {

struct TrainConfig {
    int epochs = 200;
    int batch_size = 32;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;

    void validate() const;
};

struct EpochStats {
    double train_loss = 0.0;  // mean MSE over the epoch's batches
    double val_loss = 0.0;
};

struct TrainResult {
    FloatMlp model;  // weights from the best-validation epoch
    std::vector<EpochStats> history;
    int best_epoch = 0;  // 0-based index into history
};

// Mini-batch Adam on MSE over normalized targets. The train split must
// carry a fitted scaler; it is copied into the returned model. Sample
// order is reshuffled each epoch from a stream seeded by cfg.seed, so
// identical inputs give bit-identical weights. A non-finite loss aborts
// with a TrainingError naming the epoch. When the validation split is
// empty, checkpointing falls back to the train loss.
TrainResult train(const FloatMlp& mlp, const hydro::Dataset& train_set,
                  const hydro::Dataset& val_set, const TrainConfig& cfg);

// Max relative error between analytic gradients and central finite
// differences (h = 1e-5) over every parameter, on the given normalized
// batch. Pre-activations within 1e-6 of the ReLU kink are nudged away
// (bias adjustment) before checking.
double gradient_check(const FloatMlp& mlp,
                      const std::vector<std::pair<std::vector<double>, std::vector<double>>>& batch);

} // namespace forge::mlp
