#include "forge/mlp/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "forge/errors.hpp"
#include "forge/util/rng.hpp"

namespace forge::mlp {

namespace {

using Batch = std::vector<std::pair<std::vector<double>, std::vector<double>>>;

struct Gradients {
    std::vector<DenseLayer> layers;  // same shapes, gradient values

    explicit Gradients(const FloatMlp& mlp) {
        layers.reserve(mlp.layers.size());
        for (const auto& l : mlp.layers) {
            DenseLayer g;
            g.n_in = l.n_in;
            g.n_out = l.n_out;
            g.weights.assign(l.weights.size(), 0.0);
            g.bias.assign(l.bias.size(), 0.0);
            layers.push_back(std::move(g));
        }
    }
};

double batch_loss(const FloatMlp& mlp, const Batch& batch) {
    double sum_sq = 0.0;
    std::size_t terms = 0;
    for (const auto& [x, y] : batch) {
        const auto out = forward(mlp, x);
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double d = out[j] - y[j];
            sum_sq += d * d;
        }
        terms += out.size();
    }
    return sum_sq / static_cast<double>(terms);
}

// MSE loss and its analytic gradient over the batch.
double backprop(const FloatMlp& mlp, const Batch& batch, Gradients& grads) {
    const std::size_t n_layers = mlp.layers.size();
    const double denom =
        static_cast<double>(batch.size()) * static_cast<double>(mlp.spec.output_dim);
    double sum_sq = 0.0;
    for (const auto& [x, y] : batch) {
        const ForwardTrace trace = forward_trace(mlp, x);
        const auto& out = trace.inputs.back();
        std::vector<double> delta(out.size());
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double d = out[j] - y[j];
            sum_sq += d * d;
            delta[j] = 2.0 * d / denom;
        }
        for (std::size_t l = n_layers; l-- > 0;) {
            const auto& layer = mlp.layers[l];
            auto& g = grads.layers[l];
            const auto& in = trace.inputs[l];
            for (int j = 0; j < layer.n_out; ++j) {
                const double dj = delta[static_cast<std::size_t>(j)];
                g.bias[static_cast<std::size_t>(j)] += dj;
                for (int i = 0; i < layer.n_in; ++i) {
                    g.w(j, i) += dj * in[static_cast<std::size_t>(i)];
                }
            }
            if (l > 0) {
                std::vector<double> prev(static_cast<std::size_t>(layer.n_in), 0.0);
                for (int i = 0; i < layer.n_in; ++i) {
                    double acc = 0.0;
                    for (int j = 0; j < layer.n_out; ++j) {
                        acc += layer.w(j, i) * delta[static_cast<std::size_t>(j)];
                    }
                    // ReLU derivative of the producing layer.
                    if (trace.pre_activations[l - 1][static_cast<std::size_t>(i)] <= 0.0) {
                        acc = 0.0;
                    }
                    prev[static_cast<std::size_t>(i)] = acc;
                }
                delta = std::move(prev);
            }
        }
    }
    return sum_sq / denom;
}

Batch normalized_samples(const hydro::Dataset& set, const hydro::Scaler& scaler) {
    Batch out;
    out.reserve(set.size());
    for (const auto& s : set.samples) {
        out.emplace_back(scaler.normalize(s.levels_m),
                         std::vector<double>{scaler.normalize_target(s.flow_m3s)});
    }
    return out;
}

} // namespace

void TrainConfig::validate() const {
    if (epochs < 1) {
        throw ConfigError("epochs must be >= 1");
    }
    if (batch_size < 1) {
        throw ConfigError("batch size must be >= 1");
    }
    if (learning_rate < 0.0) {
        throw ConfigError("learning rate must be >= 0");
    }
    if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0 || epsilon <= 0.0) {
        throw ConfigError("invalid Adam parameters");
    }
}

TrainResult train(const FloatMlp& mlp, const hydro::Dataset& train_set,
                  const hydro::Dataset& val_set, const TrainConfig& cfg) {
    cfg.validate();
    mlp.validate();
    if (train_set.samples.empty()) {
        throw ArgumentError("train: empty training set");
    }
    if (!train_set.scaler || !train_set.scaler->fitted()) {
        throw ArgumentError("train: training set has no fitted scaler");
    }
    const hydro::Scaler scaler = *train_set.scaler;
    const Batch train_data = normalized_samples(train_set, scaler);
    const Batch val_data = normalized_samples(val_set, scaler);

    FloatMlp model = mlp;
    model.scaler = scaler;

    Gradients m(model);  // Adam first moment
    Gradients v(model);  // Adam second moment
    long step = 0;

    TrainResult result;
    result.model = model;
    double best_loss = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> order(train_data.size());
    std::iota(order.begin(), order.end(), 0);
    util::Rng rng(cfg.seed);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_sum_sq = 0.0;
        std::size_t epoch_terms = 0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(cfg.batch_size)) {
            const std::size_t stop =
                std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
            Batch batch;
            batch.reserve(stop - start);
            for (std::size_t i = start; i < stop; ++i) {
                batch.push_back(train_data[order[i]]);
            }

            Gradients grads(model);
            const double loss = backprop(model, batch, grads);
            epoch_sum_sq += loss * static_cast<double>(batch.size() * batch.front().second.size());
            epoch_terms += batch.size() * batch.front().second.size();
            if (!std::isfinite(loss)) {
                throw TrainingError("training diverged (non-finite loss)", epoch + 1);
            }

            ++step;
            const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
            const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
            for (std::size_t l = 0; l < model.layers.size(); ++l) {
                auto& layer = model.layers[l];
                auto update = [&](double& theta, double g, double& m_ij, double& v_ij) {
                    m_ij = cfg.beta1 * m_ij + (1.0 - cfg.beta1) * g;
                    v_ij = cfg.beta2 * v_ij + (1.0 - cfg.beta2) * g * g;
                    const double mhat = m_ij / bc1;
                    const double vhat = v_ij / bc2;
                    theta -= cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.epsilon);
                };
                for (std::size_t i = 0; i < layer.weights.size(); ++i) {
                    update(layer.weights[i], grads.layers[l].weights[i], m.layers[l].weights[i],
                           v.layers[l].weights[i]);
                }
                for (std::size_t i = 0; i < layer.bias.size(); ++i) {
                    update(layer.bias[i], grads.layers[l].bias[i], m.layers[l].bias[i],
                           v.layers[l].bias[i]);
                }
            }
        }

        EpochStats stats;
        stats.train_loss = epoch_sum_sq / static_cast<double>(epoch_terms);
        stats.val_loss = val_data.empty() ? stats.train_loss : batch_loss(model, val_data);
        if (!std::isfinite(stats.val_loss)) {
            throw TrainingError("training diverged (non-finite validation loss)", epoch + 1);
        }
        result.history.push_back(stats);
        if (stats.val_loss < best_loss) {
            best_loss = stats.val_loss;
            result.model = model;
            result.best_epoch = epoch;
        }
    }
    return result;
}

double gradient_check(const FloatMlp& mlp, const Batch& batch) {
    if (batch.empty()) {
        throw ArgumentError("gradient_check: empty batch");
    }
    FloatMlp model = mlp;

    // Push hidden pre-activations away from the ReLU kink so the finite
    // differences stay on one side of it.
    for (int pass = 0; pass < 100; ++pass) {
        bool nudged = false;
        for (const auto& [x, y] : batch) {
            (void)y;
            const ForwardTrace trace = forward_trace(model, x);
            for (std::size_t l = 0; l + 1 < model.layers.size(); ++l) {
                const auto& z = trace.pre_activations[l];
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (std::abs(z[j]) < 1e-6) {
                        model.layers[l].bias[j] += 1e-4;
                        nudged = true;
                    }
                }
            }
        }
        if (!nudged) {
            break;
        }
    }

    Gradients analytic(model);
    backprop(model, batch, analytic);

    const double h = 1e-5;
    double max_rel = 0.0;
    auto probe = [&](double& theta, double g_a) {
        const double saved = theta;
        theta = saved + h;
        const double lp = batch_loss(model, batch);
        theta = saved - h;
        const double lm = batch_loss(model, batch);
        theta = saved;
        const double g_n = (lp - lm) / (2.0 * h);
        const double rel = std::abs(g_a - g_n) / std::max(1e-8, std::abs(g_a) + std::abs(g_n));
        max_rel = std::max(max_rel, rel);
    };
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        auto& layer = model.layers[l];
        for (std::size_t i = 0; i < layer.weights.size(); ++i) {
            probe(layer.weights[i], analytic.layers[l].weights[i]);
        }
        for (std::size_t i = 0; i < layer.bias.size(); ++i) {
            probe(layer.bias[i], analytic.layers[l].bias[i]);
        }
    }
    return max_rel;
}

} // namespace forge::mlp
