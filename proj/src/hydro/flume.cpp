#include "forge/hydro/flume.hpp"

#include <algorithm>
#include <cmath>

#include "forge/errors.hpp"
#include "forge/util/rng.hpp"

namespace forge::hydro {

void SensorLayout::validate() const {
    const int n = count();
    if (n < 1 || n > 3) {
        throw ConfigError("sensor count must be 1..3, got " + std::to_string(n));
    }
    if (at_constriction.size() != positions_m.size()) {
        throw ConfigError("sensor flag arity does not match positions");
    }
    for (int i = 1; i < n; ++i) {
        if (!(positions_m[i] > positions_m[i - 1])) {
            throw ConfigError("sensor positions must be strictly increasing");
        }
    }
}

SensorLayout FlumeConfig::default_sensors() {
    SensorLayout s;
    s.positions_m = {1.0, 2.0, 3.0};
    s.at_constriction = {false, true, false};
    return s;
}

void FlumeConfig::validate() const {
    if (!(width_m > 0.0)) {
        throw ConfigError("flume width must be positive");
    }
    if (slope < -0.005 || slope > 0.025) {
        throw ConfigError("slope out of range -0.005..0.025");
    }
    if (!(roughness_n > 0.0)) {
        throw ConfigError("Manning roughness must be positive");
    }
    if (structure == Structure::Venturi) {
        if (!(throat_width_m > 0.0) || !(throat_width_m < width_m)) {
            throw ConfigError("Venturi throat must satisfy 0 < throat < width");
        }
    }
    sensors.validate();
    if (!(noise_sigma_m >= 0.0)) {
        throw ConfigError("noise sigma must be non-negative");
    }
    if (contamination_rate < 0.0 || contamination_rate > 1.0) {
        throw ConfigError("contamination rate must be in [0,1]");
    }
    if (!(depth_min_m > 0.0) || !(depth_max_m > depth_min_m)) {
        throw ConfigError("depth range must satisfy 0 < min < max");
    }
}

double manning_flow(double depth_m, const FlumeConfig& cfg) {
    if (!(cfg.width_m > 0.0) || !(cfg.roughness_n > 0.0)) {
        throw ConfigError("manning_flow: non-positive width or roughness");
    }
    if (depth_m < 0.0) {
        throw ArgumentError("manning_flow: negative depth");
    }
    if (depth_m == 0.0 || cfg.slope <= 0.0) {
        return 0.0;
    }
    const double area = cfg.width_m * depth_m;
    const double radius = area / (cfg.width_m + 2.0 * depth_m);
    return (1.0 / cfg.roughness_n) * area * std::pow(radius, 2.0 / 3.0) *
           std::sqrt(cfg.slope);
}

double critical_depth(double flow_m3s, double b_m) {
    if (!(b_m > 0.0)) {
        throw ConfigError("critical_depth: non-positive throat width");
    }
    return std::cbrt(flow_m3s * flow_m3s / (kGravity * b_m * b_m));
}

std::vector<double> sensor_levels(double depth_m, double flow_m3s,
                                  const FlumeConfig& cfg) {
    cfg.validate();
    if (!(depth_m > 0.0)) {
        throw ArgumentError("sensor_levels: depth must be positive");
    }
    std::vector<double> levels(static_cast<std::size_t>(cfg.sensors.count()), depth_m);
    if (cfg.structure == Structure::Venturi) {
        const double hc = critical_depth(flow_m3s, cfg.throat_width_m);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (cfg.sensors.at_constriction[i]) {
                levels[i] = hc;
            }
        }
    }
    return levels;
}

Dataset generate(const FlumeConfig& cfg, std::size_t n_samples, std::uint64_t seed) {
    cfg.validate();
    if (n_samples == 0) {
        throw ArgumentError("generate: n_samples must be >= 1");
    }
    util::Rng rng(seed);
    Dataset ds;
    ds.config = cfg;
    ds.samples.reserve(n_samples);
    const auto n_sensors = static_cast<std::size_t>(cfg.sensors.count());
    for (std::size_t i = 0; i < n_samples; ++i) {
        Sample s;
        s.timestamp_s = static_cast<double>(i);
        const double depth = rng.uniform(cfg.depth_min_m, cfg.depth_max_m);
        s.flow_m3s = manning_flow(depth, cfg);
        s.levels_m = sensor_levels(depth, s.flow_m3s, cfg);
        for (std::size_t k = 0; k < n_sensors; ++k) {
            s.levels_m[k] += rng.normal(cfg.noise_sigma_m);
        }
        if (rng.uniform() < cfg.contamination_rate) {
            // Floating-solid echo: one sensor reads high.
            const std::size_t k = rng.index(n_sensors);
            s.levels_m[k] += rng.uniform(0.01, 0.05);
        }
        for (double& level : s.levels_m) {
            level = std::max(level, 0.0);
        }
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

} // namespace forge::hydro
