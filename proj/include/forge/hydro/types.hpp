#pragma once

#include <optional>
#include <vector>

namespace forge::hydro {

enum class Structure { Plain, Venturi };

// Placement of the radar level sensors along the channel.
struct SensorLayout {
    std::vector<double> positions_m;    // strictly increasing
    std::vector<bool> at_constriction;  // true if mounted over the throat

    int count() const { return static_cast<int>(positions_m.size()); }
    void validate() const;
};

// Rectangular laboratory flume with an optional Venturi constriction.
struct FlumeConfig {
    double width_m = 0.3;
    double slope = 0.001;                  // bed slope, bounded -0.005..+0.025
    double roughness_n = 0.010;            // Manning coefficient, s*m^(-1/3)
    Structure structure = Structure::Plain;
    double throat_width_m = 0.0;           // Venturi only, < width_m
    SensorLayout sensors = default_sensors();
    double noise_sigma_m = 0.0;            // Gaussian level noise std, m
    double contamination_rate = 0.0;       // per-sample disturbance probability
    double depth_min_m = 0.02;
    double depth_max_m = 0.25;

    void validate() const;

    // Three sensors at 1/2/3 m, the middle one over the throat.
    static SensorLayout default_sensors();
};

struct Bound {
    double min = 0.0;
    double max = 0.0;
};

// Min-max normalization fitted on the training split; maps features and
// the flow target to [0,1].
struct Scaler {
    std::vector<Bound> features;
    Bound target;

    bool fitted() const { return !features.empty(); }
    std::vector<double> normalize(const std::vector<double>& levels) const;
    double normalize_target(double flow) const;
    double denormalize_target(double y) const;
};

struct Sample {
    double timestamp_s = 0.0;
    std::vector<double> levels_m;
    double flow_m3s = 0.0;
};

struct Dataset {
    std::vector<Sample> samples;
    std::optional<FlumeConfig> config;  // provenance when synthesized
    std::optional<Scaler> scaler;

    std::size_t size() const { return samples.size(); }
    int sensor_count() const {
        return samples.empty() ? 0 : static_cast<int>(samples.front().levels_m.size());
    }

    // All samples must share the levels arity.
    void validate() const;

    // Fits a scaler on this dataset's own samples.
    Scaler fit_scaler() const;

    // Keeps only the level columns in `sensor_indices` (ordered as given).
    Dataset project(const std::vector<int>& sensor_indices) const;
};

} // namespace forge::hydro
