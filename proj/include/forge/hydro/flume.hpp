#pragma once

#include <cstdint>
#include <vector>

#include "forge/hydro/types.hpp"

namespace forge::hydro {

// Standard gravity, m/s^2.
inline constexpr double kGravity = 9.80665;

// Manning discharge for a rectangular channel:
//   Q = (1/n) * A * R^(2/3) * sqrt(S),  A = w*h,  R = w*h / (w + 2h).
// Zero depth or non-positive slope yields zero flow (no backwater model).
double manning_flow(double depth_m, const FlumeConfig& cfg);

// What each sensor reads at the given uniform depth and discharge, without
// noise. Plain: the depth everywhere. Venturi: sensors over the throat read
// the critical depth h_c = (Q^2 / (g * b_c^2))^(1/3).
std::vector<double> sensor_levels(double depth_m, double flow_m3s,
                                  const FlumeConfig& cfg);

// Critical depth at a constriction of width b_m.
double critical_depth(double flow_m3s, double b_m);

// Synthesizes a dataset of n_samples. Per sample the RNG stream is, in
// order (see util::Rng for the per-call draw counts):
//   1. depth        = uniform(depth_min_m, depth_max_m)
//   2. flow         = manning_flow(depth)
//   3. levels       = sensor_levels(depth, flow)
//   4. per sensor k = 0..count-1: levels[k] += normal(noise_sigma_m)
//   5. c = uniform(); if c < contamination_rate:
//        k = index(count); levels[k] += uniform(0.01, 0.05)
//   6. levels clamped at >= 0
// timestamp_s = sample index (1 Hz). Deterministic for a fixed seed.
Dataset generate(const FlumeConfig& cfg, std::size_t n_samples, std::uint64_t seed);

} // namespace forge::hydro
