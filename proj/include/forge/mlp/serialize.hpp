#pragma once

#include <filesystem>
#include <string>

#include "forge/mlp/model.hpp"

namespace forge::mlp {

// Model file: JSON with 17-significant-digit decimals so a load/save
// round trip is bit-exact.
std::string to_json(const FloatMlp& mlp);
FloatMlp float_mlp_from_json(const std::string& text);

void save_model(const FloatMlp& mlp, const std::filesystem::path& path);
FloatMlp load_model(const std::filesystem::path& path);

} // namespace forge::mlp
