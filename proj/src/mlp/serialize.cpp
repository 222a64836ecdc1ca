#include "forge/mlp/serialize.hpp"

#include <nlohmann/json.hpp>

#include "forge/errors.hpp"
#include "forge/util/fsio.hpp"
#include "forge/util/numfmt.hpp"

namespace forge::mlp {

namespace {

using nlohmann::json;

std::string num(double v) { return util::format_double(v, 17); }

std::string num_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += num(values[i]);
    }
    return out + "]";
}

std::string int_array(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string scaler_json(const hydro::Scaler& scaler) {
    if (!scaler.fitted()) {
        return "null";
    }
    std::string out = "{\"features\":[";
    for (std::size_t i = 0; i < scaler.features.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += "{\"min\":" + num(scaler.features[i].min) +
               ",\"max\":" + num(scaler.features[i].max) + "}";
    }
    out += "],\"target\":{\"min\":" + num(scaler.target.min) +
           ",\"max\":" + num(scaler.target.max) + "}}";
    return out;
}

hydro::Scaler scaler_from(const json& j) {
    hydro::Scaler sc;
    if (j.is_null()) {
        return sc;
    }
    for (const auto& f : j.at("features")) {
        sc.features.push_back({f.at("min").get<double>(), f.at("max").get<double>()});
    }
    sc.target = {j.at("target").at("min").get<double>(), j.at("target").at("max").get<double>()};
    return sc;
}

} // namespace

std::string to_json(const FloatMlp& mlp) {
    mlp.validate();
    std::string out = "{\n";
    out += "  \"kind\": \"float_mlp\",\n";
    out += "  \"format_version\": 1,\n";
    out += "  \"spec\": {\"input_dim\": " + std::to_string(mlp.spec.input_dim) +
           ", \"hidden\": " + int_array(mlp.spec.hidden) +
           ", \"output_dim\": " + std::to_string(mlp.spec.output_dim) + "},\n";
    out += "  \"scaler\": " + scaler_json(mlp.scaler) + ",\n";
    out += "  \"layers\": [\n";
    for (std::size_t l = 0; l < mlp.layers.size(); ++l) {
        const auto& layer = mlp.layers[l];
        out += "    {\"n_in\": " + std::to_string(layer.n_in) +
               ", \"n_out\": " + std::to_string(layer.n_out) +
               ",\n     \"weights\": " + num_array(layer.weights) +
               ",\n     \"bias\": " + num_array(layer.bias) + "}";
        out += (l + 1 < mlp.layers.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

FloatMlp float_mlp_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    try {
        if (j.at("kind").get<std::string>() != "float_mlp") {
            throw ParseError("model file: kind is not float_mlp");
        }
        FloatMlp mlp;
        mlp.spec.input_dim = j.at("spec").at("input_dim").get<int>();
        mlp.spec.hidden = j.at("spec").at("hidden").get<std::vector<int>>();
        mlp.spec.output_dim = j.at("spec").at("output_dim").get<int>();
        mlp.scaler = scaler_from(j.at("scaler"));
        for (const auto& jl : j.at("layers")) {
            DenseLayer layer;
            layer.n_in = jl.at("n_in").get<int>();
            layer.n_out = jl.at("n_out").get<int>();
            layer.weights = jl.at("weights").get<std::vector<double>>();
            layer.bias = jl.at("bias").get<std::vector<double>>();
            mlp.layers.push_back(std::move(layer));
        }
        mlp.validate();
        return mlp;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
}

void save_model(const FloatMlp& mlp, const std::filesystem::path& path) {
    util::write_file_atomic(path, to_json(mlp));
}

FloatMlp load_model(const std::filesystem::path& path) {
    return float_mlp_from_json(util::read_file(path));
}

} // namespace forge::mlp
