#include "forge/hydro/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "forge/errors.hpp"
#include "forge/util/fsio.hpp"
#include "forge/util/numfmt.hpp"
#include "forge/util/rng.hpp"

namespace forge::hydro {

namespace {

double normalize_one(double v, const Bound& b) { return (v - b.min) / (b.max - b.min); }

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<double> Scaler::normalize(const std::vector<double>& levels) const {
    if (levels.size() != features.size()) {
        throw ArgumentError("scaler arity mismatch");
    }
    std::vector<double> out(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        out[i] = normalize_one(levels[i], features[i]);
    }
    return out;
}

double Scaler::normalize_target(double flow) const { return normalize_one(flow, target); }

double Scaler::denormalize_target(double y) const {
    return target.min + y * (target.max - target.min);
}

void Dataset::validate() const {
    if (samples.empty()) {
        return;
    }
    const std::size_t arity = samples.front().levels_m.size();
    for (const Sample& s : samples) {
        if (s.levels_m.size() != arity) {
            throw ArgumentError("dataset has mixed sensor arity");
        }
        for (double level : s.levels_m) {
            if (!std::isfinite(level) || level < 0.0) {
                throw ArgumentError("dataset has invalid level value");
            }
        }
        if (!std::isfinite(s.flow_m3s) || s.flow_m3s < 0.0) {
            throw ArgumentError("dataset has invalid flow value");
        }
    }
}

Scaler Dataset::fit_scaler() const {
    if (samples.empty()) {
        throw ArgumentError("cannot fit scaler on empty dataset");
    }
    const std::size_t arity = samples.front().levels_m.size();
    Scaler sc;
    sc.features.assign(arity, Bound{samples.front().levels_m[0], samples.front().levels_m[0]});
    for (std::size_t i = 0; i < arity; ++i) {
        sc.features[i] = {samples.front().levels_m[i], samples.front().levels_m[i]};
    }
    sc.target = {samples.front().flow_m3s, samples.front().flow_m3s};
    for (const Sample& s : samples) {
        for (std::size_t i = 0; i < arity; ++i) {
            sc.features[i].min = std::min(sc.features[i].min, s.levels_m[i]);
            sc.features[i].max = std::max(sc.features[i].max, s.levels_m[i]);
        }
        sc.target.min = std::min(sc.target.min, s.flow_m3s);
        sc.target.max = std::max(sc.target.max, s.flow_m3s);
    }
    for (std::size_t i = 0; i < arity; ++i) {
        if (!(sc.features[i].min < sc.features[i].max)) {
            throw ArgumentError("degenerate range for feature " + std::to_string(i));
        }
    }
    if (!(sc.target.min < sc.target.max)) {
        throw ArgumentError("degenerate range for flow target");
    }
    return sc;
}

Dataset Dataset::project(const std::vector<int>& sensor_indices) const {
    if (sensor_indices.empty()) {
        throw ArgumentError("projection needs at least one sensor index");
    }
    const int arity = sensor_count();
    for (int idx : sensor_indices) {
        if (idx < 0 || idx >= arity) {
            throw ArgumentError("sensor index " + std::to_string(idx) + " out of range");
        }
    }
    Dataset out;
    out.config = config;
    out.samples.reserve(samples.size());
    for (const Sample& s : samples) {
        Sample p;
        p.timestamp_s = s.timestamp_s;
        p.flow_m3s = s.flow_m3s;
        p.levels_m.reserve(sensor_indices.size());
        for (int idx : sensor_indices) {
            p.levels_m.push_back(s.levels_m[static_cast<std::size_t>(idx)]);
        }
        out.samples.push_back(std::move(p));
    }
    return out;
}

std::string to_csv(const Dataset& dataset) {
    dataset.validate();
    const int arity = dataset.sensor_count();
    std::string out = "timestamp";
    for (int i = 1; i <= arity; ++i) {
        out += ",level_" + std::to_string(i);
    }
    out += ",flow_m3s\n";
    for (const Sample& s : dataset.samples) {
        out += util::format_double(s.timestamp_s, 9);
        for (double level : s.levels_m) {
            out += ',';
            out += util::format_double(level, 9);
        }
        out += ',';
        out += util::format_double(s.flow_m3s, 9);
        out += '\n';
    }
    return out;
}

Dataset from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        throw ParseError("missing header", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    const auto header = split_fields(line);
    if (header.size() < 3 || header.front() != "timestamp" || header.back() != "flow_m3s") {
        throw ParseError("header must be timestamp,level_1[,...],flow_m3s", 1);
    }
    const std::size_t arity = header.size() - 2;
    if (arity > 3) {
        throw ParseError("at most 3 level columns supported", 1);
    }
    for (std::size_t i = 0; i < arity; ++i) {
        const std::string want = "level_" + std::to_string(i + 1);
        if (header[i + 1] != want) {
            throw ParseError("expected column '" + want + "', got '" + header[i + 1] + "'", 1);
        }
    }

    Dataset ds;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        Sample s;
        s.timestamp_s = util::parse_double(fields[0], line_no);
        s.levels_m.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            s.levels_m.push_back(util::parse_double(fields[i + 1], line_no));
        }
        s.flow_m3s = util::parse_double(fields.back(), line_no);
        ds.samples.push_back(std::move(s));
    }
    ds.validate();
    return ds;
}

Dataset load_csv(const std::filesystem::path& path) {
    return from_csv(util::read_file(path));
}

void save_csv(const Dataset& dataset, const std::filesystem::path& path) {
    util::write_file_atomic(path, to_csv(dataset));
}

SplitResult split(const Dataset& dataset, const SplitFractions& fractions,
                  std::uint64_t seed) {
    const double sum = fractions.train + fractions.val + fractions.test;
    if (!(fractions.train > 0.0) || !(fractions.val > 0.0) || !(fractions.test > 0.0) ||
        std::abs(sum - 1.0) > 1e-9) {
        throw ArgumentError("split fractions must be positive and sum to 1");
    }
    const std::size_t n = dataset.size();
    if (n == 0) {
        throw ArgumentError("cannot split empty dataset");
    }

    // Largest-remainder allocation; leftovers go to train, then val.
    const double exact[3] = {fractions.train * static_cast<double>(n),
                             fractions.val * static_cast<double>(n),
                             fractions.test * static_cast<double>(n)};
    std::size_t sizes[3];
    double rem[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        sizes[i] = static_cast<std::size_t>(std::floor(exact[i]));
        rem[i] = exact[i] - std::floor(exact[i]);
        assigned += sizes[i];
    }
    std::size_t leftover = n - assigned;
    int order[3] = {0, 1, 2};
    std::stable_sort(order, order + 3, [&](int a, int b) { return rem[a] > rem[b]; });
    for (std::size_t u = 0; u < leftover; ++u) {
        sizes[order[u % 3]] += 1;
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    util::Rng rng(seed);
    rng.shuffle(idx);

    SplitResult out;
    out.train.config = dataset.config;
    out.val.config = dataset.config;
    out.test.config = dataset.config;
    std::size_t cursor = 0;
    Dataset* parts[3] = {&out.train, &out.val, &out.test};
    for (int p = 0; p < 3; ++p) {
        parts[p]->samples.reserve(sizes[p]);
        for (std::size_t i = 0; i < sizes[p]; ++i) {
            parts[p]->samples.push_back(dataset.samples[idx[cursor++]]);
        }
    }

    const Scaler sc = out.train.fit_scaler();
    out.train.scaler = sc;
    out.val.scaler = sc;
    out.test.scaler = sc;
    return out;
}

} // namespace forge::hydro
