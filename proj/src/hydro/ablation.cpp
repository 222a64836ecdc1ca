#include "forge/hydro/ablation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "forge/errors.hpp"

namespace forge::hydro {

namespace {

std::string subset_name(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

} // namespace

std::vector<AblationEntry> sensor_ablation(const Dataset& dataset,
                                           const std::vector<std::vector<int>>& subsets,
                                           const AblationProcedure& procedure) {
    const int arity = dataset.sensor_count();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> canonical;
    canonical.reserve(subsets.size());
    for (const auto& subset : subsets) {
        if (subset.empty()) {
            throw ArgumentError("ablation subset must be non-empty");
        }
        std::vector<int> c = subset;
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            throw ArgumentError("ablation subset " + subset_name(c) + " repeats a sensor");
        }
        for (int idx : c) {
            if (idx < 0 || idx >= arity) {
                throw ArgumentError("ablation subset " + subset_name(c) +
                                    " is outside sensor arity " + std::to_string(arity));
            }
        }
        if (!seen.insert(c).second) {
            throw ArgumentError("duplicate ablation subset " + subset_name(c));
        }
        canonical.push_back(std::move(c));
    }

    std::vector<AblationEntry> out;
    out.reserve(canonical.size());
    for (const auto& subset : canonical) {
        AblationEntry entry;
        entry.subset = subset;
        const Dataset projected = dataset.project(subset);
        auto [fm, qm] = procedure(projected);
        entry.float_metrics = fm;
        entry.quant_metrics = qm;
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace forge::hydro
