#include "rjns/metrics.hpp"

#include <cmath>

#include <json.hpp>

namespace rjns {

std::string_view growth_class_name(GrowthClass g) {
    switch (g) {
        case GrowthClass::Constant: return "constant";
        case GrowthClass::Linear: return "linear";
        case GrowthClass::Logarithmic: return "logarithmic";
        case GrowthClass::Unclassified: return "unclassified";
    }
    return "?";
}

namespace {

// Count of nonzero values in a cell; arrays count per element.
std::int64_t nonzero_cells(const Cell& c) {
    if (!c.is_array) return c.value != 0 ? 1 : 0;
    std::int64_t n = 0;
    for (Int v : c.elems) n += (v != 0);
    return n;
}

// Count of element positions where two bindings of one name differ.
std::int64_t differing_cells(const Cell& a, const Cell& b) {
    if (!a.is_array) return a.value != b.value ? 1 : 0;
    std::int64_t n = 0;
    std::size_t len = std::min(a.elems.size(), b.elems.size());
    for (std::size_t i = 0; i < len; ++i) n += (a.elems[i] != b.elems[i]);
    n += static_cast<std::int64_t>(std::max(a.elems.size(), b.elems.size()) - len);
    return n;
}

}  // namespace

GarbageAudit audit_garbage(const Store& initial, const Store& final_store,
                           const RoleManifest& manifest) {
    for (const auto& set : {&manifest.inputs, &manifest.outputs}) {
        for (const auto& name : *set) {
            if (!initial.find(name) || !final_store.find(name)) {
                throw ManifestError("manifest references unbound name '" + name + "'");
            }
        }
    }
    GarbageAudit audit;
    for (const auto& entry : final_store.entries()) {
        const Cell* before = initial.find(entry.name);
        if (!before) {
            throw ManifestError("store name '" + entry.name + "' missing from initial store");
        }
        if (manifest.outputs.count(entry.name)) continue;
        if (manifest.inputs.count(entry.name)) {
            std::int64_t diff = differing_cells(*before, *entry.cell);
            if (diff != 0) {
                audit.garbage_cells += diff;
                audit.input_restored = false;
            }
        } else {
            audit.garbage_cells += nonzero_cells(*entry.cell);
        }
    }
    return audit;
}

GrowthClass classify_growth(const std::vector<std::pair<Int, Int>>& samples) {
    if (samples.size() < 3) {
        throw InsufficientSamplesError("classify_growth needs at least three sizes");
    }
    Int min_n = samples.front().first;
    Int max_n = samples.front().first;
    for (const auto& [n, m] : samples) {
        if (n < 2) throw InsufficientSamplesError("sizes must be at least 2");
        min_n = std::min(min_n, n);
        max_n = std::max(max_n, n);
    }
    if (max_n < 4 * min_n) {
        throw InsufficientSamplesError("sizes must span at least two doublings");
    }

    bool all_equal = true;
    for (const auto& [n, m] : samples) {
        if (m != samples.front().second) all_equal = false;
    }
    if (all_equal) return GrowthClass::Constant;

    auto within_band = [&](auto f) {
        std::vector<double> ratios;
        ratios.reserve(samples.size());
        for (const auto& [n, m] : samples) {
            ratios.push_back(static_cast<double>(m) / f(static_cast<double>(n)));
        }
        double mean = 0;
        for (double r : ratios) mean += r;
        mean /= static_cast<double>(ratios.size());
        for (double r : ratios) {
            if (r < 0.75 * mean || r > 1.25 * mean) return false;
        }
        return true;
    };

    if (within_band([](double n) { return n; })) return GrowthClass::Linear;
    if (within_band([](double n) { return std::log2(n); })) return GrowthClass::Logarithmic;
    return GrowthClass::Unclassified;
}

std::string metrics_json(const MetricsRecord& rec, std::string_view program, Int n,
                         std::string_view case_id, std::string_view direction,
                         std::string_view outcome) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["program"] = program;
    j["n"] = n;
    j["case"] = case_id;
    j["direction"] = direction;
    j["input_reads"] = rec.input_reads;
    j["input_writes"] = rec.input_writes;
    j["aux_highwater_cells"] = rec.aux_highwater_cells;
    j["garbage_cells"] = rec.garbage_cells;
    j["steps"] = rec.steps;
    j["outcome"] = outcome;
    return j.dump();
}

}  // namespace rjns
