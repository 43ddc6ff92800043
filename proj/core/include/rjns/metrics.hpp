// Efficiency criteria for reversible runs.
//
//   M — auxiliary memory: the peak number of simultaneously live auxiliary
//       cells, i.e. locals plus parameters that are neither input nor
//       output. One scalar counts 1; an auxiliary array counts its length.
//   G — garbage: cells outside input and output holding a nonzero value at
//       successful termination, plus any input cell whose final value
//       differs from its initial value (input may be borrowed during the
//       run but must be restored).
//   input reads — element reads of input *arrays*; the traversal measure.
//       Reads of scalar inputs such as the search key are not traversal and
//       are not counted. Writes to input arrays are tallied separately.
//   steps — statements executed, counting each loop iteration.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rjns/store.hpp"

namespace rjns {

/// Declares which entry parameters are the original input and which carry
/// the useful output; everything else is auxiliary.
struct RoleManifest {
    std::set<std::string> inputs;
    std::set<std::string> outputs;
};

struct MetricsRecord {
    std::uint64_t input_reads = 0;
    std::uint64_t input_writes = 0;
    std::uint64_t aux_highwater_cells = 0;
    std::uint64_t steps = 0;
    std::int64_t garbage_cells = 0;
    bool input_restored = true;
};

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GarbageAudit {
    std::int64_t garbage_cells = 0;
    bool input_restored = true;
};

/// Compares the stores of a successful run. Both must bind the same names
/// and every manifest name must be bound; throws ManifestError otherwise.
GarbageAudit audit_garbage(const Store& initial, const Store& final_store,
                           const RoleManifest& manifest);

enum class GrowthClass { Constant, Linear, Logarithmic, Unclassified };

std::string_view growth_class_name(GrowthClass g);

class InsufficientSamplesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Classifies (n, measurement) samples: Constant when all measurements are
/// equal; Linear / Logarithmic when measurement divided by n / log2(n) stays
/// within +-25% of the mean ratio; Unclassified otherwise. Requires at least
/// three sizes spanning two doublings.
GrowthClass classify_growth(const std::vector<std::pair<Int, Int>>& samples);

/// One-line JSON report for a run; schema carries a version field.
std::string metrics_json(const MetricsRecord& rec, std::string_view program, Int n,
                         std::string_view case_id, std::string_view direction,
                         std::string_view outcome);

}  // namespace rjns
