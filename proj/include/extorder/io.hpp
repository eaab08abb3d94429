#pragma once

#include <optional>
#include <string>
#include <variant>

#include "extorder/minors.hpp"

namespace extorder {

/// A parsed input object: one of the seven wire-format kinds, reduced to the
/// library value it describes.
struct ParsedInput {
    std::variant<Matroid, Antimatroid, LatticePresentation> value;

    bool is_matroid() const { return std::holds_alternative<Matroid>(value); }
    bool is_antimatroid() const { return std::holds_alternative<Antimatroid>(value); }
    bool is_lattice() const { return std::holds_alternative<LatticePresentation>(value); }
};

/// Parses and validates a JSON object spec; set elements are 1-based integers
/// or single letters (a=1).  Throws ValidationError with the offending JSON
/// path on schema errors.
ParsedInput parse_spec(const std::string& json_text);

/// Canonical JSON for a feasible family: sorted sets, 1-based elements,
/// compact dump.  Round-trips through parse_spec byte-for-byte.
std::string export_json(const SetFamily& family);
/// Canonical JSON for an abstract lattice (1-based node ids).
std::string export_json(const LatticePresentation& pres);
/// Canonical bases-kind JSON for a matroid; elements outside the active
/// ground are renumbered away via the "labels" field.
std::string export_json_matroid(const Matroid& m);

struct DotOptions {
    bool feasible_labels = false; // label nodes by EP sets instead of independents
};

/// Hasse diagram of an external-order lattice, bottom-up, edges labeled by
/// the natural labeling.
std::string export_dot(const ExternalOrder& eo, const DotOptions& options);
std::string export_dot(const JDLattice& lat, const DotOptions& options);

struct RunFlags {
    bool dot = false;
    bool feasible_labels = false;
    bool las_vergnas = false; // add the basis-restricted classical orientation
    std::optional<Subset> remove;
    std::optional<Subset> contract;
};

struct RunResult {
    int exit_code = 0; // 0 ok, 1 validation error, 2 invariant failure
    std::string output;
};

/// Dispatches one CLI command: ext-order, classify, tutte, partition, minor,
/// circuits, check.  Output ordering is deterministic everywhere.
RunResult run(const std::string& command, const ParsedInput& input, const RunFlags& flags);

/// Parses a comma-separated element list ("1,2" or "a,b") into a subset.
Subset parse_element_list(const std::string& text, int n);

} // namespace extorder
