#pragma once

#include <optional>
#include <vector>

#include "extorder/external_order.hpp"

namespace extorder {

struct MinorSpec {
    Subset remove;   // deleted elements
    Subset contract; // contracted elements; disjoint from remove
};

/// Antimatroid deletion: rooted circuits disjoint from a; equivalently the
/// trace of the feasible sets on E \ a.  Both routes are computed and
/// compared; the result ground drops a.
Antimatroid anti_delete(const Antimatroid& f, Subset a);

/// Antimatroid contraction: circuits (C \ a, x) with x outside a, minimized
/// by inclusion of the underlying sets; equivalently the feasible sets
/// disjoint from a.  Both routes computed and compared.
Antimatroid anti_contract(const Antimatroid& f, Subset a);

/// The contraction's rooted circuits by the circuit formula, including the
/// singleton circuits of elements that become loops.
std::vector<RootedSet> contraction_circuits(const Antimatroid& f, Subset a);

struct GreedoidMinor {
    SetFamily family;
    bool contract_feasible = true; // false: the result lacks the empty set
};

/// Greedoid deletion {F within E\A} then contraction {F : F | A feasible}.
/// Contraction by a non-feasible set is reported, not repaired.
GreedoidMinor greedoid_minor(const SetFamily& f, const MinorSpec& spec);

/// Elements that root every circuit containing them.
Subset extending_elements(const Antimatroid& f);

/// An ordering a1..ak of s with each a_i extending after deleting the
/// previous ones, or nullopt.
std::optional<std::vector<int>> extending_order(const Antimatroid& f, Subset s);

/// The deletion/contraction correspondences between F_ext(M) and the minors
/// of M, checked for one subset a.
///
/// The contraction equality F_ext(M)/a == F_ext(M/a) provably holds when a is
/// feasible AND every element of a is feasible as a singleton (the singleton
/// induction applies step by step).  For merely feasible a it can fail —
/// fig1 with a = {2,3} gives {∅,{4}} against {∅} — so that outcome is
/// recorded in `feasible_contraction_equal` but not counted by all_ok().
struct CorrespondenceReport {
    bool deletion_equal = false; // F_ext(M)\a == F_ext(M\a)
    bool sandwich = false;       // F_ext(M/a) within F/a within F_ext(M\a)
    bool a_feasible = false;
    bool feasible_contraction_equal = true;    // literal claim for feasible a
    bool a_feasible_elementwise = false;       // a feasible with feasible singletons
    bool elementwise_contraction_equal = true; // the provable contraction equality
    bool greedoid_contraction_equal = true;    // deletion == greedoid contraction
    bool a_extending = false;
    bool extending_collapse = true; // contraction == deletion == F_ext(M\a)
    std::string detail;

    bool all_ok() const {
        return deletion_equal && sandwich && elementwise_contraction_equal &&
               greedoid_contraction_equal && extending_collapse;
    }
};

CorrespondenceReport correspondence_check(const Matroid& m, Subset a);
/// Same check against a prebuilt external order for M.
CorrespondenceReport correspondence_check(const ExternalOrder& whole, Subset a);

} // namespace extorder
