#pragma once

#include <memory>
#include <vector>

#include "extorder/set_family.hpp"

namespace extorder {

/// A subset with a distinguished element inside it.
struct RootedSet {
    Subset set;
    int root = -1;

    bool operator==(const RootedSet&) const = default;
};

bool rooted_less(const RootedSet& a, const RootedSet& b);

/// Checks the three equivalent characterizations (greedoid + interval
/// property; accessible + union-closed; empty set + antimatroid exchange) and
/// reports the first witness.  Disagreement between the three raises an
/// InternalError since they are provably equivalent.
Verdict verify_antimatroid(const SetFamily& f);

/// An accessible, union-closed set system.  Rooted circuits and cocircuits
/// are derived on demand and cached; loops (elements in no feasible set) are
/// excluded from both and reported separately.
class Antimatroid {
public:
    /// Verifies the axioms; throws ValidationError with a witness otherwise.
    static Antimatroid from_family(SetFamily f);

    const SetFamily& family() const;
    int n() const;
    Subset ground() const;
    Subset loops() const;

    bool feasible(Subset a) const;
    /// Gamma(a) = {x : a | x feasible}.  Requires a feasible.
    Subset feasible_extensions(Subset a) const;

    /// Free sets, i.e. sets whose trace is their full power set.  Computed as
    /// the Gamma-image and cross-checked against the trace definition.
    const std::vector<Subset>& independents() const;
    bool independent(Subset a) const;

    /// Minimal dependent sets among non-loops, each with the unique root a
    /// such that trace(C) = 2^C minus {{a}}.
    const std::vector<RootedSet>& rooted_circuits() const;
    /// Feasible sets with exactly one endpoint; cross-checked against
    /// minimal feasible sets containing each element.
    const std::vector<RootedSet>& rooted_cocircuits() const;

    bool operator==(const Antimatroid& o) const { return family() == o.family(); }

private:
    struct Impl;
    explicit Antimatroid(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

enum class RootedKind { circuit, cocircuit };

struct RootedAxiomsResult {
    Verdict verdict;
    SetFamily family; // reconstructed feasible sets, when the axioms hold
};

/// Exhaustive CI1/CI2 (or CC1/CC2) check over all pairs; on success
/// reconstructs the feasible family the rooted sets define.
RootedAxiomsResult check_rooted_axioms(RootedKind kind, const std::vector<RootedSet>& rooted,
                                       int n, Subset ground);

/// Feasible sets defined by rooted circuits: A is feasible iff no circuit
/// meets A exactly in its root.  Grown upward from the empty set.
SetFamily family_from_rooted_circuits(int n, Subset ground, const std::vector<RootedSet>& circuits);

/// Feasible sets as unions of cocircuit sets (plus the empty set).
SetFamily family_from_rooted_cocircuits(int n, Subset ground,
                                        const std::vector<RootedSet>& cocircuits);

/// At every non-loop element x, the circuit stems {C\x} and cocircuit stems
/// {D\x} must be blockers of one another.
Verdict verify_circuit_cocircuit_duality(const Antimatroid& f);

/// Every feasible set with k endpoints is a union of k cocircuits rooted at
/// those endpoints.
Verdict verify_union_of_cocircuits(const Antimatroid& f);

/// Gamma is injective on feasible sets iff the family is an antimatroid.
bool gamma_injective(const SetFamily& f);

} // namespace extorder
