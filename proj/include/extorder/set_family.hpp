#pragma once

#include <vector>

#include "extorder/errors.hpp"
#include "extorder/subset.hpp"

namespace extorder {

/// A duplicate-free family of subsets of a ground set, kept sorted by
/// (cardinality, mask).  `ground()` is the mask of active elements inside the
/// id universe `n()`; minors shrink the ground but keep element ids.
class SetFamily {
public:
    SetFamily() = default;
    SetFamily(int n, std::vector<Subset> members);
    SetFamily(int n, Subset ground, std::vector<Subset> members);

    int n() const { return n_; }
    Subset ground() const { return ground_; }
    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Subset s) const;
    Subset union_of_members() const;

    /// {X & a : X in family}, deduplicated, on ground `ground() & a`.
    SetFamily trace(Subset a) const;

    bool operator==(const SetFamily&) const = default;

private:
    int n_ = 0;
    Subset ground_;
    std::vector<Subset> members_;
};

/// Feasible extensions of `a` in an arbitrary family.
Subset gamma(const SetFamily& f, Subset a);

/// Accessibility plus the exchange axiom.
Verdict verify_greedoid(const SetFamily& f);

/// An antichain of subsets.
struct Clutter {
    int n = 0;
    Subset ground;
    std::vector<Subset> members;
};

/// Validates the no-containment property; throws ValidationError otherwise.
Clutter make_clutter(int n, Subset ground, std::vector<Subset> members);

/// Minimal transversals of u.  blocker(blocker(u)) == u.
Clutter blocker(const Clutter& u);

} // namespace extorder
