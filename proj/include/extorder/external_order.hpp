#pragma once

#include <utility>
#include <vector>

#include "extorder/activity.hpp"
#include "extorder/jd_lattice.hpp"

namespace extorder {

/// Matroid circuits rooted at their order-minima; these satisfy the rooted
/// antimatroid circuit axioms and define F_ext.
std::vector<RootedSet> ext_rooted_circuits(const Matroid& m);

/// The generalized external order of an ordered matroid: the antimatroid of
/// externally passive sets EP(I) over all independent sets I, with its
/// join-distributive lattice.  The canonical order is the reversed convention
/// (I <= J iff EP(I) is contained in EP(J)), so the lex-maximal basis sits at
/// the bottom and the empty set on top.
class ExternalOrder {
public:
    /// Computes EP per independent set and cross-checks the family against
    /// the reconstruction from the rooted circuits; a mismatch raises an
    /// InternalError since the two paths are independent.
    static ExternalOrder build(const Matroid& m);
    /// The internal order: the external order of the dual matroid.
    static ExternalOrder internal(const Matroid& m);

    const Matroid& matroid() const { return matroid_; }
    const Antimatroid& antimatroid() const { return lattice_.antimatroid(); }
    const JDLattice& lattice() const { return lattice_; }
    bool is_internal() const { return internal_; }

    Subset ep(Subset indep) const;
    int elem_of(Subset indep) const;
    Subset independent_of(int elem) const { return indep_of_elem_[static_cast<std::size_t>(elem)]; }

    /// EP(i) inside EP(j); cross-checked against the EP(i) & j == empty test.
    bool leq(Subset i, Subset j) const;

    /// For each a in i the unique cover J_a with EP(J_a) = EP(i) | a, built
    /// from the active chain ch(i, a).
    std::vector<std::pair<int, Subset>> upper_covers(Subset i) const;

    /// The lower cover removing min(EP(i)); requires EP(i) nonempty.
    Subset min_passive_lower_cover(Subset i) const;

    /// (meet, join) via lex-maximal bases of M minus the passive-set
    /// intersection/union; both are asserted against the lattice.
    std::pair<Subset, Subset> meet_join(Subset i, Subset j) const;

    struct BooleanPartition {
        std::vector<int> owner_of_mask; // subset mask -> lattice element
        long long interval_count = 0;
    };
    /// Assigns every A within the ground set its unique interval
    /// [I, I | EA(I)]; verifies both this partition and the complementary
    /// [EP(I), E \ I] partition cover 2^E exactly once.
    BooleanPartition boolean_partition() const;

    /// Per lattice element the flat spanned by its independent set; verified
    /// surjective onto the flats of M and order-reversing.
    std::vector<Subset> flats_projection() const;

private:
    ExternalOrder(Matroid m, JDLattice lat, std::vector<Subset> indep_of_elem, bool internal);

    Matroid matroid_;
    JDLattice lattice_;
    std::vector<Subset> indep_of_elem_;                 // parallel to lattice elements
    std::vector<std::pair<std::uint64_t, int>> index_;  // independent-set bits -> element
    bool internal_ = false;
};

} // namespace extorder
