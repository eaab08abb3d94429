#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "extorder/errors.hpp"
#include "extorder/subset.hpp"

namespace extorder {

/// Columns of a matrix over GF(p), p in {2,3,5,7}; column index = element id.
struct LinearRep {
    int field = 2;
    int rows = 0;
    std::vector<std::vector<std::uint8_t>> columns;
};

/// Multigraph edge list; edge index = element id.  Self-loops become matroid
/// loops, parallel edges become parallel elements.
struct GraphicRep {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct UniformRep {
    int target_rank = 0;
};

struct BasesRep {
    std::vector<Subset> bases;
};

struct CircuitsRep {
    std::vector<Subset> circuits;
};

/// An ordered matroid: independence oracle over an ordered ground set, with
/// lazily cached circuits/bases/independents/flats.  Values are immutable
/// after construction; caches fill once under std::call_once, so concurrent
/// readers are safe.  Ground sets of minors keep their original element ids;
/// `ground()` is the mask of active elements inside the id universe `n()`.
class Matroid {
public:
    static Matroid linear(int field, const std::vector<std::vector<int>>& matrix);
    static Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
    static Matroid uniform(int rank, int n);
    /// Validates the basis exchange axiom exhaustively.
    static Matroid from_bases(int n, std::vector<Subset> bases);
    /// Validates the clutter property and circuit elimination exhaustively.
    static Matroid from_circuits(int n, std::vector<Subset> circuits);

    int n() const;
    Subset ground() const;
    const GroundOrder& order() const;
    /// Same matroid, new total order on the ground set.  Caches are shared.
    Matroid with_order(GroundOrder ord) const;

    bool is_independent(Subset a) const;
    /// Max cardinality of an independent subset, by greedy extension.
    int rank(Subset a) const;
    int rank() const;
    /// {x : rank(a | x) == rank(a)}; idempotent, contains a.
    Subset closure(Subset a) const;
    Subset loops() const;

    const std::vector<Subset>& circuits() const;
    const std::vector<Subset>& bases() const;
    const std::vector<Subset>& independents() const;
    const std::vector<Subset>& flats() const;

    /// The unique circuit inside indep|x.  Requires x in closure(indep)\indep.
    Subset basic_circuit(Subset indep, int x) const;
    /// Basic bond of y in indep, taken inside the restriction to closure(indep).
    Subset basic_bond(Subset indep, int y) const;

    /// rank*(A) = |A| - r(E) + r(E\A); shares ground and order.
    Matroid dual() const;
    /// Delete `del`, contract `con` (disjoint).  Ground ids are preserved.
    Matroid minor(Subset del, Subset con) const;

    /// Basis of M\forbidden maximal in ascending-sequence lex order with
    /// prefixes small; greedy insertion in descending ground order.
    Subset lex_max_basis(Subset forbidden) const;

    struct Core; // opaque shared representation

private:
    Matroid(std::shared_ptr<const Core> core, GroundOrder ord);

    std::shared_ptr<const Core> core_;
    GroundOrder order_;
};

/// Exhaustive axiom sweep: rank unit-increase/submodularity, closure laws,
/// flat lattice closure, basic circuit/bond equivalences on all bases, dual
/// involution, Gale dominance of the greedy basis.  Cost O(2^n * n^2).
Verdict verify_matroid_axioms(const Matroid& m);

} // namespace extorder
