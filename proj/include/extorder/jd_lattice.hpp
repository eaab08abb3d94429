#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extorder/antimatroid.hpp"
#include "extorder/matroid.hpp"

namespace extorder {

struct CoverEdge {
    int lower = -1;
    int upper = -1;
    int label = -1; // the single element of T(upper) \ T(lower)

    bool operator==(const CoverEdge&) const = default;
};

/// The inclusion order on the feasible sets of an antimatroid.  Elements are
/// indexed in (cardinality, mask) order of their T-sets; joins are unions,
/// meets are the largest feasible subset of the intersection.  Edge labels
/// form the natural edge labeling.
class JDLattice {
public:
    static JDLattice from_antimatroid(Antimatroid f);

    const Antimatroid& antimatroid() const { return source_; }
    int size() const { return static_cast<int>(elems_.size()); }
    /// Width of the element-id universe the labels live in.
    int label_universe() const;
    /// Meet-irreducible labels: the non-loop ground elements.
    Subset labels() const;

    Subset t_set(int x) const { return elems_[static_cast<std::size_t>(x)]; }
    int index_of(Subset t) const;
    int rank(int x) const { return t_set(x).size(); }

    const std::vector<CoverEdge>& covers() const { return covers_; }
    const std::vector<std::pair<int, int>>& up(int x) const {
        return up_[static_cast<std::size_t>(x)];
    }
    const std::vector<std::pair<int, int>>& down(int x) const {
        return down_[static_cast<std::size_t>(x)];
    }

    /// I(x): labels on the cover edges leaving x upward.
    Subset indep_set(int x) const;
    /// J(x): labels on the cover edges entering x from below.
    Subset down_label_set(int x) const;

    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    bool leq(int x, int y) const { return t_set(x).subset_of(t_set(y)); }
    int join(int x, int y) const;
    int meet(int x, int y) const;

    std::vector<int> meet_irreducible_elems() const;

private:
    Antimatroid source_;
    std::vector<Subset> elems_;
    std::vector<CoverEdge> covers_;
    std::vector<std::vector<std::pair<int, int>>> up_, down_;

    explicit JDLattice(Antimatroid f);
};

/// An abstract finite lattice given by its Hasse diagram (cover pairs on
/// nodes 0..node_count-1).  Order, meets and joins are derived by transitive
/// closure; inputs that are not lattices (or not cover-irredundant) are
/// rejected with ValidationError.
struct LatticePresentation {
    int node_count = 0;
    std::vector<std::pair<int, int>> covers; // (lower, upper)
};

/// Checks the four equivalent join-distributivity conditions (semimodular +
/// meet-semidistributive; unique irredundant meet decompositions; boolean
/// [x, j(x)] intervals; maximal chain length = |MeetIrr|) and asserts their
/// agreement.  Throws ValidationError when the input is not a lattice.
Verdict verify_join_distributive(const LatticePresentation& pres);

/// Builds the JD lattice of an abstract presentation via the T map on its
/// meet-irreducibles (labeled 0..k-1 in node order).
JDLattice lattice_from_presentation(const LatticePresentation& pres);

/// The antimatroid T(L) on the meet-irreducible labels; for a lattice built
/// from an antimatroid this is the source with loops removed.
Antimatroid t_map(const JDLattice& lat);

struct ElementSets {
    Subset t, i, j;
};
ElementSets element_sets(const JDLattice& lat, int x);

struct MatroidalReport {
    bool matroidal = false;
    std::vector<int> rcov;
    std::string witness;
};

/// rcov(x) = |I(x)|; matroidal iff rcov is decreasing and satisfies
/// rcov(x^y) + rcov(xvy) <= rcov(x) + rcov(y).
MatroidalReport is_matroidal(const JDLattice& lat);

/// The matroid whose independent sets are I(L); requires is_matroidal.
Matroid matroid_from_lattice(const JDLattice& lat);

/// A total order making every rooted circuit's root its maximum, or nullopt.
/// Greedy: repeatedly pick an extending element (smallest id first), place it
/// last among the remaining, delete it.  Any returned order is re-verified
/// against all circuits.
std::optional<GroundOrder> confluent_ordering(const Antimatroid& f);

/// Checks that the natural edge labeling, with labels compared under `ord`,
/// is an S_n EL-labeling: every interval has exactly one increasing maximal
/// chain, that chain is lex-least, and maximal chains carry permutations of
/// the label set.
Verdict verify_snelling(const JDLattice& lat, const GroundOrder& ord);

struct LatticeClass {
    bool join_distributive = false;
    bool matroidal = false;
    bool confluent = false;
    enum class Kind { not_jd, jd_only, mjd_not_eo, eo } kind = Kind::not_jd;
};

const char* to_string(LatticeClass::Kind k);

LatticeClass classify(const JDLattice& lat);
LatticeClass classify(const LatticePresentation& pres);

/// Feasible/independent-set interplay sweep: order/intersection, injectivity
/// of I, hereditary embedding, poset relation, meet containment, set-lattice
/// inequalities, T reconstruction from circuits, and (when confluent) lex
/// monotonicity of I along the order.
Verdict verify_jd_invariants(const JDLattice& lat);

} // namespace extorder
