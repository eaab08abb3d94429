#include "extorder/external_order.hpp"

#include <algorithm>

namespace extorder {

std::vector<RootedSet> ext_rooted_circuits(const Matroid& m) {
    std::vector<RootedSet> out;
    out.reserve(m.circuits().size());
    for (Subset c : m.circuits()) out.push_back({c, m.order().min_of(c)});
    std::sort(out.begin(), out.end(), rooted_less);
    return out;
}

ExternalOrder::ExternalOrder(Matroid m, JDLattice lat, std::vector<Subset> indep_of_elem,
                             bool internal)
    : matroid_(std::move(m)),
      lattice_(std::move(lat)),
      indep_of_elem_(std::move(indep_of_elem)),
      internal_(internal) {
    index_.reserve(indep_of_elem_.size());
    for (std::size_t x = 0; x < indep_of_elem_.size(); ++x)
        index_.emplace_back(indep_of_elem_[x].bits(), static_cast<int>(x));
    std::sort(index_.begin(), index_.end());
}

ExternalOrder ExternalOrder::build(const Matroid& m) {
    const std::vector<Subset>& indeps = m.independents();
    std::vector<Subset> passives;
    passives.reserve(indeps.size());
    for (Subset i : indeps) {
        ActivityReport rep = activity_report(m, i);
        passives.push_back(rep.ep);
    }
    SetFamily family(m.n(), m.ground(), passives);
    if (family.size() != indeps.size())
        throw InternalError("EP is not injective on the independent sets");

    // second, independent route to the same family
    SetFamily rebuilt = family_from_rooted_circuits(m.n(), m.ground(), ext_rooted_circuits(m));
    if (rebuilt != family)
        throw InternalError("EP family differs from the rooted-circuit reconstruction");

    JDLattice lat = JDLattice::from_antimatroid(Antimatroid::from_family(family));
    std::vector<Subset> indep_of_elem(static_cast<std::size_t>(lat.size()));
    for (std::size_t k = 0; k < indeps.size(); ++k) {
        int elem = lat.index_of(passives[k]);
        if (elem < 0) throw InternalError("EP set missing from the lattice");
        // the independent set attached to EP(I) must be I itself
        if (lat.indep_set(elem) != indeps[k])
            throw InternalError("feasible extensions of EP" + to_string(indeps[k]) +
                                " differ from the independent set");
        indep_of_elem[static_cast<std::size_t>(elem)] = indeps[k];
    }
    if (lat.rank(lat.top()) != (m.ground() - m.loops()).size())
        throw InternalError("lattice height differs from the number of non-loops");

    return ExternalOrder(m, std::move(lat), std::move(indep_of_elem), false);
}

ExternalOrder ExternalOrder::internal(const Matroid& m) {
    ExternalOrder out = build(m.dual());
    out.internal_ = true;
    return out;
}

Subset ExternalOrder::ep(Subset indep) const {
    int elem = elem_of(indep);
    return lattice_.t_set(elem);
}

int ExternalOrder::elem_of(Subset indep) const {
    if (!matroid_.is_independent(indep))
        throw ValidationError("set " + to_string(indep) + " is not independent");
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::make_pair(indep.bits(), 0));
    if (it == index_.end() || it->first != indep.bits())
        throw InternalError("independent set missing from the lattice index");
    return it->second;
}

bool ExternalOrder::leq(Subset i, Subset j) const {
    Subset epi = ep(i), epj = ep(j);
    bool by_inclusion = epi.subset_of(epj);
    bool by_disjointness = !epi.intersects(j);
    if (by_inclusion != by_disjointness)
        throw InternalError("EP-inclusion and EP-disjointness order tests disagree");
    return by_inclusion;
}

std::vector<std::pair<int, Subset>> ExternalOrder::upper_covers(Subset i) const {
    int elem = elem_of(i);
    Subset epi = lattice_.t_set(elem);
    std::vector<std::pair<int, Subset>> out;
    for (int a : i) {
        Subset chain = active_chain(matroid_, i, a);
        Subset cover =
            chain.empty_set() ? i.without(a) : i.without(a).with(matroid_.order().max_of(chain));
        if (ep(cover) != epi.with(a))
            throw InternalError("cover candidate for element " + std::to_string(a + 1) +
                                " misses EP(I) | a");
        out.emplace_back(a, cover);
    }
    // these must be exactly the lattice cover edges above EP(I)
    if (out.size() != lattice_.up(elem).size())
        throw InternalError("cover count differs from the lattice out-degree");
    for (const auto& [a, cover] : out) {
        int target = lattice_.index_of(epi.with(a));
        bool found = false;
        for (auto [up, lbl] : lattice_.up(elem))
            if (up == target && lbl == a) found = true;
        if (!found) throw InternalError("computed cover is not a lattice edge");
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subset ExternalOrder::min_passive_lower_cover(Subset i) const {
    Subset epi = ep(i);
    if (epi.empty_set())
        throw ValidationError("independent set " + to_string(i) +
                              " is the lattice minimum; EP is empty");
    int x = matroid_.order().min_of(epi);
    Subset j;
    if (!matroid_.closure(i).contains(x)) {
        j = i.with(x);
    } else {
        int y = matroid_.order().min_of(matroid_.basic_circuit(i, x));
        j = i.without(y).with(x);
    }
    if (ep(j) != epi.without(x))
        throw InternalError("downward cover misses EP(I) minus its minimum");
    return j;
}

std::pair<Subset, Subset> ExternalOrder::meet_join(Subset i, Subset j) const {
    Subset epi = ep(i), epj = ep(j);
    Subset meet = matroid_.lex_max_basis(epi & epj);
    Subset join = matroid_.lex_max_basis(epi | epj);
    int em = lattice_.meet(elem_of(i), elem_of(j));
    int ej = lattice_.join(elem_of(i), elem_of(j));
    if (indep_of_elem_[static_cast<std::size_t>(em)] != meet ||
        indep_of_elem_[static_cast<std::size_t>(ej)] != join)
        throw InternalError("lex-basis meet/join differ from the lattice tables");
    return {meet, join};
}

ExternalOrder::BooleanPartition ExternalOrder::boolean_partition() const {
    Subset ground = matroid_.ground();
    if (ground.size() > 20 || matroid_.n() > 22)
        throw ValidationError("boolean partition enumeration is limited to small ground sets");
    BooleanPartition part;
    part.owner_of_mask.assign(std::size_t{1} << matroid_.n(), -1);
    part.interval_count = lattice_.size();

    for (int x = 0; x < lattice_.size(); ++x) {
        Subset i = indep_of_elem_[static_cast<std::size_t>(x)];
        Subset ea = (ground - i) - lattice_.t_set(x);
        for_each_subset(ea, [&](Subset s) {
            Subset a = i | s;
            int& owner = part.owner_of_mask[a.bits()];
            if (owner != -1)
                throw InternalError("interval partition overlaps at " + to_string(a));
            owner = x;
        });
    }
    for_each_subset(ground, [&](Subset a) {
        if (part.owner_of_mask[a.bits()] == -1)
            throw InternalError("interval partition misses " + to_string(a));
    });

    // complementary partition [EP(I), E \ I]
    std::vector<int> owner2(std::size_t{1} << matroid_.n(), -1);
    for (int x = 0; x < lattice_.size(); ++x) {
        Subset i = indep_of_elem_[static_cast<std::size_t>(x)];
        Subset ep_i = lattice_.t_set(x);
        Subset spread = (ground - i) - ep_i;
        for_each_subset(spread, [&](Subset s) {
            Subset b = ep_i | s;
            if (owner2[b.bits()] != -1)
                throw InternalError("complementary partition overlaps at " + to_string(b));
            owner2[b.bits()] = x;
        });
    }
    for_each_subset(ground, [&](Subset b) {
        if (owner2[b.bits()] == -1)
            throw InternalError("complementary partition misses " + to_string(b));
    });
    return part;
}

std::vector<Subset> ExternalOrder::flats_projection() const {
    std::vector<Subset> flat_of(static_cast<std::size_t>(lattice_.size()));
    for (int x = 0; x < lattice_.size(); ++x)
        flat_of[static_cast<std::size_t>(x)] =
            matroid_.closure(indep_of_elem_[static_cast<std::size_t>(x)]);

    std::vector<Subset> image = flat_of;
    std::sort(image.begin(), image.end(), card_mask_less);
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != matroid_.flats())
        throw InternalError("flats projection is not surjective onto the lattice of flats");

    for (int x = 0; x < lattice_.size(); ++x)
        for (int y = 0; y < lattice_.size(); ++y)
            if (lattice_.leq(x, y) &&
                !flat_of[static_cast<std::size_t>(y)].subset_of(flat_of[static_cast<std::size_t>(x)]))
                throw InternalError("flats projection fails to reverse the order");
    return flat_of;
}

} // namespace extorder
