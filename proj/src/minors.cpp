#include "extorder/minors.hpp"

#include <algorithm>

namespace extorder {

namespace {

Subset nonloop_ground(const SetFamily& f) {
    return f.ground() & f.union_of_members();
}

} // namespace

Antimatroid anti_delete(const Antimatroid& f, Subset a) {
    if (!a.subset_of(f.ground()))
        throw ValidationError("deletion set must lie within the ground set");
    SetFamily by_trace = f.family().trace(f.ground() - a);

    std::vector<RootedSet> kept;
    for (const RootedSet& c : f.rooted_circuits())
        if (!c.set.intersects(a)) kept.push_back(c);
    SetFamily by_circuits =
        family_from_rooted_circuits(f.n(), nonloop_ground(by_trace), kept);
    by_circuits = SetFamily(f.n(), f.ground() - a, by_circuits.members());

    if (by_trace != by_circuits)
        throw InternalError("antimatroid deletion routes disagree on " + to_string(a));
    return Antimatroid::from_family(by_trace);
}

std::vector<RootedSet> contraction_circuits(const Antimatroid& f, Subset a) {
    std::vector<RootedSet> stripped;
    for (const RootedSet& c : f.rooted_circuits())
        if (!a.contains(c.root)) stripped.push_back({c.set - a, c.root});
    std::vector<RootedSet> minimal;
    for (const RootedSet& c : stripped) {
        bool keep = true;
        for (const RootedSet& other : stripped)
            if (other.set != c.set && other.set.subset_of(c.set)) { keep = false; break; }
        if (keep) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), rooted_less);
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return minimal;
}

Antimatroid anti_contract(const Antimatroid& f, Subset a) {
    if (!a.subset_of(f.ground()))
        throw ValidationError("contraction set must lie within the ground set");
    std::vector<Subset> members;
    for (Subset m : f.family().members())
        if (!m.intersects(a)) members.push_back(m);
    SetFamily by_feasible(f.n(), f.ground() - a, std::move(members));

    std::vector<RootedSet> minimal = contraction_circuits(f, a);
    SetFamily by_circuits =
        family_from_rooted_circuits(f.n(), nonloop_ground(by_feasible), minimal);
    by_circuits = SetFamily(f.n(), f.ground() - a, by_circuits.members());

    if (by_feasible != by_circuits)
        throw InternalError("antimatroid contraction routes disagree on " + to_string(a));
    return Antimatroid::from_family(by_feasible);
}

GreedoidMinor greedoid_minor(const SetFamily& f, const MinorSpec& spec) {
    if (spec.remove.intersects(spec.contract))
        throw ValidationError("minor deletion and contraction sets overlap");
    if (!spec.remove.subset_of(f.ground()) || !spec.contract.subset_of(f.ground()))
        throw ValidationError("minor sets must lie within the ground set");
    Subset keep = f.ground() - spec.remove;
    std::vector<Subset> deleted;
    for (Subset m : f.members())
        if (m.subset_of(keep)) deleted.push_back(m);
    SetFamily after_delete(f.n(), keep, std::move(deleted));

    GreedoidMinor out{SetFamily(), true};
    std::vector<Subset> contracted;
    for (Subset m : after_delete.members())
        if (spec.contract.subset_of(m)) contracted.push_back(m - spec.contract);
    out.contract_feasible = after_delete.contains(spec.contract);
    out.family = SetFamily(f.n(), keep - spec.contract, std::move(contracted));
    return out;
}

Subset extending_elements(const Antimatroid& f) {
    Subset out;
    for (int a : f.ground()) {
        bool extending = true;
        for (const RootedSet& c : f.rooted_circuits())
            if (c.set.contains(a) && c.root != a) { extending = false; break; }
        if (extending) out = out.with(a);
    }
    return out;
}

std::optional<std::vector<int>> extending_order(const Antimatroid& f, Subset s) {
    if (!s.subset_of(f.ground()))
        throw ValidationError("extending-set candidates must lie within the ground set");
    std::vector<RootedSet> alive = f.rooted_circuits();
    Subset remaining = s;
    std::vector<int> seq;
    while (!remaining.empty_set()) {
        int pick = -1;
        for (int a : remaining) {
            bool extending = true;
            for (const RootedSet& c : alive)
                if (c.set.contains(a) && c.root != a) { extending = false; break; }
            if (extending) { pick = a; break; }
        }
        if (pick < 0) return std::nullopt;
        seq.push_back(pick);
        remaining = remaining.without(pick);
        std::erase_if(alive, [&](const RootedSet& c) { return c.set.contains(pick); });
    }
    return seq;
}

CorrespondenceReport correspondence_check(const Matroid& m, Subset a) {
    return correspondence_check(ExternalOrder::build(m), a);
}

CorrespondenceReport correspondence_check(const ExternalOrder& whole, Subset a) {
    CorrespondenceReport rep;
    const Matroid& m = whole.matroid();
    const Antimatroid& fext = whole.antimatroid();

    Antimatroid deleted = anti_delete(fext, a);
    Antimatroid fext_deleted = ExternalOrder::build(m.minor(a, Subset::empty())).antimatroid();
    rep.deletion_equal = deleted.family() == fext_deleted.family();
    if (!rep.deletion_equal) rep.detail += "deletion mismatch at " + to_string(a) + "; ";

    Antimatroid contracted = anti_contract(fext, a);
    Antimatroid fext_contracted = ExternalOrder::build(m.minor(Subset::empty(), a)).antimatroid();

    // sandwich: F_ext(M/a) within the antimatroid contraction within F_ext(M\a)
    rep.sandwich = true;
    for (Subset s : fext_contracted.family().members())
        if (!contracted.family().contains(s)) rep.sandwich = false;
    for (Subset s : contracted.family().members())
        if (!fext_deleted.family().contains(s)) rep.sandwich = false;
    if (!rep.sandwich) rep.detail += "sandwich inclusion fails at " + to_string(a) + "; ";

    rep.a_feasible = fext.feasible(a);
    if (rep.a_feasible) {
        rep.feasible_contraction_equal = contracted.family() == fext_contracted.family();
        rep.a_feasible_elementwise = true;
        for (int e : a)
            if (!fext.feasible(Subset::single(e))) rep.a_feasible_elementwise = false;
        if (rep.a_feasible_elementwise) {
            rep.elementwise_contraction_equal = rep.feasible_contraction_equal;
            if (!rep.elementwise_contraction_equal)
                rep.detail += "elementwise-feasible contraction mismatch at " + to_string(a) + "; ";
        } else if (!rep.feasible_contraction_equal) {
            rep.detail += "note: feasible contraction differs at " + to_string(a) + "; ";
        }
        // for feasible a, antimatroid deletion coincides with the greedoid
        // contraction
        GreedoidMinor gm = greedoid_minor(fext.family(), MinorSpec{Subset::empty(), a});
        rep.greedoid_contraction_equal = gm.contract_feasible && deleted.family() == gm.family;
        if (!rep.greedoid_contraction_equal)
            rep.detail += "greedoid contraction mismatch at " + to_string(a) + "; ";
    }

    rep.a_extending = extending_order(fext, a).has_value();
    if (rep.a_extending) {
        rep.extending_collapse =
            contracted.family() == deleted.family() && contracted.family() == fext_deleted.family();
        if (!rep.extending_collapse)
            rep.detail += "extending-set collapse fails at " + to_string(a) + "; ";
    }
    return rep;
}

} // namespace extorder
