#include "extorder/set_family.hpp"

#include <algorithm>

namespace extorder {

SetFamily::SetFamily(int n, std::vector<Subset> members)
    : SetFamily(n, Subset::full(n), std::move(members)) {}

SetFamily::SetFamily(int n, Subset ground, std::vector<Subset> members)
    : n_(n), ground_(ground), members_(std::move(members)) {
    if (n < 0 || n > kMaxGroundSize)
        throw ValidationError("ground-set size must be between 0 and 62, got " + std::to_string(n));
    if (!ground_.subset_of(Subset::full(n)))
        throw ValidationError("active ground mask exceeds the id universe");
    for (Subset m : members_)
        if (!m.subset_of(ground_))
            throw ValidationError("family member " + to_string(m) + " falls outside the ground set");
    std::sort(members_.begin(), members_.end(), card_mask_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Subset s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, card_mask_less);
    return it != members_.end() && *it == s;
}

Subset SetFamily::union_of_members() const {
    Subset u;
    for (Subset m : members_) u = u | m;
    return u;
}

SetFamily SetFamily::trace(Subset a) const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (Subset m : members_) out.push_back(m & a);
    return SetFamily(n_, ground_ & a, std::move(out));
}

Subset gamma(const SetFamily& f, Subset a) {
    Subset out;
    for (int x : f.ground() - a)
        if (f.contains(a.with(x))) out = out.with(x);
    return out;
}

Verdict verify_greedoid(const SetFamily& f) {
    if (f.size() == 0) return Verdict::fail("a greedoid needs a nonempty family");
    for (Subset x : f.members()) {
        if (x.empty_set()) continue;
        bool ok = false;
        for (int e : x)
            if (f.contains(x.without(e))) { ok = true; break; }
        if (!ok) return Verdict::fail("accessibility fails at " + to_string(x));
    }
    for (Subset x : f.members())
        for (Subset y : f.members()) {
            if (x.size() <= y.size()) continue;
            bool ok = false;
            for (int e : x - y)
                if (f.contains(y.with(e))) { ok = true; break; }
            if (!ok)
                return Verdict::fail("exchange fails for " + to_string(x) + " into " + to_string(y));
        }
    return Verdict::pass();
}

Clutter make_clutter(int n, Subset ground, std::vector<Subset> members) {
    std::sort(members.begin(), members.end(), card_mask_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Subset a : members) {
        if (!a.subset_of(ground)) throw ValidationError("clutter member outside ground set");
        for (Subset b : members)
            if (a != b && a.subset_of(b))
                throw ValidationError("not a clutter: " + to_string(a) + " is contained in " + to_string(b));
    }
    return Clutter{n, ground, std::move(members)};
}

Clutter blocker(const Clutter& u) {
    // transversals of the empty family: everything, so the unique minimal one
    // is the empty set; a family containing the empty set has no transversals
    if (u.members.empty()) return Clutter{u.n, u.ground, {Subset::empty()}};
    if (u.members.front().empty_set()) return Clutter{u.n, u.ground, {}};

    Subset support;
    for (Subset m : u.members) support = support | m;
    if (support.size() > 20)
        throw ValidationError("blocker enumeration is limited to 20 support elements");

    std::vector<Subset> found;
    std::vector<int> elems = support.elements();
    // by cardinality with superset pruning, so every kept transversal is minimal
    for (int k = 1; k <= static_cast<int>(elems.size()); ++k) {
        for_each_combination(elems, k, [&](Subset v) {
            for (Subset f : found)
                if (f.subset_of(v)) return;
            for (Subset m : u.members)
                if (!v.intersects(m)) return;
            found.push_back(v);
        });
    }
    std::sort(found.begin(), found.end(), card_mask_less);
    return Clutter{u.n, u.ground, std::move(found)};
}

} // namespace extorder
