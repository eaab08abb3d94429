#include "extorder/antimatroid.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace extorder {

bool rooted_less(const RootedSet& a, const RootedSet& b) {
    if (a.set != b.set) return card_mask_less(a.set, b.set);
    return a.root < b.root;
}

namespace {

Verdict check_accessible(const SetFamily& f) {
    for (Subset x : f.members()) {
        if (x.empty_set()) continue;
        bool ok = false;
        for (int e : x)
            if (f.contains(x.without(e))) { ok = true; break; }
        if (!ok) return Verdict::fail("accessibility fails at " + to_string(x));
    }
    return Verdict::pass();
}

Verdict check_union_closed(const SetFamily& f) {
    for (Subset x : f.members())
        for (Subset y : f.members())
            if (!f.contains(x | y))
                return Verdict::fail("union " + to_string(x) + " | " + to_string(y) +
                                     " = " + to_string(x | y) + " is missing");
    return Verdict::pass();
}

Verdict check_interval_property(const SetFamily& f) {
    for (Subset x : f.members())
        for (Subset y : f.members()) {
            if (!x.subset_of(y)) continue;
            for (int a : f.ground() - y)
                if (f.contains(x.with(a)) && !f.contains(y.with(a)))
                    return Verdict::fail("interval property fails: " + to_string(x) + " + " +
                                         std::to_string(a + 1) + " feasible but " + to_string(y) +
                                         " + " + std::to_string(a + 1) + " is not");
        }
    return Verdict::pass();
}

Verdict check_antimatroid_exchange(const SetFamily& f) {
    if (!f.contains(Subset::empty())) return Verdict::fail("the empty set is not feasible");
    for (Subset x : f.members())
        for (Subset y : f.members()) {
            if (x.subset_of(y)) continue;
            bool ok = false;
            for (int e : x - y)
                if (f.contains(y.with(e))) { ok = true; break; }
            if (!ok)
                return Verdict::fail("antimatroid exchange fails for " + to_string(x) + " into " +
                                     to_string(y));
        }
    return Verdict::pass();
}

// trace(f, a) == 2^a, tested by marking compressed intersections
bool is_free(const SetFamily& f, Subset a) {
    int k = a.size();
    if (k > 20) throw ValidationError("freeness test is limited to 20-element subsets");
    std::vector<char> seen(std::size_t{1} << k, 0);
    std::size_t remaining = std::size_t{1} << k;
    std::vector<int> bits = a.elements();
    for (Subset m : f.members()) {
        Subset cut = m & a;
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i)
            if (cut.contains(bits[static_cast<std::size_t>(i)])) idx |= std::size_t{1} << i;
        if (!seen[idx]) {
            seen[idx] = 1;
            if (--remaining == 0) return true;
        }
    }
    return false;
}

} // namespace

Verdict verify_antimatroid(const SetFamily& f) {
    if (f.size() == 0) return Verdict::fail("the family is empty");

    Verdict greedoid = verify_greedoid(f);
    Verdict interval = greedoid.ok ? check_interval_property(f) : greedoid;
    bool via_greedoid = greedoid.ok && interval.ok;

    Verdict accessible = check_accessible(f);
    Verdict unions = accessible.ok ? check_union_closed(f) : accessible;
    bool via_unions = accessible.ok && unions.ok;

    Verdict exchange = check_antimatroid_exchange(f);
    bool via_exchange = exchange.ok;

    if (via_greedoid != via_unions || via_unions != via_exchange)
        throw InternalError("equivalent antimatroid formulations disagree on a family");

    if (via_unions) return Verdict::pass();
    if (!accessible.ok) return accessible;
    if (!unions.ok) return unions;
    return exchange;
}

struct Antimatroid::Impl {
    SetFamily family;
    Subset loops;

    mutable std::once_flag indep_flag, circ_flag, cocirc_flag;
    mutable std::vector<Subset> independents;
    mutable std::vector<RootedSet> circuits, cocircuits;

    explicit Impl(SetFamily f) : family(std::move(f)) {
        loops = family.ground() - family.union_of_members();
    }

    const std::vector<Subset>& all_independents() const {
        std::call_once(indep_flag, [&] {
            std::vector<Subset> out;
            for (Subset m : family.members()) out.push_back(gamma(family, m));
            std::sort(out.begin(), out.end(), card_mask_less);
            out.erase(std::unique(out.begin(), out.end()), out.end());
            // the Gamma image must coincide with the free sets
            Subset support = family.ground() - loops;
            if (support.size() <= 16) {
                std::vector<Subset> free;
                for_each_subset(support, [&](Subset a) {
                    if (is_free(family, a)) free.push_back(a);
                });
                std::sort(free.begin(), free.end(), card_mask_less);
                if (free != out)
                    throw InternalError("free sets and feasible-extension sets disagree");
            }
            independents = std::move(out);
        });
        return independents;
    }

    const std::vector<RootedSet>& all_circuits() const {
        std::call_once(circ_flag, [&] {
            Subset support = family.ground() - loops;
            std::vector<int> elems = support.elements();
            std::vector<Subset> found;
            for (int k = 1; k <= static_cast<int>(elems.size()); ++k) {
                for_each_combination(elems, k, [&](Subset s) {
                    for (Subset c : found)
                        if (c.subset_of(s)) return;
                    if (!is_free(family, s)) found.push_back(s);
                });
            }
            std::sort(found.begin(), found.end(), card_mask_less);
            for (Subset c : found) {
                // locate the unique singleton missing from the trace
                int k = c.size();
                std::vector<int> bits = c.elements();
                std::vector<char> seen(std::size_t{1} << k, 0);
                for (Subset m : family.members()) {
                    Subset cut = m & c;
                    std::size_t idx = 0;
                    for (int i = 0; i < k; ++i)
                        if (cut.contains(bits[static_cast<std::size_t>(i)])) idx |= std::size_t{1} << i;
                    seen[idx] = 1;
                }
                int root = -1;
                for (std::size_t idx = 0; idx < seen.size(); ++idx) {
                    if (seen[idx]) continue;
                    if (std::popcount(idx) != 1 || root != -1)
                        throw InternalError("circuit " + to_string(c) + " lacks a unique root");
                    root = bits[static_cast<std::size_t>(std::countr_zero(idx))];
                }
                if (root == -1) throw InternalError("circuit " + to_string(c) + " lacks a unique root");
                circuits.push_back({c, root});
            }
        });
        return circuits;
    }

    const std::vector<RootedSet>& all_cocircuits() const {
        std::call_once(cocirc_flag, [&] {
            std::vector<RootedSet> out;
            for (Subset m : family.members()) {
                Subset endpoints;
                for (int a : m)
                    if (family.contains(m.without(a))) endpoints = endpoints.with(a);
                if (endpoints.size() == 1) out.push_back({m, endpoints.first()});
            }
            std::sort(out.begin(), out.end(), rooted_less);
            // cross-check: minimal feasible sets containing x, rooted at x
            std::vector<RootedSet> minimal;
            for (int x : family.ground() - loops) {
                for (Subset m : family.members()) {
                    if (!m.contains(x)) continue;
                    bool is_min = true;
                    for (Subset other : family.members()) {
                        if (other.contains(x) && other != m && other.subset_of(m)) {
                            is_min = false;
                            break;
                        }
                    }
                    if (is_min) minimal.push_back({m, x});
                }
            }
            std::sort(minimal.begin(), minimal.end(), rooted_less);
            if (minimal != out)
                throw InternalError("cocircuit endpoint and minimality characterizations disagree");
            cocircuits = std::move(out);
        });
        return cocircuits;
    }
};

Antimatroid::Antimatroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Antimatroid Antimatroid::from_family(SetFamily f) {
    Verdict v = verify_antimatroid(f);
    if (!v.ok) throw ValidationError("not an antimatroid: " + v.message);
    return Antimatroid(std::make_shared<Impl>(std::move(f)));
}

const SetFamily& Antimatroid::family() const { return impl_->family; }
int Antimatroid::n() const { return impl_->family.n(); }
Subset Antimatroid::ground() const { return impl_->family.ground(); }
Subset Antimatroid::loops() const { return impl_->loops; }

bool Antimatroid::feasible(Subset a) const { return impl_->family.contains(a); }

Subset Antimatroid::feasible_extensions(Subset a) const {
    if (!feasible(a)) throw ValidationError("set " + to_string(a) + " is not feasible");
    return gamma(impl_->family, a);
}

const std::vector<Subset>& Antimatroid::independents() const { return impl_->all_independents(); }

bool Antimatroid::independent(Subset a) const {
    if (!a.subset_of(ground())) throw ValidationError("subset not within ground set");
    if (a.intersects(impl_->loops)) return false;
    return is_free(impl_->family, a);
}

const std::vector<RootedSet>& Antimatroid::rooted_circuits() const { return impl_->all_circuits(); }
const std::vector<RootedSet>& Antimatroid::rooted_cocircuits() const { return impl_->all_cocircuits(); }

SetFamily family_from_rooted_circuits(int n, Subset ground, const std::vector<RootedSet>& circuits) {
    auto blocked = [&](Subset a) {
        for (const RootedSet& c : circuits)
            if ((c.set & a) == Subset::single(c.root)) return true;
        return false;
    };
    // grown upward: the defined family is accessible whenever the circuit
    // axioms hold, so single-element extensions reach every feasible set
    std::vector<Subset> members{Subset::empty()};
    std::vector<Subset> frontier{Subset::empty()};
    std::unordered_set<std::uint64_t> known{0};
    while (!frontier.empty()) {
        Subset cur = frontier.back();
        frontier.pop_back();
        for (int x : ground - cur) {
            Subset ext = cur.with(x);
            if (!blocked(ext) && known.insert(ext.bits()).second) {
                members.push_back(ext);
                frontier.push_back(ext);
            }
        }
    }
    return SetFamily(n, ground, std::move(members));
}

SetFamily family_from_rooted_cocircuits(int n, Subset ground,
                                        const std::vector<RootedSet>& cocircuits) {
    std::vector<Subset> members{Subset::empty()};
    std::vector<Subset> frontier{Subset::empty()};
    std::unordered_set<std::uint64_t> known{0};
    while (!frontier.empty()) {
        Subset cur = frontier.back();
        frontier.pop_back();
        for (const RootedSet& d : cocircuits) {
            Subset ext = cur | d.set;
            if (known.insert(ext.bits()).second) {
                members.push_back(ext);
                frontier.push_back(ext);
            }
        }
    }
    return SetFamily(n, ground, std::move(members));
}

RootedAxiomsResult check_rooted_axioms(RootedKind kind, const std::vector<RootedSet>& rooted,
                                       int n, Subset ground) {
    for (const RootedSet& r : rooted) {
        if (!r.set.contains(r.root))
            return {Verdict::fail("root " + std::to_string(r.root + 1) + " lies outside " +
                                  to_string(r.set)),
                    SetFamily(n, ground, {})};
        if (!r.set.subset_of(ground))
            return {Verdict::fail("rooted set " + to_string(r.set) + " outside ground"),
                    SetFamily(n, ground, {})};
    }
    // CI1 == CC1: no nested pair with the same root
    for (const RootedSet& a : rooted)
        for (const RootedSet& b : rooted)
            if (a.root == b.root && a.set != b.set && b.set.subset_of(a.set))
                return {Verdict::fail((kind == RootedKind::circuit ? "CI1" : "CC1") +
                                      std::string(" fails: ") + to_string(b.set) + " inside " +
                                      to_string(a.set) + " with root " + std::to_string(a.root + 1)),
                        SetFamily(n, ground, {})};
    if (kind == RootedKind::circuit) {
        for (const RootedSet& c1 : rooted)
            for (const RootedSet& c2 : rooted) {
                if (!c2.set.contains(c1.root) || c1.root == c2.root) continue;
                Subset target = (c1.set | c2.set).without(c1.root);
                bool ok = false;
                for (const RootedSet& c3 : rooted)
                    if (c3.root == c2.root && c3.set.subset_of(target)) { ok = true; break; }
                if (!ok)
                    return {Verdict::fail("CI2 fails for " + to_string(c1.set) + " root " +
                                          std::to_string(c1.root + 1) + " and " + to_string(c2.set) +
                                          " root " + std::to_string(c2.root + 1)),
                            SetFamily(n, ground, {})};
            }
        return {Verdict::pass(), family_from_rooted_circuits(n, ground, rooted)};
    }
    for (const RootedSet& d1 : rooted)
        for (int a2 : d1.set.without(d1.root)) {
            Subset target = d1.set.without(d1.root);
            bool ok = false;
            for (const RootedSet& d2 : rooted)
                if (d2.root == a2 && d2.set.subset_of(target)) { ok = true; break; }
            if (!ok)
                return {Verdict::fail("CC2 fails for " + to_string(d1.set) + " root " +
                                      std::to_string(d1.root + 1) + " at " + std::to_string(a2 + 1)),
                        SetFamily(n, ground, {})};
        }
    return {Verdict::pass(), family_from_rooted_cocircuits(n, ground, rooted)};
}

Verdict verify_circuit_cocircuit_duality(const Antimatroid& f) {
    for (int x : f.ground() - f.loops()) {
        std::vector<Subset> circuit_stems, cocircuit_stems;
        for (const RootedSet& c : f.rooted_circuits())
            if (c.root == x) circuit_stems.push_back(c.set.without(x));
        for (const RootedSet& d : f.rooted_cocircuits())
            if (d.root == x) cocircuit_stems.push_back(d.set.without(x));
        Clutter cx = make_clutter(f.n(), f.ground().without(x), circuit_stems);
        Clutter dx = make_clutter(f.n(), f.ground().without(x), cocircuit_stems);
        if (blocker(cx).members != dx.members)
            return Verdict::fail("blocker of circuit stems differs from cocircuit stems at " +
                                 std::to_string(x + 1));
        if (blocker(dx).members != cx.members)
            return Verdict::fail("blocker of cocircuit stems differs from circuit stems at " +
                                 std::to_string(x + 1));
    }
    return Verdict::pass();
}

Verdict verify_union_of_cocircuits(const Antimatroid& f) {
    const std::vector<RootedSet>& cocircuits = f.rooted_cocircuits();
    for (Subset m : f.family().members()) {
        if (m.empty_set()) continue;
        std::vector<int> endpoints;
        for (int a : m)
            if (f.feasible(m.without(a))) endpoints.push_back(a);
        if (endpoints.empty()) return Verdict::fail("feasible set " + to_string(m) + " has no endpoint");
        // one cocircuit per endpoint whose union is the whole set
        std::vector<std::vector<Subset>> choices;
        for (int a : endpoints) {
            std::vector<Subset> cand;
            for (const RootedSet& d : cocircuits)
                if (d.root == a && d.set.subset_of(m)) cand.push_back(d.set);
            if (cand.empty())
                return Verdict::fail("no cocircuit rooted at " + std::to_string(a + 1) +
                                     " inside " + to_string(m));
            choices.push_back(std::move(cand));
        }
        bool found = false;
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
            Subset u;
            for (std::size_t i = 0; i < choices.size(); ++i) u = u | choices[i][pick[i]];
            if (u == m) { found = true; break; }
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        if (!found)
            return Verdict::fail("feasible set " + to_string(m) +
                                 " is not a union of endpoint-rooted cocircuits");
    }
    return Verdict::pass();
}

bool gamma_injective(const SetFamily& f) {
    std::vector<Subset> images;
    images.reserve(f.size());
    for (Subset m : f.members()) images.push_back(gamma(f, m));
    std::sort(images.begin(), images.end(), card_mask_less);
    return std::adjacent_find(images.begin(), images.end()) == images.end();
}

} // namespace extorder
