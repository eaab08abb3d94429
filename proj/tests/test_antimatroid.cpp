#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"

using namespace extorder;

namespace {
Subset set(std::initializer_list<int> one_based) {
    Subset s;
    for (int e : one_based) s = s.with(e - 1);
    return s;
}

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Subset> out;
    for (auto l : lists) out.push_back(set(l));
    std::sort(out.begin(), out.end(), card_mask_less);
    return out;
}
} // namespace

TEST_CASE("antimatroid verification") {
    CHECK(verify_antimatroid(corpus::fig1_ep_family()).ok);
    CHECK(verify_antimatroid(corpus::u24ce_family()).ok);
    CHECK(verify_antimatroid(corpus::jdb_family()).ok);

    SetFamily gap(2, {Subset::empty(), set({1, 2})});
    Verdict v = verify_antimatroid(gap);
    CHECK_FALSE(v.ok);
    CHECK(v.message.find("accessibility") != std::string::npos);

    CHECK_FALSE(verify_antimatroid(SetFamily(2, {set({1})})).ok); // missing empty set
    CHECK_FALSE(verify_antimatroid(SetFamily(0, {})).ok);         // empty family
    CHECK_THROWS_AS(Antimatroid::from_family(gap), ValidationError);
}

TEST_CASE("traces") {
    SetFamily f = corpus::fig1_ep_family();
    CHECK(f.trace(Subset::empty()).members() == std::vector<Subset>{Subset::empty()});
    CHECK(f.trace(set({1})).members() == sets({{}, {1}}));
    CHECK(corpus::u24ce_family().trace(set({1, 2})).members() == sets({{}, {1}, {2}, {1, 2}}));
}

TEST_CASE("feasible extensions") {
    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    CHECK(f.feasible_extensions(Subset::empty()) == set({3, 4}));
    CHECK(f.feasible_extensions(set({2, 4})) == set({1, 3}));
    CHECK(f.feasible_extensions(f.family().union_of_members()) == Subset::empty());
    CHECK_THROWS_AS(f.feasible_extensions(set({1})), ValidationError);
}

TEST_CASE("independent sets of antimatroids") {
    Antimatroid u = corpus::u24ce();
    std::vector<Subset> expected;
    for_each_subset(Subset::full(4), [&](Subset s) {
        if (s.size() <= 2) expected.push_back(s);
    });
    std::sort(expected.begin(), expected.end(), card_mask_less);
    CHECK(u.independents() == expected);

    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    CHECK(f.independents() == corpus::fig1().independents());

    Antimatroid trivial = Antimatroid::from_family(SetFamily(1, {Subset::empty()}));
    CHECK(trivial.independents() == std::vector<Subset>{Subset::empty()});
    CHECK(trivial.loops() == Subset::of({0}));
}

TEST_CASE("rooted circuits") {
    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    std::vector<RootedSet> expected{{set({1, 4}), 0}, {set({1, 2, 3}), 0}, {set({2, 3, 4}), 1}};
    std::sort(expected.begin(), expected.end(), rooted_less);
    CHECK(f.rooted_circuits() == expected);

    Antimatroid u = corpus::u24ce();
    // a=0, b=1, c=2, d=3
    std::vector<RootedSet> uc = u.rooted_circuits();
    CHECK(uc.size() == 4);
    CHECK(std::find(uc.begin(), uc.end(), RootedSet{set({1, 2, 3}), 0}) != uc.end()); // (abc, a)
    CHECK(std::find(uc.begin(), uc.end(), RootedSet{set({1, 2, 4}), 1}) != uc.end()); // (abd, b)
    CHECK(std::find(uc.begin(), uc.end(), RootedSet{set({1, 3, 4}), 0}) != uc.end()); // (acd, a)
    CHECK(std::find(uc.begin(), uc.end(), RootedSet{set({2, 3, 4}), 1}) != uc.end()); // (bcd, b)

    Antimatroid boolean =
        Antimatroid::from_family(SetFamily(3, subsets_sorted(Subset::full(3))));
    CHECK(boolean.rooted_circuits().empty());
}

TEST_CASE("rooted cocircuits") {
    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    const auto& cc = f.rooted_cocircuits();
    CHECK(std::find(cc.begin(), cc.end(), RootedSet{set({4}), 3}) != cc.end());
    CHECK(std::find(cc.begin(), cc.end(), RootedSet{set({3}), 2}) != cc.end());
    CHECK(std::find(cc.begin(), cc.end(), RootedSet{set({1, 2, 4}), 0}) != cc.end());

    Antimatroid boolean =
        Antimatroid::from_family(SetFamily(3, subsets_sorted(Subset::full(3))));
    std::vector<RootedSet> singletons{{set({1}), 0}, {set({2}), 1}, {set({3}), 2}};
    CHECK(boolean.rooted_cocircuits() == singletons);

    Antimatroid j = corpus::jdb();
    const auto& jc = j.rooted_cocircuits();
    CHECK(std::find(jc.begin(), jc.end(), RootedSet{set({2}), 1}) != jc.end());
    CHECK(std::find(jc.begin(), jc.end(), RootedSet{set({1}), 0}) != jc.end());
    CHECK(std::find(jc.begin(), jc.end(), RootedSet{set({2, 3}), 2}) != jc.end());
}

TEST_CASE("rooted axiom checks and reconstruction") {
    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    RootedAxiomsResult res =
        check_rooted_axioms(RootedKind::circuit, f.rooted_circuits(), f.n(), f.ground());
    CHECK(res.verdict.ok);
    CHECK(res.family.members() == f.family().members());

    std::vector<RootedSet> nested{{set({1, 2}), 0}, {set({1}), 0}};
    Verdict bad = check_rooted_axioms(RootedKind::circuit, nested, 2, Subset::full(2)).verdict;
    CHECK_FALSE(bad.ok);
    CHECK(bad.message.find("CI1") != std::string::npos);

    Antimatroid j = corpus::jdb();
    RootedAxiomsResult cres =
        check_rooted_axioms(RootedKind::cocircuit, j.rooted_cocircuits(), j.n(), j.ground());
    CHECK(cres.verdict.ok);
    CHECK(cres.family.members() == j.family().members());

    // CI2 violation: two circuits whose elimination set has no circuit inside
    std::vector<RootedSet> noelim{{set({1, 2}), 0}, {set({2, 3}), 1}};
    Verdict v2 = check_rooted_axioms(RootedKind::circuit, noelim, 3, Subset::full(3)).verdict;
    CHECK_FALSE(v2.ok);
    CHECK(v2.message.find("CI2") != std::string::npos);

    // CC2 violation: a two-element path with no singleton below it
    std::vector<RootedSet> nopath{{set({1, 2}), 0}};
    Verdict v3 = check_rooted_axioms(RootedKind::cocircuit, nopath, 2, Subset::full(2)).verdict;
    CHECK_FALSE(v3.ok);
    CHECK(v3.message.find("CC2") != std::string::npos);
}

TEST_CASE("blockers") {
    Clutter a = make_clutter(2, Subset::full(2), {set({1}), set({2})});
    CHECK(blocker(a).members == sets({{1, 2}}));
    Clutter b = make_clutter(2, Subset::full(2), {set({1, 2})});
    CHECK(blocker(b).members == sets({{1}, {2}}));

    // circuit stems of the fig1 EP antimatroid at x = 1
    Clutter stems = make_clutter(4, Subset::full(4).without(0), {set({4}), set({2, 3})});
    CHECK(blocker(stems).members == sets({{2, 4}, {3, 4}}));

    CHECK_THROWS_AS(make_clutter(2, Subset::full(2), {set({1}), set({1, 2})}), ValidationError);

    Clutter none{3, Subset::full(3), {}};
    CHECK(blocker(none).members == std::vector<Subset>{Subset::empty()});
    CHECK(blocker(blocker(none)).members.empty());
}

TEST_CASE("blocker involution on fuzzed clutters") {
    for (const Clutter& u : corpus::fuzz_clutters(200, 8, 2024)) {
        Clutter back = blocker(blocker(u));
        CHECK(back.members == u.members);
    }
}

TEST_CASE("circuit/cocircuit duality and cocircuit unions") {
    std::vector<Antimatroid> probes{Antimatroid::from_family(corpus::fig1_ep_family()),
                                    corpus::u24ce(), corpus::jdb()};
    for (const Antimatroid& f : corpus::fuzz_antimatroids(30, 7, 5)) probes.push_back(f);
    for (const Antimatroid& f : probes) {
        CHECK(verify_circuit_cocircuit_duality(f).ok);
        CHECK(verify_union_of_cocircuits(f).ok);
    }
}

TEST_CASE("gamma injectivity characterizes antimatroids among greedoids") {
    std::vector<Antimatroid> anti{Antimatroid::from_family(corpus::fig1_ep_family()),
                                  corpus::u24ce(), corpus::jdb()};
    for (const Antimatroid& f : corpus::fuzz_antimatroids(20, 6, 77)) anti.push_back(f);
    for (const Antimatroid& f : anti) CHECK(gamma_injective(f.family()));

    for (const SetFamily& g : corpus::greedoid_counterexamples()) {
        CHECK(verify_greedoid(g).ok);
        CHECK_FALSE(verify_antimatroid(g).ok);
        CHECK_FALSE(gamma_injective(g));
    }
}

TEST_CASE("root obstruction: extensions blocked exactly by rooted circuits") {
    Antimatroid f = Antimatroid::from_family(corpus::fig1_ep_family());
    for (Subset a : f.family().members())
        for (int x : (f.ground() - f.loops()) - a) {
            bool extension = f.feasible_extensions(a).contains(x);
            bool all_circuits_meet = true;
            for (const RootedSet& c : f.rooted_circuits())
                if (c.root == x && !c.set.without(x).intersects(a)) all_circuits_meet = false;
            CHECK(extension == all_circuits_meet);
        }
}

TEST_CASE("rooted round-trips across the fuzz corpus") {
    for (const Antimatroid& f : corpus::fuzz_antimatroids(40, 7, 2718)) {
        Subset support = f.ground() - f.loops();
        RootedAxiomsResult circ =
            check_rooted_axioms(RootedKind::circuit, f.rooted_circuits(), f.n(), support);
        CHECK(circ.verdict.ok);
        CHECK(circ.family.members() == f.family().members());
        RootedAxiomsResult cocirc =
            check_rooted_axioms(RootedKind::cocircuit, f.rooted_cocircuits(), f.n(), support);
        CHECK(cocirc.verdict.ok);
        CHECK(cocirc.family.members() == f.family().members());
    }
}

TEST_CASE("independence complexes are subset-closed") {
    for (const Antimatroid& f : corpus::fuzz_antimatroids(25, 7, 13))
        for (Subset i : f.independents())
            for (int e : i) CHECK(f.independent(i.without(e)));
}
