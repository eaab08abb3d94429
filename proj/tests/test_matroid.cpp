#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <thread>

#include "corpus.hpp"

using namespace extorder;

namespace {
Subset set(std::initializer_list<int> one_based) {
    Subset s;
    for (int e : one_based) s = s.with(e - 1);
    return s;
}
} // namespace

TEST_CASE("fig1 independence oracle") {
    Matroid m = corpus::fig1();
    CHECK_FALSE(m.is_independent(set({1, 4}))); // parallel columns
    CHECK(m.is_independent(Subset::empty()));
    CHECK(m.is_independent(set({3, 4})));
    CHECK_THROWS_AS(m.is_independent(Subset::of({10})), ValidationError);
}

TEST_CASE("fig1 rank and closure") {
    Matroid m = corpus::fig1();
    CHECK(m.rank(m.ground()) == 2);
    CHECK(m.rank(Subset::empty()) == 0);
    CHECK(m.rank(set({1, 4})) == 1);
    CHECK(m.closure(set({1})) == set({1, 4}));
    CHECK(m.closure(m.ground()) == m.ground());
    CHECK(m.closure(set({3, 4})) == m.ground());
}

TEST_CASE("fig1 enumeration") {
    Matroid m = corpus::fig1();
    CHECK(m.circuits() == std::vector<Subset>{set({1, 4}), set({1, 2, 3}), set({2, 3, 4})});
    CHECK(m.bases() == std::vector<Subset>{set({1, 2}), set({1, 3}), set({2, 3}), set({2, 4}),
                                           set({3, 4})});
    CHECK(m.independents().size() == 10);

    Matroid u24 = Matroid::uniform(2, 4);
    CHECK(u24.independents().size() == 11);
    for (Subset i : u24.independents()) CHECK(i.size() <= 2);
}

TEST_CASE("basic circuits") {
    Matroid m = corpus::fig1();
    CHECK(m.basic_circuit(set({3, 4}), 1) == set({2, 3, 4}));
    CHECK(m.basic_circuit(set({3, 4}), 0) == set({1, 4}));
    CHECK(m.basic_circuit(set({2, 4}), 2) == set({2, 3, 4}));
    CHECK_THROWS_AS(m.basic_circuit(set({3, 4}), 2), ValidationError); // x inside I
    Matroid u12 = Matroid::uniform(1, 2);
    CHECK_THROWS_AS(u12.basic_circuit(Subset::empty(), 0), ValidationError); // x outside closure
}

TEST_CASE("basic bonds") {
    Matroid m = corpus::fig1();
    CHECK(m.basic_bond(set({3, 4}), 2) == set({2, 3}));
    CHECK(m.basic_bond(set({3, 4}), 3) == set({1, 2, 4}));
    CHECK(m.basic_bond(set({2, 4}), 3) == set({1, 3, 4}));
    CHECK_THROWS_AS(m.basic_bond(set({3, 4}), 0), ValidationError); // y outside I
}

TEST_CASE("duals") {
    Matroid u24 = Matroid::uniform(2, 4);
    Matroid dual = u24.dual();
    for_each_subset(u24.ground(), [&](Subset a) {
        CHECK(dual.is_independent(a) == u24.is_independent(a)); // self-dual
    });

    Matroid m = corpus::fig1();
    std::vector<Subset> expected;
    for (Subset b : m.bases()) expected.push_back(m.ground() - b);
    std::sort(expected.begin(), expected.end(), card_mask_less);
    CHECK(m.dual().bases() == expected);
    CHECK(m.dual().rank() == 2);
}

TEST_CASE("minors") {
    Matroid m = corpus::fig1();
    Matroid del4 = m.minor(set({4}), Subset::empty());
    CHECK(del4.ground() == set({1, 2, 3}));
    CHECK(del4.circuits() == std::vector<Subset>{set({1, 2, 3})});

    Matroid con1 = m.minor(Subset::empty(), set({1}));
    CHECK(con1.circuits() == std::vector<Subset>{set({4}), set({2, 3})});

    Matroid same = m.minor(Subset::empty(), Subset::empty());
    for_each_subset(m.ground(), [&](Subset a) {
        CHECK(same.is_independent(a) == m.is_independent(a));
    });
    CHECK_THROWS_AS(m.minor(set({1}), set({1})), ValidationError);
}

TEST_CASE("lex maximal bases") {
    Matroid m = corpus::fig1();
    CHECK(m.lex_max_basis(Subset::empty()) == set({3, 4}));
    CHECK(m.lex_max_basis(set({4})) == set({2, 3}));
    CHECK(m.lex_max_basis(set({3, 4})) == set({1, 2}));
}

TEST_CASE("explicit representation validation") {
    CHECK_THROWS_AS(Matroid::from_bases(4, {set({1, 2}), set({3})}), ValidationError);
    CHECK_THROWS_AS(Matroid::from_bases(4, {set({1, 2}), set({3, 4})}), ValidationError);
    CHECK_THROWS_AS(Matroid::from_bases(2, {}), ValidationError);
    CHECK_THROWS_AS(Matroid::from_circuits(3, {set({1, 2}), set({1, 2, 3})}), ValidationError);
    CHECK_THROWS_AS(Matroid::from_circuits(3, {set({1, 2}), set({1, 3})}), ValidationError);
    CHECK_THROWS_AS(Matroid::from_circuits(3, {Subset::empty()}), ValidationError);
    CHECK_THROWS_AS(Matroid::linear(4, {{1}}), ValidationError);

    Matroid m = Matroid::from_circuits(4, {set({1, 4}), set({1, 2, 3}), set({2, 3, 4})});
    Matroid f = corpus::fig1();
    for_each_subset(f.ground(), [&](Subset a) {
        CHECK(m.is_independent(a) == f.is_independent(a));
    });

    Matroid b = Matroid::from_bases(4, corpus::fig1().bases());
    CHECK(b.circuits() == f.circuits());
}

TEST_CASE("graphic matroids") {
    Matroid m = corpus::k4();
    CHECK(m.rank() == 3);
    CHECK(m.bases().size() == 16); // spanning trees of K4

    Matroid loopy = Matroid::graphic(2, {{0, 0}, {0, 1}});
    CHECK(loopy.loops() == Subset::of({0}));
    CHECK(loopy.rank() == 1);
}

TEST_CASE("loops from zero columns") {
    Matroid m = Matroid::linear(2, {{0, 1}, {0, 1}});
    CHECK(m.loops() == Subset::of({0}));
    CHECK(m.circuits().front() == Subset::of({0}));
}

TEST_CASE("axiom sweep over fixtures and random matroids") {
    CHECK(verify_matroid_axioms(corpus::fig1()).ok);
    CHECK(verify_matroid_axioms(corpus::k4()).ok);
    CHECK(verify_matroid_axioms(Matroid::uniform(2, 4)).ok);
    CHECK(verify_matroid_axioms(Matroid::uniform(0, 3)).ok);
    CHECK(verify_matroid_axioms(Matroid::linear(2, {{0, 1}, {0, 1}})).ok);
    CHECK(verify_matroid_axioms(Matroid::linear(3, {{1, 2, 0, 1}, {0, 1, 1, 2}})).ok);
    CHECK(verify_matroid_axioms(Matroid::linear(5, {{1, 2, 3}, {0, 1, 4}})).ok);
    CHECK(verify_matroid_axioms(Matroid::linear(7, {{1, 6, 3}, {2, 1, 5}})).ok);
    for (const Matroid& m : corpus::random_gf2_matroids(10, 6, 7)) {
        CHECK(verify_matroid_axioms(m).ok);
        for (const GroundOrder& ord : corpus::random_orders(m.n(), 3, 11))
            CHECK(verify_matroid_axioms(m.with_order(ord)).ok);
    }
}

TEST_CASE("the Fano plane over GF(2)") {
    // columns: all nonzero vectors of GF(2)^3; 28 bases, 7 line circuits
    // plus their 7 complements
    Matroid fano = Matroid::linear(2, {{1, 0, 0, 1, 1, 0, 1},
                                       {0, 1, 0, 1, 0, 1, 1},
                                       {0, 0, 1, 0, 1, 1, 1}});
    CHECK(fano.rank() == 3);
    CHECK(fano.bases().size() == 28);
    const auto& circuits = fano.circuits();
    CHECK(circuits.size() == 14);
    CHECK(std::count_if(circuits.begin(), circuits.end(),
                        [](Subset c) { return c.size() == 3; }) == 7);
    CHECK(std::count_if(circuits.begin(), circuits.end(),
                        [](Subset c) { return c.size() == 4; }) == 7);
}

TEST_CASE("one matroid, different fields") {
    Matroid gf3 = Matroid::linear(3, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    Matroid gf5 = Matroid::linear(5, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    Matroid u24 = Matroid::uniform(2, 4);
    for_each_subset(u24.ground(), [&](Subset a) {
        CHECK(gf3.is_independent(a) == u24.is_independent(a));
    });
    // over GF(5) the last two columns stay independent too, but (1,1),(1,2),
    // (0,1) pick up no new dependencies either; same matroid
    for_each_subset(u24.ground(), [&](Subset a) {
        CHECK(gf5.is_independent(a) == u24.is_independent(a));
    });
}

TEST_CASE("caches fill once under concurrent readers") {
    Matroid m = corpus::k4();
    std::vector<std::thread> workers;
    std::array<std::size_t, 4> counts{};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            counts[static_cast<std::size_t>(t)] =
                m.circuits().size() + m.bases().size() + m.independents().size();
        });
    for (auto& w : workers) w.join();
    for (std::size_t c : counts) CHECK(c == counts[0]);
    CHECK(counts[0] == m.circuits().size() + m.bases().size() + m.independents().size());
}

TEST_CASE("orders are preserved through dual and minor") {
    Matroid m = corpus::fig1().with_order(GroundOrder(4, {3, 2, 1, 0}));
    CHECK(m.dual().order() == m.order());
    CHECK(m.minor(Subset::of({0}), Subset::empty()).order() == m.order());
    CHECK_THROWS_AS(m.with_order(GroundOrder::identity(3)), ValidationError);
}
