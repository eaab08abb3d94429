#pragma once

#include <vector>

#include "extorder/external_order.hpp"
#include "extorder/io.hpp"
#include "extorder/minors.hpp"

// Shared fixtures and deterministic generators for the test and acceptance
// suites.  Hand-checked fixture values are frozen here once and reused.
namespace corpus {

using namespace extorder;

/// Columns (1,0),(1,1),(0,1),(1,0) over GF(2); circuits 14, 123, 234.
Matroid fig1();
/// EP images of the ten independent sets of fig1.
SetFamily fig1_ep_family();
/// The ten (independent set, passive set) pairs of fig1, identity order.
std::vector<std::pair<Subset, Subset>> fig1_ep_table();

/// Ground {a,b,c,d}; feasible {0,d,c,bd,cd,ac,abd,bcd,acd,abc,abcd}.
/// Independents form U_{2,4}; matroidal but not an external order.
Antimatroid u24ce();
SetFamily u24ce_family();

/// A 12-element join-distributive lattice that is not matroidal, as an
/// abstract Hasse diagram (node 0 bottom, node 11 top).
LatticePresentation jdb_presentation();
/// The same lattice as an antimatroid on ground {1..5}.
Antimatroid jdb();
SetFamily jdb_family();

/// Cycle matroids of K4 and of K4 with one doubled edge.
Matroid k4();
Matroid k4_parallel();

/// Five-element diamond M3: not meet-semidistributive.
LatticePresentation m3_diamond();
/// A chain with `length` cover steps.
LatticePresentation chain(int length);

std::vector<Matroid> uniform_corpus(int max_n);
std::vector<Matroid> random_gf2_matroids(int count, int max_cols, unsigned seed);
std::vector<GroundOrder> random_orders(int n, int count, unsigned seed);

/// All of: uniforms r <= n <= 7, K4, K4 + parallel edge, 50 random GF(2)
/// matroids with <= 6 columns (seed 0xC0FFEE).
std::vector<Matroid> full_corpus();

/// Random antimatroids grown by feasible-extension closure; loops possible.
std::vector<Antimatroid> fuzz_antimatroids(int count, int max_n, unsigned seed);
std::vector<Clutter> fuzz_clutters(int count, int max_n, unsigned seed);

/// Accessible exchange families that are not union-closed (matroid and
/// branching-greedoid examples).
std::vector<SetFamily> greedoid_counterexamples();

} // namespace corpus
