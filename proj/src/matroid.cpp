#include "extorder/matroid.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <variant>

namespace extorder {

namespace {

constexpr int kEnumerationLimit = 24; // 2^n sweeps stay tractable below this

int gf_inverse(int x, int p) {
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1) return y;
    throw InternalError("no inverse mod " + std::to_string(p));
}

/// Column rank over GF(p) of the selected columns.  Forward elimination with
/// pivot choice by lowest row index, so results are deterministic.
int gf_rank(const LinearRep& rep, Subset cols) {
    std::vector<std::vector<int>> work;
    work.reserve(static_cast<std::size_t>(cols.size()));
    for (int c : cols) {
        const auto& col = rep.columns[static_cast<std::size_t>(c)];
        work.emplace_back(col.begin(), col.end());
    }
    std::vector<char> row_used(static_cast<std::size_t>(rep.rows), 0);
    int rank = 0;
    for (auto& col : work) {
        int pivot = -1;
        for (int r = 0; r < rep.rows; ++r) {
            if (!row_used[static_cast<std::size_t>(r)] && col[static_cast<std::size_t>(r)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        row_used[static_cast<std::size_t>(pivot)] = 1;
        ++rank;
        int inv = gf_inverse(col[static_cast<std::size_t>(pivot)], rep.field);
        for (auto& other : work) {
            if (&other == &col || other[static_cast<std::size_t>(pivot)] == 0) continue;
            int factor = other[static_cast<std::size_t>(pivot)] * inv % rep.field;
            for (int r = 0; r < rep.rows; ++r) {
                int v = other[static_cast<std::size_t>(r)] -
                        factor * col[static_cast<std::size_t>(r)] % rep.field;
                other[static_cast<std::size_t>(r)] = static_cast<int>(((v % rep.field) + rep.field) % rep.field);
            }
        }
    }
    return rank;
}

bool graphic_independent(const GraphicRep& rep, Subset edges) {
    std::vector<int> parent(static_cast<std::size_t>(rep.vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int e : edges) {
        auto [u, v] = rep.edges[static_cast<std::size_t>(e)];
        int ru = find(u), rv = find(v);
        if (ru == rv) return false; // closes a cycle (or self-loop)
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

std::vector<Subset> sorted_dedup(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end(), card_mask_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

} // namespace

struct DualRep {
    std::shared_ptr<const Matroid::Core> parent;
};

struct MinorRep {
    std::shared_ptr<const Matroid::Core> parent;
    Subset contracted; // fixed maximal independent subset of the contracted set
};

using Rep = std::variant<LinearRep, GraphicRep, UniformRep, BasesRep, CircuitsRep, DualRep, MinorRep>;

struct Matroid::Core {
    static constexpr int kMemoLimit = 12; // full oracle table below this universe size

    int n = 0;
    Subset ground;
    Rep rep;

    mutable std::once_flag rank_flag, circ_flag, base_flag, indep_flag, flat_flag, memo_flag;
    mutable int full_rank = -1;
    mutable std::vector<Subset> circuits, bases, independents, flats;
    mutable std::vector<char> memo;

    Core(int n_, Subset ground_, Rep rep_) : n(n_), ground(ground_), rep(std::move(rep_)) {}

    bool indep(Subset a) const {
        if (n <= kMemoLimit) {
            std::call_once(memo_flag, [&] {
                std::vector<char> table(std::size_t{1} << n);
                for (std::uint64_t mask = 0; mask < table.size(); ++mask)
                    table[mask] = indep_raw(Subset{mask}) ? 1 : 0;
                memo = std::move(table);
            });
            return memo[a.bits()] != 0;
        }
        return indep_raw(a);
    }

    bool indep_raw(Subset a) const {
        return std::visit(
            [&](const auto& r) -> bool {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, LinearRep>) {
                    return gf_rank(r, a) == a.size();
                } else if constexpr (std::is_same_v<T, GraphicRep>) {
                    return graphic_independent(r, a);
                } else if constexpr (std::is_same_v<T, UniformRep>) {
                    return a.size() <= r.target_rank;
                } else if constexpr (std::is_same_v<T, BasesRep>) {
                    for (Subset b : r.bases)
                        if (a.subset_of(b)) return true;
                    return false;
                } else if constexpr (std::is_same_v<T, CircuitsRep>) {
                    for (Subset c : r.circuits)
                        if (c.subset_of(a)) return false;
                    return true;
                } else if constexpr (std::is_same_v<T, DualRep>) {
                    // independent in M* iff E\A still spans M
                    return r.parent->rank_of(r.parent->ground - a) == r.parent->rank_full();
                } else {
                    static_assert(std::is_same_v<T, MinorRep>);
                    return r.parent->indep(a | r.contracted);
                }
            },
            rep);
    }

    int rank_of(Subset a) const {
        Subset acc;
        for (int e : a)
            if (indep(acc.with(e))) acc = acc.with(e);
        return acc.size();
    }

    int rank_full() const {
        std::call_once(rank_flag, [&] { full_rank = rank_of(ground); });
        return full_rank;
    }

    void require_enumerable() const {
        if (ground.size() > kEnumerationLimit)
            throw ValidationError("set enumeration is limited to ground sets of at most " +
                                  std::to_string(kEnumerationLimit) + " active elements");
    }

    const std::vector<Subset>& all_independents() const {
        std::call_once(indep_flag, [&] {
            require_enumerable();
            std::vector<Subset> out;
            // grow by largest-id extension: visits each independent set once
            std::vector<Subset> stack{Subset::empty()};
            while (!stack.empty()) {
                Subset cur = stack.back();
                stack.pop_back();
                out.push_back(cur);
                int lo = cur.last() + 1;
                for (int e : ground) {
                    if (e < lo) continue;
                    Subset ext = cur.with(e);
                    if (indep(ext)) stack.push_back(ext);
                }
            }
            independents = sorted_dedup(std::move(out));
        });
        return independents;
    }

    const std::vector<Subset>& all_bases() const {
        std::call_once(base_flag, [&] {
            int r = rank_full();
            for (Subset s : all_independents())
                if (s.size() == r) bases.push_back(s);
        });
        return bases;
    }

    const std::vector<Subset>& all_circuits() const {
        std::call_once(circ_flag, [&] {
            require_enumerable();
            std::vector<int> elems = ground.elements();
            std::vector<Subset> found;
            // breadth-first by cardinality; supersets of found circuits pruned,
            // so every dependent set reached is minimal
            for (int k = 1; k <= static_cast<int>(elems.size()); ++k) {
                for_each_combination(elems, k, [&](Subset s) {
                    for (Subset c : found)
                        if (c.subset_of(s)) return;
                    if (!indep(s)) found.push_back(s);
                });
            }
            circuits = sorted_dedup(std::move(found));
        });
        return circuits;
    }

    Subset closure_of(Subset a) const {
        int r = rank_of(a);
        Subset out = a;
        for (int x : ground - a)
            if (rank_of(a.with(x)) == r) out = out.with(x);
        return out;
    }

    const std::vector<Subset>& all_flats() const {
        std::call_once(flat_flag, [&] {
            std::vector<Subset> out;
            for (Subset i : all_independents()) out.push_back(closure_of(i));
            flats = sorted_dedup(std::move(out));
        });
        return flats;
    }
};

namespace {

void validate_ground_size(int n) {
    if (n < 0 || n > kMaxGroundSize)
        throw ValidationError("ground-set size must be between 0 and 62, got " + std::to_string(n));
}

void validate_member(Subset s, int n, const char* what) {
    if (!s.subset_of(Subset::full(n)))
        throw ValidationError(std::string(what) + " " + to_string(s) + " falls outside the ground set");
}

void validate_bases(const std::vector<Subset>& bases, int n) {
    if (bases.empty()) throw ValidationError("a matroid needs at least one basis");
    int size = bases.front().size();
    for (Subset b : bases) {
        validate_member(b, n, "basis");
        if (b.size() != size)
            throw ValidationError("bases " + to_string(bases.front()) + " and " + to_string(b) +
                                  " have different cardinalities");
    }
    for (Subset b1 : bases)
        for (Subset b2 : bases)
            for (int x : b1 - b2) {
                bool ok = false;
                for (int y : b2 - b1) {
                    Subset cand = b1.without(x).with(y);
                    if (std::find(bases.begin(), bases.end(), cand) != bases.end()) { ok = true; break; }
                }
                if (!ok)
                    throw ValidationError("basis exchange axiom fails for " + to_string(b1) + ", " +
                                          to_string(b2) + " at element " + std::to_string(x + 1));
            }
}

void validate_circuits(const std::vector<Subset>& circuits, int n) {
    for (Subset c : circuits) {
        validate_member(c, n, "circuit");
        if (c.empty_set()) throw ValidationError("the empty set cannot be a circuit");
    }
    for (Subset c1 : circuits)
        for (Subset c2 : circuits) {
            if (c1 == c2) continue;
            if (c1.subset_of(c2))
                throw ValidationError("circuits must form a clutter: " + to_string(c1) +
                                      " is contained in " + to_string(c2));
        }
    for (Subset c1 : circuits)
        for (Subset c2 : circuits) {
            if (c1 == c2) continue;
            for (int x : c1 & c2) {
                Subset target = (c1 | c2).without(x);
                bool ok = false;
                for (Subset c3 : circuits)
                    if (c3.subset_of(target)) { ok = true; break; }
                if (!ok)
                    throw ValidationError("circuit elimination fails for " + to_string(c1) + ", " +
                                          to_string(c2) + " at element " + std::to_string(x + 1));
            }
        }
}

} // namespace

Matroid::Matroid(std::shared_ptr<const Core> core, GroundOrder ord)
    : core_(std::move(core)), order_(std::move(ord)) {}

Matroid Matroid::linear(int field, const std::vector<std::vector<int>>& matrix) {
    if (field != 2 && field != 3 && field != 5 && field != 7)
        throw ValidationError("linear representations support GF(p) for p in {2,3,5,7}");
    int rows = static_cast<int>(matrix.size());
    int n = rows == 0 ? 0 : static_cast<int>(matrix.front().size());
    validate_ground_size(n);
    LinearRep rep;
    rep.field = field;
    rep.rows = rows;
    rep.columns.assign(static_cast<std::size_t>(n), {});
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("matrix rows must all have the same length");
    for (int c = 0; c < n; ++c) {
        auto& col = rep.columns[static_cast<std::size_t>(c)];
        col.resize(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            int v = matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % field;
            col[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>((v + field) % field);
        }
    }
    auto core = std::make_shared<Core>(n, Subset::full(n), Rep(std::move(rep)));
    return Matroid(std::move(core), GroundOrder::identity(n));
}

Matroid Matroid::graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(edges.size());
    validate_ground_size(n);
    if (vertices < 0) throw ValidationError("vertex count must be nonnegative");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw ValidationError("edge endpoint outside vertex range");
    auto core = std::make_shared<Core>(n, Subset::full(n), Rep(GraphicRep{vertices, edges}));
    return Matroid(std::move(core), GroundOrder::identity(n));
}

Matroid Matroid::uniform(int rank, int n) {
    validate_ground_size(n);
    if (rank < 0 || rank > n) throw ValidationError("uniform matroid needs 0 <= r <= n");
    auto core = std::make_shared<Core>(n, Subset::full(n), Rep(UniformRep{rank}));
    return Matroid(std::move(core), GroundOrder::identity(n));
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
    validate_ground_size(n);
    bases = sorted_dedup(std::move(bases));
    validate_bases(bases, n);
    auto core = std::make_shared<Core>(n, Subset::full(n), Rep(BasesRep{std::move(bases)}));
    return Matroid(std::move(core), GroundOrder::identity(n));
}

Matroid Matroid::from_circuits(int n, std::vector<Subset> circuits) {
    validate_ground_size(n);
    circuits = sorted_dedup(std::move(circuits));
    validate_circuits(circuits, n);
    auto core = std::make_shared<Core>(n, Subset::full(n), Rep(CircuitsRep{std::move(circuits)}));
    return Matroid(std::move(core), GroundOrder::identity(n));
}

int Matroid::n() const { return core_->n; }
Subset Matroid::ground() const { return core_->ground; }
const GroundOrder& Matroid::order() const { return order_; }

Matroid Matroid::with_order(GroundOrder ord) const {
    if (ord.n() != core_->n) throw ValidationError("order permutation size does not match ground set");
    return Matroid(core_, std::move(ord));
}

bool Matroid::is_independent(Subset a) const {
    if (!a.subset_of(core_->ground)) throw ValidationError("subset " + to_string(a) + " not within ground set");
    return core_->indep(a);
}

int Matroid::rank(Subset a) const {
    if (!a.subset_of(core_->ground)) throw ValidationError("subset " + to_string(a) + " not within ground set");
    return core_->rank_of(a);
}

int Matroid::rank() const { return core_->rank_full(); }

Subset Matroid::closure(Subset a) const {
    if (!a.subset_of(core_->ground)) throw ValidationError("subset " + to_string(a) + " not within ground set");
    return core_->closure_of(a);
}

Subset Matroid::loops() const {
    Subset out;
    for (int e : core_->ground)
        if (!core_->indep(Subset::single(e))) out = out.with(e);
    return out;
}

const std::vector<Subset>& Matroid::circuits() const { return core_->all_circuits(); }
const std::vector<Subset>& Matroid::bases() const { return core_->all_bases(); }
const std::vector<Subset>& Matroid::independents() const { return core_->all_independents(); }
const std::vector<Subset>& Matroid::flats() const { return core_->all_flats(); }

Subset Matroid::basic_circuit(Subset indep, int x) const {
    if (!is_independent(indep)) throw ValidationError("basic_circuit requires an independent set");
    if (indep.contains(x)) throw ValidationError("basic_circuit is undefined for x inside the set");
    if (!closure(indep).contains(x))
        throw ValidationError("basic_circuit is undefined outside the closure of the set");
    Subset whole = indep.with(x);
    Subset circuit;
    for (int y : whole)
        if (core_->indep(whole.without(y))) circuit = circuit.with(y);
    return circuit;
}

Subset Matroid::basic_bond(Subset indep, int y) const {
    if (!is_independent(indep)) throw ValidationError("basic_bond requires an independent set");
    if (!indep.contains(y)) throw ValidationError("basic_bond is undefined for y outside the set");
    Subset flat = closure(indep);
    Subset bond = Subset::single(y);
    for (int z : flat - indep)
        if (basic_circuit(indep, z).contains(y)) bond = bond.with(z);
    return bond;
}

Matroid Matroid::dual() const {
    auto core = std::make_shared<Core>(core_->n, core_->ground, Rep(DualRep{core_}));
    return Matroid(std::move(core), order_);
}

Matroid Matroid::minor(Subset del, Subset con) const {
    if (del.intersects(con))
        throw ValidationError("minor deletion and contraction sets overlap at " + to_string(del & con));
    if (!del.subset_of(core_->ground) || !con.subset_of(core_->ground))
        throw ValidationError("minor sets must lie within the ground set");
    Subset contracted;
    for (int e : con)
        if (core_->indep(contracted.with(e))) contracted = contracted.with(e);
    Subset ground = core_->ground - del - con;
    auto core = std::make_shared<Core>(core_->n, ground, Rep(MinorRep{core_, contracted}));
    return Matroid(std::move(core), order_);
}

Subset Matroid::lex_max_basis(Subset forbidden) const {
    if (!forbidden.subset_of(Subset::full(core_->n)))
        throw ValidationError("forbidden set not within ground set");
    Subset basis;
    for (int pos = order_.n() - 1; pos >= 0; --pos) {
        int e = order_.perm()[static_cast<std::size_t>(pos)];
        if (!core_->ground.contains(e) || forbidden.contains(e)) continue;
        if (core_->indep(basis.with(e))) basis = basis.with(e);
    }
    return basis;
}

Verdict verify_matroid_axioms(const Matroid& m) {
    Subset ground = m.ground();
    if (ground.size() > 16) return Verdict::fail("axiom sweep supports at most 16 active elements");

    std::vector<Subset> all = subsets_sorted(ground);
    for (Subset a : all) {
        int r = m.rank(a);
        if (r > a.size()) return Verdict::fail("rank exceeds cardinality on " + to_string(a));
        for (int x : ground - a) {
            int rx = m.rank(a.with(x));
            if (rx < r || rx > r + 1)
                return Verdict::fail("rank unit-increase fails on " + to_string(a) + " + " + std::to_string(x + 1));
            for (int y : ground - a) {
                if (y <= x) continue;
                if (m.rank(a.with(x)) + m.rank(a.with(y)) < m.rank(a.with(x).with(y)) + r)
                    return Verdict::fail("rank submodularity fails on " + to_string(a) + " with " +
                                         std::to_string(x + 1) + "," + std::to_string(y + 1));
            }
        }
        Subset cl = m.closure(a);
        if (!a.subset_of(cl)) return Verdict::fail("closure not extensive on " + to_string(a));
        if (m.closure(cl) != cl) return Verdict::fail("closure not idempotent on " + to_string(a));
        for (int x : ground - a)
            if (!cl.subset_of(m.closure(a.with(x))))
                return Verdict::fail("closure not monotone on " + to_string(a));
    }

    const auto& flats = m.flats();
    for (Subset f : flats)
        for (Subset g : flats)
            if (m.closure(f & g) != (f & g))
                return Verdict::fail("flat intersection " + to_string(f & g) + " is not a flat");

    for (Subset b : m.bases())
        for (int y : b)
            for (int x : ground - b) {
                bool in_ci = m.basic_circuit(b, x).contains(y);
                bool in_bo = m.basic_bond(b, y).contains(x);
                bool exch = m.is_independent(b.without(y).with(x)) &&
                            b.without(y).with(x).size() == m.rank();
                if (in_ci != in_bo || in_bo != exch)
                    return Verdict::fail("basic circuit/bond equivalence fails at basis " + to_string(b));
            }

    Matroid dd = m.dual().dual();
    for (Subset a : all)
        if (dd.is_independent(a) != m.is_independent(a))
            return Verdict::fail("dual involution disagrees on " + to_string(a));

    // Gale dominance of the greedy basis, in descending ground order
    const GroundOrder& ord = m.order();
    Subset greedy = m.lex_max_basis(Subset::empty());
    auto descending = [&](Subset s) {
        std::vector<int> v = s.elements();
        std::sort(v.begin(), v.end(), [&](int a, int b) { return ord.less(b, a); });
        return v;
    };
    std::vector<int> g = descending(greedy);
    for (Subset b : m.bases()) {
        std::vector<int> bv = descending(b);
        for (std::size_t i = 0; i < bv.size(); ++i)
            if (ord.less(g[i], bv[i]))
                return Verdict::fail("greedy basis fails to dominate " + to_string(b));
    }
    return Verdict::pass();
}

} // namespace extorder
