#include "extorder/io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace extorder {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& why) {
    throw ValidationError("schema error at " + path + ": " + why);
}

int parse_element(const json& v, int n, const std::string& path) {
    int e = -1;
    if (v.is_number_integer()) {
        e = v.get<int>() - 1;
    } else if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.size() != 1 || s[0] < 'a' || s[0] > 'z')
            schema_error(path, "element letters must be single characters a..z");
        e = s[0] - 'a';
    } else {
        schema_error(path, "elements must be 1-based integers or letters");
    }
    if (e < 0 || e >= n)
        schema_error(path, "element out of range for ground size " + std::to_string(n));
    return e;
}

Subset parse_set(const json& v, int n, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an array of elements");
    Subset s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s = s.with(parse_element(v[i], n, path + "[" + std::to_string(i) + "]"));
    return s;
}

std::vector<Subset> parse_sets(const json& v, int n, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an array of sets");
    std::vector<Subset> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_set(v[i], n, path + "[" + std::to_string(i) + "]"));
    return out;
}

int require_int(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer()) schema_error("/" + key, "expected an integer");
    return j[key].get<int>();
}

GroundOrder parse_order(const json& j, int n) {
    if (!j.contains("order")) return GroundOrder::identity(n);
    const json& v = j["order"];
    if (!v.is_array() || static_cast<int>(v.size()) != n)
        schema_error("/order", "expected a permutation listing all " + std::to_string(n) +
                                   " elements from smallest to largest");
    std::vector<int> perm;
    perm.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        perm.push_back(parse_element(v[i], n, "/order[" + std::to_string(i) + "]"));
    return GroundOrder(n, std::move(perm));
}

json set_to_json(Subset s) {
    json arr = json::array();
    for (int e : s) arr.push_back(e + 1);
    return arr;
}

std::string dump(const ordered_json& j) { return j.dump(); }

} // namespace

ParsedInput parse_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        schema_error("/kind", "expected one of linear, graphic, uniform, bases, circuits, "
                              "antimatroid, lattice");
    std::string kind = j["kind"].get<std::string>();

    if (kind == "linear") {
        int field = require_int(j, "field");
        if (!j.contains("matrix") || !j["matrix"].is_array())
            schema_error("/matrix", "expected an array of rows");
        std::vector<std::vector<int>> rows;
        for (std::size_t r = 0; r < j["matrix"].size(); ++r) {
            const json& row = j["matrix"][r];
            if (!row.is_array()) schema_error("/matrix[" + std::to_string(r) + "]", "expected a row");
            rows.emplace_back();
            for (const json& v : row) {
                if (!v.is_number_integer())
                    schema_error("/matrix[" + std::to_string(r) + "]", "entries must be integers");
                rows.back().push_back(v.get<int>());
            }
        }
        Matroid m = Matroid::linear(field, rows);
        return {m.with_order(parse_order(j, m.n()))};
    }
    if (kind == "graphic") {
        int vertices = require_int(j, "vertices");
        if (!j.contains("edges") || !j["edges"].is_array())
            schema_error("/edges", "expected an array of [u,v] pairs");
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < j["edges"].size(); ++k) {
            const json& e = j["edges"][k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                schema_error("/edges[" + std::to_string(k) + "]", "expected [u,v]");
            int u = e[0].get<int>() - 1, v = e[1].get<int>() - 1;
            if (u < 0 || v < 0 || u >= vertices || v >= vertices)
                schema_error("/edges[" + std::to_string(k) + "]", "vertex id out of range");
            edges.emplace_back(u, v);
        }
        Matroid m = Matroid::graphic(vertices, edges);
        return {m.with_order(parse_order(j, m.n()))};
    }
    if (kind == "uniform") {
        int r = require_int(j, "r"), n = require_int(j, "n");
        Matroid m = Matroid::uniform(r, n);
        return {m.with_order(parse_order(j, n))};
    }
    if (kind == "bases" || kind == "circuits") {
        int n = require_int(j, "n");
        if (n < 0 || n > kMaxGroundSize) schema_error("/n", "ground size out of range");
        if (!j.contains(kind)) schema_error("/" + kind, "missing set list");
        std::vector<Subset> sets = parse_sets(j[kind], n, "/" + kind);
        Matroid m = kind == "bases" ? Matroid::from_bases(n, std::move(sets))
                                    : Matroid::from_circuits(n, std::move(sets));
        return {m.with_order(parse_order(j, n))};
    }
    if (kind == "antimatroid") {
        int n = require_int(j, "ground");
        if (n < 0 || n > kMaxGroundSize) schema_error("/ground", "ground size out of range");
        if (!j.contains("feasible")) schema_error("/feasible", "missing feasible set list");
        SetFamily family(n, parse_sets(j["feasible"], n, "/feasible"));
        return {Antimatroid::from_family(std::move(family))};
    }
    if (kind == "lattice") {
        int nodes = require_int(j, "nodes");
        if (!j.contains("covers") || !j["covers"].is_array())
            schema_error("/covers", "expected an array of [lower,upper] pairs");
        LatticePresentation pres;
        pres.node_count = nodes;
        for (std::size_t k = 0; k < j["covers"].size(); ++k) {
            const json& e = j["covers"][k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                schema_error("/covers[" + std::to_string(k) + "]", "expected [lower,upper]");
            pres.covers.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
        }
        return {pres};
    }
    schema_error("/kind", "unknown kind \"" + kind + "\"");
}

std::string export_json(const SetFamily& family) {
    ordered_json out;
    out["kind"] = "antimatroid";
    Subset full = Subset::full(family.n());
    if (family.ground() == full) {
        out["ground"] = family.n();
        json sets = json::array();
        for (Subset m : family.members()) sets.push_back(set_to_json(m));
        out["feasible"] = sets;
        return dump(out);
    }
    // compact relabeling for shrunken grounds, with the original ids recorded
    std::vector<int> alive = family.ground().elements();
    std::vector<int> newid(static_cast<std::size_t>(family.n()), -1);
    for (std::size_t i = 0; i < alive.size(); ++i)
        newid[static_cast<std::size_t>(alive[i])] = static_cast<int>(i);
    out["ground"] = static_cast<int>(alive.size());
    json sets = json::array();
    for (Subset m : family.members()) {
        json arr = json::array();
        for (int e : m) arr.push_back(newid[static_cast<std::size_t>(e)] + 1);
        sets.push_back(arr);
    }
    out["feasible"] = sets;
    json labels = json::array();
    for (int e : alive) labels.push_back(e + 1);
    out["labels"] = labels;
    return dump(out);
}

std::string export_json(const LatticePresentation& pres) {
    ordered_json out;
    out["kind"] = "lattice";
    out["nodes"] = pres.node_count;
    std::vector<std::pair<int, int>> covers = pres.covers;
    std::sort(covers.begin(), covers.end());
    json edges = json::array();
    for (auto [lo, hi] : covers) edges.push_back(json::array({lo + 1, hi + 1}));
    out["covers"] = edges;
    return dump(out);
}

std::string export_json_matroid(const Matroid& m) {
    ordered_json out;
    out["kind"] = "bases";
    std::vector<int> alive = m.ground().elements();
    bool shrunk = m.ground() != Subset::full(m.n());
    std::vector<int> newid(static_cast<std::size_t>(m.n()), -1);
    for (std::size_t i = 0; i < alive.size(); ++i)
        newid[static_cast<std::size_t>(alive[i])] = static_cast<int>(i);
    auto relabel = [&](Subset s) {
        json arr = json::array();
        for (int e : s) arr.push_back(newid[static_cast<std::size_t>(e)] + 1);
        return arr;
    };
    out["n"] = static_cast<int>(alive.size());
    json bases = json::array();
    for (Subset b : m.bases()) bases.push_back(relabel(b));
    out["bases"] = bases;
    json circuits = json::array();
    for (Subset c : m.circuits()) circuits.push_back(relabel(c));
    out["circuits"] = circuits;
    if (shrunk) {
        json labels = json::array();
        for (int e : alive) labels.push_back(e + 1);
        out["labels"] = labels;
    }
    return dump(out);
}

namespace {

std::string set_label(Subset s) {
    if (s.empty_set()) return "{}";
    std::string out = "{";
    bool sep = false;
    for (int e : s) {
        if (sep) out += ",";
        out += std::to_string(e + 1);
        sep = true;
    }
    return out + "}";
}

std::string dot_of_lattice(const JDLattice& lat,
                           const std::function<std::string(int)>& label_of) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int x = 0; x < lat.size(); ++x)
        os << "  n" << x << " [label=\"" << label_of(x) << "\"];\n";
    for (const CoverEdge& e : lat.covers())
        os << "  n" << e.lower << " -> n" << e.upper << " [label=\"" << e.label + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace

std::string export_dot(const JDLattice& lat, const DotOptions&) {
    return dot_of_lattice(lat, [&](int x) { return set_label(lat.t_set(x)); });
}

std::string export_dot(const ExternalOrder& eo, const DotOptions& options) {
    const JDLattice& lat = eo.lattice();
    if (options.feasible_labels)
        return dot_of_lattice(lat, [&](int x) { return set_label(lat.t_set(x)); });
    return dot_of_lattice(lat, [&](int x) { return set_label(eo.independent_of(x)); });
}

Subset parse_element_list(const std::string& text, int n) {
    Subset out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int e;
        if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') {
            e = tok[0] - 'a';
        } else {
            try {
                e = std::stoi(tok) - 1;
            } catch (...) {
                throw ValidationError("bad element '" + tok + "' in list");
            }
        }
        if (e < 0 || e >= n) throw ValidationError("element '" + tok + "' out of range");
        out = out.with(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

namespace {

ordered_json classification_json(const LatticeClass& c) {
    ordered_json out;
    out["join_distributive"] = c.join_distributive;
    out["matroidal"] = c.matroidal;
    out["confluent"] = c.confluent;
    out["classification"] = to_string(c.kind);
    return out;
}

ordered_json tutte_json(const TuttePolynomial& p) {
    json terms = json::array();
    for (const auto& [deg, c] : p.coeffs())
        terms.push_back(json::array({deg.first, deg.second, c}));
    return terms;
}

RunResult run_ext_order(const Matroid& m, const RunFlags& flags) {
    ExternalOrder eo = ExternalOrder::build(m);
    if (flags.dot) return {0, export_dot(eo, DotOptions{flags.feasible_labels})};
    const JDLattice& lat = eo.lattice();
    ordered_json out;
    out["kind"] = "ext-order";
    ordered_json nodes = ordered_json::array();
    for (int x = 0; x < lat.size(); ++x) {
        ordered_json node;
        node["id"] = x + 1;
        node["independent"] = set_to_json(eo.independent_of(x));
        node["passive"] = set_to_json(lat.t_set(x));
        nodes.push_back(node);
    }
    out["nodes"] = nodes;
    json edges = json::array();
    for (const CoverEdge& e : lat.covers())
        edges.push_back(json::array({e.lower + 1, e.upper + 1, e.label + 1}));
    out["edges"] = edges;
    out["minimum"] = set_to_json(eo.independent_of(lat.bottom()));
    out["maximum"] = set_to_json(eo.independent_of(lat.top()));
    if (flags.las_vergnas) {
        // the classical orientation on bases: covers of the restriction,
        // arrows reversed
        std::vector<int> basis_elems;
        for (int x = 0; x < lat.size(); ++x)
            if (eo.independent_of(x).size() == m.rank()) basis_elems.push_back(x);
        std::sort(basis_elems.begin(), basis_elems.end(), [&](int a, int b) {
            return card_mask_less(eo.independent_of(a), eo.independent_of(b));
        });
        json bnodes = json::array();
        for (int x : basis_elems) bnodes.push_back(set_to_json(eo.independent_of(x)));
        json bedges = json::array();
        for (std::size_t i = 0; i < basis_elems.size(); ++i)
            for (std::size_t k = 0; k < basis_elems.size(); ++k) {
                int lo = basis_elems[i], hi = basis_elems[k];
                if (lo == hi || !lat.leq(lo, hi)) continue;
                bool covered = false;
                for (int mid : basis_elems)
                    if (mid != lo && mid != hi && lat.leq(lo, mid) && lat.leq(mid, hi))
                        covered = true;
                if (!covered)
                    bedges.push_back(json::array(
                        {set_to_json(eo.independent_of(hi)), set_to_json(eo.independent_of(lo))}));
            }
        ordered_json lv;
        lv["bases"] = bnodes;
        lv["edges"] = bedges;
        out["las_vergnas"] = lv;
    }
    return {0, dump(out) + "\n"};
}

RunResult run_classify(const ParsedInput& input) {
    LatticeClass c;
    std::optional<GroundOrder> conf;
    if (input.is_matroid()) {
        ExternalOrder eo = ExternalOrder::build(std::get<Matroid>(input.value));
        c = classify(eo.lattice());
        conf = confluent_ordering(t_map(eo.lattice()));
    } else if (input.is_antimatroid()) {
        JDLattice lat = JDLattice::from_antimatroid(std::get<Antimatroid>(input.value));
        c = classify(lat);
        conf = confluent_ordering(t_map(lat));
    } else {
        const auto& pres = std::get<LatticePresentation>(input.value);
        c = classify(pres);
        if (c.join_distributive) conf = confluent_ordering(t_map(lattice_from_presentation(pres)));
    }
    ordered_json out = classification_json(c);
    if (conf) {
        json perm = json::array();
        for (int e : conf->perm()) perm.push_back(e + 1);
        out["confluent_order"] = perm;
    } else {
        out["confluent_order"] = nullptr;
    }
    return {0, dump(out) + "\n"};
}

RunResult run_tutte(const Matroid& m) {
    TuttePolynomial by_activity = tutte(m, TutteMethod::activity);
    TuttePolynomial by_rank = tutte(m, TutteMethod::corank_nullity);
    bool agree = by_activity == by_rank;
    ordered_json out;
    out["activity"] = tutte_json(by_activity);
    out["corank_nullity"] = tutte_json(by_rank);
    out["agree"] = agree;
    out["bases"] = by_activity.eval(1, 1);
    out["independents"] = by_activity.eval(2, 1);
    return {agree ? 0 : 2, dump(out) + "\n"};
}

RunResult run_partition(const Matroid& m) {
    ExternalOrder eo = ExternalOrder::build(m);
    eo.boolean_partition(); // throws on any defect
    const JDLattice& lat = eo.lattice();
    ordered_json out;
    out["kind"] = "partition";
    ordered_json intervals = ordered_json::array();
    long long sizes = 0;
    for (int x = 0; x < lat.size(); ++x) {
        Subset i = eo.independent_of(x);
        Subset ea = (m.ground() - i) - lat.t_set(x);
        ordered_json iv;
        iv["independent"] = set_to_json(i);
        iv["active"] = set_to_json(ea);
        intervals.push_back(iv);
        sizes += 1LL << ea.size();
    }
    out["intervals"] = intervals;
    out["count"] = lat.size();
    out["sizes_sum"] = sizes;
    return {0, dump(out) + "\n"};
}

RunResult run_minor(const ParsedInput& input, const RunFlags& flags) {
    Subset rem = flags.remove.value_or(Subset::empty());
    Subset con = flags.contract.value_or(Subset::empty());
    if (input.is_matroid()) {
        const Matroid& m = std::get<Matroid>(input.value);
        return {0, export_json_matroid(m.minor(rem, con)) + "\n"};
    }
    if (input.is_antimatroid()) {
        const Antimatroid& f = std::get<Antimatroid>(input.value);
        if (rem.intersects(con))
            throw ValidationError("minor deletion and contraction sets overlap");
        Antimatroid out = anti_contract(anti_delete(f, rem), con);
        return {0, export_json(out.family()) + "\n"};
    }
    throw ValidationError("minor requires a matroid or antimatroid input");
}

ordered_json rooted_to_json(const std::vector<RootedSet>& rooted) {
    ordered_json arr = ordered_json::array();
    for (const RootedSet& r : rooted) {
        ordered_json item;
        item["set"] = set_to_json(r.set);
        item["root"] = r.root + 1;
        arr.push_back(item);
    }
    return arr;
}

RunResult run_circuits(const ParsedInput& input) {
    ordered_json out;
    if (input.is_matroid()) {
        out["kind"] = "rooted-circuits";
        out["circuits"] = rooted_to_json(ext_rooted_circuits(std::get<Matroid>(input.value)));
        return {0, dump(out) + "\n"};
    }
    if (input.is_antimatroid()) {
        const Antimatroid& f = std::get<Antimatroid>(input.value);
        out["kind"] = "rooted-circuits";
        out["circuits"] = rooted_to_json(f.rooted_circuits());
        out["cocircuits"] = rooted_to_json(f.rooted_cocircuits());
        out["loops"] = set_to_json(f.loops());
        return {0, dump(out) + "\n"};
    }
    throw ValidationError("circuits requires a matroid or antimatroid input");
}

// --- the `check` aggregation -----------------------------------------------

struct CheckRunner {
    std::ostringstream os;
    int failures = 0;

    void step(const std::string& name, const std::function<Verdict()>& fn) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = Verdict::fail(e.what());
        }
        if (v.ok) {
            os << "ok   " << name << "\n";
        } else {
            os << "FAIL " << name << ": " << v.message << "\n";
            ++failures;
        }
    }
    void note(const std::string& line) { os << line << "\n"; }
};

Verdict sweep_leq_meet_join(const ExternalOrder& eo) {
    const auto& indeps = eo.matroid().independents();
    for (Subset i : indeps)
        for (Subset k : indeps) {
            eo.leq(i, k);      // cross-checked internally
            eo.meet_join(i, k); // asserted against the lattice
        }
    return Verdict::pass();
}

Verdict sweep_covers(const ExternalOrder& eo) {
    for (Subset i : eo.matroid().independents()) {
        eo.upper_covers(i);
        if (!eo.ep(i).empty_set()) eo.min_passive_lower_cover(i);
    }
    return Verdict::pass();
}

Verdict sweep_correspondences(const Matroid& m) {
    std::vector<Subset> probes;
    if (m.ground().size() <= 6) {
        for_each_subset(m.ground(), [&](Subset a) { probes.push_back(a); });
    } else {
        probes.push_back(Subset::empty());
        for (int e : m.ground()) probes.push_back(Subset::single(e));
    }
    for (Subset a : probes) {
        CorrespondenceReport rep = correspondence_check(m, a);
        if (!rep.all_ok()) return Verdict::fail(rep.detail);
    }
    return Verdict::pass();
}

Verdict check_independents_subset_closed(const Antimatroid& f) {
    for (Subset i : f.independents())
        for (int e : i)
            if (!f.independent(i.without(e)))
                return Verdict::fail("independents not subset-closed at " + to_string(i));
    return Verdict::pass();
}

Verdict check_rooted_roundtrip(const Antimatroid& f, RootedKind kind) {
    const auto& rooted =
        kind == RootedKind::circuit ? f.rooted_circuits() : f.rooted_cocircuits();
    RootedAxiomsResult res =
        check_rooted_axioms(kind, rooted, f.n(), f.ground() - f.loops());
    if (!res.verdict.ok) return res.verdict;
    if (res.family.members() != f.family().members())
        return Verdict::fail("reconstructed family differs from the input family");
    return Verdict::pass();
}

Verdict check_matroidal_exchange_equivalence(const JDLattice& lat) {
    bool matroidal = is_matroidal(lat).matroidal;
    std::vector<Subset> indeps;
    for (int x = 0; x < lat.size(); ++x) indeps.push_back(lat.indep_set(x));
    bool exchange = true;
    for (Subset a : indeps)
        for (Subset b : indeps) {
            if (a.size() <= b.size()) continue;
            bool ok = false;
            for (int e : a - b)
                if (std::find(indeps.begin(), indeps.end(), b.with(e)) != indeps.end()) {
                    ok = true;
                    break;
                }
            if (!ok) exchange = false;
        }
    if (matroidal != exchange)
        return Verdict::fail("is_matroidal disagrees with the exchange axiom on independents");
    return Verdict::pass();
}

int check_matroid(const Matroid& m, std::string& text) {
    CheckRunner r;
    r.step("matroid axioms", [&] { return verify_matroid_axioms(m); });
    r.step("tutte activity vs corank-nullity", [&] {
        return tutte(m, TutteMethod::activity) == tutte(m, TutteMethod::corank_nullity)
                   ? Verdict::pass()
                   : Verdict::fail("polynomials differ");
    });
    ExternalOrder eo = ExternalOrder::build(m);
    r.step("EP family antimatroid axioms", [&] { return verify_antimatroid(eo.antimatroid().family()); });
    r.step("external order classification is EO", [&] {
        LatticeClass c = classify(eo.lattice());
        return c.kind == LatticeClass::Kind::eo
                   ? Verdict::pass()
                   : Verdict::fail(std::string("classified as ") + to_string(c.kind));
    });
    r.step("snelling under the reversed ground order",
           [&] { return verify_snelling(eo.lattice(), m.order().reversed()); });
    r.step("lattice invariants", [&] { return verify_jd_invariants(eo.lattice()); });
    r.step("circuit/cocircuit blocker duality",
           [&] { return verify_circuit_cocircuit_duality(eo.antimatroid()); });
    r.step("feasible sets are unions of cocircuits",
           [&] { return verify_union_of_cocircuits(eo.antimatroid()); });
    r.step("boolean partitions", [&] {
        eo.boolean_partition();
        return Verdict::pass();
    });
    r.step("flats projection", [&] {
        eo.flats_projection();
        return Verdict::pass();
    });
    r.step("order and meet/join formulas", [&] { return sweep_leq_meet_join(eo); });
    r.step("cover formulas", [&] { return sweep_covers(eo); });
    r.step("minor correspondences", [&] { return sweep_correspondences(m); });
    text = r.os.str();
    return r.failures == 0 ? 0 : 2;
}

int check_antimatroid(const Antimatroid& f, std::string& text) {
    CheckRunner r;
    r.step("antimatroid axioms", [&] { return verify_antimatroid(f.family()); });
    r.step("rooted circuit axioms and reconstruction",
           [&] { return check_rooted_roundtrip(f, RootedKind::circuit); });
    r.step("rooted cocircuit axioms and reconstruction",
           [&] { return check_rooted_roundtrip(f, RootedKind::cocircuit); });
    r.step("circuit/cocircuit blocker duality", [&] { return verify_circuit_cocircuit_duality(f); });
    r.step("feasible sets are unions of cocircuits", [&] { return verify_union_of_cocircuits(f); });
    r.step("gamma injectivity", [&] {
        return gamma_injective(f.family()) ? Verdict::pass()
                                           : Verdict::fail("gamma is not injective");
    });
    r.step("independents subset-closed", [&] { return check_independents_subset_closed(f); });
    JDLattice lat = JDLattice::from_antimatroid(f);
    r.step("lattice invariants", [&] { return verify_jd_invariants(lat); });
    r.step("matroidal iff exchange axiom", [&] { return check_matroidal_exchange_equivalence(lat); });
    LatticeClass c = classify(lat);
    r.note(std::string("info classification: ") + to_string(c.kind));
    if (c.confluent)
        r.step("snelling under a confluent order",
               [&] { return verify_snelling(lat, *confluent_ordering(t_map(lat))); });
    text = r.os.str();
    return r.failures == 0 ? 0 : 2;
}

int check_lattice(const LatticePresentation& pres, std::string& text) {
    CheckRunner r;
    Verdict jd = verify_join_distributive(pres);
    if (!jd.ok) {
        r.note("info not join-distributive: " + jd.message);
        r.note("info classification: not-JD");
        text = r.os.str();
        return 0;
    }
    r.step("join-distributivity (four conditions)", [&] { return jd; });
    JDLattice lat = lattice_from_presentation(pres);
    r.step("t_map round-trip", [&] {
        Antimatroid f = t_map(lat);
        JDLattice again = JDLattice::from_antimatroid(f);
        return again.size() == lat.size() && again.covers().size() == lat.covers().size()
                   ? Verdict::pass()
                   : Verdict::fail("round-tripped lattice has different shape");
    });
    r.step("lattice invariants", [&] { return verify_jd_invariants(lat); });
    r.step("matroidal iff exchange axiom", [&] { return check_matroidal_exchange_equivalence(lat); });
    LatticeClass c = classify(lat);
    r.note(std::string("info classification: ") + to_string(c.kind));
    text = r.os.str();
    return r.failures == 0 ? 0 : 2;
}

} // namespace

RunResult run(const std::string& command, const ParsedInput& input, const RunFlags& flags) {
    if (command == "ext-order") {
        if (!input.is_matroid()) throw ValidationError("ext-order requires a matroid input");
        return run_ext_order(std::get<Matroid>(input.value), flags);
    }
    if (command == "classify") return run_classify(input);
    if (command == "tutte") {
        if (!input.is_matroid()) throw ValidationError("tutte requires a matroid input");
        return run_tutte(std::get<Matroid>(input.value));
    }
    if (command == "partition") {
        if (!input.is_matroid()) throw ValidationError("partition requires a matroid input");
        return run_partition(std::get<Matroid>(input.value));
    }
    if (command == "minor") return run_minor(input, flags);
    if (command == "circuits") return run_circuits(input);
    if (command == "check") {
        std::string text;
        int code = 0;
        if (input.is_matroid()) {
            code = check_matroid(std::get<Matroid>(input.value), text);
        } else if (input.is_antimatroid()) {
            code = check_antimatroid(std::get<Antimatroid>(input.value), text);
        } else {
            code = check_lattice(std::get<LatticePresentation>(input.value), text);
        }
        return {code, text};
    }
    throw ValidationError("unknown command \"" + command + "\"");
}

} // namespace extorder
