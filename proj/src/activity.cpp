#include "extorder/activity.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace extorder {

Subset active_set(const Matroid& m, Subset a) {
    const GroundOrder& ord = m.order();
    Subset act;
    if (m.is_independent(a)) {
        // Act_M(I) = Act_{M|F}(I) for F the spanned flat, so basic circuits
        // inside the flat decide activity
        for (int x : m.closure(a) - a)
            if (ord.min_of(m.basic_circuit(a, x)) == x) act = act.with(x);
        return act;
    }
    for (Subset c : m.circuits()) {
        int x = ord.min_of(c);
        if ((c.without(x)).subset_of(a)) act = act.with(x);
    }
    return act;
}

ActivityReport activity_report(const Matroid& m, Subset a) {
    if (!a.subset_of(m.ground()))
        throw ValidationError("subset " + to_string(a) + " not within ground set");
    ActivityReport r;
    r.subject = a;
    r.act = active_set(m, a);
    r.ea = r.act - a;
    r.ep = (m.ground() - a) - r.ea;
    r.ia = active_set(m.dual(), m.ground() - a) & a;
    r.ip = a - r.ia;
    return r;
}

Subset active_chain(const Matroid& m, Subset indep, int a) {
    if (!indep.contains(a))
        throw ValidationError("active_chain is undefined for a outside the independent set");
    Subset ea = active_set(m, indep);
    return ea & m.basic_bond(indep, a);
}

void TuttePolynomial::add(int dx, int dy, long long v) {
    if (v == 0) return;
    auto it = coeffs_.find({dx, dy});
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::make_pair(dx, dy), v);
    } else {
        it->second += v;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long long TuttePolynomial::coeff(int dx, int dy) const {
    auto it = coeffs_.find({dx, dy});
    return it == coeffs_.end() ? 0 : it->second;
}

long long TuttePolynomial::eval(long long x, long long y) const {
    long long total = 0;
    for (const auto& [deg, c] : coeffs_) {
        long long term = c;
        for (int i = 0; i < deg.first; ++i) term *= x;
        for (int i = 0; i < deg.second; ++i) term *= y;
        total += term;
    }
    return total;
}

std::string TuttePolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, long long>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [deg, c] : terms) {
        auto [dx, dy] = deg;
        if (!out.empty()) out += " + ";
        std::string term;
        if (c != 1 || (dx == 0 && dy == 0)) term += std::to_string(c);
        if (dx > 0) term += "x" + (dx > 1 ? "^" + std::to_string(dx) : "");
        if (dy > 0) term += "y" + (dy > 1 ? "^" + std::to_string(dy) : "");
        out += term;
    }
    return out;
}

namespace {

// binomial table, enough for exponents up to the ground-size cap
const std::array<std::array<long long, 64>, 64>& binomials() {
    static const auto table = [] {
        std::array<std::array<long long, 64>, 64> t{};
        for (int i = 0; i < 64; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        return t;
    }();
    return table;
}

// adds (x-1)^a (y-1)^b expanded by binomial convolution
void add_corank_nullity_term(TuttePolynomial& p, int a, int b) {
    const auto& bin = binomials();
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            long long c = bin[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                          bin[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
            if ((a - i + b - j) % 2 != 0) c = -c;
            p.add(i, j, c);
        }
}

} // namespace

TuttePolynomial tutte(const Matroid& m, TutteMethod method) {
    TuttePolynomial p;
    if (method == TutteMethod::activity) {
        Matroid dual = m.dual();
        for (Subset b : m.bases()) {
            int ia = (active_set(dual, m.ground() - b) & b).size();
            int ea = (active_set(m, b) - b).size();
            p.add(ia, ea, 1);
        }
        return p;
    }
    if (m.ground().size() > 24)
        throw ValidationError("corank-nullity summation is limited to 24 active elements");
    int r = m.rank();
    for_each_subset(m.ground(), [&](Subset a) {
        add_corank_nullity_term(p, r - m.rank(a), a.size() - m.rank(a));
    });
    return p;
}

} // namespace extorder
