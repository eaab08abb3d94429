#include "extorder/subset.hpp"

#include <algorithm>
#include <numeric>

namespace extorder {

std::vector<Subset> subsets_sorted(Subset ground) {
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << ground.size());
    for_each_subset(ground, [&](Subset s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), card_mask_less);
    return out;
}

GroundOrder::GroundOrder(int n, std::vector<int> perm) : n_(n), perm_(std::move(perm)) {
    if (n < 0 || n > kMaxGroundSize)
        throw ValidationError("ground-set size must be between 0 and 62, got " + std::to_string(n));
    if (static_cast<int>(perm_.size()) != n)
        throw ValidationError("order permutation has wrong length");
    pos_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int e = perm_[static_cast<std::size_t>(i)];
        if (e < 0 || e >= n || pos_[static_cast<std::size_t>(e)] != -1)
            throw ValidationError("order permutation is not a bijection on {0..n-1}");
        pos_[static_cast<std::size_t>(e)] = i;
    }
}

GroundOrder GroundOrder::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return GroundOrder(n, std::move(p));
}

GroundOrder GroundOrder::reversed() const {
    std::vector<int> p(perm_.rbegin(), perm_.rend());
    return GroundOrder(n_, std::move(p));
}

int GroundOrder::min_of(Subset s) const {
    int best = -1;
    for (int e : s)
        if (best == -1 || less(e, best)) best = e;
    return best;
}

int GroundOrder::max_of(Subset s) const {
    int best = -1;
    for (int e : s)
        if (best == -1 || less(best, e)) best = e;
    return best;
}

bool GroundOrder::lex_less_prefix_small(Subset a, Subset b) const {
    Subset ra = a, rb = b;
    while (!ra.empty_set() && !rb.empty_set()) {
        int ea = min_of(ra), eb = min_of(rb);
        if (ea != eb) return less(ea, eb);
        ra = ra.without(ea);
        rb = rb.without(eb);
    }
    return ra.empty_set() && !rb.empty_set();
}

bool GroundOrder::lex_less_prefix_large(Subset a, Subset b) const {
    Subset ra = a, rb = b;
    while (!ra.empty_set() && !rb.empty_set()) {
        int ea = min_of(ra), eb = min_of(rb);
        if (ea != eb) return less(ea, eb);
        ra = ra.without(ea);
        rb = rb.without(eb);
    }
    return rb.empty_set() && !ra.empty_set();
}

std::string to_string(Subset s) {
    std::string out = "{";
    bool sep = false;
    for (int e : s) {
        if (sep) out += ',';
        out += std::to_string(e + 1);
        sep = true;
    }
    out += '}';
    return out;
}

} // namespace extorder
