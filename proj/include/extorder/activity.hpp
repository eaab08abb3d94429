#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "extorder/matroid.hpp"

namespace extorder {

/// Activity partition of the ground set relative to a subject set A:
/// ea/ep split E\A, ia/ip split A.
struct ActivityReport {
    Subset subject;
    Subset act; // M-active elements (may meet A when A is dependent)
    Subset ea, ep;
    Subset ia, ip;
};

/// M-active elements of A: x such that some circuit C has x in C, C\x inside
/// A, and x minimal in C under the matroid's ground order.  Independent
/// subjects take the basic-circuit fast path; dependent ones scan circuits.
Subset active_set(const Matroid& m, Subset a);

ActivityReport activity_report(const Matroid& m, Subset a);

/// ch(I, a) = EA(I) & basic_bond(I, a).  Requires a in I.
Subset active_chain(const Matroid& m, Subset indep, int a);

/// Integer polynomial in x, y with sparse (deg_x, deg_y) -> coeff storage.
class TuttePolynomial {
public:
    void add(int dx, int dy, long long v);
    long long coeff(int dx, int dy) const;
    long long eval(long long x, long long y) const;
    const std::map<std::pair<int, int>, long long>& coeffs() const { return coeffs_; }
    bool operator==(const TuttePolynomial&) const = default;
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, long long> coeffs_;
};

enum class TutteMethod {
    activity,       // sum of x^|IA(B)| y^|EA(B)| over bases
    corank_nullity, // sum of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)) over all A
};

TuttePolynomial tutte(const Matroid& m, TutteMethod method);

} // namespace extorder
