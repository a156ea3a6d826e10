#include "core/rat.hpp"

#include <cctype>

#include "core/error.hpp"

namespace pachgap {

std::string rat_str(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string int_str(const Int& v) { return v.str(); }

Int int_parse(const std::string& s) {
    if (s.empty()) throw_param("empty integer literal");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw_param("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw_param("bad integer literal '" + s + "'");
    return Int(s);
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_parse(s));
    Int num = int_parse(s.substr(0, slash));
    Int den = int_parse(s.substr(slash + 1));
    if (den == 0) throw_param("zero denominator in '" + s + "'");
    return Rat(num, den);
}

Int ipow(Int base, unsigned exp) {
    Int acc = 1;
    while (exp) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

Int iroot_floor(const Int& a, unsigned deg) {
    if (a < 0) throw_param("iroot_floor of a negative value");
    if (deg == 0) throw_param("iroot_floor with degree 0");
    if (a == 0 || a == 1 || deg == 1) return a;
    Int lo = 0, hi = 1;
    while (ipow(hi, deg) <= a) hi <<= 1;
    // invariant: lo^deg <= a < hi^deg
    lo = hi >> 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (ipow(mid, deg) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool perfect_root(const Int& a, unsigned deg, Int& root) {
    root = iroot_floor(a, deg);
    return ipow(root, deg) == a;
}

int cmp_rat_vs_root(const Rat& x, const Rat& coeff, const Int& radicand, unsigned deg) {
    if (coeff < 0 || radicand < 0) throw_param("cmp_rat_vs_root needs nonnegative rhs");
    if (coeff == 0 || radicand == 0) return sign_of(x);
    if (x <= 0) return -1; // rhs > 0 here
    Rat lhs_pow = x;
    for (unsigned i = 1; i < deg; ++i) lhs_pow *= x;
    Rat rhs_pow = coeff;
    for (unsigned i = 1; i < deg; ++i) rhs_pow *= coeff;
    rhs_pow *= Rat(radicand);
    return lhs_pow < rhs_pow ? -1 : (lhs_pow > rhs_pow ? 1 : 0);
}

int cmp_root_vs_root(const Rat& a, const Int& ra, const Rat& b, const Int& rb, unsigned deg) {
    if (a < 0 || b < 0 || ra < 0 || rb < 0) throw_param("cmp_root_vs_root needs nonnegative operands");
    auto pow_side = [deg](const Rat& c, const Int& r) {
        Rat p = 1;
        for (unsigned i = 0; i < deg; ++i) p *= c;
        return p * Rat(r);
    };
    Rat lhs = pow_side(a, ra), rhs = pow_side(b, rb);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

} // namespace pachgap
