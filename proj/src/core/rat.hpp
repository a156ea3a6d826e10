#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pachgap {

// All comparisons in the workbench are exact: unbounded integers and
// rationals, and d-th roots compared by raising both sides to the d-th power.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical serialization: always "p/q", q > 0, gcd(p, q) = 1.
std::string rat_str(const Rat& r);
std::string int_str(const Int& v);

// Accepts "p/q" or a bare integer. Throws Param on anything else.
Rat rat_parse(const std::string& s);
Int int_parse(const std::string& s);

Int ipow(Int base, unsigned exp);

// floor(a^(1/deg)) for a >= 0, deg >= 1.
Int iroot_floor(const Int& a, unsigned deg);

// True iff a is a perfect deg-th power; then root is set.
bool perfect_root(const Int& a, unsigned deg, Int& root);

// Sign of x - coeff * radicand^(1/deg), with coeff >= 0 and radicand >= 0.
// Exact: both sides are raised to the deg-th power.
int cmp_rat_vs_root(const Rat& x, const Rat& coeff, const Int& radicand, unsigned deg);

// Sign of a*ra^(1/deg) - b*rb^(1/deg), coefficients and radicands >= 0.
int cmp_root_vs_root(const Rat& a, const Int& ra, const Rat& b, const Int& rb, unsigned deg);

inline int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

} // namespace pachgap
