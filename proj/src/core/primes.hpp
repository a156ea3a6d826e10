#pragma once

#include "core/rat.hpp"

namespace pachgap {

// The admissible prime window for parameters (n, d):
//   2d <= ((d+1)n)^(1/d) <= q <= 2((d+1)n)^(1/d).
// The window ends are irrational in general, so they are carried as exact
// radicands: lower = lower_pow^(1/d), upper = upper_pow^(1/d).
struct PrimeWindow {
    long long n = 0;
    int d = 0;
    Int lower_pow; // (d+1)n
    Int upper_pow; // 2^d (d+1)n
    long long q = 0;
};

// Smallest prime in the window. Precondition: n >= (2d)^d (which forces the
// window lower end >= 2d and, via Bertrand, guarantees a prime exists).
PrimeWindow find_prime_q(long long n, int d);

// Exact membership test against the window bounds (q^d vs the radicands).
bool prime_in_window(long long q, const PrimeWindow& w);

} // namespace pachgap
