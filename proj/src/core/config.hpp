#pragma once

#include <cstdint>

#include "core/rat.hpp"

namespace pachgap {

// Enumeration guards. Every exhaustive loop checks one of these before it
// starts; exceeding a guard is a Capacity error, never a silent truncation.
struct Budgets {
    long long subset_enum = 10'000'000;  // m-subset sweeps in expansion search
    long long partitions = 10'000;       // colour-class partitions per tau run
    long long chains = 1'000'000;        // order-complex faces
    long long cochain_bits = 25;         // max |X(k)| for exhaustive cochain loops
    long long flag_cap = 40'320;         // max permutations per face membership test (8!)
    long long verify_samples = 10'000;   // default sampled general-position families
    long long lattice_vectors = 1'000'000; // q^r cap for full lattice construction
    long long lattice_elems = 20'000;    // element cap (order matrix memory)
};

// Process-wide budgets: defaults, scaled by the PACHGAP_BUDGET_SCALE
// environment variable (a rational such as "3/2" or "2"), then overridable
// through the C API / CLI flags.
const Budgets& budgets();
void set_budgets(const Budgets& b);
Rat budget_scale();

} // namespace pachgap
