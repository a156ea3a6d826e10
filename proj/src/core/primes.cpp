#include "core/primes.hpp"

#include "core/error.hpp"
#include "core/fq.hpp"

namespace pachgap {

bool prime_in_window(long long q, const PrimeWindow& w) {
    if (!is_prime_ll(q)) return false;
    Int qd = ipow(Int(q), unsigned(w.d));
    return qd >= w.lower_pow && qd <= w.upper_pow;
}

PrimeWindow find_prime_q(long long n, int d) {
    if (d < 1) throw_param("find_prime_q needs d >= 1");
    if (n < 1) throw_param("find_prime_q needs n >= 1");
    Int threshold = ipow(Int(2 * d), unsigned(d));
    if (Int(n) < threshold)
        throw_precondition("find_prime_q needs n >= (2d)^d = " + threshold.str() +
                           ", got n = " + std::to_string(n));
    PrimeWindow w;
    w.n = n;
    w.d = d;
    w.lower_pow = Int(d + 1) * n;
    w.upper_pow = ipow(Int(2), unsigned(d)) * w.lower_pow;
    // smallest prime q with q^d >= lower_pow; Bertrand puts it inside the window
    long long q = iroot_floor(w.lower_pow, unsigned(d)).convert_to<long long>();
    while (ipow(Int(q), unsigned(d)) < w.lower_pow || !is_prime_ll(q)) ++q;
    if (!prime_in_window(q, w))
        throw_internal("no prime found in the admissible window");
    if (q < 2 * d) throw_internal("window prime below 2d");
    w.q = q;
    return w;
}

} // namespace pachgap
