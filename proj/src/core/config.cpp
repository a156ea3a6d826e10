#include "core/config.hpp"

#include <cstdlib>
#include <limits>
#include <mutex>

#include "core/error.hpp"

namespace pachgap {

namespace {

Rat g_scale = 1;
Budgets g_budgets;
std::once_flag g_env_once;

long long scale_ll(long long v, const Rat& s) {
    Int scaled = (rat_num(s) * v) / rat_den(s);
    if (scaled < 1) return 1;
    if (scaled > Int(std::numeric_limits<long long>::max()))
        return std::numeric_limits<long long>::max();
    return scaled.convert_to<long long>();
}

void load_env() {
    const char* env = std::getenv("PACHGAP_BUDGET_SCALE");
    if (!env || !*env) return;
    Rat s;
    try {
        s = rat_parse(env);
    } catch (const Error&) {
        throw_param(std::string("PACHGAP_BUDGET_SCALE is not a rational: '") + env + "'");
    }
    if (s <= 0) throw_param("PACHGAP_BUDGET_SCALE must be positive");
    g_scale = s;
    Budgets b;
    b.subset_enum = scale_ll(b.subset_enum, s);
    b.partitions = scale_ll(b.partitions, s);
    b.chains = scale_ll(b.chains, s);
    b.cochain_bits = scale_ll(b.cochain_bits, s);
    b.flag_cap = scale_ll(b.flag_cap, s);
    b.verify_samples = scale_ll(b.verify_samples, s);
    b.lattice_vectors = scale_ll(b.lattice_vectors, s);
    b.lattice_elems = scale_ll(b.lattice_elems, s);
    g_budgets = b;
}

} // namespace

const Budgets& budgets() {
    std::call_once(g_env_once, load_env);
    return g_budgets;
}

void set_budgets(const Budgets& b) {
    std::call_once(g_env_once, load_env);
    g_budgets = b;
}

Rat budget_scale() {
    std::call_once(g_env_once, load_env);
    return g_scale;
}

} // namespace pachgap
