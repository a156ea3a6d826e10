#include "core/order_complex.hpp"

#include "core/config.hpp"
#include "core/error.hpp"

namespace pachgap {

long long OrderComplex::face_count() const {
    long long n = 0;
    for (const auto& level : faces) n += (long long)level.size();
    return n;
}

std::vector<std::vector<int>> OrderComplex::maximal_chains() const {
    std::vector<std::vector<int>> out;
    if (max_chain_len == 0) return out;
    for (const auto& ch : faces[max_chain_len - 1]) out.push_back(ch);
    return out;
}

OrderComplex order_complex(const GradedLattice& L) {
    OrderComplex oc;
    for (int x = 0; x < L.size(); ++x)
        if (x != L.bottom) oc.ground.push_back(x);

    const long long cap = budgets().chains;
    long long total = 0;
    oc.faces.assign(size_t(std::max(1, L.top_rank)), {});

    // DFS over strictly increasing chains; extensions have strictly larger rank
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        chain.push_back(last);
        size_t k = chain.size() - 1;
        if (k >= oc.faces.size()) oc.faces.resize(k + 1);
        oc.faces[k].push_back(chain);
        if (++total > cap) throw_capacity("order complex exceeds the chain budget");
        const Bitset& up = L.up_set(last);
        for (size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y))
            if (int(y) != last) self(self, int(y));
        chain.pop_back();
    };
    for (int x : oc.ground) extend(extend, x);

    while (!oc.faces.empty() && oc.faces.back().empty()) oc.faces.pop_back();
    oc.max_chain_len = int(oc.faces.size());
    return oc;
}

std::vector<std::vector<int>> chains_below(const GradedLattice& L, const OrderComplex& oc, int x) {
    std::vector<std::vector<int>> out;
    for (const auto& level : oc.faces)
        for (const auto& ch : level) {
            bool ok = true;
            for (int y : ch)
                if (!L.leq(y, x)) { ok = false; break; }
            if (ok) out.push_back(ch);
        }
    return out;
}

bool is_cone_with_apex(const OrderComplex& oc, const GradedLattice& L, int apex) {
    for (const auto& level : oc.faces)
        for (const auto& ch : level) {
            if (ch.back() == apex) continue;
            for (int y : ch)
                if (!L.leq(y, apex)) return false;
        }
    return true;
}

} // namespace pachgap
