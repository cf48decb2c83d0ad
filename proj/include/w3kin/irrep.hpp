#pragma once

#include "weight.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace w3 {

/* sl3 irreducible representation: highest weight plus the full
 * weight -> multiplicity table.  Immutable once built. */
struct Irrep {
    Weight highest;
    std::map<Weight, long> table;
    long dim = 0;
};

inline long weyl_dim(long l1, long l2) { return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2; }

inline long multiplicity(const Irrep& r, const Weight& w)
{
    auto it = r.table.find(w);
    return it == r.table.end() ? 0 : it->second;
}

namespace detail {

/* weight SET by recursive lowering: from w, subtract e_i up to a_i times
 * whenever the i-th coordinate is positive */
inline std::map<Weight, long> lowering_support(const Weight& hw)
{
    std::map<Weight, long> seen;
    std::vector<Weight> queue{hw};
    seen[hw] = 0;
    while (!queue.empty()) {
        Weight w = queue.back();
        queue.pop_back();
        for (int i = 0; i < 2; ++i) {
            const Weight& e = (i == 0) ? E1 : E2;
            long reach = to_long(i == 0 ? w.a1 : w.a2);
            Weight v = w;
            for (long k = 0; k < reach; ++k) {
                v = v - e;
                if (seen.emplace(v, 0).second)
                    queue.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace detail

/* Full weight system of the irrep with highest weight hw: lowering algorithm
 * for the support, Freudenthal recursion (processed by decreasing height, so
 * higher multiplicities are already known) for the multiplicities. */
inline Irrep compute_weight_system(const Weight& hw)
{
    if (!hw.dominant())
        throw std::invalid_argument("highest weight must have non-negative integer coordinates");

    Irrep rep;
    rep.highest = hw;
    rep.table = detail::lowering_support(hw);

    /* sort support by height defect: hw - w = d1*e1 + d2*e2, key d1+d2 */
    std::vector<Weight> order;
    order.reserve(rep.table.size());
    for (const auto& [w, m] : rep.table)
        order.push_back(w);
    /* hw - w = d1*e1 + d2*e2; since e1+e2 = (1,1) in omega-coords, the height
     * d1+d2 equals the omega-coordinate sum of hw - w */
    /* explicit Rational: the sum must not deduce to a lazy expression
     * referencing the dying local */
    auto height = [&](const Weight& w) -> Rational {
        Weight d = hw - w;
        return d.a1 + d.a2;
    };
    std::sort(order.begin(), order.end(),
              [&](const Weight& a, const Weight& b) { return height(a) < height(b); });

    const Rational norm_hw = inner(hw + RHO, hw + RHO);
    for (const Weight& w : order) {
        if (w == hw) {
            rep.table[w] = 1;
            continue;
        }
        Rational acc = 0;
        for (const Weight& a : POSITIVE_ROOTS) {
            Weight v = w + a;
            while (true) {
                auto it = rep.table.find(v);
                if (it == rep.table.end())
                    break;
                if (it->second == 0) // higher weights have smaller defect, already processed
                    throw std::logic_error("Freudenthal visited an unprocessed weight");
                acc += it->second * inner(v, a);
                v = v + a;
            }
        }
        Rational denom = norm_hw - inner(w + RHO, w + RHO);
        Rational m = 2 * acc / denom;
        if (!is_integer(m) || m <= 0)
            throw std::logic_error("Freudenthal produced a non-positive or fractional multiplicity");
        rep.table[w] = to_long(m);
    }

    for (const auto& [w, m] : rep.table)
        rep.dim += m;
    if (rep.dim != weyl_dim(to_long(hw.a1), to_long(hw.a2)))
        throw std::logic_error("weight system dimension disagrees with the Weyl formula");
    return rep;
}

/* memoized access; the registry only ever grows, entries are immutable */
inline const Irrep& weight_system(const Weight& hw)
{
    static std::map<Weight, std::unique_ptr<Irrep>> registry;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto it = registry.find(hw);
    if (it == registry.end())
        it = registry.emplace(hw, std::make_unique<Irrep>(compute_weight_system(hw))).first;
    return *it->second;
}

inline const Irrep& weight_system(long l1, long l2) { return weight_system(Weight{l1, l2}); }

inline int z3_charge(const Irrep& r) { return z3_charge(r.highest); }

/* [lambda] x [mu] decomposed into irreps: convolve the weight tables, then
 * peel the maximal remaining weight (always dominant) with its multiplicity */
inline std::map<Weight, long> tensor_decompose(const Weight& lam, const Weight& mu)
{
    const Irrep& a = weight_system(lam);
    const Irrep& b = weight_system(mu);
    std::map<Weight, long> conv;
    for (const auto& [wa, ma] : a.table)
        for (const auto& [wb, mb] : b.table)
            conv[wa + wb] += ma * mb;

    auto top = [&]() {
        auto best = conv.end();
        for (auto it = conv.begin(); it != conv.end(); ++it) {
            if (it->second == 0)
                continue;
            if (best == conv.end() || it->first.a1 + it->first.a2 > best->first.a1 + best->first.a2 ||
                (it->first.a1 + it->first.a2 == best->first.a1 + best->first.a2 && best->first < it->first))
                best = it;
        }
        return best;
    };

    std::map<Weight, long> out;
    for (auto it = top(); it != conv.end(); it = top()) {
        Weight hw = it->first;
        long n = it->second;
        if (!hw.dominant() || n < 0)
            throw std::logic_error("peeling reached a non-dominant or negative term");
        out[hw] += n;
        for (const auto& [w, m] : weight_system(hw).table)
            conv[w] -= n * m;
    }
    return out;
}

inline long tensor_multiplicity(const Weight& lam, const Weight& mu, const Weight& nu)
{
    auto dec = tensor_decompose(lam, mu);
    auto it = dec.find(nu);
    return it == dec.end() ? 0 : it->second;
}

/* the triality criterion: [lambda] contains {h1,h2,h3} iff q=1, {-h1,-h2,-h3}
 * iff q=2, and the zero weight iff q=0 */
inline bool contains_hj_triple(const Irrep& r, int sign)
{
    const Weight h1 = H_TRIPLE[0];
    bool has = multiplicity(r, sign >= 0 ? h1 : -h1) > 0;
    for (const Weight& h : H_TRIPLE)
        if ((multiplicity(r, sign >= 0 ? h : -h) > 0) != has)
            throw std::logic_error("h-triple membership is not Weyl-symmetric");
    return has;
}

inline bool contains_zero(const Irrep& r) { return multiplicity(r, Weight{0, 0}) > 0; }

} // namespace w3
