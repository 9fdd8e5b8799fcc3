#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "system.hpp"
#include "transform.hpp"

namespace wgb {

struct GbStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t reductions_to_zero = 0;
    long observed_dreg = -1;
    std::size_t max_matrix_rows = 0;
    std::size_t max_matrix_cols = 0;
    std::uint64_t field_ops = 0;
    std::string stop_reason;
};

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> polys;
    bool reduced = false;
    GbStats stats;

    const MonomialOrder& order() const { return ring->order(); }
    std::size_t size() const noexcept { return polys.size(); }
    std::vector<Monomial> leading_monomials() const
    {
        std::vector<Monomial> out;
        for (const auto& g : polys) out.push_back(g.lm());
        return out;
    }
    bool is_unit_ideal() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
};

/// Interreduces until no term of an element is divisible by another leading monomial; monic, sorted by increasing leading monomial.
inline std::vector<Polynomial> reduce_polys(std::vector<Polynomial> G)
{
    G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& g) { return g.is_zero(); }), G.end());
    if (G.empty()) return G;
    const auto& o = G[0].ring()->order();
    auto by_lm = [&](const Polynomial& a, const Polynomial& b) { return o.less(a.lm(), b.lm()); };
    std::stable_sort(G.begin(), G.end(), by_lm);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            Polynomial h = reduce(G[i], others);
            if (h == G[i]) continue;
            changed = true;
            if (h.is_zero()) {
                G.erase(G.begin() + static_cast<long>(i));
                --i;
            } else {
                G[i] = h;
            }
        }
    }
    for (auto& g : G) g = g.monic();
    std::sort(G.begin(), G.end(), by_lm);
    return G;
}

inline GroebnerBasis reduce_basis(GroebnerBasis g)
{
    g.polys = reduce_polys(std::move(g.polys));
    g.reduced = true;
    return g;
}

namespace detail {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long deg;
};

/// Gebauer-Moeller update for a new element h (index hi) against the active set.
inline void gm_update(const std::vector<Polynomial>& P, std::vector<bool>& active, std::vector<Pair>& B,
                      std::size_t hi, const WeightSystem& W, GbStats& st)
{
    const Monomial& lh = P[hi].lm();
    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g)
        if (active[g]) {
            Monomial L = lcm(lh, P[g].lm());
            C.push_back({g, hi, L, wdeg(L, W)});
        }
    st.pairs_considered += C.size();
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
        const Monomial& lg = P[C[a].i].lm();
        bool keep = lh.coprime_with(lg);
        if (!keep) {
            keep = true;
            for (std::size_t b = 0; b < C.size() && keep; ++b)
                if (b != a && C[b].lcm.divides(C[a].lcm)) {
                    // among equal lcms keep the first, among proper divisors drop a
                    if (!(C[b].lcm == C[a].lcm) || b < a) keep = false;
                }
        }
        if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> E;
    for (auto& p : D)
        if (!lh.coprime_with(P[p.i].lm())) E.push_back(std::move(p));
    std::vector<Pair> NB;
    for (auto& p : B) {
        bool drop = lh.divides(p.lcm) && !(lcm(P[p.i].lm(), lh) == p.lcm) && !(lcm(P[p.j].lm(), lh) == p.lcm);
        if (!drop) NB.push_back(std::move(p));
    }
    for (auto& p : E) NB.push_back(std::move(p));
    B = std::move(NB);
    for (std::size_t g = 0; g < hi; ++g)
        if (active[g] && lh.divides(P[g].lm())) active[g] = false;
    active.push_back(true);
}

inline std::vector<Polynomial> active_polys(const std::vector<Polynomial>& P, const std::vector<bool>& active)
{
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < P.size(); ++k)
        if (active[k]) out.push_back(P[k]);
    return out;
}

} // namespace detail

/// Buchberger with normal selection by lowest W-degree of the lcm and the Gebauer-Moeller criteria.
inline GroebnerBasis buchberger(const PolySystem& sys)
{
    GroebnerBasis out;
    out.ring = sys.ring;
    const auto& W = sys.weights();
    const auto& o = sys.ring->order();
    std::vector<Polynomial> P;
    std::vector<bool> active;
    std::vector<detail::Pair> B;
    for (const auto& f : sys.polys) {
        if (f.is_zero()) continue;
        Polynomial h = reduce(f, detail::active_polys(P, active));
        if (h.is_zero()) continue;
        P.push_back(h.monic());
        detail::gm_update(P, active, B, P.size() - 1, W, out.stats);
    }
    auto before = [&](const detail::Pair& a, const detail::Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = o.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    while (!B.empty()) {
        auto it = std::min_element(B.begin(), B.end(), before);
        detail::Pair p = *it;
        B.erase(it);
        ++out.stats.pairs_reduced;
        out.stats.observed_dreg = std::max(out.stats.observed_dreg, p.deg);
        Polynomial h = reduce(spoly(P[p.i], P[p.j]), detail::active_polys(P, active));
        if (h.is_zero()) {
            ++out.stats.reductions_to_zero;
            continue;
        }
        P.push_back(h.monic());
        detail::gm_update(P, active, B, P.size() - 1, W, out.stats);
    }
    out.polys = detail::active_polys(P, active);
    out.stats.stop_reason = "pairs exhausted";
    return reduce_basis(std::move(out));
}

/// Every S-polynomial of basis pairs reduces to zero.
inline bool satisfies_buchberger_criterion(const std::vector<Polynomial>& G)
{
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!reduce(spoly(G[i], G[j]), G).is_zero()) return false;
    return true;
}

inline bool is_reduced_basis(const std::vector<Polynomial>& G)
{
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero() || G[i].lc() != 1) return false;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (i != j)
                for (const auto& t : G[i])
                    if (G[j].lm().divides(t.m)) return false;
    }
    return true;
}

/// Every f reduces to zero modulo G.
inline bool generates_inputs(const std::vector<Polynomial>& G, const std::vector<Polynomial>& F)
{
    for (const auto& f : F)
        if (!reduce(f, G).is_zero()) return false;
    return true;
}

/// Reduced grevlex basis of hom_W(F), pulled back to the W-grevlex ring.
inline GroebnerBasis gb_via_homw(const PolySystem& sys)
{
    sys.require_w_homogeneous();
    const auto& W = sys.weights();
    auto img = hom_w_ring(*sys.ring);
    std::vector<Polynomial> mapped;
    for (const auto& f : sys.polys) mapped.push_back(hom_w(f, W, img));
    GroebnerBasis h = buchberger(PolySystem(img, std::move(mapped)));
    auto target = sys.ring->with_order(MonomialOrder::wgrevlex(W));
    GroebnerBasis out;
    out.ring = target;
    out.stats = h.stats;
    for (const auto& g : h.polys) {
        try {
            out.polys.push_back(hom_w_inverse(g, W, target));
        } catch (const not_in_image& e) {
            throw consistency_error(std::string("basis element outside the image of hom_W: ") + e.what());
        }
    }
    const auto& o = target->order();
    std::sort(out.polys.begin(), out.polys.end(), [&](const Polynomial& a, const Polynomial& b) { return o.less(a.lm(), b.lm()); });
    out.reduced = true;
    return out;
}

struct EliminationResult {
    GroebnerBasis basis;
    std::vector<Polynomial> eliminated;
};

/// Basis under the block order (first k variables) >> (rest), plus the elements free of the first k variables.
inline EliminationResult elimination_gb(const PolySystem& sys, std::size_t k)
{
    if (k >= sys.nvars()) throw error("cannot eliminate " + std::to_string(k) + " of " + std::to_string(sys.nvars()) + " variables");
    const auto& W = sys.weights();
    auto o = k == 0 ? MonomialOrder::wgrevlex(W) : MonomialOrder::block(W, k);
    EliminationResult r{buchberger(sys.with_order(o)), {}};
    for (const auto& g : r.basis.polys) {
        bool free = true;
        for (const auto& t : g)
            for (std::size_t i = 0; i < k && free; ++i)
                if (t.m[i]) free = false;
        if (free) r.eliminated.push_back(g);
    }
    return r;
}

} // namespace wgb
