#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "linalg.hpp"

namespace wgb {

using Matrix = std::vector<Row>;

namespace detail {

inline void require_zero_dimensional(const GroebnerBasis& g)
{
    std::size_t n = g.ring->nvars();
    std::vector<bool> pure(n, false);
    for (const auto& p : g.polys) {
        const auto& m = p.lm();
        if (m.is_unit()) return;
        std::size_t v = m.pure_power_variable();
        if (v < n) pure[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!pure[i]) throw positive_dimension("no power of " + g.ring->names()[i] + " is a leading monomial");
}

} // namespace detail

/// Monomials outside the leading-term ideal, increasing in the basis order.
inline std::vector<Monomial> staircase(const GroebnerBasis& g)
{
    detail::require_zero_dimensional(g);
    std::size_t n = g.ring->nvars();
    auto lt = g.leading_monomials();
    auto standard = [&](const Monomial& m) {
        for (const auto& l : lt)
            if (l.divides(m)) return false;
        return true;
    };
    std::vector<Monomial> out;
    Monomial one(n);
    if (!standard(one)) return out;
    std::vector<Monomial> frontier{one};
    std::unordered_map<Monomial, bool, MonomialHash> seen{{one, true}};
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        out.push_back(m);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial x = m * Monomial::variable(n, i);
            if (seen.count(x) || !standard(x)) continue;
            seen.emplace(x, true);
            frontier.push_back(x);
        }
    }
    const auto& o = g.order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return o.less(a, b); });
    return out;
}

namespace detail {

/// Coordinates of NF(p) on the staircase.
inline Row coordinates(const Polynomial& nf, const std::unordered_map<Monomial, std::size_t, MonomialHash>& pos)
{
    Row v(pos.size(), 0);
    for (const auto& t : nf) v[pos.at(t.m)] = t.c;
    return v;
}

} // namespace detail

/// M_i[k][j] = coefficient of b_k in NF(x_i b_j).
inline std::vector<Matrix> multiplication_matrices(const GroebnerBasis& g)
{
    auto B = staircase(g);
    std::size_t n = g.ring->nvars(), D = B.size();
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t k = 0; k < D; ++k) pos.emplace(B[k], k);
    std::vector<Matrix> M(n, Matrix(D, Row(D, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            Monomial x = B[j] * Monomial::variable(n, i);
            auto it = pos.find(x);
            if (it != pos.end()) {
                M[i][it->second][j] = 1;
                continue;
            }
            auto v = detail::coordinates(reduce(Polynomial::monomial(g.ring, x), g.polys), pos);
            for (std::size_t k = 0; k < D; ++k) M[i][k][j] = v[k];
        }
    return M;
}

inline Matrix mat_mul(const Matrix& A, const Matrix& B, const PrimeField& F)
{
    std::size_t r = A.size(), c = B.empty() ? 0 : B[0].size(), k = B.size();
    Matrix C(r, Row(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (A[i][l])
                for (std::size_t j = 0; j < c; ++j) C[i][j] = F.add(C[i][j], F.mul(A[i][l], B[l][j]));
    return C;
}

/// Reduced lex basis (X_1 > ... > X_n) of a zero-dimensional ideal by linear algebra on normal forms.
inline GroebnerBasis fglm_lex(const GroebnerBasis& g)
{
    std::size_t n = g.ring->nvars();
    auto target = g.ring->with_order(MonomialOrder::lex(n));
    GroebnerBasis out;
    out.ring = target;
    out.reduced = true;
    if (g.is_unit_ideal()) {
        detail::require_zero_dimensional(g);
        out.polys = {Polynomial::constant(target, 1)};
        return out;
    }
    const auto& F = g.ring->field();
    auto M = multiplication_matrices(g);
    auto B = staircase(g);
    std::size_t D = B.size();
    std::uint64_t ops = 0;
    const auto& lex = target->order();

    Echelon E(F, D, true);
    std::vector<Monomial> basis;
    std::vector<Monomial> lead;
    std::set<Monomial, std::function<bool(const Monomial&, const Monomial&)>> queue(
        [&](const Monomial& a, const Monomial& b) { return lex.less(a, b); });

    Row one(D, 0);
    one[0] = 1; // B[0] is the unit monomial
    queue.insert(Monomial(n));
    std::unordered_map<Monomial, Row, MonomialHash> pending{{Monomial(n), one}};
    while (!queue.empty()) {
        Monomial t = *queue.begin();
        queue.erase(queue.begin());
        Row v = pending.at(t);
        pending.erase(t);
        bool skip = false;
        for (const auto& l : lead)
            if (l.divides(t)) skip = true;
        if (skip) continue;
        std::uint64_t before = E.ops();
        auto piv = E.insert(v);
        ops += E.ops() - before;
        if (!piv) {
            const Row& rel = E.relation();
            std::vector<Term> ts{{t, 1}};
            for (std::size_t j = 0; j < rel.size(); ++j)
                if (rel[j]) ts.push_back({basis[j], F.neg(rel[j])});
            out.polys.emplace_back(target, std::move(ts));
            lead.push_back(t);
            continue;
        }
        basis.push_back(t);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial x = t * Monomial::variable(n, i);
            if (pending.count(x)) continue;
            Row w(D, 0);
            for (std::size_t k = 0; k < D; ++k)
                if (v[k])
                    for (std::size_t r = 0; r < D; ++r)
                        if (M[i][r][k]) w[r] = F.add(w[r], F.mul(M[i][r][k], v[k]));
            ops += D * D;
            pending.emplace(x, std::move(w));
            queue.insert(x);
        }
    }
    out.stats.field_ops = ops;
    out.polys = reduce_polys(std::move(out.polys));
    return out;
}

} // namespace wgb
