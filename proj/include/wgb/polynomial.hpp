#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "ring.hpp"

namespace wgb {

struct Term {
    Monomial m;
    coeff_t c;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly decreasing under the ring order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    /// Normalizes: sorts, merges equal monomials and drops zeros. Coefficients must be reduced.
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), t_(std::move(terms))
    {
        normalize();
    }

    static Polynomial constant(RingPtr r, std::int64_t c)
    {
        auto v = r->field().reduce(c);
        Monomial one(r->nvars());
        return Polynomial(r, {{one, v}});
    }
    static Polynomial variable(RingPtr r, std::size_t i, exp_t power = 1)
    {
        if (i >= r->nvars()) throw dimension_error("variable index " + std::to_string(i) + " out of range");
        return Polynomial(r, {{Monomial::variable(r->nvars(), i, power), 1}});
    }
    static Polynomial monomial(RingPtr r, Monomial m, coeff_t c = 1)
    {
        if (m.size() != r->nvars()) throw dimension_error("monomial size does not match the ring");
        return Polynomial(r, {{std::move(m), c % static_cast<coeff_t>(r->field().modulus())}});
    }
    /// Wraps already sorted, nonzero terms without re-normalizing.
    static Polynomial from_sorted(RingPtr r, std::vector<Term> terms)
    {
        Polynomial p(std::move(r));
        p.t_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const PrimeField& field() const { return ring_->field(); }
    std::size_t nvars() const { return ring_->nvars(); }

    bool is_zero() const noexcept { return t_.empty(); }
    bool is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_[0].m.is_unit()); }
    std::size_t size() const noexcept { return t_.size(); }
    const std::vector<Term>& terms() const noexcept { return t_; }
    auto begin() const noexcept { return t_.begin(); }
    auto end() const noexcept { return t_.end(); }

    const Monomial& lm() const
    {
        if (t_.empty()) throw error("leading monomial of the zero polynomial");
        return t_.front().m;
    }
    coeff_t lc() const
    {
        if (t_.empty()) throw error("leading coefficient of the zero polynomial");
        return t_.front().c;
    }

    /// Largest W-degree of a term under the ring grading (-1 for zero).
    long wdegree() const
    {
        long d = -1;
        for (const auto& t : t_) d = std::max(d, wdeg(t.m, ring_->weights()));
        return d;
    }
    long total_degree() const
    {
        long d = -1;
        for (const auto& t : t_) d = std::max(d, t.m.total_degree());
        return d;
    }

    coeff_t coefficient(const Monomial& m) const
    {
        for (const auto& t : t_)
            if (t.m == m) return t.c;
        return 0;
    }

    Polynomial monic() const
    {
        if (t_.empty() || t_[0].c == 1) return *this;
        return scaled(field().inv(t_[0].c));
    }

    Polynomial scaled(coeff_t c) const
    {
        const auto& F = field();
        c %= static_cast<coeff_t>(F.modulus());
        if (c == 0) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& t : r.t_) t.c = F.mul(t.c, c);
        return r;
    }

    /// c * m * this
    Polynomial mul_term(const Monomial& m, coeff_t c = 1) const
    {
        const auto& F = field();
        if (c == 0) return Polynomial(ring_);
        Polynomial r(ring_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.m * m, F.mul(t.c, c)});
        return r;
    }

    Polynomial operator-() const { return scaled(field().neg(1)); }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g)
    {
        f.check_compatible(g);
        return f.axpy(g, 1, nullptr);
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g)
    {
        f.check_compatible(g);
        return f.axpy(g, f.field().neg(1), nullptr);
    }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g)
    {
        f.check_compatible(g);
        Polynomial r(f.ring_);
        if (f.is_zero() || g.is_zero()) return r;
        std::vector<Term> acc;
        acc.reserve(f.size() * g.size());
        const auto& F = f.field();
        for (const auto& a : f.t_)
            for (const auto& b : g.t_) acc.push_back({a.m * b.m, F.mul(a.c, b.c)});
        return Polynomial(f.ring_, std::move(acc));
    }
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    Polynomial pow(unsigned e) const
    {
        Polynomial r = constant(ring_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// this + c * m * g, with m = nullptr meaning the unit monomial. Same ring assumed.
    Polynomial axpy(const Polynomial& g, coeff_t c, const Monomial* m) const
    {
        const auto& F = field();
        const auto& o = ring_->order();
        Polynomial r(ring_);
        r.t_.reserve(t_.size() + g.t_.size());
        std::size_t i = 0, j = 0;
        Monomial gm;
        while (i < t_.size() || j < g.t_.size()) {
            if (j < g.t_.size()) gm = m ? g.t_[j].m * *m : g.t_[j].m;
            int cmp = i == t_.size() ? -1 : j == g.t_.size() ? 1 : o.compare(t_[i].m, gm);
            if (cmp > 0) {
                r.t_.push_back(t_[i++]);
            } else if (cmp < 0) {
                coeff_t v = F.mul(g.t_[j++].c, c);
                if (v) r.t_.push_back({gm, v});
            } else {
                coeff_t v = F.add(t_[i].c, F.mul(g.t_[j].c, c));
                if (v) r.t_.push_back({gm, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Same polynomial re-sorted for a ring with the same field and variable count.
    Polynomial in_ring(RingPtr r) const
    {
        if (r->nvars() != nvars()) throw dimension_error("cannot move a polynomial to a ring of different size");
        if (!(r->field() == field())) throw field_mismatch("cannot move a polynomial to a different field");
        return Polynomial(std::move(r), t_);
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.t_ == g.t_; }

    std::string to_string() const
    {
        if (t_.empty()) return "0";
        const auto& names = ring_->names();
        std::string s;
        for (std::size_t k = 0; k < t_.size(); ++k) {
            std::int64_t c = field().signed_value(t_[k].c);
            bool unit = t_[k].m.is_unit();
            if (k == 0) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            std::int64_t a = c < 0 ? -c : c;
            bool first = true;
            if (a != 1 || unit) {
                s += std::to_string(a);
                first = false;
            }
            for (std::size_t i = 0; i < t_[k].m.size(); ++i) {
                exp_t e = t_[k].m[i];
                if (!e) continue;
                if (!first) s += "*";
                s += names[i];
                if (e > 1) s += "^" + std::to_string(e);
                first = false;
            }
        }
        return s;
    }

    void check_compatible(const Polynomial& g) const
    {
        if (ring_ == g.ring_) return;
        if (!ring_ || !g.ring_) throw error("polynomial without a ring");
        if (!(ring_->field() == g.ring_->field()))
            throw field_mismatch("GF(" + std::to_string(ring_->field().modulus()) + ") vs GF(" +
                                 std::to_string(g.ring_->field().modulus()) + ")");
        if (ring_->nvars() != g.ring_->nvars())
            throw dimension_error("polynomials in " + std::to_string(nvars()) + " and " +
                                  std::to_string(g.nvars()) + " variables");
        if (!(ring_->order() == g.ring_->order())) throw error("polynomials carry different monomial orders");
    }

private:
    void normalize()
    {
        if (!ring_) throw error("polynomial without a ring");
        const auto& o = ring_->order();
        const auto& F = ring_->field();
        for (const auto& t : t_)
            if (t.m.size() != ring_->nvars()) throw dimension_error("term size does not match the ring");
        std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            coeff_t c = static_cast<coeff_t>(t.c % F.modulus());
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = F.add(out.back().c, c);
                if (out.back().c == 0) out.pop_back();
            } else if (c) {
                out.push_back({std::move(t.m), c});
            }
        }
        t_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> t_;
};

/// Full normal form of f modulo G: no term of the result is divisible by any LM(g).
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G)
{
    if (f.is_zero() || G.empty()) return f;
    for (const auto& g : G) f.check_compatible(g);
    const auto& F = f.field();
    const auto& o = f.ring()->order();
    std::vector<Term> rem, p = f.terms(), next;
    std::size_t pos = 0;
    while (pos < p.size()) {
        const Term& lead = p[pos];
        const Polynomial* div = nullptr;
        for (const auto& g : G)
            if (!g.is_zero() && g.lm().divides(lead.m)) {
                div = &g;
                break;
            }
        if (!div) {
            rem.push_back(lead);
            ++pos;
            continue;
        }
        Monomial q = lead.m / div->lm();
        coeff_t c = F.neg(F.div(lead.c, div->lc()));
        // p[pos..] + c*q*div, the leading terms cancel
        next.clear();
        const auto& gt = div->terms();
        std::size_t i = pos + 1, j = 1;
        Monomial gm;
        while (i < p.size() || j < gt.size()) {
            if (j < gt.size()) gm = gt[j].m * q;
            int cmp = i == p.size() ? -1 : j == gt.size() ? 1 : o.compare(p[i].m, gm);
            if (cmp > 0) {
                next.push_back(std::move(p[i++]));
            } else if (cmp < 0) {
                next.push_back({gm, F.mul(gt[j++].c, c)});
            } else {
                coeff_t v = F.add(p[i].c, F.mul(gt[j].c, c));
                if (v) next.push_back({gm, v});
                ++i;
                ++j;
            }
        }
        std::swap(p, next);
        pos = 0;
    }
    return Polynomial::from_sorted(f.ring(), std::move(rem));
}

/// S-polynomial of the monic normalizations: (L/LM(f)) f/lc(f) - (L/LM(g)) g/lc(g).
inline Polynomial spoly(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw error("S-polynomial of a zero polynomial");
    f.check_compatible(g);
    Monomial L = lcm(f.lm(), g.lm());
    Monomial a = L / f.lm(), b = L / g.lm();
    const auto& F = f.field();
    Polynomial fa = f.mul_term(a, F.inv(f.lc()));
    return fa.axpy(g, F.neg(F.inv(g.lc())), &b);
}

} // namespace wgb
