#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include <boost/container/small_vector.hpp>

#include "error.hpp"
#include "weights.hpp"

namespace wgb {

using exp_t = std::uint32_t;

/// Dense exponent vector X^alpha.
class Monomial {
public:
    using storage = boost::container::small_vector<exp_t, 8>;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e_(n, 0) {}
    Monomial(std::initializer_list<exp_t> e) : e_(e) {}
    template <class It>
    Monomial(It first, It last) : e_(first, last)
    {
    }

    static Monomial unit(std::size_t n) { return Monomial(n); }
    static Monomial variable(std::size_t n, std::size_t i, exp_t power = 1)
    {
        Monomial m(n);
        m.e_[i] = power;
        return m;
    }

    std::size_t size() const noexcept { return e_.size(); }
    exp_t operator[](std::size_t i) const { return e_[i]; }
    exp_t& operator[](std::size_t i) { return e_[i]; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }

    bool is_unit() const
    {
        return std::all_of(e_.begin(), e_.end(), [](exp_t x) { return x == 0; });
    }
    long total_degree() const
    {
        long s = 0;
        for (exp_t x : e_) s += x;
        return s;
    }

    /// Index of the only variable of a pure power, or size() if this is not one.
    std::size_t pure_power_variable() const
    {
        std::size_t v = e_.size();
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (v != e_.size()) return e_.size();
            v = i;
        }
        return v;
    }

    bool divides(const Monomial& other) const
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }
    bool coprime_with(const Monomial& other) const
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        check_size(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    /// Exact quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const
    {
        check_size(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw error("monomial division is not exact");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        a.check_size(b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b)
    {
        a.check_size(b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    std::size_t hash() const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (exp_t x : e_) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    void check_size(const Monomial& o) const
    {
        if (o.size() != size())
            throw dimension_error("monomials in " + std::to_string(size()) + " and " +
                                  std::to_string(o.size()) + " variables");
    }

    storage e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// W-degree sum(w_i * alpha_i).
inline long wdeg(const Monomial& m, const WeightSystem& w)
{
    if (m.size() != w.size())
        throw dimension_error("monomial has " + std::to_string(m.size()) + " variables, weights have " +
                              std::to_string(w.size()));
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(w[i]) * m[i];
    return d;
}

} // namespace wgb
