#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace wgb {

/// A grading W = (w_1, ..., w_n) of K[X_1, ..., X_n]; every weight is positive.
class WeightSystem {
public:
    WeightSystem() = default;
    WeightSystem(std::initializer_list<int> w) : WeightSystem(std::vector<int>(w)) {}
    explicit WeightSystem(std::vector<int> w) : w_(std::move(w))
    {
        if (w_.empty()) throw dimension_error("a weight system needs at least one variable");
        for (int x : w_)
            if (x < 1) throw error("weights must be positive, got " + std::to_string(x));
    }

    /// The trivial grading (1, ..., 1).
    static WeightSystem ones(std::size_t n) { return WeightSystem(std::vector<int>(n, 1)); }

    std::size_t size() const noexcept { return w_.size(); }
    int operator[](std::size_t i) const { return w_[i]; }
    const std::vector<int>& values() const noexcept { return w_; }
    auto begin() const noexcept { return w_.begin(); }
    auto end() const noexcept { return w_.end(); }

    long sum() const { return std::accumulate(w_.begin(), w_.end(), 0L); }
    long long product() const
    {
        return std::accumulate(w_.begin(), w_.end(), 1LL, std::multiplies<>());
    }
    int max() const { return *std::max_element(w_.begin(), w_.end()); }
    int min() const { return *std::min_element(w_.begin(), w_.end()); }
    int gcd() const
    {
        int g = 0;
        for (int x : w_) g = std::gcd(g, x);
        return g;
    }
    bool is_trivial() const
    {
        return std::all_of(w_.begin(), w_.end(), [](int x) { return x == 1; });
    }
    bool has_unit_weight() const
    {
        return std::any_of(w_.begin(), w_.end(), [](int x) { return x == 1; });
    }

    WeightSystem reversed() const { return WeightSystem(std::vector<int>(w_.rbegin(), w_.rend())); }
    /// Weights of the variables [first, first+count).
    WeightSystem slice(std::size_t first, std::size_t count) const
    {
        return WeightSystem(std::vector<int>(w_.begin() + static_cast<long>(first),
                                             w_.begin() + static_cast<long>(first + count)));
    }
    WeightSystem appended(int w) const
    {
        auto v = w_;
        v.push_back(w);
        return WeightSystem(std::move(v));
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<int> w_;
};

/// W-degrees D = (d_1, ..., d_m) of a sequence of polynomials. May be empty.
class DegreeSystem {
public:
    DegreeSystem() = default;
    DegreeSystem(std::initializer_list<int> d) : DegreeSystem(std::vector<int>(d)) {}
    explicit DegreeSystem(std::vector<int> d) : d_(std::move(d))
    {
        for (int x : d_)
            if (x < 0) throw error("degrees must be non-negative, got " + std::to_string(x));
    }

    std::size_t size() const noexcept { return d_.size(); }
    bool empty() const noexcept { return d_.empty(); }
    int operator[](std::size_t i) const { return d_[i]; }
    const std::vector<int>& values() const noexcept { return d_; }
    auto begin() const noexcept { return d_.begin(); }
    auto end() const noexcept { return d_.end(); }

    long sum() const { return std::accumulate(d_.begin(), d_.end(), 0L); }
    int max() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

    DegreeSystem prefix(std::size_t k) const
    {
        return DegreeSystem(std::vector<int>(d_.begin(), d_.begin() + static_cast<long>(k)));
    }
    DegreeSystem appended(int d) const
    {
        auto v = d_;
        v.push_back(d);
        return DegreeSystem(std::move(v));
    }
    DegreeSystem sorted() const
    {
        auto v = d_;
        std::sort(v.begin(), v.end());
        return DegreeSystem(std::move(v));
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < d_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const DegreeSystem&, const DegreeSystem&) = default;

private:
    std::vector<int> d_;
};

} // namespace wgb
