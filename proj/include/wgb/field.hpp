#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace wgb {

using coeff_t = std::uint32_t;

inline constexpr std::uint64_t default_modulus = 65521;

constexpr bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// The prime field GF(p), p < 2^32. Elements are plain integers in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = default_modulus) : p_(p)
    {
        if (p >= (std::uint64_t{1} << 32))
            throw error("modulus " + std::to_string(p) + " does not fit in 32 bits");
        if (!is_prime(p)) throw error("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const noexcept { return p_; }

    coeff_t reduce(std::int64_t v) const noexcept
    {
        auto p = static_cast<std::int64_t>(p_);
        v %= p;
        if (v < 0) v += p;
        return static_cast<coeff_t>(v);
    }

    coeff_t add(coeff_t a, coeff_t b) const noexcept
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<coeff_t>(s >= p_ ? s - p_ : s);
    }
    coeff_t sub(coeff_t a, coeff_t b) const noexcept
    {
        return a >= b ? a - b : static_cast<coeff_t>(std::uint64_t{a} + p_ - b);
    }
    coeff_t neg(coeff_t a) const noexcept { return a == 0 ? 0 : static_cast<coeff_t>(p_ - a); }
    coeff_t mul(coeff_t a, coeff_t b) const noexcept
    {
        return static_cast<coeff_t>((std::uint64_t{a} * b) % p_);
    }
    /// a - b*c
    coeff_t sub_mul(coeff_t a, coeff_t b, coeff_t c) const noexcept { return sub(a, mul(b, c)); }

    coeff_t pow(coeff_t a, std::uint64_t e) const noexcept
    {
        std::uint64_t r = 1, b = a % p_;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<coeff_t>(r);
    }

    coeff_t inv(coeff_t a) const
    {
        if (a % p_ == 0) throw error("inverse of zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return reduce(t);
    }
    coeff_t div(coeff_t a, coeff_t b) const { return mul(a, inv(b)); }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t signed_value(coeff_t a) const noexcept
    {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                          : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

} // namespace wgb
