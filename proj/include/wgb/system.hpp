#pragma once

#include <optional>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "transform.hpp"

namespace wgb {

/// F = (f_1..f_m) over one ring, with optionally declared degrees.
struct PolySystem {
    RingPtr ring;
    std::vector<Polynomial> polys;
    std::optional<DegreeSystem> declared;

    PolySystem() = default;
    PolySystem(RingPtr r, std::vector<Polynomial> ps, std::optional<DegreeSystem> d = std::nullopt)
        : ring(std::move(r)), polys(std::move(ps)), declared(std::move(d))
    {
        for (auto& p : polys) {
            if (!p.ring()) throw error("polynomial without a ring");
            if (p.ring() != ring) p = p.in_ring(ring);
        }
    }

    std::size_t size() const noexcept { return polys.size(); }
    std::size_t nvars() const { return ring->nvars(); }
    const WeightSystem& weights() const { return ring->weights(); }
    const PrimeField& field() const { return ring->field(); }

    /// Declared degrees, else the W-degree of each polynomial.
    DegreeSystem degrees() const
    {
        if (declared) return *declared;
        std::vector<int> d;
        for (const auto& p : polys) d.push_back(static_cast<int>(std::max(0L, p.wdegree())));
        return DegreeSystem(d);
    }

    bool is_w_homogeneous() const
    {
        for (const auto& p : polys)
            if (!wgb::is_w_homogeneous(p)) return false;
        return true;
    }

    void require_w_homogeneous() const
    {
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (!wgb::is_w_homogeneous(polys[i]))
                throw not_homogeneous("polynomial " + std::to_string(i + 1) + " is not W-homogeneous for " +
                                      weights().to_string());
    }

    /// Same system re-sorted in another order on the same ring data.
    PolySystem with_order(const MonomialOrder& o) const
    {
        auto r = ring->with_order(o);
        std::vector<Polynomial> ps;
        for (const auto& p : polys) ps.push_back(p.in_ring(r));
        return PolySystem(r, std::move(ps), declared);
    }

    PolySystem prefix(std::size_t k) const
    {
        std::vector<Polynomial> ps(polys.begin(), polys.begin() + static_cast<long>(std::min(k, polys.size())));
        std::optional<DegreeSystem> d;
        if (declared) d = declared->prefix(std::min(k, declared->size()));
        return PolySystem(ring, std::move(ps), d);
    }

    friend bool operator==(const PolySystem& a, const PolySystem& b)
    {
        return *a.ring == *b.ring && a.polys == b.polys;
    }
};

} // namespace wgb
