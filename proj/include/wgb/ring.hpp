#pragma once

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "order.hpp"
#include "weights.hpp"

namespace wgb {

/// GF(p)[X_1..X_n] with a grading W, a monomial order and variable names.
class Ring {
public:
    Ring(PrimeField field, WeightSystem weights, MonomialOrder order, std::vector<std::string> names = {})
        : field_(field), weights_(std::move(weights)), order_(std::move(order)), names_(std::move(names))
    {
        if (order_.size() != weights_.size())
            throw dimension_error("order has " + std::to_string(order_.size()) + " variables, weights have " +
                                  std::to_string(weights_.size()));
        if (names_.empty())
            for (std::size_t i = 0; i < weights_.size(); ++i) names_.push_back("x" + std::to_string(i + 1));
        if (names_.size() != weights_.size()) throw dimension_error("wrong number of variable names");
    }

    /// W-graded ring with the W-grevlex order.
    static std::shared_ptr<const Ring> make(WeightSystem w, std::uint64_t p = default_modulus,
                                            std::vector<std::string> names = {})
    {
        auto o = MonomialOrder::wgrevlex(w);
        return std::make_shared<const Ring>(PrimeField(p), std::move(w), std::move(o), std::move(names));
    }

    const PrimeField& field() const noexcept { return field_; }
    const WeightSystem& weights() const noexcept { return weights_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t nvars() const noexcept { return weights_.size(); }

    std::shared_ptr<const Ring> with_order(MonomialOrder o) const
    {
        return std::make_shared<const Ring>(field_, weights_, std::move(o), names_);
    }
    std::shared_ptr<const Ring> with_weights(WeightSystem w, MonomialOrder o) const
    {
        return std::make_shared<const Ring>(field_, std::move(w), std::move(o), names_);
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    PrimeField field_;
    WeightSystem weights_;
    MonomialOrder order_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace wgb
