#pragma once

// Integral piecewise-linear functions on a simplicial fan, stored by their
// values on the primitive ray generators.

#include "kfan/fan.hpp"

#include <optional>

namespace kfan {

/// An element m of the dual lattice M.
struct LinearFunctional {
    IntVector coefficients;

    Integer operator()(std::span<const Integer> point) const { return dot(coefficients, point); }
    auto operator<=>(const LinearFunctional&) const = default;
};

class PLFunction {
public:
    PLFunction(FanPtr fan, IntVector ray_values);
    static PLFunction zero(FanPtr fan);
    /// The function with values <m, u_rho> on every ray.
    static PLFunction from_linear(FanPtr fan, const LinearFunctional& m);

    const FanPtr& fan() const { return fan_; }
    const IntVector& ray_values() const { return values_; }
    const Integer& value(RayId r) const { return values_.at(r); }
    bool is_zero() const;

    PLFunction operator+(const PLFunction& rhs) const;
    PLFunction operator-(const PLFunction& rhs) const;
    PLFunction operator-() const;
    PLFunction operator*(const Integer& k) const;

    bool operator==(const PLFunction& rhs) const;

private:
    FanPtr fan_;
    IntVector values_;
};

PLFunction courant(const FanPtr& fan, RayId ray);

/// The representative m_sigma: values of f on sigma's rays, zero on the
/// completion of sigma's rays to a lattice basis.
LinearFunctional restrict_linear(const PLFunction& f, const Cone& sigma);
LinearFunctional restrict_linear(const Fan& fan, std::span<const Integer> ray_values, const Cone& sigma);

std::optional<LinearFunctional> is_global_linear(const PLFunction& f);

Rational evaluate(const PLFunction& f, const RationalPoint& point);

/// f on sigma's rays, zero elsewhere.
PLFunction truncate_to_cone(const PLFunction& f, const Cone& sigma);

} // namespace kfan
