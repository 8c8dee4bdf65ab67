#include "kfan/pwl.hpp"

#include <stdexcept>

namespace kfan {

PLFunction::PLFunction(FanPtr fan, IntVector ray_values) : fan_(std::move(fan)), values_(std::move(ray_values))
{
    if (!fan_)
        throw std::invalid_argument("PLFunction needs a fan");
    if (values_.size() != fan_->num_rays())
        throw std::invalid_argument("PLFunction: one value per ray expected");
}

PLFunction PLFunction::zero(FanPtr fan)
{
    const std::size_t n = fan->num_rays();
    return PLFunction(std::move(fan), IntVector(n));
}

PLFunction PLFunction::from_linear(FanPtr fan, const LinearFunctional& m)
{
    IntVector v;
    v.reserve(fan->num_rays());
    for (const auto& u : fan->rays())
        v.push_back(m(u));
    return PLFunction(std::move(fan), std::move(v));
}

bool PLFunction::is_zero() const
{
    for (const auto& x : values_)
        if (x != 0)
            return false;
    return true;
}

namespace {

void require_same_fan(const PLFunction& a, const PLFunction& b)
{
    if (a.fan() != b.fan() && a.fan()->rays() != b.fan()->rays())
        throw std::invalid_argument("PL functions live on different fans");
}

} // namespace

PLFunction PLFunction::operator+(const PLFunction& rhs) const
{
    require_same_fan(*this, rhs);
    IntVector v = values_;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += rhs.values_[i];
    return PLFunction(fan_, std::move(v));
}

PLFunction PLFunction::operator-(const PLFunction& rhs) const
{
    return *this + (-rhs);
}

PLFunction PLFunction::operator-() const
{
    IntVector v = values_;
    for (auto& x : v)
        x = -x;
    return PLFunction(fan_, std::move(v));
}

PLFunction PLFunction::operator*(const Integer& k) const
{
    IntVector v = values_;
    for (auto& x : v)
        x *= k;
    return PLFunction(fan_, std::move(v));
}

bool PLFunction::operator==(const PLFunction& rhs) const
{
    return (fan_ == rhs.fan_ || fan_->rays() == rhs.fan_->rays()) && values_ == rhs.values_;
}

PLFunction courant(const FanPtr& fan, RayId ray)
{
    if (ray >= fan->num_rays())
        throw std::invalid_argument("courant: unknown ray " + std::to_string(ray));
    IntVector v(fan->num_rays());
    v[ray] = 1;
    return PLFunction(fan, std::move(v));
}

LinearFunctional restrict_linear(const Fan& fan, std::span<const Integer> ray_values, const Cone& sigma)
{
    if (!fan.contains(sigma))
        throw std::invalid_argument("restrict_linear: cone " + to_string(sigma) + " is not in the fan");
    const IntMatrix& rows = fan.dual_rows(sigma);
    IntVector m(fan.rank());
    for (std::size_t i = 0; i < sigma.dim(); ++i) {
        const Integer& v = ray_values[sigma.rays()[i]];
        if (v == 0)
            continue;
        for (std::size_t j = 0; j < m.size(); ++j)
            m[j] += v * rows(i, j);
    }
    return {std::move(m)};
}

LinearFunctional restrict_linear(const PLFunction& f, const Cone& sigma)
{
    return restrict_linear(*f.fan(), f.ray_values(), sigma);
}

std::optional<LinearFunctional> is_global_linear(const PLFunction& f)
{
    const Fan& fan = *f.fan();
    auto a = IntMatrix::from_rows(fan.rays(), fan.rank());
    auto m = solve_integer_system(a, f.ray_values());
    if (!m)
        return std::nullopt;
    return LinearFunctional{std::move(*m)};
}

Rational evaluate(const PLFunction& f, const RationalPoint& point)
{
    auto cone = find_containing_cone(*f.fan(), point);
    if (!cone)
        throw std::invalid_argument("evaluate: point outside the support of the fan");
    auto m = restrict_linear(f, *cone);
    Rational value(dot(m.coefficients, point.numerators), point.denominator);
    value.canonicalize();
    return value;
}

PLFunction truncate_to_cone(const PLFunction& f, const Cone& sigma)
{
    if (!f.fan()->contains(sigma))
        throw std::invalid_argument("truncate_to_cone: cone " + to_string(sigma) + " is not in the fan");
    IntVector v(f.ray_values().size());
    for (RayId r : sigma.rays())
        v[r] = f.value(r);
    return PLFunction(f.fan(), std::move(v));
}

} // namespace kfan
