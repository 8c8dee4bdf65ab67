#include "kfan/pe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kfan {

PEExpression::PEExpression(FanPtr fan) : fan_(std::move(fan))
{
    if (!fan_)
        throw std::invalid_argument("PEExpression needs a fan");
}

PEExpression PEExpression::constant(FanPtr fan, const Integer& c)
{
    PEExpression e(std::move(fan));
    e.add_term(IntVector(e.fan_->num_rays()), c);
    return e;
}

PEExpression PEExpression::exponential(const PLFunction& f, const Integer& c)
{
    PEExpression e(f.fan());
    e.add_term(f.ray_values(), c);
    return e;
}

void PEExpression::add_term(const IntVector& exponent, const Integer& c)
{
    if (exponent.size() != fan_->num_rays())
        throw std::invalid_argument("PEExpression: exponent needs one value per ray");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void PEExpression::require_same_fan(const PEExpression& rhs) const
{
    if (fan_ != rhs.fan_ && fan_->rays() != rhs.fan_->rays())
        throw std::invalid_argument("PE expressions live on different fans");
}

PEExpression PEExpression::operator+(const PEExpression& rhs) const
{
    require_same_fan(rhs);
    PEExpression out = *this;
    for (const auto& [f, c] : rhs.terms_)
        out.add_term(f, c);
    return out;
}

PEExpression PEExpression::operator-(const PEExpression& rhs) const
{
    return *this + (-rhs);
}

PEExpression PEExpression::operator-() const
{
    PEExpression out = *this;
    for (auto& [f, c] : out.terms_)
        c = -c;
    return out;
}

PEExpression PEExpression::operator*(const PEExpression& rhs) const
{
    require_same_fan(rhs);
    PEExpression out(fan_);
    for (const auto& [f, a] : terms_) {
        for (const auto& [g, b] : rhs.terms_) {
            IntVector h = f;
            for (std::size_t i = 0; i < h.size(); ++i)
                h[i] += g[i];
            out.add_term(h, a * b);
        }
    }
    return out;
}

PEExpression PEExpression::operator*(const Integer& c) const
{
    PEExpression out(fan_);
    for (const auto& [f, a] : terms_)
        out.add_term(f, a * c);
    return out;
}

PEExpression PEExpression::pow(unsigned k) const
{
    PEExpression out = constant(fan_, 1);
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

CanonicalForm canonicalize(const PEExpression& e)
{
    const Fan& fan = *e.fan();
    CanonicalForm out;
    for (const auto& sigma : fan.maximal_cones()) {
        std::map<IntVector, Integer> group;
        for (const auto& [f, c] : e.terms()) {
            auto m = restrict_linear(fan, f, sigma);
            auto [it, inserted] = group.emplace(std::move(m.coefficients), c);
            if (!inserted)
                it->second += c;
        }
        std::erase_if(group, [](const auto& kv) { return kv.second == 0; });
        if (!group.empty())
            out.cones.emplace(sigma, std::move(group));
    }
    return out;
}

PEExpression phi_tilde(const IntPolynomial& p, const FanPtr& fan)
{
    const std::size_t n = fan->num_rays();
    if (p.nvars() != n)
        throw std::invalid_argument("phi_tilde: polynomial variables must match the fan's rays");
    PEExpression out(fan);
    for (const auto& t : p.terms()) {
        // prod_rho (1 - e^{delta_rho})^{a_rho} = sum_k prod_rho C(a,k) (-1)^k e^{k delta_rho}
        std::vector<std::pair<IntVector, Integer>> partial{{IntVector(n), t.coefficient}};
        for (std::size_t r = 0; r < n; ++r) {
            const unsigned a = t.monomial[r];
            if (a == 0)
                continue;
            std::vector<std::pair<IntVector, Integer>> next;
            for (const auto& [f, c] : partial) {
                for (unsigned k = 0; k <= a; ++k) {
                    Integer binom;
                    mpz_bin_uiui(binom.get_mpz_t(), a, k);
                    IntVector g = f;
                    g[r] = k;
                    next.emplace_back(std::move(g), (k % 2 ? -binom : binom) * c);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [f, c] : partial)
            out.add_term(f, c);
    }
    return out;
}

PEExpression restrict_to_subfan(const PEExpression& e, const FanPtr& sub)
{
    const Fan& fan = *e.fan();
    if (sub->rank() != fan.rank())
        throw std::invalid_argument("restrict_to_subfan: lattice ranks differ");
    std::vector<RayId> parent(sub->num_rays());
    for (RayId r = 0; r < sub->num_rays(); ++r) {
        auto id = fan.find_ray(sub->ray(r));
        if (!id)
            throw std::invalid_argument("restrict_to_subfan: ray " + to_string(sub->ray(r)) +
                                        " is not a ray of the ambient fan");
        parent[r] = *id;
    }
    for (const auto& c : sub->maximal_cones()) {
        std::vector<RayId> ids;
        for (RayId r : c.rays())
            ids.push_back(parent[r]);
        std::sort(ids.begin(), ids.end());
        if (!fan.contains(Cone(ids)))
            throw std::invalid_argument("restrict_to_subfan: cone " + to_string(c) +
                                        " of the subfan is not a cone of the ambient fan");
    }
    PEExpression out(sub);
    for (const auto& [f, c] : e.terms()) {
        IntVector g(sub->num_rays());
        for (RayId r = 0; r < g.size(); ++r)
            g[r] = f[parent[r]];
        out.add_term(g, c);
    }
    return out;
}

StarData star_data(const FanPtr& fan, const Cone& sigma)
{
    StarData d;
    d.sigma = sigma;
    d.neighborhood = share(neighborhood(*fan, sigma));
    for (const auto& u : d.neighborhood->rays())
        d.ambient_ray.push_back(*fan->find_ray(u));
    std::vector<RayId> local;
    for (RayId r = 0; r < d.ambient_ray.size(); ++r)
        if (sigma.contains(d.ambient_ray[r]))
            local.push_back(r);
    d.sigma_local = Cone(local);

    StarFan sf = star_fan(*fan, sigma);
    d.projection = std::move(sf.projection);
    d.star = share(std::move(sf.fan));
    d.star_preimage.assign(d.star->num_rays(), d.neighborhood->num_rays());
    for (RayId r = 0; r < d.neighborhood->num_rays(); ++r) {
        if (d.sigma_local.contains(r))
            continue;
        IntVector image = d.projection * std::span<const Integer>(d.neighborhood->ray(r));
        auto j = d.star->find_ray(image);
        if (!j)
            throw std::logic_error("star_data: link ray does not map to a star ray");
        if (d.star_preimage[*j] == d.neighborhood->num_rays())
            d.star_preimage[*j] = r;
    }
    for (RayId p : d.star_preimage)
        if (p == d.neighborhood->num_rays())
            throw std::logic_error("star_data: star ray without a preimage");
    return d;
}

PEExpression pullback_star(const PEExpression& e, const StarData& data)
{
    if (e.fan() != data.star && e.fan()->rays() != data.star->rays())
        throw std::invalid_argument("pullback_star: expression does not live on the star fan");
    const Fan& nb = *data.neighborhood;
    PEExpression out(data.neighborhood);
    for (const auto& [f, c] : e.terms()) {
        PLFunction pf(data.star, f);
        IntVector g(nb.num_rays());
        for (RayId r = 0; r < nb.num_rays(); ++r) {
            RationalPoint q{data.projection * std::span<const Integer>(nb.ray(r)), 1};
            Rational v;
            try {
                v = evaluate(pf, q);
            } catch (const std::invalid_argument&) {
                throw std::logic_error("pullback_star: image of ray " + std::to_string(r) +
                                       " lies outside the star fan");
            }
            if (v.get_den() != 1)
                throw std::logic_error("pullback_star: non-integral pulled-back value");
            g[r] = v.get_num();
        }
        out.add_term(g, c);
    }
    return out;
}

namespace {

// l_{f,sigma}: f itself when f is linear on the whole neighborhood, so linear
// exponents descend to 1; otherwise the fixed extension of f from sigma.
LinearFunctional descent_functional(const Fan& nb, const IntVector& f, const Cone& sigma_local)
{
    if (auto m = solve_integer_system(IntMatrix::from_rows(nb.rays(), nb.rank()), f))
        return {std::move(*m)};
    return restrict_linear(nb, f, sigma_local);
}

} // namespace

PEExpression descend_star(const PEExpression& e, const StarData& data)
{
    if (e.fan() != data.neighborhood && e.fan()->rays() != data.neighborhood->rays())
        throw std::invalid_argument("descend_star: expression does not live on the neighborhood");
    const Fan& nb = *data.neighborhood;
    PEExpression out(data.star);
    for (const auto& [f, c] : e.terms()) {
        LinearFunctional l = descent_functional(nb, f, data.sigma_local);
        IntVector g(data.star->num_rays());
        for (RayId j = 0; j < g.size(); ++j) {
            RayId r = data.star_preimage[j];
            g[j] = f[r] - l(nb.ray(r));
        }
        out.add_term(g, c);
    }
    return out;
}

std::vector<std::pair<Cone, Integer>> mobius_decomposition(const Fan& fan)
{
    const auto& cones = fan.cones();
    std::vector<Integer> mu(cones.size());
    // cones are sorted by dimension, so every proper coface comes later
    for (std::size_t i = cones.size(); i-- > 0;) {
        Integer m = 1;
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (cones[j].dim() > cones[i].dim() && cones[i].is_face_of(cones[j]))
                m -= mu[j];
        mu[i] = m;
    }
    std::vector<std::pair<Cone, Integer>> out;
    for (std::size_t i = 0; i < cones.size(); ++i)
        out.emplace_back(cones[i], mu[i]);
    return out;
}

PEExpression mobius_expansion(const PLFunction& f)
{
    PEExpression out(f.fan());
    for (const auto& [sigma, mu] : mobius_decomposition(*f.fan()))
        if (mu != 0)
            out.add_term(truncate_to_cone(f, sigma).ray_values(), mu);
    return out;
}

bool verify_star_roundtrip(const FanPtr& fan, const Cone& sigma, const std::vector<PLFunction>& sample_fs)
{
    const StarData data = star_data(fan, sigma);
    const Fan& nb = *data.neighborhood;
    for (const auto& f : sample_fs) {
        IntVector local(nb.num_rays());
        for (RayId r = 0; r < local.size(); ++r)
            local[r] = f.value(data.ambient_ray[r]);
        PLFunction fl(data.neighborhood, local);
        LinearFunctional l = descent_functional(nb, local, data.sigma_local);
        PEExpression e = PEExpression::exponential(fl);
        PEExpression round = pullback_star(descend_star(e, data), data);
        PEExpression expected = PEExpression::exponential(fl - PLFunction::from_linear(data.neighborhood, l));
        if (!canonicalize(round - expected).is_zero())
            return false;
    }
    return true;
}

bool vanishes_off_neighborhood(const PEExpression& e, const Cone& sigma)
{
    const CanonicalForm form = canonicalize(e);
    for (const auto& entry : form.cones)
        if (!sigma.is_face_of(entry.first))
            return false;
    return true;
}

TwoFactorCheck two_factor_vanishing(const PLFunction& f, const Cone& sigma)
{
    const FanPtr& fan = f.fan();
    if (!fan->contains(sigma))
        throw std::invalid_argument("two_factor_vanishing: cone " + to_string(sigma) + " is not in the fan");
    const StarData data = star_data(fan, sigma);
    std::set<RayId> near(data.ambient_ray.begin(), data.ambient_ray.end());

    // e^f - e^{f + c}, c the sum of Courant functions of rays off the neighborhood
    IntVector shifted = f.ray_values();
    for (RayId r = 0; r < shifted.size(); ++r)
        if (!near.count(r))
            shifted[r] += 1;
    TwoFactorCheck out{sigma, PEExpression::exponential(f) - PEExpression::exponential(PLFunction(fan, shifted)),
                       PEExpression(fan)};

    const PLFunction fs = truncate_to_cone(f, sigma);
    const PEExpression naive = PEExpression::exponential(fs) - PEExpression::constant(fan, 1);
    out.naive_factor_vanishes = vanishes_off_neighborhood(naive, sigma);
    if (out.naive_factor_vanishes) {
        out.off_neighborhood_zero = naive;
    } else {
        std::vector<std::uint32_t> exps(fan->num_rays(), 0);
        for (RayId r : sigma.rays())
            exps[r] = 1;
        out.off_neighborhood_zero = naive * phi_tilde(IntPolynomial::monomial(Monomial(exps)), fan);
    }

    out.first_vanishes = canonicalize(restrict_to_subfan(out.on_neighborhood_zero, data.neighborhood)).is_zero();
    out.second_vanishes = vanishes_off_neighborhood(out.off_neighborhood_zero, sigma);
    out.product_vanishes = canonicalize(out.on_neighborhood_zero * out.off_neighborhood_zero).is_zero();
    return out;
}

} // namespace kfan
