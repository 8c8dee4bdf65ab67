#include "kfan/kring.hpp"

#include "kfan/rational_lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kfan {

namespace {

IntPolynomial monomial_of(std::size_t nvars, const std::vector<RayId>& rays, std::uint32_t power = 1)
{
    std::vector<std::uint32_t> e(nvars, 0);
    for (RayId r : rays)
        e[r] = power;
    return IntPolynomial::monomial(Monomial(std::move(e)));
}

IntPolynomial one_minus_x(std::size_t nvars, RayId r)
{
    return IntPolynomial::constant(nvars, 1) - IntPolynomial::variable(nvars, r);
}

std::vector<IntPolynomial> nonzero(std::vector<IntPolynomial> v)
{
    std::erase_if(v, [](const IntPolynomial& p) { return p.is_zero(); });
    return v;
}

std::vector<IntPolynomial> presentation_input(const KPresentation& p)
{
    std::vector<IntPolynomial> gens = p.sr_generators;
    for (const auto& j : p.j_generators)
        gens.push_back(j.polynomial);
    return nonzero(std::move(gens));
}

} // namespace

std::vector<IntPolynomial> stanley_reisner_generators(const Fan& fan)
{
    const std::size_t n = fan.num_rays();
    std::vector<std::vector<RayId>> nonfaces;
    for (const auto& tau : fan.cones()) {
        const RayId start = tau.is_zero() ? 0 : tau.rays().back() + 1;
        for (RayId r = start; r < n; ++r) {
            std::vector<RayId> s = tau.rays();
            s.push_back(r);
            if (fan.contains(Cone(s)))
                continue;
            bool minimal = true;
            for (std::size_t i = 0; i < s.size() && minimal; ++i) {
                std::vector<RayId> facet = s;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                minimal = fan.contains(Cone(facet));
            }
            if (minimal)
                nonfaces.push_back(std::move(s));
        }
    }
    std::sort(nonfaces.begin(), nonfaces.end());
    std::vector<IntPolynomial> out;
    for (const auto& s : nonfaces)
        out.push_back(monomial_of(n, s));
    return out;
}

IntPolynomial j_generator(const Fan& fan, const LinearFunctional& m)
{
    const std::size_t n = fan.num_rays();
    IntPolynomial pos = IntPolynomial::constant(n, 1);
    IntPolynomial neg = IntPolynomial::constant(n, 1);
    for (RayId r = 0; r < n; ++r) {
        Integer v = m(fan.ray(r));
        if (v > 0)
            pos = pos * one_minus_x(n, r).pow(static_cast<unsigned>(v.get_ui()));
        else if (v < 0)
            neg = neg * one_minus_x(n, r).pow(static_cast<unsigned>(Integer(-v).get_ui()));
    }
    return pos - neg;
}

IntPolynomial unit_product(const Fan& fan)
{
    const std::size_t n = fan.num_rays();
    IntPolynomial t = IntPolynomial::constant(n, 1);
    for (RayId r = 0; r < n; ++r)
        t = t * one_minus_x(n, r);
    return t;
}

std::string JStrategy::name() const
{
    switch (kind) {
    case Kind::Basis:
        return "basis";
    case Kind::Box:
        return "box=" + std::to_string(box);
    case Kind::Saturated:
        break;
    }
    return "default";
}

std::vector<LinearFunctional> j_functionals(std::size_t rank, const JStrategy& strategy)
{
    std::vector<LinearFunctional> out;
    if (strategy.kind != JStrategy::Kind::Box) {
        for (std::size_t i = 0; i < rank; ++i) {
            IntVector e(rank);
            e[i] = 1;
            out.push_back({std::move(e)});
        }
        return out;
    }
    if (strategy.box == 0 || rank == 0)
        return out;
    const long k = static_cast<long>(strategy.box);
    std::vector<long> m(rank, -k);
    for (;;) {
        // first nonzero coordinate positive picks one of +-m
        auto first = std::find_if(m.begin(), m.end(), [](long v) { return v != 0; });
        if (first != m.end() && *first > 0) {
            IntVector v;
            for (long x : m)
                v.emplace_back(x);
            out.push_back({std::move(v)});
        }
        std::size_t i = rank;
        while (i-- > 0) {
            if (m[i] < k) {
                ++m[i];
                break;
            }
            m[i] = -k;
        }
        if (i == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

bool KPresentation::all_powers_in_ideal() const
{
    return std::all_of(power_in_ideal.begin(), power_in_ideal.end(), [](bool b) { return b; });
}

KPresentation build_presentation(const FanPtr& fan, const PresentationOptions& options)
{
    if (auto v = validate(*fan); !v.empty())
        throw std::invalid_argument("invalid fan: " + v.front().message);
    const std::size_t n = fan->num_rays();
    KPresentation p;
    p.fan = fan;
    p.strategy = options.strategy;
    p.dimension = fan->dimension();
    p.sr_generators = stanley_reisner_generators(*fan);

    auto ms = j_functionals(fan->rank(), options.strategy);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (options.drop_j_generator && *options.drop_j_generator == i)
            continue;
        p.j_generators.push_back({ms[i], j_generator(*fan, ms[i])});
    }

    p.ideal_generators = presentation_input(p);
    if (options.strategy.kind == JStrategy::Kind::Saturated)
        p.ideal_generators = saturation(p.ideal_generators, unit_product(*fan));
    p.gb = buchberger_strong(p.ideal_generators, n);
    for (RayId r = 0; r < n; ++r)
        p.power_in_ideal.push_back(
            ideal_member(monomial_of(n, {r}, static_cast<std::uint32_t>(p.dimension + 1)), p.gb));
    return p;
}

AbelianGroupStructure k_group(const KPresentation& pres)
{
    for (RayId r = 0; r < pres.power_in_ideal.size(); ++r)
        if (!pres.power_in_ideal[r])
            throw NotFinitelyGenerated("x" + std::to_string(r) + "^" + std::to_string(pres.dimension + 1) +
                                       " is not in the ideal; the quotient is not finitely generated");
    return quotient_group_structure(pres.gb);
}

AbelianGroupStructure k_group(const FanPtr& fan)
{
    return k_group(build_presentation(fan));
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{"nilpotency", "sr_kernel", "saturation", "unit_claim",
                                                "inclusion_exclusion", "star_roundtrip", "j_soundness"};
    return names;
}

PLFunction random_pl_function(const FanPtr& fan, Rng& rng, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVector v;
    for (std::size_t r = 0; r < fan->num_rays(); ++r)
        v.emplace_back(dist(rng));
    return PLFunction(fan, std::move(v));
}

namespace {

void fail(CheckResult& c, std::string why)
{
    c.passed = false;
    c.witness.push_back(std::move(why));
}

std::string values_string(const PLFunction& f)
{
    return to_string(f.ray_values());
}

} // namespace

CheckResult verify_nilpotency(const KPresentation& pres, Rng& rng, std::size_t samples)
{
    CheckResult c{"nilpotency", true, {}};
    const std::size_t n = pres.fan->num_rays();
    const auto power = static_cast<std::uint32_t>(pres.dimension + 1);
    for (RayId r = 0; r < n; ++r) {
        IntPolynomial xp = monomial_of(n, {r}, power);
        Reduction red = reduce_with_certificate(xp, pres.gb);
        if (!red.remainder.is_zero())
            fail(c, "ray " + std::to_string(r) + ": x" + std::to_string(r) + "^" + std::to_string(power) +
                        " has normal form " + red.remainder.to_string());
        else if (!red.certifies(xp, pres.gb))
            fail(c, "ray " + std::to_string(r) + ": reduction certificate does not recombine");
    }

    std::size_t replaced = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        PLFunction f = random_pl_function(pres.fan, rng);
        for (const auto& sigma : pres.fan->cones()) {
            if (sigma.is_zero())
                continue;
            TwoFactorCheck t = two_factor_vanishing(f, sigma);
            if (!t.naive_factor_vanishes && s == 0)
                ++replaced;
            if (!t.ok())
                fail(c, "f = " + values_string(f) + ", cone " + to_string(sigma) + ": two-factor product" +
                            (t.first_vanishes ? "" : ", first factor nonzero on the neighborhood") +
                            (t.second_vanishes ? "" : ", second factor nonzero off the neighborhood") +
                            (t.product_vanishes ? "" : ", product nonzero"));
        }
    }
    if (replaced > 0)
        c.witness.push_back("e^{f_sigma} - 1 is nonzero off the neighborhood on " + std::to_string(replaced) +
                            " cone(s); used (e^{f_sigma} - 1) * phi(prod_{rho in sigma} x_rho) there");
    return c;
}

CheckResult verify_sr_kernel(const FanPtr& fan)
{
    CheckResult c{"sr_kernel", true, {}};
    const std::size_t n = fan->num_rays();
    for (const auto& g : stanley_reisner_generators(*fan))
        if (!canonicalize(phi_tilde(g, fan)).is_zero())
            fail(c, "non-face monomial " + g.to_string() + " has nonzero image");

    const auto top = static_cast<std::uint32_t>(fan->dimension() + 1);
    std::vector<Monomial> monomials;
    for (const auto& sigma : fan->cones()) {
        std::vector<std::uint32_t> a(sigma.dim(), 1);
        for (;;) {
            std::vector<std::uint32_t> e(n, 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                e[sigma.rays()[i]] = a[i];
            monomials.emplace_back(std::move(e));
            std::size_t i = 0;
            while (i < a.size() && ++a[i] > top)
                a[i++] = 1;
            if (i == a.size())
                break;
        }
    }

    std::map<std::pair<Cone, IntVector>, std::size_t> coordinate;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
    for (const auto& m : monomials) {
        auto form = canonicalize(phi_tilde(IntPolynomial::monomial(m), fan));
        auto& col = columns.emplace_back();
        for (const auto& [cone, group] : form.cones)
            for (const auto& [ch, coef] : group) {
                auto it = coordinate.emplace(std::make_pair(cone, ch), coordinate.size()).first;
                col.emplace_back(it->second, coef);
            }
    }
    IntMatrix mat(coordinate.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, v] : columns[j])
            mat(i, j) = v;
    const std::size_t rank = integer_rank(mat);
    if (rank != columns.size())
        fail(c, "cone monomial images have rank " + std::to_string(rank) + " < " + std::to_string(columns.size()));
    return c;
}

CheckResult verify_saturation(const KPresentation& pres)
{
    CheckResult c{"saturation", true, {}};
    const IntPolynomial t = unit_product(*pres.fan);
    const auto& base = pres.gb.generators;
    const std::size_t n = pres.fan->num_rays();
    auto compare = [&](const std::vector<IntPolynomial>& gens, const std::string& what) {
        StrongGB other = buchberger_strong(gens, n, pres.gb.order);
        for (const auto& g : other.generators)
            if (!ideal_member(g, pres.gb)) {
                fail(c, what + " contains " + g.to_string() + " outside the ideal");
                return;
            }
        for (const auto& g : base)
            if (!ideal_member(g, other)) {
                fail(c, what + " misses " + g.to_string());
                return;
            }
    };
    compare(ideal_quotient(base, t), "(I + J : t)");
    compare(saturation(base, t), "(I + J : t^inf)");
    return c;
}

CheckResult verify_unit_claim(const FanPtr& fan)
{
    CheckResult c{"unit_claim", true, {}};
    const Fan& f = *fan;
    const std::size_t n = f.num_rays();
    for (const auto& sigma : f.cones()) {
        std::vector<LinearConstraint> cons;
        for (RayId r : sigma.rays())
            cons.push_back({f.ray(r), Relation::GreaterEqual, 1});
        auto point = find_feasible_point(cons, f.rank());
        if (!point) {
            fail(c, "cone " + to_string(sigma) + ": no m positive on its rays");
            continue;
        }
        LinearFunctional m{clear_denominators(*point)};
        IntPolynomial j = j_generator(f, m);
        for (RayId r0 = 0; r0 < n; ++r0) {
            std::vector<IntPolynomial> gens;
            for (RayId r = 0; r < n; ++r)
                if (!sigma.contains(r))
                    gens.push_back(IntPolynomial::variable(n, r));
            gens.push_back(j);
            gens.push_back(one_minus_x(n, r0));
            if (!buchberger_strong(nonzero(std::move(gens)), n).is_unit_ideal())
                fail(c, "cone " + to_string(sigma) + ", ray " + std::to_string(r0) + ": ideal is proper (m = " +
                            to_string(m.coefficients) + ")");
        }
    }
    return c;
}

CheckResult verify_inclusion_exclusion(const FanPtr& fan, Rng& rng, std::size_t samples)
{
    CheckResult c{"inclusion_exclusion", true, {}};
    for (std::size_t s = 0; s < samples; ++s) {
        PLFunction f = random_pl_function(fan, rng);
        if (!canonicalize(PEExpression::exponential(f) - mobius_expansion(f)).is_zero())
            fail(c, "f = " + values_string(f));
    }
    return c;
}

CheckResult verify_star_roundtrips(const FanPtr& fan, Rng& rng, std::size_t samples)
{
    CheckResult c{"star_roundtrip", true, {}};
    for (const auto& sigma : fan->cones()) {
        if (sigma.is_zero())
            continue;
        std::vector<PLFunction> fs;
        for (std::size_t s = 0; s < samples; ++s)
            fs.push_back(random_pl_function(fan, rng));
        if (!verify_star_roundtrip(fan, sigma, fs))
            fail(c, "cone " + to_string(sigma));
    }
    return c;
}

CheckResult verify_j_soundness(const KPresentation& pres)
{
    CheckResult c{"j_soundness", true, {}};
    const FanPtr& fan = pres.fan;
    const std::size_t n = fan->num_rays();
    const bool rays_span = integer_rank(IntMatrix::from_rows(fan->rays(), fan->rank())) == fan->rank();
    for (const auto& j : pres.j_generators) {
        const std::string tag = "m = " + to_string(j.m.coefficients);
        IntVector pos(n), neg(n);
        for (RayId r = 0; r < n; ++r) {
            Integer v = j.m(fan->ray(r));
            (v > 0 ? pos : neg)[r] = v > 0 ? v : Integer(-v);
        }
        PLFunction diff = PLFunction(fan, pos) - PLFunction(fan, neg);
        auto m = is_global_linear(diff);
        if (!m || PLFunction::from_linear(fan, *m) != diff || (rays_span && *m != j.m)) {
            fail(c, tag + ": exponent difference is not the functional");
            continue;
        }
        if (!(j.polynomial == j_generator(*fan, j.m)))
            fail(c, tag + ": polynomial does not match the formula");
        PEExpression expected = PEExpression::exponential(PLFunction(fan, pos)) -
                                PEExpression::exponential(PLFunction(fan, neg));
        if (!(canonicalize(phi_tilde(j.polynomial, fan)) == canonicalize(expected)))
            fail(c, tag + ": image is not e^{pos} - e^{neg}");
    }
    return c;
}

VerificationReport run_verification(const KPresentation& pres, const std::vector<std::string>& checks,
                                    std::uint64_t seed)
{
    const auto& names = check_names();
    for (const auto& name : checks)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw std::invalid_argument("unknown check '" + name + "'");
    VerificationReport report;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& name = names[i];
        if (!checks.empty() && std::find(checks.begin(), checks.end(), name) == checks.end())
            continue;
        Rng rng(seed + i);
        if (name == "nilpotency")
            report.checks.push_back(verify_nilpotency(pres, rng));
        else if (name == "sr_kernel")
            report.checks.push_back(verify_sr_kernel(pres.fan));
        else if (name == "saturation")
            report.checks.push_back(verify_saturation(pres));
        else if (name == "unit_claim")
            report.checks.push_back(verify_unit_claim(pres.fan));
        else if (name == "inclusion_exclusion")
            report.checks.push_back(verify_inclusion_exclusion(pres.fan, rng));
        else if (name == "star_roundtrip")
            report.checks.push_back(verify_star_roundtrips(pres.fan, rng));
        else
            report.checks.push_back(verify_j_soundness(pres));
    }
    return report;
}

StrategyComparison compare_strategies(const FanPtr& fan, unsigned max_k)
{
    const std::size_t n = fan->num_rays();
    StrategyComparison out;
    KPresentation full = build_presentation(fan);
    KPresentation basis = build_presentation(fan, {JStrategy::basis(), std::nullopt});
    out.basis_already_saturated = ideal_equal(basis.gb, full.gb);

    std::vector<IntPolynomial> powers;
    for (RayId r = 0; r < n; ++r)
        powers.push_back(monomial_of(n, {r}, static_cast<std::uint32_t>(full.dimension + 1)));
    for (unsigned k = 1; k <= max_k; ++k) {
        KPresentation box = build_presentation(fan, {JStrategy::box_of(k), std::nullopt});
        StrategyComparison::BoxResult r{k, ideal_equal(box.gb, full.gb), false};
        std::vector<IntPolynomial> gens = box.gb.generators;
        gens.insert(gens.end(), powers.begin(), powers.end());
        r.equal_with_powers = ideal_equal(buchberger_strong(gens, n), full.gb);
        out.boxes.push_back(r);
    }
    return out;
}

} // namespace kfan
