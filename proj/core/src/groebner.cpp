#include "kfan/groebner.hpp"

#include <algorithm>
#include <map>

namespace kfan {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// LM | m with the smallest leading coefficient, lowest index on ties.
std::size_t find_reducer(const std::vector<IntPolynomial>& basis, const Monomial& m)
{
    std::size_t best = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& g = basis[i];
        if (!g.leading_monomial().divides(m))
            continue;
        if (best == basis.size() || g.leading_coefficient() < basis[best].leading_coefficient())
            best = i;
    }
    return best;
}

/// Full reduction against a basis with positive leading coefficients.
IntPolynomial reduce_full(IntPolynomial p, const std::vector<IntPolynomial>& basis,
                          std::vector<std::vector<Term>>* quotients)
{
    std::vector<Term> rest;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        std::size_t idx = find_reducer(basis, lt.monomial);
        if (idx < basis.size()) {
            const auto& g = basis[idx];
            Integer q = floor_div(lt.coefficient, g.leading_coefficient());
            if (q != 0) {
                Monomial shift = lt.monomial / g.leading_monomial();
                if (quotients)
                    (*quotients)[idx].push_back({shift, q});
                p.subtract_multiple(q, shift, g);
                continue;
            }
        }
        rest.push_back(lt);
        p.drop_leading_term();
    }
    return IntPolynomial::from_terms(p.nvars(), std::move(rest), p.order());
}

void make_leading_positive(IntPolynomial& p)
{
    if (!p.is_zero() && p.leading_coefficient() < 0)
        p = -p;
}

bool term_divides(const IntPolynomial& a, const IntPolynomial& b)
{
    return a.leading_monomial().divides(b.leading_monomial()) &&
           mpz_divisible_p(b.leading_coefficient().get_mpz_t(), a.leading_coefficient().get_mpz_t());
}

std::vector<IntPolynomial> interreduce(const std::vector<IntPolynomial>& g)
{
    std::vector<IntPolynomial> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !term_divides(g[j], g[i]))
                continue;
            const bool same = g[j].leading_monomial() == g[i].leading_monomial() &&
                              g[j].leading_coefficient() == g[i].leading_coefficient();
            redundant = !same || j < i;
        }
        if (!redundant)
            kept.push_back(g[i]);
    }
    std::vector<IntPolynomial> out;
    out.reserve(kept.size());
    for (const auto& p : kept) {
        IntPolynomial tail = p;
        tail.drop_leading_term();
        IntPolynomial head = IntPolynomial::monomial(p.leading_monomial(), p.leading_coefficient(), p.order());
        out.push_back(head + reduce_full(std::move(tail), kept, nullptr));
    }
    std::sort(out.begin(), out.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
        int c = a.order().compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0)
            return c < 0;
        return a.leading_coefficient() < b.leading_coefficient();
    });
    return out;
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::size_t seq;
};

} // namespace

bool StrongGB::is_unit_ideal() const
{
    return generators.size() == 1 && generators[0].is_constant() && generators[0].leading_coefficient() == 1;
}

StrongGB buchberger_strong(const std::vector<IntPolynomial>& gens, std::size_t nvars, MonomialOrder order)
{
    std::vector<IntPolynomial> basis;
    for (const auto& g : gens) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("buchberger_strong: generator has the wrong number of variables");
        if (g.is_zero())
            continue;
        basis.push_back(g.with_order(order));
        make_leading_positive(basis.back());
    }

    std::vector<CriticalPair> pairs;
    std::size_t seq = 0;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, lcm(basis[i].leading_monomial(), basis[k].leading_monomial()), seq++});
    };
    for (std::size_t k = 1; k < basis.size(); ++k)
        add_pairs_for(k);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm, then insertion order
        auto sel = std::min_element(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
            int c = order.compare(a.lcm, b.lcm);
            return c != 0 ? c < 0 : a.seq < b.seq;
        });
        CriticalPair pair = *sel;
        pairs.erase(sel);

        const IntPolynomial f = basis[pair.i];
        const IntPolynomial g = basis[pair.j];
        const Integer& a = f.leading_coefficient();
        const Integer& b = g.leading_coefficient();
        const Monomial mf = pair.lcm / f.leading_monomial();
        const Monomial mg = pair.lcm / g.leading_monomial();

        std::vector<IntPolynomial> candidates;
        const bool a_divides_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
        const bool b_divides_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
        if (!a_divides_b && !b_divides_a) {
            Integer d, u, v;
            mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            IntPolynomial gpoly = f.multiply_term(mf, u);
            gpoly.subtract_multiple(-v, mg, g);
            candidates.push_back(std::move(gpoly));
        }
        Integer ab_gcd = gcd(a, b);
        if (!(coprime(f.leading_monomial(), g.leading_monomial()) && ab_gcd == 1)) {
            Integer c = lcm(a, b);
            IntPolynomial spoly = f.multiply_term(mf, c / a);
            spoly.subtract_multiple(c / b, mg, g);
            candidates.push_back(std::move(spoly));
        }

        for (auto& h : candidates) {
            IntPolynomial r = reduce_full(std::move(h), basis, nullptr);
            if (r.is_zero())
                continue;
            make_leading_positive(r);
            basis.push_back(std::move(r));
            add_pairs_for(basis.size() - 1);
        }
    }

    return StrongGB{nvars, order, interreduce(basis)};
}

IntPolynomial normal_form(const IntPolynomial& p, const StrongGB& gb)
{
    return reduce_full(p.with_order(gb.order), gb.generators, nullptr);
}

Reduction reduce_with_certificate(const IntPolynomial& p, const StrongGB& gb)
{
    std::vector<std::vector<Term>> q(gb.generators.size());
    IntPolynomial r = reduce_full(p.with_order(gb.order), gb.generators, &q);
    Reduction out{std::move(r), {}};
    for (auto& terms : q)
        out.quotients.push_back(IntPolynomial::from_terms(gb.nvars, std::move(terms), gb.order));
    return out;
}

bool Reduction::certifies(const IntPolynomial& p, const StrongGB& gb) const
{
    if (quotients.size() != gb.generators.size())
        return false;
    IntPolynomial sum = remainder;
    for (std::size_t i = 0; i < quotients.size(); ++i)
        sum += quotients[i] * gb.generators[i];
    return sum == p.with_order(gb.order);
}

bool ideal_member(const IntPolynomial& p, const StrongGB& gb)
{
    return normal_form(p, gb).is_zero();
}

bool ideal_equal(const StrongGB& a, const StrongGB& b)
{
    for (const auto& g : a.generators)
        if (!ideal_member(g, b))
            return false;
    for (const auto& g : b.generators)
        if (!ideal_member(g, a))
            return false;
    return true;
}

namespace {

/// Generators of I cap Z[x] from a basis of an ideal in Z[t, x] (t first).
std::vector<IntPolynomial> eliminate_first(const std::vector<IntPolynomial>& gens, std::size_t nvars,
                                           MonomialOrder base)
{
    auto gb = buchberger_strong(gens, nvars + 1, MonomialOrder::elimination(1));
    std::vector<IntPolynomial> out;
    for (const auto& g : gb.generators)
        if (!g.involves_leading_variables(1))
            out.push_back(g.drop_leading_variables(1, base));
    return out;
}

} // namespace

std::vector<IntPolynomial> saturation(const std::vector<IntPolynomial>& gens, const IntPolynomial& f)
{
    if (f.is_zero())
        throw std::invalid_argument("saturation by the zero polynomial");
    const std::size_t n = f.nvars();
    const auto elim = MonomialOrder::elimination(1);
    std::vector<IntPolynomial> ext;
    for (const auto& g : gens)
        ext.push_back(g.prepend_variables(1, elim));
    IntPolynomial y = IntPolynomial::variable(n + 1, 0, elim);
    ext.push_back(IntPolynomial::constant(n + 1, 1, elim) - y * f.prepend_variables(1, elim));
    return eliminate_first(ext, n, f.order());
}

std::vector<IntPolynomial> ideal_quotient(const std::vector<IntPolynomial>& gens, const IntPolynomial& f)
{
    if (f.is_zero())
        throw std::invalid_argument("ideal quotient by the zero polynomial");
    const std::size_t n = f.nvars();
    const auto elim = MonomialOrder::elimination(1);
    IntPolynomial s = IntPolynomial::variable(n + 1, 0, elim);
    std::vector<IntPolynomial> ext;
    for (const auto& g : gens)
        ext.push_back(s * g.prepend_variables(1, elim));
    ext.push_back((IntPolynomial::constant(n + 1, 1, elim) - s) * f.prepend_variables(1, elim));
    std::vector<IntPolynomial> out;
    for (const auto& h : eliminate_first(ext, n, f.order())) {
        try {
            out.push_back(exact_divide(h, f));
        } catch (const std::domain_error&) {
            throw std::logic_error("ideal_quotient: element of I cap <f> not divisible by f");
        }
    }
    return out;
}

std::string AbelianGroupStructure::to_string() const
{
    std::string s;
    if (free_rank > 0)
        s = "Z^" + std::to_string(free_rank);
    for (const auto& d : invariant_factors) {
        if (!s.empty())
            s += " ⊕ ";
        s += "Z/" + d.get_str();
    }
    return s.empty() ? "0" : s;
}

AbelianGroupStructure abelian_group_from_orders(std::size_t free_rank, const std::vector<Integer>& orders)
{
    std::vector<Integer> torsion;
    for (const auto& d : orders) {
        if (d < 0)
            throw std::invalid_argument("abelian_group_from_orders: negative order");
        if (d == 0)
            ++free_rank;
        else if (d > 1)
            torsion.push_back(d);
    }
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        diag(i, i) = torsion[i];
    AbelianGroupStructure out{free_rank, {}};
    for (const auto& d : smith_normal_form(diag).invariant_factors())
        if (d > 1)
            out.invariant_factors.push_back(d);
    return out;
}

std::vector<Monomial> standard_monomials(const StrongGB& gb)
{
    const std::size_t n = gb.nvars;
    std::vector<std::uint32_t> bound(n, 0);
    std::vector<const IntPolynomial*> units;
    for (const auto& g : gb.generators) {
        if (g.leading_coefficient() != 1)
            continue;
        units.push_back(&g);
        std::size_t v = g.leading_monomial().pure_power_variable();
        if (v < n) {
            std::uint32_t k = g.leading_monomial()[v];
            if (bound[v] == 0 || k < bound[v])
                bound[v] = k;
        }
    }
    if (gb.is_unit_ideal())
        return {};
    for (std::size_t v = 0; v < n; ++v)
        if (bound[v] == 0)
            throw NotFinitelyGenerated("quotient not finitely generated: no monic pure power of x" +
                                       std::to_string(v) + " among the leading terms");

    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        Monomial m(e);
        bool reducible = std::any_of(units.begin(), units.end(),
                                     [&](const IntPolynomial* g) { return g->leading_monomial().divides(m); });
        if (!reducible)
            out.push_back(m);
        std::size_t i = 0;
        while (i < n && ++e[i] == bound[i])
            e[i++] = 0;
        if (i == n)
            break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return out;
}

AbelianGroupStructure quotient_group_structure(const StrongGB& gb)
{
    const auto standard = standard_monomials(gb);
    if (standard.empty())
        return {};

    std::vector<IntPolynomial> units;
    for (const auto& g : gb.generators)
        if (g.leading_coefficient() == 1)
            units.push_back(g);

    auto column_of = [&](const Monomial& m) -> std::size_t {
        auto it = std::lower_bound(standard.begin(), standard.end(), m,
                                   [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
        if (it == standard.end() || !(*it == m))
            throw std::logic_error("quotient_group_structure: rewriting left a non-standard monomial");
        return static_cast<std::size_t>(it - standard.begin());
    };

    // one relation per standard monomial carrying a non-unit leading term;
    // rewritten onto standard monomials these generate the relation module
    std::vector<IntVector> relations;
    for (const auto& s : standard) {
        std::size_t idx = find_reducer(gb.generators, s);
        if (idx == gb.generators.size())
            continue;
        const auto& g = gb.generators[idx];
        IntPolynomial h = g.multiply_term(s / g.leading_monomial(), 1);
        h = reduce_full(std::move(h), units, nullptr);
        IntVector row(standard.size());
        for (const auto& t : h.terms())
            row[column_of(t.monomial)] = t.coefficient;
        relations.push_back(std::move(row));
    }

    if (relations.empty())
        return {standard.size(), {}};
    auto snf = smith_normal_form(IntMatrix::from_rows(relations, standard.size()));
    std::vector<Integer> orders;
    for (const auto& d : snf.invariant_factors())
        if (d != 0)
            orders.push_back(d);
    return abelian_group_from_orders(standard.size() - snf.rank(), orders);
}

} // namespace kfan
