#pragma once

// Random-ideal comparison of the Groebner engine against lattice oracles.
// Shared by the unit tests and the acceptance binary.

#include "support/oracles.hpp"

#include <sstream>

namespace oracle {

struct GbCase {
    std::size_t nvars = 0;
    std::vector<kfan::IntPolynomial> generators;
    unsigned power = 0; // exponent of the monic pure powers added for the structure check
};

struct GbOutcome {
    bool membership_agrees = true;
    bool structure_agrees = true;
    std::string detail;
};

/// 1 to 3 generators in 1 to 3 variables, degree <= 3, coefficients in [-4, 4].
inline GbCase random_gb_case(std::mt19937_64& rng)
{
    GbCase c;
    c.nvars = 1 + rng() % 3;
    c.power = 2 + rng() % 2;
    const std::size_t count = 1 + rng() % 3;
    while (c.generators.size() < count) {
        auto g = random_polynomial(rng, c.nvars, 3, 4, 4);
        if (!g.is_zero())
            c.generators.push_back(std::move(g));
    }
    return c;
}

inline std::string describe(const std::vector<kfan::IntPolynomial>& gens)
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens.size(); ++i)
        os << (i ? ", " : "") << gens[i].to_string();
    os << ">";
    return os.str();
}

inline GbOutcome compare_with_oracle(const GbCase& c, std::mt19937_64& rng)
{
    using kfan::IntPolynomial;
    GbOutcome out;
    const std::size_t n = c.nvars;

    // Probes: random combinations of the generators (members) and random
    // polynomials (usually not members), all of degree <= 4.
    std::vector<IntPolynomial> probes;
    for (int k = 0; k < 3; ++k) {
        IntPolynomial p(n);
        for (const auto& g : c.generators)
            p += random_polynomial(rng, n, 1, 3, 3) * g;
        probes.push_back(std::move(p));
    }
    for (int k = 0; k < 3; ++k)
        probes.push_back(random_polynomial(rng, n, 3, 4, 4));

    const kfan::StrongGB gb = kfan::buchberger_strong(c.generators, n);
    const MacaulayWindow window(c.generators, n, 9);
    for (const auto& p : probes) {
        auto red = kfan::reduce_with_certificate(p, gb);
        const bool member = red.remainder.is_zero();
        const bool ok = red.certifies(p, gb) && member == kfan::ideal_member(p, gb) && member == window.contains(p);
        if (!ok) {
            out.membership_agrees = false;
            out.detail += "membership of " + p.to_string() + " in " + describe(c.generators) + "; ";
        }
    }

    std::vector<IntPolynomial> finite = c.generators;
    for (std::size_t i = 0; i < n; ++i)
        finite.push_back(IntPolynomial::monomial(kfan::Monomial::variable(n, i, c.power)));
    const auto structure = kfan::quotient_group_structure(kfan::buchberger_strong(finite, n));
    const auto expected = box_quotient(c.generators, n, c.power);
    if (!(expected == structure)) {
        out.structure_agrees = false;
        out.detail += "structure of " + describe(finite) + ": engine " + structure.to_string() + ", oracle " +
                      expected.to_string() + "; ";
    }
    return out;
}

} // namespace oracle
