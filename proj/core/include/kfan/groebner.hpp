#pragma once

// Strong Groebner bases over Z and the ideal operations built on them.
//
// Reduction rule: a term c*m is reducible by g when LM(g) | m and dividing c
// by LC(g) > 0 leaves a different remainder in [0, LC(g)). Against a strong
// basis this yields unique normal forms.

#include "kfan/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kfan {

struct StrongGB {
    std::size_t nvars = 0;
    MonomialOrder order;
    /// Reduced, leading coefficients positive, sorted by leading term.
    std::vector<IntPolynomial> generators;

    bool is_unit_ideal() const;
};

StrongGB buchberger_strong(const std::vector<IntPolynomial>& gens, std::size_t nvars,
                           MonomialOrder order = MonomialOrder::grevlex());

IntPolynomial normal_form(const IntPolynomial& p, const StrongGB& gb);

/// p = sum_i quotients[i] * gb.generators[i] + remainder.
struct Reduction {
    IntPolynomial remainder;
    std::vector<IntPolynomial> quotients;

    /// Recombines the certificate and compares with p exactly.
    bool certifies(const IntPolynomial& p, const StrongGB& gb) const;
};

Reduction reduce_with_certificate(const IntPolynomial& p, const StrongGB& gb);

bool ideal_member(const IntPolynomial& p, const StrongGB& gb);
bool ideal_equal(const StrongGB& a, const StrongGB& b);

/// Generators of (I : f^infinity), via elimination of y from I + <1 - y f>.
std::vector<IntPolynomial> saturation(const std::vector<IntPolynomial>& gens, const IntPolynomial& f);

/// Generators of (I : f), via I cap <f> from s I + (1 - s) <f>.
std::vector<IntPolynomial> ideal_quotient(const std::vector<IntPolynomial>& gens, const IntPolynomial& f);

/// Free rank plus invariant factors d1 | d2 | ... (each > 1).
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;

    bool operator==(const AbelianGroupStructure&) const = default;
    /// "Z^3", "Z^1 ⊕ Z/2", "0" for the trivial group.
    std::string to_string() const;
};

/// Canonical invariant factors of a direct sum of cyclic groups Z/n_i.
AbelianGroupStructure abelian_group_from_orders(std::size_t free_rank, const std::vector<Integer>& orders);

class NotFinitelyGenerated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Additive structure of Z[x]/I. Requires, for each variable, a generator
/// with leading coefficient 1 and pure-power leading monomial.
AbelianGroupStructure quotient_group_structure(const StrongGB& gb);

/// Monomials not divisible by any leading monomial with unit coefficient
/// (finite under the precondition above), in increasing term order.
std::vector<Monomial> standard_monomials(const StrongGB& gb);

} // namespace kfan
