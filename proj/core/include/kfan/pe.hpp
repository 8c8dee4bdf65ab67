#pragma once

// Integral piecewise-exponential functions sum_i a_i e^{f_i} on a fan.
// Equality is decided exactly: on each maximal cone the characters e^m for
// distinct functionals m are linearly independent, so grouping exponents by
// their restriction to the cone gives a canonical form.

#include "kfan/polynomial.hpp"
#include "kfan/pwl.hpp"

#include <map>
#include <utility>
#include <vector>

namespace kfan {

class PEExpression {
public:
    explicit PEExpression(FanPtr fan);
    static PEExpression constant(FanPtr fan, const Integer& c);
    static PEExpression exponential(const PLFunction& f, const Integer& c = 1);

    const FanPtr& fan() const { return fan_; }
    /// Exponent ray values -> coefficient; zero coefficients are not stored.
    const std::map<IntVector, Integer>& terms() const { return terms_; }
    void add_term(const IntVector& exponent, const Integer& c);

    PEExpression operator+(const PEExpression& rhs) const;
    PEExpression operator-(const PEExpression& rhs) const;
    PEExpression operator-() const;
    PEExpression operator*(const PEExpression& rhs) const;
    PEExpression operator*(const Integer& c) const;
    PEExpression pow(unsigned k) const;

private:
    void require_same_fan(const PEExpression& rhs) const;

    FanPtr fan_;
    std::map<IntVector, Integer> terms_;
};

/// Maximal cone -> (restricted functional -> nonzero coefficient). Cones on
/// which the function vanishes are omitted, so the zero function is empty.
struct CanonicalForm {
    std::map<Cone, std::map<IntVector, Integer>> cones;

    bool is_zero() const { return cones.empty(); }
    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonicalize(const PEExpression& e);

/// x_rho -> 1 - e^{delta_rho}; variables are indexed by the fan's rays.
PEExpression phi_tilde(const IntPolynomial& p, const FanPtr& fan);

/// Composition with the inclusion of `sub`, whose rays and cones must occur
/// in e's fan (rays matched by generator).
PEExpression restrict_to_subfan(const PEExpression& e, const FanPtr& sub);

/// The neighborhood of sigma, the star fan and the quotient map between them.
struct StarData {
    Cone sigma;                       // ray ids of the ambient fan
    FanPtr neighborhood;
    std::vector<RayId> ambient_ray;   // neighborhood ray -> ambient ray
    Cone sigma_local;                 // sigma in neighborhood ray ids
    FanPtr star;
    IntMatrix projection;             // (rank - dim sigma) x rank
    std::vector<RayId> star_preimage; // star ray -> a neighborhood ray over it
};

StarData star_data(const FanPtr& fan, const Cone& sigma);

/// e lives on data.star; the result on data.neighborhood is e composed with q.
PEExpression pullback_star(const PEExpression& e, const StarData& data);

/// e lives on data.neighborhood. Each e^f becomes e^{bar(f - l)}, read off
/// through the quotient map, where l is f itself when f is linear on the
/// neighborhood and restrict_linear(f, sigma) otherwise.
PEExpression descend_star(const PEExpression& e, const StarData& data);

/// mu over all cones with e^f = sum_sigma mu(sigma) e^{f_sigma}, where
/// f_sigma is f on sigma's rays and zero elsewhere. Cones in fan order.
std::vector<std::pair<Cone, Integer>> mobius_decomposition(const Fan& fan);
PEExpression mobius_expansion(const PLFunction& f);

/// For each f (on the ambient fan): with E = e^f on the neighborhood and l
/// chosen as in descend_star, pullback(descend(E)) equals E e^{-l}.
bool verify_star_roundtrip(const FanPtr& fan, const Cone& sigma, const std::vector<PLFunction>& sample_fs);

/// A factor vanishing on the neighborhood of sigma, a factor vanishing off
/// it, and whether each vanishing and the product vanishing hold exactly.
struct TwoFactorCheck {
    Cone sigma;
    PEExpression on_neighborhood_zero;
    PEExpression off_neighborhood_zero;
    bool first_vanishes = false;
    bool second_vanishes = false;
    bool product_vanishes = false;
    /// Whether e^{f_sigma} - 1 itself vanishes off the neighborhood.
    bool naive_factor_vanishes = false;

    bool ok() const { return first_vanishes && second_vanishes && product_vanishes; }
};

TwoFactorCheck two_factor_vanishing(const PLFunction& f, const Cone& sigma);

/// Whether canonicalize(e) is empty on every maximal cone not in the
/// neighborhood of sigma.
bool vanishes_off_neighborhood(const PEExpression& e, const Cone& sigma);

} // namespace kfan
