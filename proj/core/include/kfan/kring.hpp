#pragma once

// Presentation of the K-ring of a smooth toric variety as Z[x_rho] / (I + J),
// its additive structure, and exact checks of the facts the presentation
// rests on.

#include "kfan/groebner.hpp"
#include "kfan/pe.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kfan {

/// Squarefree monomials of the minimal non-faces, in lexicographic order of
/// their ray sets.
std::vector<IntPolynomial> stanley_reisner_generators(const Fan& fan);

/// prod_{<m,u> > 0} (1 - x_rho)^{<m,u>} - prod_{<m,u> < 0} (1 - x_rho)^{-<m,u>}
IntPolynomial j_generator(const Fan& fan, const LinearFunctional& m);

/// t = prod_rho (1 - x_rho)
IntPolynomial unit_product(const Fan& fan);

struct JStrategy {
    enum class Kind { Basis, Box, Saturated };
    Kind kind = Kind::Saturated;
    unsigned box = 0;

    static JStrategy basis() { return {Kind::Basis, 0}; }
    /// Every nonzero m in [-k, k]^n, one of each pair +-m.
    static JStrategy box_of(unsigned k) { return {Kind::Box, k}; }
    /// Dual basis functionals, then saturation by t. The default.
    static JStrategy saturated() { return {Kind::Saturated, 0}; }

    std::string name() const; // "basis", "box=2", "default"
    bool operator==(const JStrategy&) const = default;
};

/// The functionals a strategy feeds into J (the dual basis for Saturated).
std::vector<LinearFunctional> j_functionals(std::size_t rank, const JStrategy& strategy);

struct JGenerator {
    LinearFunctional m;
    IntPolynomial polynomial;
};

struct KPresentation {
    FanPtr fan;
    JStrategy strategy;
    std::vector<IntPolynomial> sr_generators;
    std::vector<JGenerator> j_generators;
    /// Generators of the final ideal (after saturation for the default).
    std::vector<IntPolynomial> ideal_generators;
    StrongGB gb;
    /// Per ray: x_rho^{d+1} lies in the ideal. Adding those powers to a
    /// reduced strong basis that already contains them changes nothing, so
    /// gb is used as is once every flag is set.
    std::vector<bool> power_in_ideal;
    std::size_t dimension = 0;

    bool all_powers_in_ideal() const;
};

struct PresentationOptions {
    JStrategy strategy = JStrategy::saturated();
    /// Fault injection: omit this J generator (index into j_functionals).
    std::optional<std::size_t> drop_j_generator;
};

/// Throws std::invalid_argument on fans that fail validate().
KPresentation build_presentation(const FanPtr& fan, const PresentationOptions& options = {});

/// Additive group of the default presentation; throws NotFinitelyGenerated
/// when some x_rho^{d+1} is missing from the ideal.
AbelianGroupStructure k_group(const FanPtr& fan);
AbelianGroupStructure k_group(const KPresentation& pres);

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Failures and findings, in a deterministic order.
    std::vector<std::string> witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Check names in report order.
const std::vector<std::string>& check_names();

using Rng = std::mt19937_64;
inline constexpr std::uint64_t default_seed = 0x6b66616eULL;

PLFunction random_pl_function(const FanPtr& fan, Rng& rng, long lo = -3, long hi = 3);

/// x_rho^{d+1} in the ideal with an exactly re-multiplied certificate, and
/// the two-factor vanishing for random f over every positive-dimensional cone.
CheckResult verify_nilpotency(const KPresentation& pres, Rng& rng, std::size_t samples = 5);

/// Minimal non-face monomials map to zero; cone monomials with exponents
/// in [1, d+1] have Z-linearly independent images.
CheckResult verify_sr_kernel(const FanPtr& fan);

/// (I + J : t) and (I + J : t^infinity) both equal I + J.
CheckResult verify_saturation(const KPresentation& pres);

/// 1 in I_sigma + <j(m_sigma)> + <1 - x_rho0> for every cone sigma and ray
/// rho0, with m_sigma >= 1 on sigma's rays found by exact LP.
CheckResult verify_unit_claim(const FanPtr& fan);

/// e^f = sum mu(sigma) e^{f_sigma} for random f.
CheckResult verify_inclusion_exclusion(const FanPtr& fan, Rng& rng, std::size_t samples = 20);

/// Star roundtrip for random f on every positive-dimensional cone.
CheckResult verify_star_roundtrips(const FanPtr& fan, Rng& rng, std::size_t samples = 10);

/// Each J generator is a difference of two exponential products whose
/// exponents differ by exactly its functional m.
CheckResult verify_j_soundness(const KPresentation& pres);

/// Runs the named checks (all when empty) in check_names() order. Each check
/// draws from its own generator seeded from `seed`.
VerificationReport run_verification(const KPresentation& pres, const std::vector<std::string>& checks = {},
                                    std::uint64_t seed = default_seed);

struct StrategyComparison {
    /// I + J_basis already equals its saturation by t.
    bool basis_already_saturated = false;
    struct BoxResult {
        unsigned k = 0;
        bool equal = false;           // I + J_box(k) equals the default ideal
        bool equal_with_powers = false; // after adding x_rho^{d+1}
    };
    std::vector<BoxResult> boxes;
};

StrategyComparison compare_strategies(const FanPtr& fan, unsigned max_k);

} // namespace kfan
