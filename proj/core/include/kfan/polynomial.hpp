#pragma once

// Sparse multivariate polynomials with integer coefficients.

#include "kfan/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kfan {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    /// The single variable of a pure power, or nvars() if there is none.
    std::size_t pure_power_variable() const;

    Monomial operator*(const Monomial& rhs) const;
    /// Exact quotient; requires rhs.divides(*this).
    Monomial operator/(const Monomial& rhs) const;

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// A term order. BlockElimination(k) compares the first k variables by
/// graded reverse lex, breaking ties by graded reverse lex on the rest.
struct MonomialOrder {
    OrderKind kind = OrderKind::GradedReverseLex;
    std::size_t block = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {OrderKind::BlockElimination, k}; }

    /// <0, 0, >0 like strcmp.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    std::string name() const;

    bool operator==(const MonomialOrder&) const = default;
};

struct Term {
    Monomial monomial;
    Integer coefficient;
};

/// Terms are kept sorted in increasing order, so the leading term is last.
class IntPolynomial {
public:
    explicit IntPolynomial(std::size_t nvars = 0, MonomialOrder order = MonomialOrder::grevlex());

    static IntPolynomial constant(std::size_t nvars, const Integer& c,
                                  MonomialOrder order = MonomialOrder::grevlex());
    static IntPolynomial variable(std::size_t nvars, std::size_t var,
                                  MonomialOrder order = MonomialOrder::grevlex());
    static IntPolynomial monomial(const Monomial& m, const Integer& c = 1,
                                  MonomialOrder order = MonomialOrder::grevlex());
    static IntPolynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                                    MonomialOrder order = MonomialOrder::grevlex());

    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Term& leading_term() const { return terms_.back(); }
    const Monomial& leading_monomial() const { return terms_.back().monomial; }
    const Integer& leading_coefficient() const { return terms_.back().coefficient; }
    std::uint32_t total_degree() const;
    Integer coefficient_of(const Monomial& m) const;

    IntPolynomial with_order(MonomialOrder order) const;
    /// Inserts `count` new variables in front of the existing ones.
    IntPolynomial prepend_variables(std::size_t count, MonomialOrder order) const;
    /// Removes the first `count` variables, which must not occur.
    IntPolynomial drop_leading_variables(std::size_t count, MonomialOrder order) const;
    bool involves_leading_variables(std::size_t count) const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Integer& c) const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);

    IntPolynomial multiply_term(const Monomial& m, const Integer& c) const;
    /// *this -= c * m * g
    void subtract_multiple(const Integer& c, const Monomial& m, const IntPolynomial& g);
    IntPolynomial pow(unsigned k) const;
    void drop_leading_term() { terms_.pop_back(); }

    bool operator==(const IntPolynomial& rhs) const;

    /// Variables print as x0, x1, ... unless names are given.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const IntPolynomial& rhs) const;

    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

/// Exact division; throws std::domain_error when f does not divide p.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& f);

} // namespace kfan
