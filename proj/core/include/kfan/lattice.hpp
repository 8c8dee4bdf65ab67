#pragma once

// Exact integer linear algebra: matrices over Z, Smith normal form,
// integer system solving and quotient lattices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace kfan {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer content(std::span<const Integer> v); // gcd of entries, 0 for the zero vector
bool is_primitive(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);
    static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    IntMatrix transpose() const;
    IntMatrix select_rows(std::size_t first, std::size_t last) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const Integer> v) const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal with a divisibility chain.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// Diagonal entries of D (length min(rows, cols)).
    IntVector invariant_factors() const;
    std::size_t rank() const;
};

/// Pivoting: smallest nonzero absolute value, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

/// Some x with A x = b over Z, or nullopt when none exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& a, std::span<const Integer> b);

/// Some x with A x = b over Q (the unique one when A has full column rank).
std::optional<RationalVector> solve_rational_system(const IntMatrix& a, std::span<const Rational> b);

/// Surjection P: Z^n -> Z^(n-k) whose kernel is the span of the k given
/// generators. Throws std::invalid_argument if the generators are not part
/// of a lattice basis.
IntMatrix quotient_projection(std::span<const IntVector> span_generators, std::size_t ambient_rank);

/// A lattice basis whose first columns are the given generators, together
/// with its inverse. The completing columns come from the Smith transform.
struct BasisCompletion {
    IntMatrix basis;
    IntMatrix inverse;
};

BasisCompletion complete_basis(std::span<const IntVector> generators, std::size_t ambient_rank);

IntMatrix inverse_unimodular(const IntMatrix& a);

/// Exact rank over Q.
std::size_t integer_rank(const IntMatrix& a);

} // namespace kfan
