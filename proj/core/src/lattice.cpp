#include "kfan/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace kfan {

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(std::span<const Integer> v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_primitive(std::span<const Integer> v)
{
    return content(v) == 1;
}

std::string to_string(std::span<const Integer> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t rows)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("IntMatrix::from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("IntMatrix::from_rows: length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_rows(std::size_t first, std::size_t last) const
{
    IntMatrix m(last - first, cols_);
    for (std::size_t r = first; r < last; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r - first, c) = (*this)(r, c);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p(i, j) += a * rhs(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const
{
    if (cols_ != v.size())
        throw std::invalid_argument("IntMatrix: dimension mismatch in matrix-vector product");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            out[i] += (*this)(i, k) * v[k];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ' ';
            os << m(r, c);
        }
    }
    return os << ']';
}

IntVector SmithDecomposition::invariant_factors() const
{
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        out.push_back(D(i, i));
    return out;
}

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            ++r;
    return r;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct Position {
    std::size_t row;
    std::size_t col;
};

std::optional<Position> smallest_entry(const IntMatrix& d, std::size_t t)
{
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Integer a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = Position{i, j};
                best_abs = a;
            }
        }
    return best;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            auto pivot = smallest_entry(d, t);
            if (!pivot)
                return {std::move(u), std::move(d), std::move(v)};
            d.swap_rows(t, pivot->row);
            u.swap_rows(t, pivot->row);
            d.swap_cols(t, pivot->col);
            v.swap_cols(t, pivot->col);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = -floor_div(d(i, t), d(t, t));
                d.add_row(i, t, q);
                u.add_row(i, t, q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = -floor_div(d(t, j), d(t, t));
                d.add_col(j, t, q);
                v.add_col(j, t, q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility chain: fold an offending row into the pivot row
            bool divides_rest = true;
            for (std::size_t i = t + 1; i < m && divides_rest; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides_rest = false;
                        break;
                    }
            if (!divides_rest)
                continue;

            if (d(t, t) < 0) {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<IntVector> solve_integer_system(const IntMatrix& a, std::span<const Integer> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integer_system: dimension mismatch");
    auto snf = smith_normal_form(a);
    IntVector c = snf.U * b;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const bool on_diagonal = i < a.cols();
        const Integer dii = on_diagonal ? snf.D(i, i) : Integer(0);
        if (dii == 0) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(c[i].get_mpz_t(), dii.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), dii.get_mpz_t());
    }
    return snf.V * std::span<const Integer>(y);
}

std::optional<RationalVector> solve_rational_system(const IntMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_rational_system: dimension mismatch");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<RationalVector> aug(m, RationalVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = Rational(a(i, j));
        aug[i][n] = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug[p][c] == 0)
            ++p;
        if (p == m)
            continue;
        std::swap(aug[r], aug[p]);
        Rational inv = 1 / aug[r][c];
        for (auto& x : aug[r])
            x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0)
                continue;
            Rational f = aug[i][c];
            for (std::size_t j = c; j <= n; ++j)
                aug[i][j] -= f * aug[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][n] != 0)
            return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_cols[i]] = aug[i][n];
    return x;
}

namespace {

SmithDecomposition checked_generator_snf(std::span<const IntVector> gens, std::size_t n)
{
    auto g = IntMatrix::from_columns(gens, n);
    auto snf = smith_normal_form(g);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i >= n || snf.D(i, i) != 1)
            throw std::invalid_argument("generators do not extend to a lattice basis");
    return snf;
}

} // namespace

IntMatrix quotient_projection(std::span<const IntVector> span_generators, std::size_t ambient_rank)
{
    if (span_generators.empty())
        return IntMatrix::identity(ambient_rank);
    auto snf = checked_generator_snf(span_generators, ambient_rank);
    return snf.U.select_rows(span_generators.size(), ambient_rank);
}

BasisCompletion complete_basis(std::span<const IntVector> generators, std::size_t ambient_rank)
{
    const std::size_t k = generators.size();
    const std::size_t n = ambient_rank;
    if (k == 0) {
        return {IntMatrix::identity(n), IntMatrix::identity(n)};
    }
    auto snf = checked_generator_snf(generators, n);
    // U G V = [I; 0], so B = [G | U^{-1}[:, k:]] satisfies U B = diag(V^{-1}, I)
    // and B^{-1} = diag(V, I) U.
    IntMatrix block(n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            block(i, j) = snf.V(i, j);
    for (std::size_t i = k; i < n; ++i)
        block(i, i) = 1;
    IntMatrix inverse = block * snf.U;
    IntMatrix u_inv = inverse_unimodular(snf.U);
    IntMatrix basis(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            basis(r, c) = generators[c][r];
        for (std::size_t c = k; c < n; ++c)
            basis(r, c) = u_inv(r, c);
    }
    return {std::move(basis), std::move(inverse)};
}

IntMatrix inverse_unimodular(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("inverse_unimodular: matrix not square");
    IntMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RationalVector e(n);
        e[c] = 1;
        auto x = solve_rational_system(a, e);
        if (!x)
            throw std::invalid_argument("inverse_unimodular: singular matrix");
        for (std::size_t r = 0; r < n; ++r) {
            if ((*x)[r].get_den() != 1)
                throw std::invalid_argument("inverse_unimodular: matrix not unimodular");
            inv(r, c) = (*x)[r].get_num();
        }
    }
    return inv;
}

namespace {

constexpr std::uint64_t kRankPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    b %= kRankPrime;
    while (e) {
        if (e & 1)
            r = r * b % kRankPrime;
        b = b * b % kRankPrime;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_prime(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<std::uint64_t>> w(m, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i][j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), kRankPrime);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && w[p][c] == 0)
            ++p;
        if (p == m)
            continue;
        std::swap(w[r], w[p]);
        const std::uint64_t inv = pow_mod(w[r][c], kRankPrime - 2);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (w[i][c] == 0)
                continue;
            const std::uint64_t f = w[i][c] * inv % kRankPrime;
            for (std::size_t j = c; j < n; ++j)
                w[i][j] = (w[i][j] + (kRankPrime - f) * w[r][j]) % kRankPrime;
        }
        ++r;
    }
    return r;
}

std::size_t bareiss_rank(const IntMatrix& a)
{
    IntMatrix m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

} // namespace

std::size_t integer_rank(const IntMatrix& a)
{
    // rank mod p never exceeds the rank over Q, so a full modular rank is exact
    const std::size_t modular = rank_mod_prime(a);
    if (modular == std::min(a.rows(), a.cols()))
        return modular;
    return bareiss_rank(a);
}

} // namespace kfan
