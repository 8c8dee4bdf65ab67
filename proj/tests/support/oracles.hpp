#pragma once

// Brute-force reference implementations used to cross-check the library.
// None of these call into the code they check.

#include "kfan/groebner.hpp"
#include "kfan/pe.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using kfan::Integer;
using kfan::IntVector;

/// Integer lattice kept as an echelon basis (one row per pivot column).
class RowLattice {
public:
    explicit RowLattice(std::size_t dim) : dim_(dim) {}

    void insert(IntVector v)
    {
        for (;;) {
            std::size_t c = first_nonzero(v);
            if (c == dim_)
                return;
            auto it = rows_.find(c);
            if (it == rows_.end()) {
                if (v[c] < 0)
                    negate(v);
                rows_.emplace(c, std::move(v));
                normalize(c);
                return;
            }
            IntVector& r = it->second;
            const Integer a = r[c], b = v[c];
            if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
                axpy(v, -(b / a), r);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            IntVector combined(dim_), rest(dim_);
            for (std::size_t i = 0; i < dim_; ++i) {
                combined[i] = s * r[i] + t * v[i];
                rest[i] = (a / g) * v[i] - (b / g) * r[i];
            }
            r = std::move(combined);
            v = std::move(rest);
            normalize(c);
        }
    }

    bool contains(IntVector v) const
    {
        for (;;) {
            std::size_t c = first_nonzero(v);
            if (c == dim_)
                return true;
            auto it = rows_.find(c);
            if (it == rows_.end() || !mpz_divisible_p(v[c].get_mpz_t(), it->second[c].get_mpz_t()))
                return false;
            axpy(v, -(v[c] / it->second[c]), it->second);
        }
    }

    std::size_t rank() const { return rows_.size(); }
    std::vector<IntVector> basis() const
    {
        std::vector<IntVector> out;
        for (const auto& [c, r] : rows_)
            out.push_back(r);
        return out;
    }

private:
    // Hermite condition around pivot c: entries of row c at later pivots and
    // entries of earlier rows at column c lie in [0, pivot). Keeps
    // coefficients from growing.
    void normalize(std::size_t c)
    {
        IntVector& r = rows_.at(c);
        for (auto it = rows_.upper_bound(c); it != rows_.end(); ++it)
            reduce_entry(r, it->first, it->second);
        for (auto it = rows_.begin(); it != rows_.end() && it->first < c; ++it)
            reduce_entry(it->second, c, r);
    }
    static void reduce_entry(IntVector& v, std::size_t col, const IntVector& pivot_row)
    {
        if (v[col] == 0)
            return;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), pivot_row[col].get_mpz_t());
        if (q != 0)
            axpy(v, -q, pivot_row);
    }
    std::size_t first_nonzero(const IntVector& v) const
    {
        for (std::size_t i = 0; i < dim_; ++i)
            if (v[i] != 0)
                return i;
        return dim_;
    }
    static void negate(IntVector& v)
    {
        for (auto& x : v)
            x = -x;
    }
    static void axpy(IntVector& v, const Integer& k, const IntVector& r)
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += k * r[i];
    }

    std::size_t dim_;
    std::map<std::size_t, IntVector> rows_;
};

/// Nonzero invariant factors of the rows, by elimination without transforms.
inline std::vector<Integer> invariant_factors(std::vector<IntVector> m)
{
    std::vector<Integer> out;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::size_t t = 0;
    while (t < m.size() && t < cols) {
        std::size_t pr = m.size(), pc = cols;
        for (std::size_t i = t; i < m.size(); ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == m.size() || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == m.size())
            break;
        std::swap(m[t], m[pr]);
        for (auto& row : m)
            std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t i = t + 1; i < m.size(); ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t j = t; j < cols; ++j)
                m[i][j] -= q * m[t][j];
            clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t i = t; i < m.size(); ++i)
                m[i][j] -= q * m[i][t];
            clean = clean && m[t][j] == 0;
        }
        if (!clean)
            continue;
        // divisibility: fold a row with a non-multiple into the pivot row
        bool divides = true;
        for (std::size_t i = t + 1; i < m.size() && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                    for (std::size_t k = t; k < cols; ++k)
                        m[t][k] += m[i][k];
                    divides = false;
                }
        if (!divides)
            continue;
        out.push_back(abs(m[t][t]));
        ++t;
    }
    return out;
}

/// All monomials in n variables of total degree <= d.
inline std::vector<kfan::Monomial> monomials_up_to(std::size_t n, unsigned d)
{
    std::vector<kfan::Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

/// The Z-span of {m * g : deg(m g) <= window} in coordinates over the
/// monomials of degree <= window.
struct MacaulayWindow {
    std::vector<kfan::Monomial> monomials;
    std::map<std::vector<std::uint32_t>, std::size_t> column;
    RowLattice lattice;

    MacaulayWindow(const std::vector<kfan::IntPolynomial>& gens, std::size_t nvars, unsigned window)
        : monomials(monomials_up_to(nvars, window)), lattice(monomials.size()), window_(window)
    {
        for (std::size_t i = 0; i < monomials.size(); ++i)
            column.emplace(monomials[i].exponents(), i);
        for (const auto& g : gens) {
            if (g.is_zero() || g.total_degree() > window)
                continue;
            for (const auto& m : monomials_up_to(nvars, window - g.total_degree()))
                lattice.insert(coordinates(g.multiply_term(m, 1)));
        }
    }

    IntVector coordinates(const kfan::IntPolynomial& p) const
    {
        IntVector v(monomials.size());
        for (const auto& t : p.terms())
            v[column.at(t.monomial.exponents())] = t.coefficient;
        return v;
    }

    bool contains(const kfan::IntPolynomial& p) const
    {
        if (p.total_degree() > window_degree())
            return false;
        return lattice.contains(coordinates(p));
    }

    unsigned window_degree() const { return window_; }

    kfan::AbelianGroupStructure quotient() const
    {
        kfan::AbelianGroupStructure s;
        s.free_rank = monomials.size() - lattice.rank();
        for (const auto& d : invariant_factors(lattice.basis()))
            if (d > 1)
                s.invariant_factors.push_back(d);
        return s;
    }

private:
    unsigned window_;
};

/// Z[x]/(I + <x_i^k>) computed exactly: modulo the monomial ideal of pure
/// k-th powers every polynomial lives on the box of exponents < k, and the
/// image of I is spanned by the box-truncated products m * g with m in the box.
inline kfan::AbelianGroupStructure box_quotient(const std::vector<kfan::IntPolynomial>& gens, std::size_t nvars,
                                                unsigned k)
{
    std::vector<kfan::Monomial> box;
    for (const auto& m : monomials_up_to(nvars, nvars * (k - 1))) {
        bool inside = true;
        for (std::size_t i = 0; i < nvars; ++i)
            inside = inside && m[i] < k;
        if (inside)
            box.push_back(m);
    }
    std::map<std::vector<std::uint32_t>, std::size_t> column;
    for (std::size_t i = 0; i < box.size(); ++i)
        column.emplace(box[i].exponents(), i);
    RowLattice lattice(box.size());
    for (const auto& g : gens)
        for (const auto& m : box) {
            IntVector row(box.size());
            for (const auto& t : g.terms()) {
                auto it = column.find((t.monomial * m).exponents());
                if (it != column.end())
                    row[it->second] += t.coefficient;
            }
            lattice.insert(std::move(row));
        }
    kfan::AbelianGroupStructure s;
    s.free_rank = box.size() - lattice.rank();
    for (const auto& d : invariant_factors(lattice.basis()))
        if (d > 1)
            s.invariant_factors.push_back(d);
    return s;
}

/// Point sum_i lambda_i u_{rho_i} on a cone, evaluated in floating point.
inline long double evaluate_pe(const kfan::PEExpression& e, const kfan::Cone& cone, const std::vector<double>& lambda)
{
    long double total = 0;
    for (const auto& [f, c] : e.terms()) {
        long double x = 0;
        for (std::size_t i = 0; i < cone.dim(); ++i)
            x += lambda[i] * f[cone.rays()[i]].get_d();
        total += c.get_d() * std::exp(x);
    }
    return total;
}

inline kfan::IntPolynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree,
                                             long coeff_bound, std::size_t max_terms)
{
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    auto mons = monomials_up_to(nvars, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    std::vector<kfan::Term> terms;
    const std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i)
        terms.push_back({mons[pick(rng)], Integer(coeff(rng))});
    return kfan::IntPolynomial::from_terms(nvars, std::move(terms));
}

/// Same rays as a set and the same cones after matching rays by generator.
inline bool isomorphic_by_rays(const kfan::Fan& a, const kfan::Fan& b)
{
    if (a.rank() != b.rank() || a.num_rays() != b.num_rays() || a.cones().size() != b.cones().size())
        return false;
    std::vector<std::size_t> to_b(a.num_rays(), b.num_rays());
    for (std::size_t i = 0; i < a.num_rays(); ++i)
        for (std::size_t j = 0; j < b.num_rays(); ++j)
            if (a.ray(i) == b.ray(j))
                to_b[i] = j;
    for (auto j : to_b)
        if (j == b.num_rays())
            return false;
    for (const auto& c : a.cones()) {
        std::vector<std::size_t> ids;
        for (auto r : c.rays())
            ids.push_back(to_b[r]);
        std::sort(ids.begin(), ids.end());
        bool found = false;
        for (const auto& d : b.cones())
            found = found || d.rays() == ids;
        if (!found)
            return false;
    }
    return true;
}

} // namespace oracle

namespace kfan {

// gtest value printers
inline void PrintTo(const Cone& c, std::ostream* os)
{
    *os << to_string(c);
}

} // namespace kfan
