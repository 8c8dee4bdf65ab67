#include "kfan/rational_lp.hpp"

#include <stdexcept>

namespace kfan {

std::optional<RationalVector> find_feasible_point(const std::vector<LinearConstraint>& constraints,
                                                  std::size_t num_variables)
{
    const std::size_t n = num_variables;
    const std::size_t rows = constraints.size();
    if (rows == 0)
        return RationalVector(n);

    std::size_t num_slacks = 0;
    for (const auto& c : constraints) {
        if (c.coefficients.size() != n)
            throw std::invalid_argument("find_feasible_point: constraint length mismatch");
        if (c.relation != Relation::Equal)
            ++num_slacks;
    }

    // columns: m+ (n) | m- (n) | slacks | artificials (rows) | rhs
    const std::size_t art0 = 2 * n + num_slacks;
    const std::size_t width = art0 + rows;
    std::vector<RationalVector> tab(rows, RationalVector(width + 1));
    std::vector<std::size_t> basis(rows);

    std::size_t slack = 2 * n;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& c = constraints[i];
        auto& row = tab[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = c.coefficients[j];
            row[n + j] = -c.coefficients[j];
        }
        if (c.relation == Relation::GreaterEqual)
            row[slack++] = -1;
        else if (c.relation == Relation::LessEqual)
            row[slack++] = 1;
        row[width] = c.rhs;
        if (row[width] < 0)
            for (auto& x : row)
                x = -x;
        row[art0 + i] = 1;
        basis[i] = art0 + i;
    }

    // phase-one reduced costs for minimizing the sum of artificials
    RationalVector cost(width + 1);
    for (std::size_t j = 0; j <= width; ++j) {
        if (j >= art0 && j < width)
            continue;
        for (std::size_t i = 0; i < rows; ++i)
            cost[j] -= tab[i][j];
    }

    for (;;) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < width; ++j)
            if (cost[j] < 0) {
                entering = j;
                break;
            }
        if (entering == width)
            break;

        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][entering] <= 0)
                continue;
            Rational ratio = tab[i][width] / tab[i][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == rows)
            throw std::logic_error("find_feasible_point: unbounded phase-one problem");

        Rational pivot = tab[leaving][entering];
        for (auto& x : tab[leaving])
            x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leaving || tab[i][entering] == 0)
                continue;
            Rational f = tab[i][entering];
            for (std::size_t j = 0; j <= width; ++j)
                tab[i][j] -= f * tab[leaving][j];
        }
        Rational f = cost[entering];
        for (std::size_t j = 0; j <= width; ++j)
            cost[j] -= f * tab[leaving][j];
        basis[leaving] = entering;
    }

    // objective value is -cost[width]
    if (cost[width] != 0)
        return std::nullopt;

    RationalVector x(2 * n);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < 2 * n)
            x[basis[i]] = tab[i][width];
    RationalVector m(n);
    for (std::size_t j = 0; j < n; ++j)
        m[j] = x[j] - x[n + j];
    return m;
}

IntVector clear_denominators(const RationalVector& v)
{
    Integer l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v)
        out.push_back(q.get_num() * (l / q.get_den()));
    return out;
}

} // namespace kfan
