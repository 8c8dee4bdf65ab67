#include "kfan/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kfan {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps))
{
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, std::uint32_t power)
{
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(var) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

std::size_t Monomial::pure_power_variable() const
{
    std::size_t found = exps_.size();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (found != exps_.size())
            return exps_.size();
        found = i;
    }
    return found;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] += rhs.exps_[i];
    m.degree_ += rhs.degree_;
    return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const
{
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] -= rhs.exps_[i];
    m.degree_ -= rhs.degree_;
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last)
{
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = first; i < last; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = last; i-- > first;)
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind) {
    case OrderKind::GradedReverseLex:
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? -1 : 1;
        return grevlex_range(a, b, 0, a.nvars());
    case OrderKind::Lex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    case OrderKind::BlockElimination: {
        const std::size_t k = std::min(block, a.nvars());
        if (int c = grevlex_range(a, b, 0, k))
            return c;
        return grevlex_range(a, b, k, a.nvars());
    }
    }
    return 0;
}

std::string MonomialOrder::name() const
{
    switch (kind) {
    case OrderKind::GradedReverseLex:
        return "grevlex";
    case OrderKind::Lex:
        return "lex";
    case OrderKind::BlockElimination:
        return "elimination(" + std::to_string(block) + ")";
    }
    return "?";
}

IntPolynomial::IntPolynomial(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

IntPolynomial IntPolynomial::constant(std::size_t nvars, const Integer& c, MonomialOrder order)
{
    return monomial(Monomial(nvars), c, order);
}

IntPolynomial IntPolynomial::variable(std::size_t nvars, std::size_t var, MonomialOrder order)
{
    return monomial(Monomial::variable(nvars, var), 1, order);
}

IntPolynomial IntPolynomial::monomial(const Monomial& m, const Integer& c, MonomialOrder order)
{
    IntPolynomial p(m.nvars(), order);
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

IntPolynomial IntPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms, MonomialOrder order)
{
    IntPolynomial p(nvars, order);
    for (const auto& t : terms)
        if (t.monomial.nvars() != nvars)
            throw std::invalid_argument("IntPolynomial: monomial has the wrong number of variables");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.less(a.monomial, b.monomial); });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient == 0)
                p.terms_.pop_back();
        } else if (t.coefficient != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool IntPolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint32_t IntPolynomial::total_degree() const
{
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.monomial.degree());
    return d;
}

Integer IntPolynomial::coefficient_of(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.monomial == m)
            return t.coefficient;
    return 0;
}

IntPolynomial IntPolynomial::with_order(MonomialOrder order) const
{
    if (order == order_)
        return *this;
    return from_terms(nvars_, terms_, order);
}

IntPolynomial IntPolynomial::prepend_variables(std::size_t count, MonomialOrder order) const
{
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(count, 0);
        e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return from_terms(nvars_ + count, std::move(terms), order);
}

bool IntPolynomial::involves_leading_variables(std::size_t count) const
{
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < count; ++i)
            if (t.monomial[i])
                return true;
    return false;
}

IntPolynomial IntPolynomial::drop_leading_variables(std::size_t count, MonomialOrder order) const
{
    if (involves_leading_variables(count))
        throw std::invalid_argument("drop_leading_variables: variable still occurs");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(t.monomial.exponents().begin() + static_cast<std::ptrdiff_t>(count),
                                     t.monomial.exponents().end());
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return from_terms(nvars_ - count, std::move(terms), order);
}

void IntPolynomial::check_compatible(const IntPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_ || !(order_ == rhs.order_))
        throw std::invalid_argument("IntPolynomial: operands live in different rings");
}

void IntPolynomial::subtract_multiple(const Integer& c, const Monomial& m, const IntPolynomial& g)
{
    check_compatible(g);
    if (c == 0 || g.is_zero())
        return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Monomial mb = b->monomial * m;
        int cmp = a == terms_.end() ? 1 : order_.compare(a->monomial, mb);
        if (cmp < 0) {
            out.push_back(std::move(*a++));
        } else if (cmp > 0) {
            out.push_back({std::move(mb), -c * b->coefficient});
            ++b;
        } else {
            Integer coeff = a->coefficient - c * b->coefficient;
            if (coeff != 0)
                out.push_back({std::move(mb), std::move(coeff)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const
{
    IntPolynomial p(*this);
    p += rhs;
    return p;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const
{
    IntPolynomial p(*this);
    p -= rhs;
    return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    subtract_multiple(-1, Monomial(nvars_), rhs);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    subtract_multiple(1, Monomial(nvars_), rhs);
    return *this;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial p(*this);
    for (auto& t : p.terms_)
        t.coefficient = -t.coefficient;
    return p;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const
{
    check_compatible(rhs);
    std::vector<Term> terms;
    terms.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_)
            terms.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    return from_terms(nvars_, std::move(terms), order_);
}

IntPolynomial IntPolynomial::operator*(const Integer& c) const
{
    if (c == 0)
        return IntPolynomial(nvars_, order_);
    IntPolynomial p(*this);
    for (auto& t : p.terms_)
        t.coefficient *= c;
    return p;
}

IntPolynomial IntPolynomial::multiply_term(const Monomial& m, const Integer& c) const
{
    IntPolynomial p(nvars_, order_);
    if (c == 0)
        return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back({t.monomial * m, t.coefficient * c});
    return p;
}

IntPolynomial IntPolynomial::pow(unsigned k) const
{
    IntPolynomial result = constant(nvars_, 1, order_);
    IntPolynomial base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

bool IntPolynomial::operator==(const IntPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size())
        return false;
    const IntPolynomial& other = order_ == rhs.order_ ? rhs : rhs.with_order(order_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].monomial == other.terms_[i].monomial) ||
            terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->coefficient;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool wrote = false;
        if (c != 1 || it->monomial.is_one()) {
            os << c;
            wrote = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto e = it->monomial[i];
            if (!e)
                continue;
            if (wrote)
                os << '*';
            if (i < names.size())
                os << names[i];
            else
                os << 'x' << i;
            if (e > 1)
                os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& f)
{
    if (f.is_zero())
        throw std::domain_error("exact_divide: division by zero");
    IntPolynomial rest = p.with_order(f.order());
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!f.leading_monomial().divides(lt.monomial) ||
            !mpz_divisible_p(lt.coefficient.get_mpz_t(), f.leading_coefficient().get_mpz_t()))
            throw std::domain_error("exact_divide: divisor does not divide");
        Monomial m = lt.monomial / f.leading_monomial();
        Integer c;
        mpz_divexact(c.get_mpz_t(), lt.coefficient.get_mpz_t(), f.leading_coefficient().get_mpz_t());
        rest.subtract_multiple(c, m, f);
        quotient.push_back({std::move(m), std::move(c)});
    }
    return IntPolynomial::from_terms(f.nvars(), std::move(quotient), f.order());
}

} // namespace kfan
