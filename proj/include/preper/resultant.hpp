#ifndef PREPER_RESULTANT_HPP
#define PREPER_RESULTANT_HPP

#include <utility>
#include <vector>

#include "preper/bipoly.hpp"

namespace preper {

namespace detail {

// Polynomial in b with coefficients in R[a]; index = power of b.
template <Coefficient C>
using RecPoly = std::vector<UniPoly<C>>;

template <Coefficient C>
void trim(RecPoly<C> &p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

template <Coefficient C>
long degree(const RecPoly<C> &p)
{
    return static_cast<long>(p.size()) - 1;
}

template <Coefficient C>
UniPoly<C> exact(const UniPoly<C> &num, const UniPoly<C> &den)
{
    auto q = UniPoly<C>::try_div(num, den);
    if (!q) {
        throw Error("inexact division inside the subresultant sequence");
    }
    return std::move(*q);
}

// lc(b)^(deg a - deg b + 1) * a mod b.
template <Coefficient C>
RecPoly<C> pseudo_remainder(RecPoly<C> r, const RecPoly<C> &d)
{
    const UniPoly<C> &lc = d.back();
    const bool monic = lc.degree() == 0 && lc.leading() == RingTraits<C>::one();
    const long dd = degree(d);
    long e = degree(r) - dd + 1;
    while (degree(r) >= dd) {
        const UniPoly<C> s = r.back();
        const auto shift = static_cast<std::size_t>(degree(r) - dd);
        if (!monic) {
            for (auto &c : r) {
                c = c * lc;
            }
        }
        for (std::size_t j = 0; j < d.size(); ++j) {
            r[shift + j] -= s * d[j];
        }
        trim(r);
        --e;
    }
    if (!monic && e > 0) {
        const UniPoly<C> f = lc.pow(static_cast<unsigned>(e));
        for (auto &c : r) {
            c = c * f;
        }
    }
    return r;
}

} // namespace detail

// Resultant of p and q as polynomials in b, i.e. the determinant of their
// Sylvester matrix with p's rows first, as a polynomial in a. Computed by
// the subresultant PRS. Both inputs must have positive degree in b.
template <Coefficient C>
UniPoly<C> resultant_in_b(const BiPoly<C> &p, const BiPoly<C> &q)
{
    using Row = UniPoly<C>;
    using detail::degree;
    if (p.deg_b() < 1 || q.deg_b() < 1) {
        throw DomainError("resultant_in_b needs positive degree in b on both sides");
    }
    detail::RecPoly<C> a = coefficients_in_b(p);
    detail::RecPoly<C> b = coefficients_in_b(q);
    const Row one = Row::constant(RingTraits<C>::one(), Var::A);
    Row sign = one;
    if (degree(a) < degree(b)) {
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) {
            sign = -sign;
        }
        std::swap(a, b);
    }
    Row g = one;
    Row h = one;
    for (;;) {
        const long delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) {
            sign = -sign;
        }
        detail::RecPoly<C> r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        const Row divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto &c : r) {
            c = detail::exact(c, divisor);
        }
        b = std::move(r);
        g = a.back();
        if (delta >= 1) {
            h = detail::exact(g.pow(static_cast<unsigned>(delta)),
                              h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (b.empty()) {
            return Row(Var::A);
        }
        if (degree(b) == 0) {
            const long da = degree(a);
            const Row last = detail::exact(b.back().pow(static_cast<unsigned>(da)),
                                           h.pow(static_cast<unsigned>(da - 1)));
            return sign * last;
        }
    }
}

// Resultant of two polynomials in the same variable.
template <Coefficient C>
C resultant(const UniPoly<C> &p, const UniPoly<C> &q)
{
    auto lift = [](const UniPoly<C> &u) {
        return from_unipoly(UniPoly<C>(u.coeffs(), Var::B));
    };
    const UniPoly<C> r = resultant_in_b(lift(p), lift(q));
    return r.coeff(0);
}

} // namespace preper

#endif // PREPER_RESULTANT_HPP
