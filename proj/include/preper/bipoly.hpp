#ifndef PREPER_BIPOLY_HPP
#define PREPER_BIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preper/coeff_rings.hpp"
#include "preper/errors.hpp"
#include "preper/unipoly.hpp"

namespace preper {

struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    std::uint32_t total() const noexcept { return a + b; }
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Canonical term order: total degree descending, then exponent of b
// descending. Returns true when x comes strictly before y.
inline bool canonical_before(const Monomial &x, const Monomial &y) noexcept
{
    if (x.total() != y.total()) {
        return x.total() > y.total();
    }
    return x.b > y.b;
}

template <Coefficient C>
struct Term {
    Monomial m;
    C c;

    friend bool operator==(const Term &, const Term &) = default;
};

enum class Parity { Even, Odd, Mixed };

const char *to_string(Parity p) noexcept;

namespace detail {

// Row-major (a, b) grid used as an accumulator by multiplication and division.
template <class C>
class DenseGrid {
public:
    DenseGrid(std::size_t max_a, std::size_t max_b)
        : width_(max_a + 1), height_(max_b + 1), cells_(width_ * height_, RingTraits<C>::zero())
    {
    }
    C &at(std::size_t a, std::size_t b) { return cells_[a + width_ * b]; }
    const C &at(std::size_t a, std::size_t b) const { return cells_[a + width_ * b]; }
    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<C> cells_;
};

} // namespace detail

// Sparse bivariate polynomial in (a, b). Terms are kept in canonical order
// with no zero coefficients, so == is structural equality.
template <Coefficient C>
class BiPoly {
public:
    using traits = RingTraits<C>;
    using term_type = Term<C>;

    BiPoly() = default;

    // Combines like terms, drops zeros and sorts into canonical order.
    static BiPoly from_terms(std::vector<term_type> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const term_type &x, const term_type &y) {
            return canonical_before(x.m, y.m);
        });
        BiPoly p;
        for (auto &t : terms) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = p.terms_.back().c + t.c;
            } else {
                if (!p.terms_.empty() && traits::is_zero(p.terms_.back().c)) {
                    p.terms_.pop_back();
                }
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && traits::is_zero(p.terms_.back().c)) {
            p.terms_.pop_back();
        }
        return p;
    }

    // Caller guarantees canonical order, distinct monomials and nonzero coefficients.
    static BiPoly from_sorted_terms(std::vector<term_type> terms)
    {
        BiPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    static BiPoly constant(C c) { return monomial(std::move(c), 0, 0); }
    static BiPoly monomial(C c, std::uint32_t ea, std::uint32_t eb)
    {
        BiPoly p;
        if (!traits::is_zero(c)) {
            p.terms_.push_back({Monomial{ea, eb}, std::move(c)});
        }
        return p;
    }
    static BiPoly one() { return constant(traits::one()); }
    static BiPoly var_a() { return monomial(traits::one(), 1, 0); }
    static BiPoly var_b() { return monomial(traits::one(), 0, 1); }

    std::span<const term_type> terms() const noexcept { return terms_; }
    std::size_t nterms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.total() == 0);
    }

    // Total degree; -1 for zero.
    long deg_total() const noexcept
    {
        return terms_.empty() ? -1 : static_cast<long>(terms_.front().m.total());
    }
    long deg_a() const noexcept
    {
        long d = -1;
        for (const auto &t : terms_) {
            d = std::max(d, static_cast<long>(t.m.a));
        }
        return d;
    }
    long deg_b() const noexcept
    {
        long d = -1;
        for (const auto &t : terms_) {
            d = std::max(d, static_cast<long>(t.m.b));
        }
        return d;
    }

    const term_type &leading_term() const
    {
        if (terms_.empty()) {
            throw DomainError("leading term of the zero polynomial");
        }
        return terms_.front();
    }

    C coeff(std::uint32_t ea, std::uint32_t eb) const
    {
        const Monomial m{ea, eb};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const term_type &t, const Monomial &x) {
                                       return canonical_before(t.m, x);
                                   });
        if (it != terms_.end() && it->m == m) {
            return it->c;
        }
        return traits::zero();
    }

    // Coefficient of b^deg_b as a polynomial in a.
    UniPoly<C> lc_b() const
    {
        const long db = deg_b();
        std::vector<C> v(static_cast<std::size_t>(std::max(deg_a(), 0L)) + 1, traits::zero());
        for (const auto &t : terms_) {
            if (static_cast<long>(t.m.b) == db) {
                v[t.m.a] = t.c;
            }
        }
        return UniPoly<C>(std::move(v), Var::A);
    }

    bool is_monic_in_b() const
    {
        UniPoly<C> lc = lc_b();
        return lc.degree() == 0 && lc.leading() == traits::one();
    }

    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto &t : r.terms_) {
            t.c = -t.c;
        }
        return r;
    }

    friend BiPoly operator+(const BiPoly &x, const BiPoly &y) { return merge(x, y, false); }
    friend BiPoly operator-(const BiPoly &x, const BiPoly &y) { return merge(x, y, true); }
    BiPoly &operator+=(const BiPoly &o) { return *this = *this + o; }
    BiPoly &operator-=(const BiPoly &o) { return *this = *this - o; }

    friend BiPoly operator*(const BiPoly &x, const BiPoly &y) { return multiply(x, y); }
    BiPoly &operator*=(const BiPoly &o) { return *this = *this * o; }

    BiPoly scaled(const C &s) const
    {
        if (traits::is_zero(s)) {
            return {};
        }
        BiPoly r = *this;
        for (auto &t : r.terms_) {
            t.c = t.c * s;
        }
        // Over Z/3 or Z[i] a product of nonzero values is nonzero, so no
        // term can vanish here.
        return r;
    }

    BiPoly pow(unsigned e) const
    {
        BiPoly result = one();
        BiPoly base = *this;
        while (e != 0) {
            if (e & 1u) {
                result = result * base;
            }
            e >>= 1u;
            if (e != 0) {
                base = base * base;
            }
        }
        return result;
    }

    friend bool operator==(const BiPoly &x, const BiPoly &y) { return x.terms_ == y.terms_; }

    // Schoolbook product through a dense accumulator. Used directly for
    // small operands and as the reference path for the integer fast product.
    static BiPoly multiply_dense(const BiPoly &x, const BiPoly &y)
    {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        const auto max_a = static_cast<std::size_t>(x.deg_a() + y.deg_a());
        const auto max_b = static_cast<std::size_t>(x.deg_b() + y.deg_b());
        detail::DenseGrid<C> grid(max_a, max_b);
        for (const auto &s : x.terms_) {
            for (const auto &t : y.terms_) {
                traits::addmul(grid.at(s.m.a + t.m.a, s.m.b + t.m.b), s.c, t.c);
            }
        }
        return collect(grid, static_cast<std::uint32_t>(x.deg_total() + y.deg_total()));
    }

    // Reads a grid back in canonical order, visiting total degrees <= max_total.
    static BiPoly collect(detail::DenseGrid<C> &grid, std::uint32_t max_total)
    {
        std::vector<term_type> out;
        for (long total = max_total; total >= 0; --total) {
            const auto tt = static_cast<std::size_t>(total);
            const std::size_t b_hi = std::min(tt, grid.height() - 1);
            for (long eb = static_cast<long>(b_hi); eb >= 0; --eb) {
                const std::size_t ea = tt - static_cast<std::size_t>(eb);
                if (ea >= grid.width()) {
                    break;
                }
                C &c = grid.at(ea, static_cast<std::size_t>(eb));
                if (!traits::is_zero(c)) {
                    out.push_back({Monomial{static_cast<std::uint32_t>(ea),
                                            static_cast<std::uint32_t>(eb)},
                                   std::move(c)});
                    c = traits::zero();
                }
            }
        }
        return from_sorted_terms(std::move(out));
    }

private:
    static BiPoly multiply(const BiPoly &x, const BiPoly &y);

    static BiPoly merge(const BiPoly &x, const BiPoly &y, bool subtract)
    {
        BiPoly r;
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < x.terms_.size() || j < y.terms_.size()) {
            if (j == y.terms_.size()
                || (i < x.terms_.size() && canonical_before(x.terms_[i].m, y.terms_[j].m))) {
                r.terms_.push_back(x.terms_[i++]);
            } else if (i == x.terms_.size() || canonical_before(y.terms_[j].m, x.terms_[i].m)) {
                r.terms_.push_back(y.terms_[j++]);
                if (subtract) {
                    r.terms_.back().c = -r.terms_.back().c;
                }
            } else {
                C c = subtract ? C(x.terms_[i].c - y.terms_[j].c) : C(x.terms_[i].c + y.terms_[j].c);
                if (!traits::is_zero(c)) {
                    r.terms_.push_back({x.terms_[i].m, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<term_type> terms_;
};

using IntPoly = BiPoly<Int>;
using GaussPoly = BiPoly<GaussInt>;
using F3Poly = BiPoly<F3>;

// Integer products go through Kronecker substitution once they are large.
IntPoly multiply_int(const IntPoly &x, const IntPoly &y);
IntPoly multiply_kronecker(const IntPoly &x, const IntPoly &y);

template <Coefficient C>
BiPoly<C> BiPoly<C>::multiply(const BiPoly &x, const BiPoly &y)
{
    if constexpr (std::is_same_v<C, Int>) {
        return multiply_int(x, y);
    } else {
        return multiply_dense(x, y);
    }
}

// Exact quotient p / d by division in the canonical (graded) term order.
// Returns nullopt when d does not divide p.
template <Coefficient C>
std::optional<BiPoly<C>> try_div(const BiPoly<C> &p, const BiPoly<C> &d)
{
    using traits = RingTraits<C>;
    if (d.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    if (p.is_zero()) {
        return BiPoly<C>{};
    }
    const auto &lead = d.leading_term();
    if (d.nterms() == 1) {
        // Monomial divisor: shift and divide each coefficient.
        std::vector<Term<C>> out;
        out.reserve(p.nterms());
        for (const auto &t : p.terms()) {
            if (t.m.a < lead.m.a || t.m.b < lead.m.b) {
                return std::nullopt;
            }
            auto c = traits::exact_quotient(t.c, lead.c);
            if (!c) {
                return std::nullopt;
            }
            out.push_back({Monomial{t.m.a - lead.m.a, t.m.b - lead.m.b}, std::move(*c)});
        }
        return BiPoly<C>::from_sorted_terms(std::move(out));
    }
    if (p.deg_total() < d.deg_total()) {
        return std::nullopt;
    }
    const auto top = static_cast<std::size_t>(p.deg_total());
    detail::DenseGrid<C> rem(top, top);
    for (const auto &t : p.terms()) {
        rem.at(t.m.a, t.m.b) = t.c;
    }
    std::vector<Term<C>> quotient;
    for (long total = static_cast<long>(top); total >= 0; --total) {
        for (long eb = total; eb >= 0; --eb) {
            const auto ea = static_cast<std::uint32_t>(total - eb);
            C &r = rem.at(ea, static_cast<std::size_t>(eb));
            if (traits::is_zero(r)) {
                continue;
            }
            if (ea < lead.m.a || static_cast<std::uint32_t>(eb) < lead.m.b) {
                return std::nullopt;
            }
            auto c = traits::exact_quotient(r, lead.c);
            if (!c) {
                return std::nullopt;
            }
            const Monomial shift{ea - lead.m.a, static_cast<std::uint32_t>(eb) - lead.m.b};
            for (const auto &t : d.terms()) {
                traits::submul(rem.at(t.m.a + shift.a, t.m.b + shift.b), *c, t.c);
            }
            quotient.push_back({shift, std::move(*c)});
        }
    }
    return BiPoly<C>::from_sorted_terms(std::move(quotient));
}

// Throws NotDivisible when d does not divide p.
template <Coefficient C>
BiPoly<C> exact_div(const BiPoly<C> &p, const BiPoly<C> &d)
{
    auto q = try_div(p, d);
    if (!q) {
        throw NotDivisible();
    }
    return std::move(*q);
}

template <Coefficient C>
BiPoly<C> partial_derivative(const BiPoly<C> &p, Var var)
{
    std::vector<Term<C>> out;
    for (const auto &t : p.terms()) {
        const std::uint32_t e = (var == Var::A) ? t.m.a : t.m.b;
        if (e == 0) {
            continue;
        }
        Monomial m = t.m;
        (var == Var::A ? m.a : m.b) -= 1;
        C c = t.c * RingTraits<C>::from_int(Int(e));
        if (!RingTraits<C>::is_zero(c)) {
            out.push_back({m, std::move(c)});
        }
    }
    return BiPoly<C>::from_terms(std::move(out));
}

// p(-a, -b).
template <Coefficient C>
BiPoly<C> diamond(const BiPoly<C> &p)
{
    std::vector<Term<C>> out(p.terms().begin(), p.terms().end());
    for (auto &t : out) {
        if (t.m.total() % 2 == 1) {
            t.c = -t.c;
        }
    }
    return BiPoly<C>::from_sorted_terms(std::move(out));
}

// Even when p(a,b) = p(-a,-b), Odd when p(a,b) = -p(-a,-b). The zero
// polynomial reports Even.
template <Coefficient C>
Parity parity_of(const BiPoly<C> &p)
{
    bool has_even = false;
    bool has_odd = false;
    for (const auto &t : p.terms()) {
        (t.m.total() % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) {
        return Parity::Mixed;
    }
    return has_odd ? Parity::Odd : Parity::Even;
}

// Swaps the roles of a and b.
template <Coefficient C>
BiPoly<C> swap_variables(const BiPoly<C> &p)
{
    std::vector<Term<C>> out;
    out.reserve(p.nterms());
    for (const auto &t : p.terms()) {
        out.push_back({Monomial{t.m.b, t.m.a}, t.c});
    }
    return BiPoly<C>::from_terms(std::move(out));
}

// Coefficients of b^0, b^1, ... as polynomials in a.
template <Coefficient C>
std::vector<UniPoly<C>> coefficients_in_b(const BiPoly<C> &p)
{
    if (p.is_zero()) {
        return {};
    }
    const auto db = static_cast<std::size_t>(p.deg_b());
    const auto da = static_cast<std::size_t>(p.deg_a());
    std::vector<std::vector<C>> rows(db + 1, std::vector<C>(da + 1, RingTraits<C>::zero()));
    for (const auto &t : p.terms()) {
        rows[t.m.b][t.m.a] = t.c;
    }
    std::vector<UniPoly<C>> out;
    out.reserve(db + 1);
    for (auto &r : rows) {
        out.emplace_back(std::move(r), Var::A);
    }
    return out;
}

template <Coefficient C>
BiPoly<C> from_coefficients_in_b(const std::vector<UniPoly<C>> &rows)
{
    std::vector<Term<C>> out;
    for (std::size_t eb = 0; eb < rows.size(); ++eb) {
        const auto &cs = rows[eb].coeffs();
        for (std::size_t ea = 0; ea < cs.size(); ++ea) {
            if (!RingTraits<C>::is_zero(cs[ea])) {
                out.push_back({Monomial{static_cast<std::uint32_t>(ea),
                                        static_cast<std::uint32_t>(eb)},
                               cs[ea]});
            }
        }
    }
    return BiPoly<C>::from_terms(std::move(out));
}

template <Coefficient C>
BiPoly<C> from_unipoly(const UniPoly<C> &u)
{
    std::vector<Term<C>> out;
    const auto &cs = u.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (RingTraits<C>::is_zero(cs[k])) {
            continue;
        }
        const auto e = static_cast<std::uint32_t>(k);
        out.push_back({u.var() == Var::A ? Monomial{e, 0} : Monomial{0, e}, cs[k]});
    }
    return BiPoly<C>::from_terms(std::move(out));
}

// p(0, b) as a polynomial in b.
template <Coefficient C>
UniPoly<C> specialize_a0(const BiPoly<C> &p)
{
    std::vector<C> v(static_cast<std::size_t>(std::max(p.deg_b(), 0L)) + 1,
                     RingTraits<C>::zero());
    for (const auto &t : p.terms()) {
        if (t.m.a == 0) {
            v[t.m.b] = t.c;
        }
    }
    return UniPoly<C>(std::move(v), Var::B);
}

template <Coefficient C, Coefficient D, class F>
BiPoly<D> map_coefficients(const BiPoly<C> &p, F &&f)
{
    std::vector<Term<D>> out;
    out.reserve(p.nterms());
    for (const auto &t : p.terms()) {
        D c = f(t.c);
        if (!RingTraits<D>::is_zero(c)) {
            out.push_back({t.m, std::move(c)});
        }
    }
    return BiPoly<D>::from_sorted_terms(std::move(out));
}

inline GaussPoly to_gaussian(const IntPoly &p)
{
    return map_coefficients<Int, GaussInt>(p, [](const Int &c) { return GaussInt(c); });
}

inline UniPoly<GaussInt> to_gaussian(const UniPoly<Int> &p)
{
    std::vector<GaussInt> v;
    v.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        v.emplace_back(c);
    }
    return UniPoly<GaussInt>(std::move(v), p.var());
}

// Coefficientwise reduction modulo 3.
F3Poly mod3(const IntPoly &p);

// Nonnegative gcd of the integer coefficients.
Int content(const IntPoly &p);

// Makes the leading canonical coefficient positive.
IntPoly sign_normalized(IntPoly p);

// Exact value of p at (a0, b0).
template <Coefficient C>
GaussRat eval_point(const BiPoly<C> &p, const GaussRat &a0, const GaussRat &b0)
{
    if (p.is_zero()) {
        return GaussRat();
    }
    auto powers = [](const GaussRat &x, long n) {
        std::vector<GaussRat> v(static_cast<std::size_t>(n) + 1, GaussRat(1L));
        for (std::size_t k = 1; k < v.size(); ++k) {
            v[k] = v[k - 1] * x;
        }
        return v;
    };
    const auto pa = powers(a0, p.deg_a());
    const auto pb = powers(b0, p.deg_b());
    GaussRat acc;
    for (const auto &t : p.terms()) {
        acc += to_gauss_rat(t.c) * pa[t.m.a] * pb[t.m.b];
    }
    return acc;
}

// p with b := s(a), expanded by Horner's rule in b.
template <Coefficient C>
UniPoly<GaussInt> substitute_b(const BiPoly<C> &p, const UniPoly<GaussInt> &s)
{
    if (s.var() != Var::A) {
        throw DomainError("substitute_b expects a polynomial in a");
    }
    UniPoly<GaussInt> acc(Var::A);
    if (p.is_zero()) {
        return acc;
    }
    const auto rows = coefficients_in_b(p);
    for (std::size_t k = rows.size(); k-- > 0;) {
        UniPoly<GaussInt> row(Var::A);
        if constexpr (std::is_same_v<C, GaussInt>) {
            row = rows[k];
        } else {
            row = to_gaussian(rows[k]);
        }
        acc = acc * s + row;
    }
    return acc;
}

// Canonical text rendering.
template <Coefficient C>
std::string render(const BiPoly<C> &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &t : p.terms()) {
        const TermCoeff tc = RingTraits<C>::term(t.c);
        std::string mono;
        auto append = [&mono](char v, std::uint32_t e) {
            if (e == 0) {
                return;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += v;
            if (e > 1) {
                mono += '^' + std::to_string(e);
            }
        };
        append('a', t.m.a);
        append('b', t.m.b);
        std::string body;
        if (mono.empty()) {
            body = tc.body;
        } else if (tc.unit) {
            body = mono;
        } else {
            body = tc.body + "*" + mono;
        }
        if (tc.negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        out += body;
    }
    return out;
}

namespace detail {

template <Coefficient C>
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    BiPoly<C> parse()
    {
        skip_ws();
        if (pos_ == s_.size()) {
            throw ParseError("empty input", pos_);
        }
        BiPoly<C> p = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    BiPoly<C> expr()
    {
        BiPoly<C> acc;
        bool first = true;
        for (;;) {
            skip_ws();
            bool negate = false;
            if (peek() == '+' || peek() == '-') {
                negate = (s_[pos_] == '-');
                ++pos_;
            } else if (!first) {
                return acc;
            }
            BiPoly<C> t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
    }

    BiPoly<C> term()
    {
        BiPoly<C> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') {
                return acc;
            }
            ++pos_;
            acc = acc * factor();
        }
    }

    BiPoly<C> factor()
    {
        BiPoly<C> base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            Int e = number();
            if (!e.fits_uint_p() || e > 1000000) {
                throw ParseError("exponent out of range", start);
            }
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    BiPoly<C> primary()
    {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly<C> inner = expr();
            skip_ws();
            if (peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (c == 'a') {
            ++pos_;
            return BiPoly<C>::var_a();
        }
        if (c == 'b') {
            ++pos_;
            return BiPoly<C>::var_b();
        }
        if (c == 'i') {
            if constexpr (RingTraits<C>::has_imaginary_unit) {
                ++pos_;
                return BiPoly<C>::constant(C(0L, 1L));
            } else {
                throw ParseError("imaginary unit not allowed in this coefficient domain", pos_);
            }
        }
        if (c >= '0' && c <= '9') {
            return BiPoly<C>::constant(RingTraits<C>::from_int(number()));
        }
        if (c == '\0') {
            throw ParseError("unexpected end of input", pos_);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Int number()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError("expected a number", pos_);
        }
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) {
            ++pos_;
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses sums of products of integers, a, b, i (Gaussian domain only),
// parentheses and nonnegative integer powers.
template <Coefficient C>
BiPoly<C> parse(std::string_view text)
{
    return detail::Parser<C>(text).parse();
}

} // namespace preper

#endif // PREPER_BIPOLY_HPP
