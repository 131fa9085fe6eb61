#ifndef PREPER_UNIPOLY_HPP
#define PREPER_UNIPOLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preper/coeff_rings.hpp"
#include "preper/errors.hpp"

namespace preper {

enum class Var : char { A = 'a', B = 'b' };

// Dense univariate polynomial. coeffs()[k] is the coefficient of x^k and
// the top coefficient is never zero.
template <Coefficient C>
class UniPoly {
public:
    using traits = RingTraits<C>;

    explicit UniPoly(Var var = Var::A) : var_(var) {}
    UniPoly(std::vector<C> coeffs, Var var) : c_(std::move(coeffs)), var_(var) { trim(); }

    static UniPoly constant(C c, Var var) { return UniPoly(std::vector<C>{std::move(c)}, var); }
    static UniPoly monomial(C c, std::size_t deg, Var var)
    {
        std::vector<C> v(deg + 1, traits::zero());
        v[deg] = std::move(c);
        return UniPoly(std::move(v), var);
    }
    // x - r
    static UniPoly linear_root(C r, Var var)
    {
        return UniPoly(std::vector<C>{-r, traits::one()}, var);
    }

    Var var() const noexcept { return var_; }
    const std::vector<C> &coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : traits::zero(); }
    const C &leading() const { return c_.back(); }

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    UniPoly &operator+=(const UniPoly &o)
    {
        check_var(o);
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), traits::zero());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] = c_[k] + o.c_[k];
        }
        trim();
        return *this;
    }
    UniPoly &operator-=(const UniPoly &o) { return *this += -o; }

    friend UniPoly operator+(UniPoly x, const UniPoly &y) { return x += y; }
    friend UniPoly operator-(UniPoly x, const UniPoly &y) { return x -= y; }
    friend UniPoly operator*(const UniPoly &x, const UniPoly &y)
    {
        x.check_var(y);
        if (x.is_zero() || y.is_zero()) {
            return UniPoly(x.var_);
        }
        std::vector<C> r(x.c_.size() + y.c_.size() - 1, traits::zero());
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (traits::is_zero(x.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                traits::addmul(r[i + j], x.c_[i], y.c_[j]);
            }
        }
        return UniPoly(std::move(r), x.var_);
    }
    UniPoly &operator*=(const UniPoly &o) { return *this = *this * o; }

    UniPoly scaled(const C &s) const
    {
        UniPoly r = *this;
        for (auto &x : r.c_) {
            x = x * s;
        }
        r.trim();
        return r;
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly result = constant(traits::one(), var_);
        UniPoly base = *this;
        while (e != 0) {
            if (e & 1u) {
                result *= base;
            }
            e >>= 1u;
            if (e != 0) {
                base *= base;
            }
        }
        return result;
    }

    C eval(const C &x) const
    {
        C acc = traits::zero();
        for (std::size_t k = c_.size(); k-- > 0;) {
            acc = acc * x + c_[k];
        }
        return acc;
    }

    // Exact quotient num / den, or nullopt when den does not divide num.
    static std::optional<UniPoly> try_div(const UniPoly &num, const UniPoly &den)
    {
        num.check_var(den);
        if (den.is_zero()) {
            throw DomainError("division by the zero polynomial");
        }
        if (num.is_zero()) {
            return UniPoly(num.var_);
        }
        if (num.degree() < den.degree()) {
            return std::nullopt;
        }
        std::vector<C> rem = num.c_;
        const std::size_t dd = den.c_.size() - 1;
        std::vector<C> q(rem.size() - dd, traits::zero());
        for (std::size_t k = rem.size(); k-- > dd;) {
            if (traits::is_zero(rem[k])) {
                continue;
            }
            auto c = traits::exact_quotient(rem[k], den.c_[dd]);
            if (!c) {
                return std::nullopt;
            }
            const std::size_t shift = k - dd;
            for (std::size_t j = 0; j <= dd; ++j) {
                traits::submul(rem[shift + j], *c, den.c_[j]);
            }
            q[shift] = std::move(*c);
        }
        for (std::size_t k = 0; k < dd; ++k) {
            if (!traits::is_zero(rem[k])) {
                return std::nullopt;
            }
        }
        return UniPoly(std::move(q), num.var_);
    }

    friend bool operator==(const UniPoly &x, const UniPoly &y)
    {
        return x.var_ == y.var_ && x.c_ == y.c_;
    }

    // Canonical text, highest degree first, in the same term syntax as BiPoly.
    std::string to_string() const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (traits::is_zero(c_[k])) {
                continue;
            }
            TermCoeff t = traits::term(c_[k]);
            std::string mono;
            if (k > 0) {
                mono = std::string(1, static_cast<char>(var_));
                if (k > 1) {
                    mono += "^" + std::to_string(k);
                }
            }
            std::string body;
            if (mono.empty()) {
                body = t.body;
            } else if (t.unit) {
                body = mono;
            } else {
                body = t.body + "*" + mono;
            }
            if (t.negative) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            out += body;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && traits::is_zero(c_.back())) {
            c_.pop_back();
        }
    }
    void check_var(const UniPoly &o) const
    {
        if (o.var_ != var_) {
            throw DomainError("univariate polynomials in different variables");
        }
    }

    std::vector<C> c_;
    Var var_;
};

} // namespace preper

#endif // PREPER_UNIPOLY_HPP
