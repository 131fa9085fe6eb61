#include "preper/coeff_rings.hpp"

#include <array>

#include "preper/errors.hpp"

namespace preper {

Int int_gcd(const Int &x, const Int &y)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

GaussInt &GaussInt::operator+=(const GaussInt &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussInt &GaussInt::operator-=(const GaussInt &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussInt &GaussInt::operator*=(const GaussInt &o)
{
    Int re = re_ * o.re_ - im_ * o.im_;
    Int im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::optional<GaussInt> GaussInt::exact_quotient(const GaussInt &x, const GaussInt &y)
{
    if (y.is_zero()) {
        throw DomainError("division by zero Gaussian integer");
    }
    if (y.is_real()) {
        const Int &d = y.re();
        if (!mpz_divisible_p(x.re_.get_mpz_t(), d.get_mpz_t())
            || !mpz_divisible_p(x.im_.get_mpz_t(), d.get_mpz_t())) {
            return std::nullopt;
        }
        Int re, im;
        mpz_divexact(re.get_mpz_t(), x.re_.get_mpz_t(), d.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), x.im_.get_mpz_t(), d.get_mpz_t());
        return GaussInt(std::move(re), std::move(im));
    }
    const GaussInt num = x * y.conj();
    const Int n = y.norm();
    if (!mpz_divisible_p(num.re_.get_mpz_t(), n.get_mpz_t())
        || !mpz_divisible_p(num.im_.get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    return GaussInt(Int(num.re_ / n), Int(num.im_ / n));
}

std::string GaussInt::to_string() const
{
    const int sr = sgn(re_);
    const int si = sgn(im_);
    if (si == 0) {
        return re_.get_str();
    }
    std::string imag;
    if (abs(im_) == 1) {
        imag = "i";
    } else {
        imag = Int(abs(im_)).get_str() + "*i";
    }
    if (sr == 0) {
        return (si < 0 ? "-" : "") + imag;
    }
    return re_.get_str() + (si < 0 ? "-" : "+") + imag;
}

UnitSplit gauss_unit_normalize(const GaussInt &z)
{
    if (z.is_zero()) {
        throw DomainError("unit normalization of zero");
    }
    static const std::array<GaussInt, 4> units = {GaussInt(1L), GaussInt(0L, 1L), GaussInt(-1L),
                                                  GaussInt(0L, -1L)};
    for (const auto &u : units) {
        // z / u = z * conj(u) since |u| = 1.
        GaussInt w = z * u.conj();
        if (sgn(w.re()) > 0 && sgn(w.im()) >= 0) {
            return {u, std::move(w)};
        }
    }
    throw DomainError("unreachable: no unit places value in the canonical quadrant");
}

GaussRat::GaussRat(GaussInt num, Int den) : num_(std::move(num)), den_(std::move(den))
{
    if (sgn(den_) == 0) {
        throw DomainError("zero denominator");
    }
    reduce();
}

void GaussRat::reduce()
{
    if (sgn(den_) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Int g = int_gcd(int_gcd(num_.re(), num_.im()), den_);
    if (g != 1) {
        num_ = GaussInt(Int(num_.re() / g), Int(num_.im() / g));
        den_ /= g;
    }
}

GaussRat &GaussRat::operator+=(const GaussRat &o)
{
    num_ = num_ * GaussInt(o.den_) + o.num_ * GaussInt(den_);
    den_ *= o.den_;
    reduce();
    return *this;
}

GaussRat &GaussRat::operator-=(const GaussRat &o)
{
    return *this += -o;
}

GaussRat &GaussRat::operator*=(const GaussRat &o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

std::string GaussRat::to_string() const
{
    if (den_ == 1) {
        return num_.to_string();
    }
    std::string n = num_.to_string();
    if (!num_.is_real() && sgn(num_.re()) != 0) {
        n = "(" + n + ")";
    }
    return n + "/" + den_.get_str();
}

F3 F3::from_int(const Int &v)
{
    return F3(static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 3)));
}

std::optional<Int> RingTraits<Int>::exact_quotient(const Int &x, const Int &y)
{
    if (sgn(y) == 0) {
        throw DomainError("division by zero integer");
    }
    if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) {
        return std::nullopt;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

TermCoeff RingTraits<Int>::term(const Int &x)
{
    TermCoeff t;
    t.negative = sgn(x) < 0;
    Int m = abs(x);
    t.unit = (m == 1);
    t.body = m.get_str();
    return t;
}

TermCoeff RingTraits<GaussInt>::term(const GaussInt &x)
{
    TermCoeff t;
    if (x.is_real()) {
        t.negative = sgn(x.re()) < 0;
        Int m = abs(x.re());
        t.unit = (m == 1);
        t.body = m.get_str();
    } else if (sgn(x.re()) == 0) {
        t.negative = sgn(x.im()) < 0;
        Int m = abs(x.im());
        t.body = (m == 1) ? std::string("i") : m.get_str() + "*i";
    } else {
        t.body = "(" + x.to_string() + ")";
    }
    return t;
}

std::optional<F3> RingTraits<F3>::exact_quotient(F3 x, F3 y)
{
    if (y.is_zero()) {
        throw DomainError("division by zero in F3");
    }
    return x * y.inverse();
}

TermCoeff RingTraits<F3>::term(F3 x)
{
    TermCoeff t;
    t.negative = (x.value() == 2);
    t.unit = true;
    t.body = "1";
    if (x.is_zero()) {
        t.unit = false;
        t.body = "0";
    }
    return t;
}

std::string RingTraits<F3>::to_string(F3 x)
{
    return x.value() == 2 ? "-1" : std::to_string(x.value());
}

} // namespace preper
