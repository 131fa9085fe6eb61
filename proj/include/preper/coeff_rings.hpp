#ifndef PREPER_COEFF_RINGS_HPP
#define PREPER_COEFF_RINGS_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace preper {

// Arbitrary precision signed integer.
using Int = mpz_class;

// Nonnegative gcd, with gcd(0, 0) = 0.
Int int_gcd(const Int &x, const Int &y);

// Gaussian integer re + im*i.
class GaussInt {
public:
    GaussInt() = default;
    GaussInt(Int re, Int im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussInt(long re, long im = 0) : re_(re), im_(im) {}

    static GaussInt i() { return GaussInt(0L, 1L); }

    const Int &re() const noexcept { return re_; }
    const Int &im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussInt conj() const { return {re_, -im_}; }
    Int norm() const { return re_ * re_ + im_ * im_; }

    GaussInt operator-() const { return {-re_, -im_}; }
    GaussInt &operator+=(const GaussInt &o);
    GaussInt &operator-=(const GaussInt &o);
    GaussInt &operator*=(const GaussInt &o);

    friend GaussInt operator+(GaussInt x, const GaussInt &y) { return x += y; }
    friend GaussInt operator-(GaussInt x, const GaussInt &y) { return x -= y; }
    friend GaussInt operator*(GaussInt x, const GaussInt &y) { return x *= y; }
    friend bool operator==(const GaussInt &x, const GaussInt &y)
    {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

    // x / y when y divides x in Z[i], otherwise nullopt.
    static std::optional<GaussInt> exact_quotient(const GaussInt &x, const GaussInt &y);

    std::string to_string() const;

private:
    Int re_{0};
    Int im_{0};
};

struct UnitSplit {
    GaussInt unit;
    GaussInt normalized;
};

// Splits z = unit * normalized with unit in {1, i, -1, -i} and normalized
// in the quadrant re > 0, im >= 0. Throws DomainError on zero.
UnitSplit gauss_unit_normalize(const GaussInt &z);

// Element of Q(i) with a positive integer denominator, kept reduced so that
// gcd(re, im, den) = 1.
class GaussRat {
public:
    GaussRat() : den_(1) {}
    GaussRat(GaussInt num, Int den = 1);
    GaussRat(long v) : num_(v), den_(1) {}

    const GaussInt &num() const noexcept { return num_; }
    const Int &den() const noexcept { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    GaussRat operator-() const { return GaussRat(-num_, den_); }
    GaussRat &operator+=(const GaussRat &o);
    GaussRat &operator-=(const GaussRat &o);
    GaussRat &operator*=(const GaussRat &o);

    friend GaussRat operator+(GaussRat x, const GaussRat &y) { return x += y; }
    friend GaussRat operator-(GaussRat x, const GaussRat &y) { return x -= y; }
    friend GaussRat operator*(GaussRat x, const GaussRat &y) { return x *= y; }
    friend bool operator==(const GaussRat &x, const GaussRat &y)
    {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    std::string to_string() const;

private:
    void reduce();

    GaussInt num_;
    Int den_;
};

// The field with three elements.
class F3 {
public:
    constexpr F3() = default;
    constexpr F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}
    static F3 from_int(const Int &v);

    constexpr int value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    constexpr F3 operator-() const { return F3(3 - v_); }
    constexpr F3 &operator+=(F3 o) { v_ = static_cast<std::uint8_t>((v_ + o.v_) % 3); return *this; }
    constexpr F3 &operator-=(F3 o) { v_ = static_cast<std::uint8_t>((v_ + 3 - o.v_) % 3); return *this; }
    constexpr F3 &operator*=(F3 o) { v_ = static_cast<std::uint8_t>((v_ * o.v_) % 3); return *this; }
    // Nonzero elements are their own inverses.
    constexpr F3 inverse() const { return *this; }

    friend constexpr F3 operator+(F3 x, F3 y) { return x += y; }
    friend constexpr F3 operator-(F3 x, F3 y) { return x -= y; }
    friend constexpr F3 operator*(F3 x, F3 y) { return x *= y; }
    friend constexpr bool operator==(F3 x, F3 y) = default;

private:
    std::uint8_t v_ = 0;
};

// How a coefficient is printed inside a polynomial term.
struct TermCoeff {
    bool negative = false;
    std::string body;  // magnitude; parenthesised when it is a compound Gaussian
    bool unit = false; // magnitude is 1 and is omitted in front of a monomial
};

// Per-domain operations used by the generic polynomial code.
template <class C>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static Int from_int(const Int &v) { return v; }
    static bool is_zero(const Int &x) { return sgn(x) == 0; }
    static void addmul(Int &acc, const Int &x, const Int &y)
    {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    static void submul(Int &acc, const Int &x, const Int &y)
    {
        mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    static std::optional<Int> exact_quotient(const Int &x, const Int &y);
    static TermCoeff term(const Int &x);
    static std::string to_string(const Int &x) { return x.get_str(); }
    static constexpr bool has_imaginary_unit = false;
};

template <>
struct RingTraits<GaussInt> {
    static GaussInt zero() { return {}; }
    static GaussInt one() { return GaussInt(1L); }
    static GaussInt from_int(const Int &v) { return GaussInt(v); }
    static bool is_zero(const GaussInt &x) { return x.is_zero(); }
    static void addmul(GaussInt &acc, const GaussInt &x, const GaussInt &y) { acc += x * y; }
    static void submul(GaussInt &acc, const GaussInt &x, const GaussInt &y) { acc -= x * y; }
    static std::optional<GaussInt> exact_quotient(const GaussInt &x, const GaussInt &y)
    {
        return GaussInt::exact_quotient(x, y);
    }
    static TermCoeff term(const GaussInt &x);
    static std::string to_string(const GaussInt &x) { return x.to_string(); }
    static constexpr bool has_imaginary_unit = true;
};

template <>
struct RingTraits<F3> {
    static F3 zero() { return {}; }
    static F3 one() { return F3(1); }
    static F3 from_int(const Int &v) { return F3::from_int(v); }
    static bool is_zero(F3 x) { return x.is_zero(); }
    static void addmul(F3 &acc, F3 x, F3 y) { acc += x * y; }
    static void submul(F3 &acc, F3 x, F3 y) { acc -= x * y; }
    static std::optional<F3> exact_quotient(F3 x, F3 y);
    // Printed with symmetric representatives, so 2 shows as -1.
    static TermCoeff term(F3 x);
    static std::string to_string(F3 x);
    static constexpr bool has_imaginary_unit = false;
};

template <class C>
concept Coefficient = requires(C c, const C &x, const Int &v) {
    { RingTraits<C>::zero() } -> std::convertible_to<C>;
    { RingTraits<C>::one() } -> std::convertible_to<C>;
    { RingTraits<C>::from_int(v) } -> std::convertible_to<C>;
    { RingTraits<C>::is_zero(x) } -> std::convertible_to<bool>;
    RingTraits<C>::addmul(c, x, x);
    { RingTraits<C>::exact_quotient(x, x) } -> std::convertible_to<std::optional<C>>;
    { x + x } -> std::convertible_to<C>;
    { x * x } -> std::convertible_to<C>;
    { -x } -> std::convertible_to<C>;
    { x == x } -> std::convertible_to<bool>;
};

// Exact value of an integer or Gaussian coefficient in Q(i).
inline GaussRat to_gauss_rat(const Int &x) { return GaussRat(GaussInt(x)); }
inline GaussRat to_gauss_rat(const GaussInt &x) { return GaussRat(x); }

} // namespace preper

#endif // PREPER_COEFF_RINGS_HPP
