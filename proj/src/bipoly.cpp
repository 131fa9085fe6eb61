#include "preper/bipoly.hpp"

#include <cstring>

namespace preper {

const char *to_string(Parity p) noexcept
{
    switch (p) {
    case Parity::Even:
        return "even";
    case Parity::Odd:
        return "odd";
    case Parity::Mixed:
        return "mixed";
    }
    return "mixed";
}

namespace {

// Below this many coefficient products the schoolbook product is faster.
constexpr std::size_t kKroneckerThreshold = 1u << 14;

std::size_t max_bits(const IntPoly &p)
{
    std::size_t bits = 1;
    for (const auto &t : p.terms()) {
        bits = std::max(bits, mpz_sizeinbase(t.c.get_mpz_t(), 2));
    }
    return bits;
}

// Packs p into sum c * 2^(limbs*64*slot), slot = a + stride*b, with signed
// coefficients handled as (positive part) - (negative part).
Int pack(const IntPoly &p, std::size_t stride, std::size_t limbs)
{
    std::size_t top_slot = 0;
    for (const auto &t : p.terms()) {
        top_slot = std::max(top_slot, t.m.a + stride * t.m.b);
    }
    const auto n = static_cast<mp_size_t>((top_slot + 1) * limbs);
    Int pos;
    Int neg;
    mp_limb_t *lp = mpz_limbs_write(pos.get_mpz_t(), n);
    mp_limb_t *ln = mpz_limbs_write(neg.get_mpz_t(), n);
    std::memset(lp, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(n));
    std::memset(ln, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(n));
    for (const auto &t : p.terms()) {
        const std::size_t slot = t.m.a + stride * t.m.b;
        const mpz_srcptr c = t.c.get_mpz_t();
        const std::size_t sz = mpz_size(c);
        mp_limb_t *dst = (mpz_sgn(c) < 0 ? ln : lp) + slot * limbs;
        std::memcpy(dst, mpz_limbs_read(c), sz * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(pos.get_mpz_t(), n);
    mpz_limbs_finish(neg.get_mpz_t(), n);
    return pos - neg;
}

} // namespace

IntPoly multiply_kronecker(const IntPoly &x, const IntPoly &y)
{
    if (x.is_zero() || y.is_zero()) {
        return {};
    }
    const auto max_a = static_cast<std::size_t>(x.deg_a() + y.deg_a());
    const auto max_b = static_cast<std::size_t>(x.deg_b() + y.deg_b());
    const std::size_t stride = max_a + 1;
    const std::size_t nmin = std::min(x.nterms(), y.nterms());
    std::size_t count_bits = 0;
    while ((std::size_t{1} << count_bits) <= nmin) {
        ++count_bits;
    }
    // |product coefficient| < nmin * 2^bx * 2^by <= 2^(bits - 1).
    const std::size_t bits = max_bits(x) + max_bits(y) + count_bits + 1;
    const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const std::size_t width = limbs * GMP_NUMB_BITS;

    Int z = pack(x, stride, limbs) * pack(y, stride, limbs);
    const bool negative = sgn(z) < 0;
    if (negative) {
        z = -z;
    }

    const mp_limb_t *zl = mpz_limbs_read(z.get_mpz_t());
    const std::size_t zsize = mpz_size(z.get_mpz_t());
    const std::size_t slots = stride * (max_b + 1);
    Int half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, width - 1);
    Int full = half * 2;

    detail::DenseGrid<Int> grid(max_a, max_b);
    bool carry = false;
    std::vector<mp_limb_t> digit(limbs);
    Int d;
    for (std::size_t slot = 0; slot < slots; ++slot) {
        const std::size_t off = slot * limbs;
        if (off >= zsize && !carry) {
            break;
        }
        std::size_t used = 0;
        for (std::size_t k = 0; k < limbs; ++k) {
            digit[k] = (off + k < zsize) ? zl[off + k] : 0;
            if (digit[k] != 0) {
                used = k + 1;
            }
        }
        if (used == 0 && !carry) {
            continue;
        }
        mpz_import(d.get_mpz_t(), used, -1, sizeof(mp_limb_t), 0, 0, digit.data());
        if (carry) {
            d += 1;
        }
        if (d >= half) {
            d -= full;
            carry = true;
        } else {
            carry = false;
        }
        if (sgn(d) != 0) {
            grid.at(slot % stride, slot / stride) = negative ? Int(-d) : d;
        }
    }
    return IntPoly::collect(grid, static_cast<std::uint32_t>(x.deg_total() + y.deg_total()));
}

IntPoly multiply_int(const IntPoly &x, const IntPoly &y)
{
    if (x.nterms() * y.nterms() < kKroneckerThreshold) {
        return IntPoly::multiply_dense(x, y);
    }
    return multiply_kronecker(x, y);
}

F3Poly mod3(const IntPoly &p)
{
    return map_coefficients<Int, F3>(p, [](const Int &c) { return F3::from_int(c); });
}

Int content(const IntPoly &p)
{
    Int g = 0;
    for (const auto &t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPoly sign_normalized(IntPoly p)
{
    if (!p.is_zero() && sgn(p.leading_term().c) < 0) {
        return -p;
    }
    return p;
}

} // namespace preper
