#ifndef PREPER_MODULAR_HPP
#define PREPER_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace preper::detail {

// Arithmetic modulo a prime p < 2^63.
struct Zp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const
    {
        std::uint64_t s = x + y;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return x >= y ? x - y : x + p - y; }
    std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : p - x; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    }
    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const
    {
        std::uint64_t r = 1 % p;
        while (e != 0) {
            if (e & 1u) {
                r = mul(r, x);
            }
            x = mul(x, x);
            e >>= 1u;
        }
        return r;
    }
    // p is prime, so x^(p-2) is the inverse of a nonzero x.
    std::uint64_t inv(std::uint64_t x) const { return pow(x, p - 2); }
};

// Dense polynomial over Z/p, index = degree, no trailing zeros.
using ZpPoly = std::vector<std::uint64_t>;

inline void trim(ZpPoly &f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

inline std::uint64_t eval(const Zp &zp, const ZpPoly &f, std::uint64_t x)
{
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) {
        acc = zp.add(zp.mul(acc, x), f[k]);
    }
    return acc;
}

// Monic gcd by the Euclidean algorithm; empty when both inputs are zero.
ZpPoly monic_gcd(const Zp &zp, ZpPoly f, ZpPoly g);

bool is_probable_prime(std::uint64_t n);

} // namespace preper::detail

#endif // PREPER_MODULAR_HPP
