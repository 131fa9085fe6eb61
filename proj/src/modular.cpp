#include "preper/modular.hpp"

#include <utility>

namespace preper::detail {

namespace {

// f <- f mod g, g nonzero.
void reduce_mod(const Zp &zp, ZpPoly &f, const ZpPoly &g)
{
    const std::size_t dg = g.size() - 1;
    const std::uint64_t inv_lc = zp.inv(g.back());
    while (f.size() > dg) {
        const std::uint64_t c = zp.mul(f.back(), inv_lc);
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j <= dg; ++j) {
            f[shift + j] = zp.sub(f[shift + j], zp.mul(c, g[j]));
        }
        trim(f);
    }
}

} // namespace

ZpPoly monic_gcd(const Zp &zp, ZpPoly f, ZpPoly g)
{
    trim(f);
    trim(g);
    while (!g.empty()) {
        reduce_mod(zp, f, g);
        std::swap(f, g);
    }
    if (!f.empty()) {
        const std::uint64_t inv_lc = zp.inv(f.back());
        for (auto &c : f) {
            c = zp.mul(c, inv_lc);
        }
    }
    return f;
}

bool is_probable_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) {
            return n == q;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    const Zp zp{n};
    // These bases are a deterministic witness set for all 64-bit n.
    for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = zp.pow(base, d);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = zp.mul(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

} // namespace preper::detail
