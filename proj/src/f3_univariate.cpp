#include "preper/f3_univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace preper {

namespace {

using Dense = std::vector<std::uint8_t>;

constexpr std::uint8_t sub3(std::uint8_t x, std::uint8_t y) { return static_cast<std::uint8_t>((x + 3 - y) % 3); }
constexpr std::uint8_t mul3(std::uint8_t x, std::uint8_t y) { return static_cast<std::uint8_t>((x * y) % 3); }

void trim(Dense &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

long degree(const Dense &p) { return static_cast<long>(p.size()) - 1; }

// r mod m for monic m, given as the exponents and coefficients of its
// nonzero non-leading terms.
struct Modulus {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::uint8_t>> tail;

    explicit Modulus(const Dense &m) : n(m.size() - 1)
    {
        for (std::size_t e = 0; e < n; ++e) {
            if (m[e] != 0) {
                tail.emplace_back(e, m[e]);
            }
        }
    }

    void reduce(Dense &r) const
    {
        for (std::size_t j = r.size(); j-- > n;) {
            const std::uint8_t c = r[j];
            if (c == 0) {
                continue;
            }
            r[j] = 0;
            for (const auto &[e, pc] : tail) {
                auto &slot = r[j - n + e];
                slot = sub3(slot, mul3(c, pc));
            }
        }
        if (r.size() > n) {
            r.resize(n);
        }
        trim(r);
    }
};

// Remainder of a by a general nonzero b.
Dense remainder(Dense a, const Dense &b)
{
    const std::size_t db = b.size() - 1;
    const std::uint8_t inv = b.back(); // self-inverse in F3
    for (std::size_t j = a.size(); j-- > db;) {
        const std::uint8_t c = mul3(a[j], inv);
        if (c == 0) {
            continue;
        }
        for (std::size_t e = 0; e <= db; ++e) {
            auto &slot = a[j - db + e];
            slot = sub3(slot, mul3(c, b[e]));
        }
    }
    if (a.size() > db) {
        a.resize(db);
    }
    trim(a);
    return a;
}

Dense gcd(Dense a, Dense b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::size_t> prime_divisors(std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

bool f3_univariate_irreducible(const UniPoly<F3> &p)
{
    if (p.degree() < 1) {
        return false;
    }
    if (p.degree() == 1) {
        return true;
    }
    Dense m(p.coeffs().size());
    const std::uint8_t inv = static_cast<std::uint8_t>(p.leading().value());
    for (std::size_t k = 0; k < m.size(); ++k) {
        m[k] = mul3(static_cast<std::uint8_t>(p.coeffs()[k].value()), inv);
    }
    const Modulus mod(m);
    const std::size_t n = mod.n;
    std::vector<std::size_t> checkpoints;
    for (std::size_t r : prime_divisors(n)) {
        checkpoints.push_back(n / r);
    }
    const Dense x{0, 1};
    Dense r = x;
    for (std::size_t d = 1; d <= n; ++d) {
        if (r.empty()) {
            return false; // p is a power of x
        }
        // Cubing is the Frobenius: (sum c_k x^k)^3 = sum c_k x^(3k).
        Dense cubed(3 * (r.size() - 1) + 1, 0);
        for (std::size_t k = 0; k < r.size(); ++k) {
            cubed[3 * k] = r[k];
        }
        mod.reduce(cubed);
        r = std::move(cubed);
        if (d < n && r == x) {
            return false;
        }
        for (std::size_t c : checkpoints) {
            if (c == d) {
                Dense diff = r;
                diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
                diff[1] = sub3(diff[1], 1);
                trim(diff);
                if (degree(gcd(diff, m)) > 0) {
                    return false;
                }
            }
        }
    }
    return r == x;
}

F3Poly compose_line(const UniPoly<F3> &u)
{
    std::vector<Term<F3>> terms;
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        const F3 cj = u.coeffs()[j];
        if (cj.is_zero()) {
            continue;
        }
        std::vector<unsigned> digits;
        for (std::size_t v = j; v != 0; v /= 3) {
            digits.push_back(static_cast<unsigned>(v % 3));
        }
        // Walk every i whose base-3 digits are bounded by those of j; by
        // Lucas, C(j, i) mod 3 is the product of digitwise binomials.
        std::vector<unsigned> sub(digits.size(), 0);
        for (;;) {
            std::size_t i = 0;
            int binom = 1;
            for (std::size_t d = digits.size(); d-- > 0;) {
                i = 3 * i + sub[d];
                binom *= (digits[d] == 2 && sub[d] == 1) ? 2 : 1;
            }
            // (b - a)^j contributes C(j, i) b^i (-a)^(j - i).
            const int sign = ((j - i) % 2 == 0) ? 1 : -1;
            const F3 c = cj * F3(binom * sign);
            terms.push_back({Monomial{static_cast<std::uint32_t>(j - i), static_cast<std::uint32_t>(i)}, c});
            std::size_t d = 0;
            while (d < sub.size() && sub[d] == digits[d]) {
                sub[d] = 0;
                ++d;
            }
            if (d == sub.size()) {
                break;
            }
            ++sub[d];
        }
    }
    return F3Poly::from_terms(std::move(terms));
}

} // namespace preper
