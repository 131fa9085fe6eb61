#include "preper/gcd.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <optional>

#include "preper/modular.hpp"

namespace preper {

namespace detail {

std::uint64_t modular_prime(std::size_t index)
{
    static std::mutex mutex;
    static std::vector<std::uint64_t> primes;
    std::lock_guard<std::mutex> lock(mutex);
    std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 62) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        if (is_probable_prime(candidate)) {
            primes.push_back(candidate);
        }
        candidate -= 2;
    }
    return primes[index];
}

} // namespace detail

namespace {

using detail::Zp;
using detail::ZpPoly;

bool is_unit_constant(const IntPoly &p)
{
    return p.is_constant() && !p.is_zero() && abs(p.leading_term().c) == 1;
}

IntPoly divide_by_integer(const IntPoly &p, const Int &c)
{
    if (c == 1) {
        return p;
    }
    return map_coefficients<Int, Int>(p, [&c](const Int &x) {
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return q;
    });
}

// gcd of two polynomials in a alone; primitive and sign-normalised.
IntPoly gcd_in_a(const IntPoly &x, const IntPoly &y)
{
    if (x.is_zero() && y.is_zero()) {
        return {};
    }
    if (x.is_constant() || y.is_constant()) {
        return IntPoly::one();
    }
    return swap_variables(primitive_gcd(swap_variables(x), swap_variables(y)));
}

// P reduced mod p as rows over b, each row dense in a.
struct ReducedRows {
    std::vector<ZpPoly> rows;
};

ReducedRows reduce(const IntPoly &p, const Zp &zp)
{
    ReducedRows r;
    r.rows.assign(static_cast<std::size_t>(p.deg_b()) + 1,
                  ZpPoly(static_cast<std::size_t>(p.deg_a()) + 1, 0));
    for (const auto &t : p.terms()) {
        r.rows[t.m.b][t.m.a] = mpz_fdiv_ui(t.c.get_mpz_t(), zp.p);
    }
    for (auto &row : r.rows) {
        detail::trim(row);
    }
    return r;
}

ZpPoly reduce_uni(const IntPoly &p_in_a, const Zp &zp)
{
    ZpPoly r(static_cast<std::size_t>(std::max(p_in_a.deg_a(), 0L)) + 1, 0);
    for (const auto &t : p_in_a.terms()) {
        r[t.m.a] = mpz_fdiv_ui(t.c.get_mpz_t(), zp.p);
    }
    detail::trim(r);
    return r;
}

ZpPoly evaluate_rows(const Zp &zp, const ReducedRows &r, std::uint64_t a0)
{
    ZpPoly out(r.rows.size());
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        out[k] = detail::eval(zp, r.rows[k], a0);
    }
    detail::trim(out);
    return out;
}

// Newton interpolation through (xs[i], ys[i]) for several value vectors
// sharing the same nodes; returns monomial-basis coefficients.
class Interpolator {
public:
    Interpolator(const Zp &zp, std::vector<std::uint64_t> xs) : zp_(zp), xs_(std::move(xs))
    {
        const std::size_t n = xs_.size();
        inv_.resize(n);
        for (std::size_t j = 1; j < n; ++j) {
            inv_[j].resize(n);
            for (std::size_t i = j; i < n; ++i) {
                inv_[j][i] = zp_.inv(zp_.sub(xs_[i], xs_[i - j]));
            }
        }
    }

    ZpPoly operator()(std::vector<std::uint64_t> ys) const
    {
        const std::size_t n = xs_.size();
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = n - 1; i >= j; --i) {
                ys[i] = zp_.mul(zp_.sub(ys[i], ys[i - 1]), inv_[j][i]);
            }
        }
        ZpPoly coeffs(n, 0);
        for (std::size_t i = n; i-- > 0;) {
            // coeffs <- coeffs * (x - xs[i]) + ys[i]
            for (std::size_t k = n - 1; k > 0; --k) {
                coeffs[k] = zp_.sub(coeffs[k - 1], zp_.mul(coeffs[k], xs_[i]));
            }
            coeffs[0] = zp_.sub(ys[i], zp_.mul(coeffs[0], xs_[i]));
        }
        detail::trim(coeffs);
        return coeffs;
    }

private:
    Zp zp_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::vector<std::uint64_t>> inv_;
};

// Image gcd modulo one prime, normalised to leading coefficient gamma.
struct ModularImage {
    long deg_b = -1;
    std::vector<ZpPoly> rows; // rows[eb] is a polynomial in a
};

std::optional<ModularImage> modular_image(const Zp &zp, const ReducedRows &p, const ReducedRows &q,
                                          const ZpPoly &gamma, std::size_t bound_a)
{
    const ZpPoly &lcp = p.rows.back();
    const ZpPoly &lcq = q.rows.back();
    std::vector<std::uint64_t> xs;
    std::vector<ZpPoly> images;
    long deg_min = std::numeric_limits<long>::max();
    const std::size_t needed = bound_a + 1;
    const std::size_t max_tries = 4 * needed + 64;
    std::size_t tries = 0;
    for (std::uint64_t a0 = 1; xs.size() < needed; ++a0) {
        if (++tries > max_tries) {
            return std::nullopt;
        }
        const std::uint64_t g0 = detail::eval(zp, gamma, a0);
        if (g0 == 0 || detail::eval(zp, lcp, a0) == 0 || detail::eval(zp, lcq, a0) == 0) {
            continue;
        }
        ZpPoly g = detail::monic_gcd(zp, evaluate_rows(zp, p, a0), evaluate_rows(zp, q, a0));
        const long d = static_cast<long>(g.size()) - 1;
        if (d > deg_min) {
            continue;
        }
        if (d < deg_min) {
            deg_min = d;
            xs.clear();
            images.clear();
        }
        if (d == 0) {
            ModularImage one;
            one.deg_b = 0;
            return one;
        }
        for (auto &c : g) {
            c = zp.mul(c, g0);
        }
        xs.push_back(a0);
        images.push_back(std::move(g));
    }
    ModularImage img;
    img.deg_b = deg_min;
    img.rows.resize(static_cast<std::size_t>(deg_min) + 1);
    const Interpolator interpolate(zp, xs);
    std::vector<std::uint64_t> ys(xs.size());
    for (std::size_t eb = 0; eb <= static_cast<std::size_t>(deg_min); ++eb) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ys[i] = images[i][eb];
        }
        img.rows[eb] = interpolate(ys);
    }
    return img;
}

// Symmetric residues of the gcd modulo the running CRT modulus.
struct CrtState {
    long deg_b = -1;
    std::vector<std::vector<Int>> rows;
    Int modulus;
};

Int symmetric(std::uint64_t x, std::uint64_t p)
{
    if (x > p / 2) {
        return Int(static_cast<unsigned long>(x)) - Int(static_cast<unsigned long>(p));
    }
    return Int(static_cast<unsigned long>(x));
}

void crt_start(CrtState &st, const ModularImage &img, std::uint64_t p, std::size_t width)
{
    st.deg_b = img.deg_b;
    st.modulus = Int(static_cast<unsigned long>(p));
    st.rows.assign(img.rows.size(), std::vector<Int>(width, Int(0)));
    for (std::size_t eb = 0; eb < img.rows.size(); ++eb) {
        for (std::size_t ea = 0; ea < img.rows[eb].size(); ++ea) {
            st.rows[eb][ea] = symmetric(img.rows[eb][ea], p);
        }
    }
}

// Returns true when every residue already agreed with the new image, i.e.
// the symmetric lift did not move.
bool crt_extend(CrtState &st, const ModularImage &img, std::uint64_t p)
{
    const Zp zp{p};
    const std::uint64_t m_inv = zp.inv(mpz_fdiv_ui(st.modulus.get_mpz_t(), p));
    bool stable = true;
    for (std::size_t eb = 0; eb < st.rows.size(); ++eb) {
        for (std::size_t ea = 0; ea < st.rows[eb].size(); ++ea) {
            Int &h = st.rows[eb][ea];
            const std::uint64_t target = ea < img.rows[eb].size() ? img.rows[eb][ea] : 0;
            const std::uint64_t cur = mpz_fdiv_ui(h.get_mpz_t(), p);
            const std::uint64_t t = zp.mul(zp.sub(target, cur), m_inv);
            if (t != 0) {
                stable = false;
                h += st.modulus * symmetric(t, p);
            }
        }
    }
    st.modulus *= Int(static_cast<unsigned long>(p));
    return stable;
}

IntPoly symmetric_lift(const CrtState &st)
{
    const Int half = st.modulus / 2;
    std::vector<Term<Int>> out;
    for (std::size_t eb = 0; eb < st.rows.size(); ++eb) {
        for (std::size_t ea = 0; ea < st.rows[eb].size(); ++ea) {
            Int c;
            mpz_fdiv_r(c.get_mpz_t(), st.rows[eb][ea].get_mpz_t(), st.modulus.get_mpz_t());
            if (c > half) {
                c -= st.modulus;
            }
            if (sgn(c) != 0) {
                out.push_back({Monomial{static_cast<std::uint32_t>(ea),
                                        static_cast<std::uint32_t>(eb)},
                               std::move(c)});
            }
        }
    }
    return IntPoly::from_terms(std::move(out));
}

IntPoly primitive_part(const IntPoly &p)
{
    IntPoly q = divide_by_integer(p, content(p));
    IntPoly cont = content_in_b(q);
    if (!cont.is_constant()) {
        q = exact_div(q, cont);
    }
    return sign_normalized(std::move(q));
}

// gcd of two polynomials that are primitive over Z[a] and have positive
// degree in b: dense modular algorithm with evaluation in a and CRT over
// word-size primes, certified by trial division.
GcdWithCofactors modular_gcd(const IntPoly &p, const IntPoly &q)
{
    const IntPoly lcp = from_unipoly(p.lc_b());
    const IntPoly lcq = from_unipoly(q.lc_b());
    const IntPoly gamma = gcd_in_a(lcp, lcq).scaled(int_gcd(content(lcp), content(lcq)));
    const std::size_t bound_a =
        static_cast<std::size_t>(std::min(p.deg_a(), q.deg_a()) + std::max(gamma.deg_a(), 0L));

    // Far more primes than any coefficient size here needs; reaching the
    // cap means the trial division keeps failing, which is a bug.
    constexpr std::size_t kMaxPrimes = 4096;
    CrtState st;
    for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
        const std::uint64_t prime = detail::modular_prime(pi);
        const Zp zp{prime};
        const ZpPoly gamma_p = reduce_uni(gamma, zp);
        if (gamma_p.empty()) {
            continue;
        }
        const ReducedRows rp = reduce(p, zp);
        const ReducedRows rq = reduce(q, zp);
        // Skip primes that lower the degree in b.
        if (rp.rows.back().empty() || rq.rows.back().empty()) {
            continue;
        }
        auto img = modular_image(zp, rp, rq, gamma_p, bound_a);
        if (!img) {
            continue;
        }
        if (img->deg_b == 0) {
            return {IntPoly::one(), p, q};
        }
        bool stable = false;
        if (st.deg_b < 0 || img->deg_b < st.deg_b) {
            crt_start(st, *img, prime, bound_a + 1);
        } else if (img->deg_b > st.deg_b) {
            continue;
        } else {
            stable = crt_extend(st, *img, prime);
        }
        if (!stable) {
            continue;
        }
        IntPoly candidate = primitive_part(symmetric_lift(st));
        if (candidate.deg_b() != st.deg_b) {
            continue;
        }
        auto cp = try_div(p, candidate);
        if (!cp) {
            continue;
        }
        auto cq = try_div(q, candidate);
        if (!cq) {
            continue;
        }
        return {std::move(candidate), std::move(*cp), std::move(*cq)};
    }
    throw Error("modular gcd did not converge");
}

} // namespace

IntPoly content_in_b(const IntPoly &p)
{
    if (p.is_zero()) {
        return {};
    }
    if (p.deg_a() == 0) {
        return IntPoly::one();
    }
    std::vector<IntPoly> rows;
    for (const auto &row : coefficients_in_b(p)) {
        if (!row.is_zero()) {
            rows.push_back(from_unipoly(row));
        }
    }
    // Cheapest rows first: a constant row settles the content at once.
    std::sort(rows.begin(), rows.end(),
              [](const IntPoly &x, const IntPoly &y) { return x.nterms() < y.nterms(); });
    IntPoly g = rows.front();
    if (g.is_constant()) {
        return IntPoly::one();
    }
    g = sign_normalized(divide_by_integer(g, content(g)));
    for (std::size_t k = 1; k < rows.size() && !g.is_constant(); ++k) {
        g = gcd_in_a(g, rows[k]);
    }
    if (g.is_constant()) {
        return IntPoly::one();
    }
    return g;
}

GcdWithCofactors gcd_with_cofactors(const IntPoly &p, const IntPoly &q)
{
    if (p.is_zero() && q.is_zero()) {
        throw DomainError("gcd of two zero polynomials");
    }
    if (p.is_zero() || q.is_zero()) {
        const IntPoly &x = p.is_zero() ? q : p;
        IntPoly g = primitive_part(x);
        IntPoly cof = exact_div(x, g);
        if (p.is_zero()) {
            return {g, IntPoly{}, cof};
        }
        return {g, cof, IntPoly{}};
    }
    const Int cp = content(p);
    const Int cq = content(q);
    const IntPoly p1 = divide_by_integer(p, cp);
    const IntPoly q1 = divide_by_integer(q, cq);
    const IntPoly contp = content_in_b(p1);
    const IntPoly contq = content_in_b(q1);
    const IntPoly p2 = contp.is_constant() ? p1 : exact_div(p1, contp);
    const IntPoly q2 = contq.is_constant() ? q1 : exact_div(q1, contq);
    const IntPoly gcont = gcd_in_a(contp, contq);

    GcdWithCofactors core;
    if (p2.deg_b() <= 0 || q2.deg_b() <= 0 || is_unit_constant(p2) || is_unit_constant(q2)) {
        core = {IntPoly::one(), p2, q2};
    } else {
        core = modular_gcd(p2, q2);
    }

    IntPoly g = gcont * core.gcd;
    // p = cp * contp * p2 = cp * contp * core.gcd * core.cofactor_p.
    IntPoly cofp = exact_div(contp, gcont) * core.cofactor_p;
    IntPoly cofq = exact_div(contq, gcont) * core.cofactor_q;
    cofp = cofp.scaled(cp);
    cofq = cofq.scaled(cq);
    if (sgn(g.leading_term().c) < 0) {
        g = -g;
        cofp = -cofp;
        cofq = -cofq;
    }
    return {std::move(g), std::move(cofp), std::move(cofq)};
}

IntPoly primitive_gcd(const IntPoly &p, const IntPoly &q)
{
    return gcd_with_cofactors(p, q).gcd;
}

Saturation saturate_detailed(const IntPoly &p, const IntPoly &q)
{
    if (p.is_zero() || q.is_zero()) {
        throw DomainError("saturate requires nonzero inputs");
    }
    IntPoly result = p;
    IntPoly removed = IntPoly::one();
    IntPoly target = q;
    for (;;) {
        GcdWithCofactors g = gcd_with_cofactors(result, target);
        if (g.gcd.deg_total() <= 0) {
            break;
        }
        result = std::move(g.cofactor_p);
        removed = removed * g.gcd;
        // Any factor still shared with q divides the gcd just removed.
        target = std::move(g.gcd);
    }
    return {std::move(result), std::move(removed)};
}

} // namespace preper
