#include "preper/prime_period.hpp"

#include "preper/f3_univariate.hpp"

namespace preper {

bool is_prime(unsigned q)
{
    if (q < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

UniPoly<F3> period_sum_form(unsigned q)
{
    if (q == 0 || q > kMaxDichotomyPrime) {
        throw CapacityError("sum form for q = " + std::to_string(q) + " is out of range");
    }
    std::size_t top = 1;
    for (unsigned i = 1; i < q; ++i) {
        top *= 3;
    }
    std::vector<F3> c(top, F3(0));
    for (std::size_t e = 1; e <= top; e *= 3) {
        c[e - 1] += F3(1);
    }
    return UniPoly<F3>(std::move(c), Var::B);
}

IntPoly build_h1q(unsigned q, OrbitCache &cache)
{
    if (!is_prime(q)) {
        throw DomainError(std::to_string(q) + " is not prime");
    }
    static const IntPoly two_a = parse<Int>("2*a");
    static const IntPoly line = parse<Int>("b+2*a");
    const IntPoly num = iterate(OrbitKey{Start::PlusA, q}, cache) + two_a;
    IntPoly h = exact_div(num, line);
    if (try_div(h, line)) {
        throw Error("(b+2a)^2 divides f^" + std::to_string(q) + "(a)+2a");
    }
    return h;
}

PrimePeriodReport dichotomy_check(unsigned q, OrbitCache *cache)
{
    if (!is_prime(q)) {
        throw DomainError(std::to_string(q) + " is not prime");
    }
    PrimePeriodReport r;
    r.q = q;
    mpz_ui_pow_ui(r.degree.get_mpz_t(), 3, q - 1);
    r.degree -= 1;
    const Int qq(q);
    r.degree_divides = mpz_divisible_p(qq.get_mpz_t(), r.degree.get_mpz_t()) != 0;
    const UniPoly<F3> form = period_sum_form(q);
    r.f3_irreducible = f3_univariate_irreducible(form);
    if (cache != nullptr && q <= 40 && orbit_degree(q) <= cache->max_degree()) {
        r.mod3_form_match = mod3(build_h1q(q, *cache)) == compose_line(form);
    }
    const bool two = q == 2;
    r.consistent = r.f3_irreducible == two && r.degree_divides == two
                   && r.mod3_form_match.value_or(true);
    return r;
}

} // namespace preper
