#ifndef PREPER_PRIME_PERIOD_HPP
#define PREPER_PRIME_PERIOD_HPP

#include <optional>

#include "preper/dynamics.hpp"

namespace preper {

// Sum over i < q of t^(3^i - 1), in the variable b.
UniPoly<F3> period_sum_form(unsigned q);

// (f^q(a) + 2a) / (b + 2a). Throws NotDivisible if the division fails and
// Error if (b + 2a)^2 still divides the numerator.
IntPoly build_h1q(unsigned q, OrbitCache &cache);

struct PrimePeriodReport {
    unsigned q = 0;
    Int degree;                           // 3^(q-1) - 1, degree of h_{1,q} in b
    std::optional<bool> mod3_form_match;  // set when the bivariate build ran
    bool f3_irreducible = false;
    bool degree_divides = false;          // (3^(q-1) - 1) | q
    bool consistent = false;              // both flags agree with q == 2
};

// Largest q the univariate test accepts (degree 3^(q-1) - 1 in memory).
inline constexpr unsigned kMaxDichotomyPrime = 16;

// Decides the irreducibility of the mod-3 form and the degree shortcut. With
// a cache, also builds h_{1,q} when f^q fits the cache's ceiling and compares
// its reduction with the form.
PrimePeriodReport dichotomy_check(unsigned q, OrbitCache *cache = nullptr);

bool is_prime(unsigned q);

} // namespace preper

#endif // PREPER_PRIME_PERIOD_HPP
