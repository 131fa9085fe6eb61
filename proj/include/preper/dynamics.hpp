#ifndef PREPER_DYNAMICS_HPP
#define PREPER_DYNAMICS_HPP

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "preper/bipoly.hpp"

namespace preper {

// Identifier of the cubic normal form z^3 - 3a^2 z + 2a^3 + b, recorded in
// cache files and reports.
inline constexpr const char *kNormalFormId = "branner-hubbard-cubic";
inline constexpr const char *kCacheHeader = "version=1;form=branner-hubbard-cubic";

enum class Start { PlusA, MinusA };

struct OrbitKey {
    Start start = Start::PlusA;
    unsigned m = 0;

    friend auto operator<=>(const OrbitKey &, const OrbitKey &) = default;
};

// Total degree of f^m(a): 1 for m = 0, 3^(m-1) afterwards.
std::uint64_t orbit_degree(unsigned m);

// f(-a) = 4a^3 + b already has degree 3, so f^m(-a) has degree 3^m.
std::uint64_t orbit_degree(const OrbitKey &key);

// f(z) = z^3 - 3a^2 z + 2a^3 + b.
IntPoly apply_normal_form(const IntPoly &z);

// Memoised critical-orbit iterates, optionally mirrored to a directory of
// `orbit_{plus|minus}_{m}.poly` files. Lookups of present keys may run
// concurrently; concurrent misses may compute the same value twice and the
// first inserted copy wins.
class OrbitCache {
public:
    static constexpr std::uint64_t kDefaultMaxDegree = 6561;

    explicit OrbitCache(std::optional<std::filesystem::path> dir = std::nullopt,
                        std::uint64_t max_degree = kDefaultMaxDegree);

    std::shared_ptr<const IntPoly> get(const OrbitKey &key);

    // Throws CapacityError when f^m(start) would exceed the degree ceiling.
    void check_capacity(unsigned m, Start start = Start::PlusA) const;

    std::uint64_t max_degree() const noexcept { return max_degree_; }
    const std::optional<std::filesystem::path> &directory() const noexcept { return dir_; }

    // Drops the in-memory entries; disk files are kept.
    void clear_memory();

    std::filesystem::path file_for(const OrbitKey &key) const;

private:
    std::shared_ptr<const IntPoly> lookup(const OrbitKey &key) const;
    std::shared_ptr<const IntPoly> insert(const OrbitKey &key, IntPoly value);
    std::optional<IntPoly> load(const OrbitKey &key) const;
    void store(const OrbitKey &key, const IntPoly &value) const;

    std::optional<std::filesystem::path> dir_;
    std::uint64_t max_degree_;
    mutable std::shared_mutex mutex_;
    std::map<OrbitKey, std::shared_ptr<const IntPoly>> entries_;
};

// f^m(start) in Z[a,b].
IntPoly iterate(const OrbitKey &key, OrbitCache &cache);

// f^(k+n)(start) - f^k(start); f_kn uses start = +a.
IntPoly orbit_difference(Start start, unsigned k, unsigned n, OrbitCache &cache);

inline IntPoly f_kn(unsigned k, unsigned n, OrbitCache &cache)
{
    return orbit_difference(Start::PlusA, k, n, cache);
}

// Largest alpha with q^alpha dividing p.
unsigned multiplicity(const IntPoly &p, const IntPoly &q);

// Value of p at (a0, b0) modulo the prime modulus.
std::uint64_t eval_mod(const IntPoly &p, std::uint64_t a0, std::uint64_t b0, std::uint64_t modulus);

} // namespace preper

#endif // PREPER_DYNAMICS_HPP
