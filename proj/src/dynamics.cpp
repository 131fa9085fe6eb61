#include "preper/dynamics.hpp"

#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "preper/gcd.hpp"
#include "preper/modular.hpp"

namespace preper {

namespace {

const char *start_name(Start s)
{
    return s == Start::PlusA ? "plus" : "minus";
}

// Orbit value f^m(start) at (a0, b0) modulo p, by direct iteration.
std::uint64_t orbit_value_mod(const OrbitKey &key, std::uint64_t a0, std::uint64_t b0,
                              const detail::Zp &zp)
{
    std::uint64_t z = key.start == Start::PlusA ? a0 : zp.neg(a0);
    const std::uint64_t a2 = zp.mul(a0, a0);
    const std::uint64_t c = zp.add(zp.mul(2, zp.mul(a2, a0)), b0);
    for (unsigned k = 0; k < key.m; ++k) {
        const std::uint64_t z3 = zp.mul(zp.mul(z, z), z);
        z = zp.add(zp.sub(z3, zp.mul(3, zp.mul(a2, z))), c);
    }
    return z;
}

} // namespace

std::uint64_t orbit_degree(unsigned m)
{
    std::uint64_t d = 1;
    for (unsigned k = 1; k < m; ++k) {
        d *= 3;
    }
    return d;
}

std::uint64_t orbit_degree(const OrbitKey &key)
{
    if (key.start == Start::PlusA || key.m == 0) {
        return orbit_degree(key.m);
    }
    return 3 * orbit_degree(key.m);
}

IntPoly apply_normal_form(const IntPoly &z)
{
    static const IntPoly tail = parse<Int>("2*a^3+b");
    static const IntPoly minus_3a2 = parse<Int>("-3*a^2");
    const IntPoly z2 = z * z;
    return z2 * z + minus_3a2 * z + tail;
}

std::uint64_t eval_mod(const IntPoly &p, std::uint64_t a0, std::uint64_t b0, std::uint64_t modulus)
{
    const detail::Zp zp{modulus};
    const auto da = static_cast<std::size_t>(std::max(p.deg_a(), 0L));
    const auto db = static_cast<std::size_t>(std::max(p.deg_b(), 0L));
    std::vector<std::uint64_t> pa(da + 1, 1 % modulus);
    std::vector<std::uint64_t> pb(db + 1, 1 % modulus);
    for (std::size_t k = 1; k <= da; ++k) {
        pa[k] = zp.mul(pa[k - 1], a0);
    }
    for (std::size_t k = 1; k <= db; ++k) {
        pb[k] = zp.mul(pb[k - 1], b0);
    }
    std::uint64_t acc = 0;
    for (const auto &t : p.terms()) {
        const std::uint64_t c = mpz_fdiv_ui(t.c.get_mpz_t(), modulus);
        acc = zp.add(acc, zp.mul(c, zp.mul(pa[t.m.a], pb[t.m.b])));
    }
    return acc;
}

OrbitCache::OrbitCache(std::optional<std::filesystem::path> dir, std::uint64_t max_degree)
    : dir_(std::move(dir)), max_degree_(max_degree)
{
    if (dir_) {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (ec) {
            throw CacheError("cannot create cache directory " + dir_->string() + ": "
                             + ec.message());
        }
    }
}

void OrbitCache::check_capacity(unsigned m, Start start) const
{
    // 3^m overflows 64 bits past m = 40; anything that large is over any ceiling.
    if (m > 40 || orbit_degree({start, m}) > max_degree_) {
        throw CapacityError("f^" + std::to_string(m) + "(" + (start == Start::PlusA ? "a" : "-a")
                            + ") has degree " + std::to_string(orbit_degree({start, m}))
                            + ", above the ceiling " + std::to_string(max_degree_));
    }
}

std::filesystem::path OrbitCache::file_for(const OrbitKey &key) const
{
    if (!dir_) {
        throw CacheError("cache has no directory");
    }
    return *dir_ / ("orbit_" + std::string(start_name(key.start)) + "_" + std::to_string(key.m)
                    + ".poly");
}

void OrbitCache::clear_memory()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::shared_ptr<const IntPoly> OrbitCache::lookup(const OrbitKey &key) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const IntPoly> OrbitCache::insert(const OrbitKey &key, IntPoly value)
{
    auto ptr = std::make_shared<const IntPoly>(std::move(value));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, ptr);
    return it->second;
}

std::optional<IntPoly> OrbitCache::load(const OrbitKey &key) const
{
    const auto path = file_for(key);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::string header;
    std::string body;
    std::getline(in, header);
    std::getline(in, body);
    if (header != kCacheHeader) {
        throw CacheError(path.string() + ": unexpected header '" + header + "'");
    }
    IntPoly p;
    try {
        p = parse<Int>(body);
    } catch (const ParseError &e) {
        throw CacheError(path.string() + ": " + e.what());
    }
    // Spot check against direct iteration at pseudo-random points modulo a
    // large prime; a corrupted coefficient survives this with negligible odds.
    const std::uint64_t prime = detail::modular_prime(0);
    const detail::Zp zp{prime};
    std::mt19937_64 rng(0x5eed0000u + key.m * 2u + (key.start == Start::MinusA ? 1u : 0u));
    for (int trial = 0; trial < 2; ++trial) {
        const std::uint64_t a0 = rng() % prime;
        const std::uint64_t b0 = rng() % prime;
        if (eval_mod(p, a0, b0, prime) != orbit_value_mod(key, a0, b0, zp)) {
            throw CacheError(path.string() + ": contents do not match the orbit iterate");
        }
    }
    return p;
}

void OrbitCache::store(const OrbitKey &key, const IntPoly &value) const
{
    const auto path = file_for(key);
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kCacheHeader << '\n' << render(value) << '\n';
        if (!out) {
            throw CacheError("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw CacheError("cannot rename into " + path.string());
    }
}

std::shared_ptr<const IntPoly> OrbitCache::get(const OrbitKey &key)
{
    check_capacity(key.m, key.start);
    if (auto hit = lookup(key)) {
        return hit;
    }
    if (dir_) {
        if (auto disk = load(key)) {
            return insert(key, std::move(*disk));
        }
    }
    IntPoly value;
    if (key.m == 0) {
        value = key.start == Start::PlusA ? IntPoly::var_a() : -IntPoly::var_a();
    } else {
        auto prev = get(OrbitKey{key.start, key.m - 1});
        value = apply_normal_form(*prev);
    }
    if (dir_) {
        store(key, value);
    }
    return insert(key, std::move(value));
}

IntPoly iterate(const OrbitKey &key, OrbitCache &cache)
{
    return *cache.get(key);
}

IntPoly orbit_difference(Start start, unsigned k, unsigned n, OrbitCache &cache)
{
    if (n == 0) {
        throw DomainError("orbit difference needs n >= 1");
    }
    auto hi = cache.get(OrbitKey{start, k + n});
    auto lo = cache.get(OrbitKey{start, k});
    return *hi - *lo;
}

unsigned multiplicity(const IntPoly &p, const IntPoly &q)
{
    if (q.is_constant()) {
        throw DomainError("multiplicity with respect to a constant");
    }
    if (p.is_zero()) {
        throw DomainError("multiplicity in the zero polynomial");
    }
    unsigned alpha = 0;
    IntPoly rest = p;
    while (auto next = try_div(rest, q)) {
        rest = std::move(*next);
        ++alpha;
    }
    return alpha;
}

} // namespace preper
