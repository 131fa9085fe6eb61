#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "preper/dynamics.hpp"
#include "preper/f3_univariate.hpp"

using namespace preper;
namespace fs = std::filesystem;

namespace {

IntPoly P(const char *s) { return parse<Int>(s); }

OrbitCache &shared_cache()
{
    static OrbitCache cache;
    return cache;
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("preper-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("iterate examples")
{
    OrbitCache &c = shared_cache();
    CHECK(iterate({Start::PlusA, 0}, c) == P("a"));
    CHECK(iterate({Start::PlusA, 1}, c) == P("b"));
    CHECK(iterate({Start::PlusA, 2}, c) == P("b^3-3*a^2*b+2*a^3+b"));
    CHECK(iterate({Start::MinusA, 0}, c) == P("-a"));
    CHECK(iterate({Start::MinusA, 1}, c) == P("4*a^3+b"));
    CHECK(apply_normal_form(P("a")) == P("b"));
}

TEST_CASE("f_kn examples")
{
    OrbitCache &c = shared_cache();
    CHECK(f_kn(0, 1, c) == P("b-a"));
    CHECK(f_kn(1, 1, c) == P("b^3-3*a^2*b+2*a^3"));
    CHECK(f_kn(1, 1, c) == P("(b-a)^2*(b+2*a)"));
    CHECK(f_kn(0, 2, c) == P("(b-a)*((b-a)*(b+2*a)+1)"));
    CHECK_THROWS_AS(f_kn(1, 0, c), DomainError);
}

TEST_CASE("multiplicity")
{
    OrbitCache &c = shared_cache();
    CHECK(multiplicity(f_kn(1, 1, c), P("b-a")) == 2);
    CHECK(multiplicity(f_kn(1, 2, c), f_kn(0, 2, c)) == 2);
    CHECK(multiplicity(P("b-a"), P("b-a")) == 1);
    CHECK(multiplicity(P("b+a"), P("b-a")) == 0);
    CHECK_THROWS_AS(multiplicity(P("b"), P("3")), DomainError);
    CHECK_THROWS_AS(multiplicity(IntPoly(), P("b")), DomainError);
}

TEST_CASE("degree law, monicity and parity of iterates")
{
    OrbitCache &c = shared_cache();
    for (unsigned m = 1; m <= 6; ++m) {
        for (Start s : {Start::PlusA, Start::MinusA}) {
            const IntPoly p = iterate({s, m}, c);
            CHECK(static_cast<std::uint64_t>(p.deg_total()) == orbit_degree({s, m}));
            CHECK(static_cast<std::uint64_t>(p.deg_b()) == orbit_degree(m));
            CHECK(p.is_monic_in_b());
            CHECK(parity_of(p) == Parity::Odd);
        }
        // Both orbits start at 0 when a = 0.
        CHECK(specialize_a0(iterate({Start::PlusA, m}, c))
              == specialize_a0(iterate({Start::MinusA, m}, c)));
    }
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned n = 1; k + n <= 6; ++n) {
            const IntPoly f = f_kn(k, n, c);
            CHECK(parity_of(f) == Parity::Odd);
            CHECK(static_cast<std::uint64_t>(f.deg_total()) == orbit_degree(k + n));
            CHECK(f.is_monic_in_b());
        }
    }
}

TEST_CASE("divisibility among the f_kn")
{
    OrbitCache &c = shared_cache();
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned n = 1; k + n <= 5; ++n) {
            const IntPoly f = f_kn(k, n, c);
            for (unsigned l = 0; l <= k; ++l) {
                for (unsigned m = 1; m <= n; ++m) {
                    if (n % m == 0) {
                        CAPTURE(k);
                        CAPTURE(n);
                        CAPTURE(l);
                        CAPTURE(m);
                        CHECK(try_div(f, f_kn(l, m, c)).has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("mod-3 images of f_kn")
{
    OrbitCache &c = shared_cache();
    for (unsigned k = 0; k <= 5; ++k) {
        const std::size_t e = orbit_degree(k + 1);
        // t^(3^k) (t^2+1)^(3^k) = t^(3^k) + t^(3^(k+1)) over F3.
        std::vector<F3> two(3 * e + 1, F3(0));
        two[e] = F3(1);
        two[3 * e] = F3(1);
        CHECK(mod3(f_kn(k, 2, c)) == compose_line(UniPoly<F3>(two, Var::B)));
        std::vector<F3> one(e + 1, F3(0));
        one[e] = F3(1);
        CHECK(mod3(f_kn(k, 1, c)) == compose_line(UniPoly<F3>(one, Var::B)));
    }
}

TEST_CASE("capacity ceiling")
{
    OrbitCache small(std::nullopt, 27);
    CHECK_NOTHROW(small.check_capacity(4));
    CHECK_THROWS_AS(small.check_capacity(4, Start::MinusA), CapacityError);
    CHECK_THROWS_AS(small.get({Start::MinusA, 4}), CapacityError);
    CHECK_THROWS_AS(small.check_capacity(5), CapacityError);
    CHECK_THROWS_AS(iterate({Start::PlusA, 5}, small), CapacityError);
    OrbitCache dflt;
    CHECK(dflt.max_degree() == 6561);
    CHECK_NOTHROW(dflt.check_capacity(9));
    CHECK_THROWS_AS(dflt.check_capacity(10), CapacityError);
    CHECK_THROWS_AS(dflt.check_capacity(40), CapacityError);
    CHECK_THROWS_AS(dflt.check_capacity(1000), CapacityError);
}

TEST_CASE("memory cache coherence")
{
    OrbitCache c;
    const IntPoly first = iterate({Start::PlusA, 4}, c);
    c.clear_memory();
    CHECK(iterate({Start::PlusA, 4}, c) == first);
    OrbitCache fresh;
    CHECK(iterate({Start::PlusA, 4}, fresh) == first);
}

TEST_CASE("disk cache round trip and corruption")
{
    TempDir dir;
    IntPoly expected;
    {
        OrbitCache c(dir.path);
        expected = iterate({Start::MinusA, 4}, c);
        CHECK(fs::exists(c.file_for({Start::MinusA, 4})));
        CHECK(fs::exists(dir.path / "orbit_minus_4.poly"));
        CHECK(fs::exists(dir.path / "orbit_plus_0.poly") == false);
    }
    for (const auto &entry : fs::directory_iterator(dir.path)) {
        CHECK(entry.path().extension() == ".poly");
    }
    {
        std::ifstream in(dir.path / "orbit_minus_4.poly");
        std::string header;
        std::getline(in, header);
        CHECK(header == kCacheHeader);
    }
    {
        OrbitCache c(dir.path);
        CHECK(iterate({Start::MinusA, 4}, c) == expected);
    }
    // Flip one coefficient.
    {
        const fs::path file = dir.path / "orbit_minus_3.poly";
        std::ifstream in(file);
        std::string header;
        std::string body;
        std::getline(in, header);
        std::getline(in, body);
        in.close();
        const auto pos = body.find('+');
        REQUIRE(pos != std::string::npos);
        body.insert(pos + 1, "2*");
        std::ofstream(file, std::ios::trunc) << header << '\n' << body << '\n';
        OrbitCache c(dir.path);
        CHECK_THROWS_AS(iterate({Start::MinusA, 3}, c), CacheError);
    }
    {
        std::ofstream(dir.path / "orbit_minus_2.poly", std::ios::trunc)
            << "version=0;form=other\n" << render(iterate({Start::MinusA, 2}, shared_cache())) << '\n';
        OrbitCache c(dir.path);
        CHECK_THROWS_AS(iterate({Start::MinusA, 2}, c), CacheError);
    }
    {
        std::ofstream(dir.path / "orbit_minus_1.poly", std::ios::trunc) << kCacheHeader << "\nb+*\n";
        OrbitCache c(dir.path);
        CHECK_THROWS_AS(iterate({Start::MinusA, 1}, c), CacheError);
    }
}

TEST_CASE("modular evaluation matches exact evaluation")
{
    const IntPoly p = P("5*a^3*b^2-7*b+a-100");
    const std::uint64_t m = 1000003;
    const GaussRat v = eval_point(p, GaussRat(12L), GaussRat(34L));
    const Int exact = v.num().re();
    const Int reduced = ((exact % Int(m)) + Int(m)) % Int(m);
    CHECK(eval_mod(p, 12, 34, m) == reduced.get_ui());
}
