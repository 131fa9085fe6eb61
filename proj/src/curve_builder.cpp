#include "preper/curve_builder.hpp"

#include <utility>

#include "preper/gcd.hpp"

namespace preper {

namespace {

std::string label_f(unsigned k, unsigned n)
{
    return "f_{" + std::to_string(k) + "," + std::to_string(n) + "}";
}

IntPoly divide_or_mismatch(const IntPoly &p, const IntPoly &d, const std::string &what)
{
    auto q = try_div(p, d);
    if (!q) {
        throw PipelineMismatch(what + " does not divide exactly");
    }
    return std::move(*q);
}

void finish(CurvePoly &c)
{
    c.h = sign_normalized(std::move(c.h));
    if (!c.h.is_monic_in_b()) {
        throw Error("h_{" + std::to_string(c.k) + "," + std::to_string(c.n)
                    + "} came out non-monic in b");
    }
    c.trace.h_degree = c.h.deg_total();
}

} // namespace

const IntPoly &h02_closed_form()
{
    static const IntPoly p = parse<Int>("(b-a)*(b+2*a)+1");
    return p;
}

const IntPoly &h12_closed_form()
{
    static const IntPoly p = parse<Int>("(b-a)^2+1");
    return p;
}

CurvePoly h_kn_generic(unsigned k, unsigned n, OrbitCache &cache)
{
    if (n == 0) {
        throw DomainError("h_{k,n} needs n >= 1");
    }
    CurvePoly c{k, n, f_kn(k, n, cache), {}};
    c.trace.route = "generic";
    c.trace.f_degree = c.h.deg_total();
    auto against = [&](unsigned l, unsigned m) {
        const std::string label = label_f(l, m);
        Saturation s = saturate_detailed(c.h, f_kn(l, m, cache));
        c.trace.saturated_against.push_back(label);
        if (!s.removed.is_constant()) {
            c.trace.removed.push_back({"gcd with " + label, std::move(s.removed), 1});
        }
        c.h = std::move(s.result);
    };
    for (unsigned m = 1; m < n; ++m) {
        if (n % m == 0) {
            against(k, m);
        }
    }
    if (k >= 1) {
        against(k - 1, n);
    }
    finish(c);
    return c;
}

CurvePoly h_k2_pipeline(unsigned k, OrbitCache &cache)
{
    if (k < 2) {
        throw DomainError("the staged construction needs k >= 2");
    }
    CurvePoly c{k, 2, {}, {}};
    c.trace.route = "pipeline";
    const IntPoly f = f_kn(k, 2, cache);
    const IntPoly f_prev = f_kn(k - 1, 2, cache);
    c.trace.f_degree = f.deg_total();

    IntPoly g = divide_or_mismatch(f, f_prev, label_f(k - 1, 2));
    c.trace.removed.push_back({label_f(k - 1, 2), f_prev, 1});

    static const IntPoly line = parse<Int>("b-a");
    unsigned ik = 0;
    while (auto q = try_div(g, line)) {
        g = std::move(*q);
        ++ik;
    }
    c.trace.line_multiplicity = ik;
    if (ik > 0) {
        c.trace.removed.push_back({"b-a", line, ik});
    }

    const IntPoly &h02 = h02_closed_form();
    if (k % 2 == 1) {
        g = divide_or_mismatch(g, h02, "h_{0,2}");
        c.trace.removed_h02 = true;
        c.trace.removed.push_back({"h_{0,2}", h02, 1});
        if (!primitive_gcd(g, h02).is_constant()) {
            throw PipelineMismatch("h_{0,2} still divides after one removal");
        }
    }

    const IntPoly f1 = f_kn(k, 1, cache);
    const IntPoly f1_prev = f_kn(k - 1, 1, cache);
    const IntPoly period_one = divide_or_mismatch(f1, f1_prev, label_f(k - 1, 1));
    Saturation s = saturate_detailed(g, period_one);
    c.trace.saturated_against.push_back(label_f(k, 1) + "/" + label_f(k - 1, 1));
    c.trace.t_degree = s.removed.deg_total();
    if (!s.removed.is_constant()) {
        c.trace.removed.push_back({"t", std::move(s.removed), 1});
    }
    c.h = std::move(s.result);
    finish(c);
    return c;
}

CurvePoly h_kn(unsigned k, unsigned n, OrbitCache &cache)
{
    return n == 2 && k >= 2 ? h_k2_pipeline(k, cache) : h_kn_generic(k, n, cache);
}

unsigned h_kn_mod3_exponent(const CurvePoly &curve)
{
    if (curve.n != 2) {
        throw DomainError("the mod-3 exponent is defined for n = 2");
    }
    const long db = curve.h.deg_b();
    if (db % 2 != 0) {
        throw NotAPower("odd degree in b cannot be a power of a quadratic");
    }
    const auto big_n = static_cast<unsigned>(db / 2);
    if (mod3(curve.h) != mod3(h12_closed_form()).pow(big_n)) {
        throw NotAPower("h_{" + std::to_string(curve.k)
                        + ",2} mod 3 is not a power of (b-a)^2+1");
    }
    return big_n;
}

IntPoly reconstruct(const CurvePoly &curve)
{
    IntPoly p = curve.h;
    for (const auto &r : curve.trace.removed) {
        p = p * r.factor.pow(r.multiplicity);
    }
    return p;
}

} // namespace preper
