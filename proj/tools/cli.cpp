#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "preper/criteria.hpp"
#include "preper/curve_builder.hpp"
#include "preper/gcd.hpp"
#include "preper/prime_period.hpp"
#include "preper/unicritical.hpp"

namespace preper::cli {

namespace {

using json = nlohmann::ordered_json;

// Check outcome: true, false, or not applicable.
using Check = std::optional<bool>;

json check_json(const Check &c)
{
    return c ? json(*c) : json(nullptr);
}

json int_json(const Int &x)
{
    return x.fits_slong_p() ? json(x.get_si()) : json(x.get_str());
}

UniPoly<GaussInt> gauss_poly(std::vector<GaussInt> c)
{
    return UniPoly<GaussInt>(std::move(c), Var::A);
}

json eisenstein_json(const EisensteinCertificate &c)
{
    return json{
        {"g", c.g_id},
        {"h", c.h_id},
        {"cond1", {{"holds", c.cond1.holds}, {"exponent", c.cond1.exponent}}},
        {"cond2", {{"holds", c.cond2.holds}, {"base_mod3_in_t", c.cond2.witness}}},
        {"cond3",
         {{"holds", c.cond3.holds},
          {"resultant", c.cond3.resultant.to_string()},
          {"modulus", int_json(c.cond3.modulus)}}},
        {"verdict", c.verdict},
    };
}

json trace_json(const CurveTrace &t)
{
    json removed = json::array();
    for (const auto &r : t.removed) {
        removed.push_back({{"label", r.label},
                           {"degree", r.factor.deg_total()},
                           {"multiplicity", r.multiplicity}});
    }
    return json{
        {"route", t.route},
        {"saturated_against", t.saturated_against},
        {"removed", removed},
        {"line_multiplicity", t.line_multiplicity},
        {"removed_h02", t.removed_h02},
        {"t_degree", t.t_degree},
        {"f_degree", t.f_degree},
        {"h_degree", t.h_degree},
    };
}

struct Row {
    unsigned k = 0;
    std::vector<std::pair<std::string, Check>> checks;
    json record;
    json uni;
    bool verdict = true;
};

void add_check(Row &row, std::string name, Check c)
{
    if (c && !*c) {
        row.verdict = false;
    }
    row.checks.emplace_back(std::move(name), c);
}

Row verify_k(unsigned k, OrbitCache &cache)
{
    const auto start = std::chrono::steady_clock::now();
    Row row;
    row.k = k;
    json rec;
    rec["k"] = k;

    const CurvePoly generic = h_kn_generic(k, 2, cache);
    std::optional<CurvePoly> pipeline;
    Check agree;
    if (k >= 2) {
        try {
            pipeline = h_k2_pipeline(k, cache);
            agree = pipeline->h == generic.h;
        } catch (const PipelineMismatch &e) {
            agree = false;
            rec["pipeline_error"] = e.what();
        }
    }
    const CurvePoly &curve = pipeline ? *pipeline : generic;
    const IntPoly &h = curve.h;
    const IntPoly f = f_kn(k, 2, cache);

    rec["deg_b"] = h.deg_b();
    rec["h"] = render(h);
    Check closed;
    if (k == 0) {
        closed = h == h02_closed_form();
    } else if (k == 1) {
        closed = h == h12_closed_form();
    }
    add_check(row, "closed", closed);
    add_check(row, "agree", agree);
    const Check rebuilt = reconstruct(curve) == f;
    add_check(row, "rebuild", rebuilt);
    rec["closed_form_match"] = check_json(closed);
    rec["pipeline_generic_agree"] = check_json(agree);
    rec["reconstructs_f"] = check_json(rebuilt);
    rec["trace"] = trace_json(curve.trace);

    Check mod3_ok;
    try {
        const unsigned n = h_kn_mod3_exponent(curve);
        rec["N"] = n;
        mod3_ok = true;
    } catch (const NotAPower &e) {
        rec["N"] = nullptr;
        rec["mod3_error"] = e.what();
        mod3_ok = false;
    }
    add_check(row, "mod3", mod3_ok);

    // k = 1 is the base itself; the resultant vanishes and the test does not apply.
    if (k != 1) {
        const auto cert = eisenstein_check(h, h12_closed_form(),
                                           "h_{" + std::to_string(k) + ",2}", "h_{1,2}");
        Check ok = cert.verdict;
        if (mod3_ok && *mod3_ok && cert.cond1.exponent != rec["N"].get<unsigned>()) {
            ok = false;
        }
        rec["eisenstein"] = eisenstein_json(cert);
        add_check(row, "eisen", ok);
    } else {
        rec["eisenstein"] = nullptr;
        add_check(row, "eisen", std::nullopt);
    }

    const UniPoly<Int> r12 = resultant_h12(h);
    rec["resultant_h12"] = r12.to_string();
    Check r12_ok;
    if (k >= 2) {
        const UniPoly<Int> expected = k % 2 == 0
                                          ? UniPoly<Int>({Int(9), Int(0), Int(36)}, Var::A)
                                          : UniPoly<Int>({Int(0), Int(0), Int(9)}, Var::A);
        r12_ok = r12 == expected || r12 == -expected;
        bool survives = false;
        for (const Int &c : r12.coeffs()) {
            survives = survives || mpz_divisible_ui_p(c.get_mpz_t(), 81) == 0;
        }
        r12_ok = *r12_ok && survives;
    }
    rec["resultant_h12_match"] = check_json(r12_ok);
    add_check(row, "res_h12", r12_ok);

    const LineResultant line = resultant_with_line(h, 1);
    rec["resultant_with_line"] = {{"raw", line.raw.to_string()},
                                  {"unit", line.unit.to_string()},
                                  {"normalized", line.normalized.to_string()}};
    Check line_ok;
    if (k == 0) {
        line_ok = line.raw == gauss_poly({GaussInt(0L), GaussInt(0L, -3L)});
    } else if (k >= 2) {
        const auto expected = k % 2 == 0 ? gauss_poly({GaussInt(3L), GaussInt(0L, 6L)})
                                         : gauss_poly({GaussInt(0L), GaussInt(3L)});
        line_ok = line.normalized == unit_normalized(expected).normalized;
    }
    rec["resultant_with_line"]["match"] = check_json(line_ok);
    add_check(row, "res_line", line_ok);

    const Parity parity = parity_of(h);
    rec["parity"] = to_string(parity);
    add_check(row, "even", parity == Parity::Even);

    const GaussRat zero_point = eval_point(h, GaussRat(0L), GaussRat(0L));
    const Check constant_ok = zero_point.den() == 1 && zero_point.num().im() == 0
                              && mpz_fdiv_ui(zero_point.num().re().get_mpz_t(), 3) == 1;
    rec["constant_term_is_1_mod_3"] = check_json(constant_ok);
    add_check(row, "const", constant_ok);

    Check smooth;
    if (k >= 2) {
        const GaussRat a0 = k % 2 == 0 ? GaussRat(GaussInt(0L, 1L), 2) : GaussRat(0L);
        const GaussRat b0 = k % 2 == 0 ? GaussRat(GaussInt(0L, -1L), 2) : GaussRat(GaussInt(0L, -1L));
        const SmoothPointWitness w = smooth_point_check(h, a0, b0);
        smooth = w.smooth;
        rec["smooth_point"] = {{"a", w.a0.to_string()},        {"b", w.b0.to_string()},
                               {"value", w.value.to_string()}, {"grad_a", w.grad_a.to_string()},
                               {"grad_b", w.grad_b.to_string()}, {"smooth", w.smooth}};
    } else {
        rec["smooth_point"] = nullptr;
    }
    add_check(row, "smooth", smooth);

    // Unicritical specialisation of the same polynomial.
    json uni;
    uni["k"] = k;
    if (k >= 2 && k % 2 == 0) {
        const UniResultant res = uni_resultant_check(k, h);
        const UniEisenstein e = uni_eisenstein(k, h);
        const bool nine = res.univariate == 9 || res.univariate == -9;
        uni["degree"] = e.degree;
        uni["resultant_univariate"] = int_json(res.univariate);
        uni["resultant_bivariate_at_0"] = int_json(res.bivariate_at_zero);
        uni["eisenstein"] = {{"cond1", {{"holds", e.cond1}, {"exponent", e.exponent}}},
                             {"cond2", e.cond2},
                             {"cond3", e.cond3},
                             {"verdict", e.verdict}};
        uni["verdict"] = e.verdict && nine;
        add_check(row, "uni", e.verdict && nine);
    } else {
        const UniOddRecord r = uni_odd_record(k, h);
        uni["degree"] = r.degree;
        uni["resultant_univariate"] = int_json(r.resultant);
        uni["scope"] = "recorded only, odd k";
        uni["verdict"] = nullptr;
        add_check(row, "uni", std::nullopt);
    }

    rec["verdict"] = row.verdict;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    rec["elapsed_ms"] = ms.count();
    row.record = std::move(rec);
    row.uni = std::move(uni);
    return row;
}

json base_report()
{
    return json{{"version", kVersion},
                {"form", kNormalFormId},
                {"k2_reports", json::array()},
                {"prime_period", json::array()},
                {"unicritical", json::array()},
                {"verdict", true}};
}

std::filesystem::path default_cache_dir()
{
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "preper";
    }
    if (const char *home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "preper";
    }
    return std::filesystem::temp_directory_path() / "preper-cache";
}

void write_json(const json &report, const std::string &path, std::ostream &out)
{
    if (path.empty()) {
        return;
    }
    if (path == "-") {
        out << report.dump(2) << '\n';
        return;
    }
    std::ofstream f(path, std::ios::trunc);
    f << report.dump(2) << '\n';
    if (!f) {
        throw Error("cannot write " + path);
    }
}

const char *mark(const Check &c)
{
    if (!c) {
        return "-";
    }
    return *c ? "PASS" : "FAIL";
}

struct Options {
    std::string cache_dir;
    bool no_disk_cache = false;
    std::uint64_t max_degree = OrbitCache::kDefaultMaxDegree;
    unsigned jobs = 1;
    std::string json_path;
};

OrbitCache make_cache(const Options &o)
{
    if (o.no_disk_cache) {
        return OrbitCache(std::nullopt, o.max_degree);
    }
    std::filesystem::path dir = o.cache_dir.empty() ? default_cache_dir()
                                                    : std::filesystem::path(o.cache_dir);
    return OrbitCache(dir, o.max_degree);
}

int cmd_verify_k2(const Options &o, unsigned k_min, unsigned k_max, std::ostream &out)
{
    if (k_min > k_max) {
        throw CLI::ValidationError("--k-min", "must not exceed --k-max");
    }
    OrbitCache cache = make_cache(o);
    cache.check_capacity(k_max + 2);

    const std::size_t count = k_max - k_min + 1;
    std::vector<Row> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = verify_k(k_min + static_cast<unsigned>(i), cache);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    json report = base_report();
    report["k_range"] = {k_min, k_max};
    bool verdict = true;
    for (auto &row : rows) {
        verdict = verdict && row.verdict;
        report["k2_reports"].push_back(row.record);
        report["unicritical"].push_back(row.uni);
    }
    report["verdict"] = verdict;

    out << std::left << std::setw(4) << "k" << std::setw(7) << "deg_b";
    for (const auto &c : rows.front().checks) {
        out << std::setw(10) << c.first;
    }
    out << '\n';
    for (const auto &row : rows) {
        out << std::setw(4) << row.k << std::setw(7) << row.record["deg_b"].get<long>();
        for (const auto &c : row.checks) {
            out << std::setw(10) << mark(c.second);
        }
        out << '\n';
    }
    out << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
    write_json(report, o.json_path, out);
    return verdict ? kPass : kVerificationFailed;
}

int cmd_poly(const Options &o, const std::string &kind, unsigned k, unsigned n, bool reduce,
             std::ostream &out)
{
    if (n == 0) {
        throw CLI::ValidationError("n", "must be at least 1");
    }
    OrbitCache cache = make_cache(o);
    cache.check_capacity(k + n);
    const IntPoly p = kind == "f" ? f_kn(k, n, cache) : h_kn(k, n, cache).h;
    out << (reduce ? render(mod3(p)) : render(p)) << '\n';
    return kPass;
}

int cmd_prime_q(const Options &o, unsigned q, std::ostream &out)
{
    if (!is_prime(q)) {
        throw CLI::ValidationError("q", std::to_string(q) + " is not prime");
    }
    if (q > kMaxDichotomyPrime) {
        throw CapacityError("q = " + std::to_string(q) + " exceeds the supported range");
    }
    OrbitCache cache = make_cache(o);
    const PrimePeriodReport r = dichotomy_check(q, &cache);
    json report = base_report();
    report["prime_period"].push_back({{"q", q},
                                      {"degree", int_json(r.degree)},
                                      {"mod3_form_match", check_json(r.mod3_form_match)},
                                      {"f3_irreducible", r.f3_irreducible},
                                      {"degree_divides_q", r.degree_divides},
                                      {"verdict", r.consistent}});
    report["verdict"] = r.consistent;
    out << "q=" << q << " degree=" << r.degree << " irreducible="
        << (r.f3_irreducible ? "true" : "false")
        << " degree_divides=" << (r.degree_divides ? "true" : "false") << " mod3_form="
        << (r.mod3_form_match ? (*r.mod3_form_match ? "match" : "MISMATCH") : "skipped") << '\n';
    out << "verdict: " << (r.consistent ? "PASS" : "FAIL") << '\n';
    write_json(report, o.json_path, out);
    return r.consistent ? kPass : kVerificationFailed;
}

int cmd_uni(const Options &o, unsigned k, std::ostream &out)
{
    OrbitCache cache = make_cache(o);
    cache.check_capacity(k + 2);
    const IntPoly h = h_kn(k, 2, cache).h;
    json report = base_report();
    bool verdict = true;
    if (k >= 2 && k % 2 == 0) {
        const UniResultant res = uni_resultant_check(k, h);
        const UniEisenstein e = uni_eisenstein(k, h);
        verdict = e.verdict && (res.univariate == 9 || res.univariate == -9);
        report["unicritical"].push_back(
            {{"k", k},
             {"degree", e.degree},
             {"resultant_univariate", int_json(res.univariate)},
             {"resultant_bivariate_at_0", int_json(res.bivariate_at_zero)},
             {"eisenstein",
              {{"cond1", {{"holds", e.cond1}, {"exponent", e.exponent}}},
               {"cond2", e.cond2},
               {"cond3", e.cond3},
               {"verdict", e.verdict}}},
             {"verdict", verdict}});
        out << "k=" << k << " degree=" << e.degree << " resultant=" << res.univariate
            << " eisenstein=" << (e.verdict ? "true" : "false") << '\n';
    } else {
        const UniOddRecord r = uni_odd_record(k, h);
        report["unicritical"].push_back({{"k", k},
                                         {"degree", r.degree},
                                         {"resultant_univariate", int_json(r.resultant)},
                                         {"scope", "recorded only, odd k"},
                                         {"verdict", nullptr}});
        out << "k=" << k << " degree=" << r.degree << " resultant=" << r.resultant
            << " (recorded only, odd k)\n";
    }
    report["verdict"] = verdict;
    out << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
    write_json(report, o.json_path, out);
    return verdict ? kPass : kVerificationFailed;
}

int cmd_thurston(const Options &o, unsigned k1, unsigned n1, unsigned k2, unsigned n2,
                 std::ostream &out)
{
    if (n1 == 0 || n2 == 0) {
        throw CLI::ValidationError("n", "periods must be at least 1");
    }
    OrbitCache cache = make_cache(o);
    cache.check_capacity(k1 + n1, Start::PlusA);
    cache.check_capacity(k2 + n2, Start::MinusA);
    const bool coprime = thurston_coprime(k1, n1, k2, n2, cache);
    json report = base_report();
    report["thurston"] = {{"k1", k1}, {"n1", n1}, {"k2", k2}, {"n2", n2}, {"coprime", coprime}};
    report["verdict"] = coprime;
    out << "coprime=" << (coprime ? "true" : "false") << '\n';
    write_json(report, o.json_path, out);
    return coprime ? kPass : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Preperiodic-curve polynomials of the cubic family z^3-3a^2z+2a^3+b", "preper"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options o;
    auto add_common = [&o](CLI::App *sub) {
        sub->add_option("--cache", o.cache_dir, "Iterate cache directory")
            ->envname("PREPER_CACHE_DIR");
        sub->add_flag("--no-disk-cache", o.no_disk_cache, "Keep iterates in memory only");
        sub->add_option("--max-degree", o.max_degree, "Degree ceiling for f^m")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--json", o.json_path, "Write the JSON report here ('-' for stdout)");
    };

    unsigned k_min = 0;
    unsigned k_max = 0;
    auto *verify = app.add_subcommand("verify-k2", "Run the per-k suite for h_{k,2}");
    verify->add_option("--k-min", k_min)->required();
    verify->add_option("--k-max", k_max)->required();
    add_common(verify);

    std::string kind;
    unsigned pk = 0;
    unsigned pn = 1;
    bool reduce = false;
    auto *poly = app.add_subcommand("poly", "Print f_{k,n} or h_{k,n}");
    poly->add_option("kind,--kind", kind)->required()->check(CLI::IsMember({"f", "h"}));
    poly->add_option("k,--k", pk)->required();
    poly->add_option("n,--n", pn)->required();
    poly->add_flag("--mod3", reduce, "Print the reduction mod 3");
    add_common(poly);

    unsigned q = 0;
    auto *prime = app.add_subcommand("prime-q", "Mod-3 dichotomy for a prime period q");
    prime->add_option("q,--q", q)->required();
    add_common(prime);

    unsigned uk = 0;
    auto *uni = app.add_subcommand("uni", "Unicritical specialisation a = 0");
    uni->add_option("k,--k", uk)->required();
    add_common(uni);

    unsigned k1 = 0;
    unsigned n1 = 1;
    unsigned k2 = 0;
    unsigned n2 = 1;
    auto *thurston = app.add_subcommand("thurston", "Coprimality of the +a and -a relations");
    thurston->add_option("k1,--k1", k1)->required();
    thurston->add_option("n1,--n1", n1)->required();
    thurston->add_option("k2,--k2", k2)->required();
    thurston->add_option("n2,--n2", n2)->required();
    add_common(thurston);

    std::vector<std::string> argv_store{"preper"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (verify->parsed()) {
            return cmd_verify_k2(o, k_min, k_max, out);
        }
        if (poly->parsed()) {
            return cmd_poly(o, kind, pk, pn, reduce, out);
        }
        if (prime->parsed()) {
            return cmd_prime_q(o, q, out);
        }
        if (uni->parsed()) {
            return cmd_uni(o, uk, out);
        }
        return cmd_thurston(o, k1, n1, k2, n2, out);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    } catch (const CapacityError &e) {
        err << "capacity: " << e.what() << '\n';
        return kInternal;
    } catch (const CacheError &e) {
        err << "cache: " << e.what() << '\n';
        return kInternal;
    } catch (const DomainError &e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const NotAPower &e) {
        err << "verification: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const NotDivisible &e) {
        err << "verification: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception &e) {
        err << "internal: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace preper::cli
