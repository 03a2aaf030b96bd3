#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/filtration.hpp"
#include "ramicond/herbrand.hpp"
#include "ramicond/kummer.hpp"
#include "ramicond/oracle.hpp"
#include "ramicond/padic.hpp"
#include "ramicond/towers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace ramicond;
using padic::element;
using padic::local_field;

namespace {

constexpr double limit_table = 1.0;
constexpr double limit_oracle_instance = 60.0;
constexpr double limit_cyclotomic = 1.0;
constexpr double limit_triangle = 5.0;
constexpr double limit_primitive = 10.0;
constexpr double limit_herbrand = 5.0;
constexpr int primitive_trials = 1000;
constexpr int herbrand_trials = 1000;
constexpr long frozen_different = 2;

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

rational q(long n, long d = 1)
{
    rational r(n, d);
    r.canonicalize();
    return r;
}

struct verdict {
    bool ok = true;
    std::string detail;
    void require(bool cond, std::string const& what)
    {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void report(int id, std::string const& name, verdict const& v, double secs, double limit)
{
    bool pass = v.ok && (limit <= 0 || secs < limit);
    if (!pass) ++failures;
    std::string why = v.ok ? (pass ? "" : " (time limit exceeded)") : " (" + v.detail + ")";
    char bound[32] = "";
    if (limit > 0) std::snprintf(bound, sizeof bound, " (limit %g s)", limit);
    std::printf("%s criterion %d: %s, %.3f s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(), secs, bound,
                why.c_str());
}

/* the classification table, written out case by case */
rational table(int c, long n, long b)
{
    bool b1 = b % 4 == 1;
    if (n % 2 == 1) return q(c + 1);
    if (c == 1) return b1 ? q(0) : q(1);
    if (n % 4 == 0) return b1 ? q(c - 1) : q(c);
    if (b1) return q(c);
    if (c == 2) return q(1);
    return q(2 * c - 1, 2);
}

void criterion_table()
{
    auto t0 = clock_type::now();
    verdict v;
    int count = 0;
    for (int c = 1; c <= 5; ++c)
        for (long n = 0; n < (1L << c); ++n)
            for (long b : {3L, 5L, 7L, 9L, 11L, 13L}) {
                auto r = classify::classify_p2(c, rational(integer(b) << static_cast<unsigned long>(n)));
                v.require(r.conductor == table(c, n, b),
                          "c=" + std::to_string(c) + " n=" + std::to_string(n) + " b=" + std::to_string(b));
                ++count;
            }
    v.require(classify::classify_p2(3, q(12)).conductor == q(5, 2), "(c=3, a=12)");
    v.require(classify::classify_p2(3, q(12)).case_label == "iig", "(c=3, a=12) label");
    v.require(classify::classify_p2(2, q(2)).conductor == 3, "(c=2, n=1)");
    report(1, "classification table on " + std::to_string(count) + " grid points", v, seconds_since(t0), limit_table);
}

void criterion_oracle()
{
    auto t0 = clock_type::now();
    verdict v;
    double worst = 0;
    for (int c : {1, 2})
        for (long a : {2L, 3L, 5L, 6L, 10L, 12L, 20L}) {
            auto ti = clock_type::now();
            std::string tag = "c=" + std::to_string(c) + " a=" + std::to_string(a);
            try {
                auto rep = oracle::verify_against_classifier(2, c, q(a));
                v.require(rep.degree <= 16, tag + " degree");
                v.require(rep.match, tag + ": oracle " + to_string(rep.conductor_oracle) + " vs formula " +
                                         to_string(rep.conductor_formula));
                std::printf("  oracle p=2 c=%d a=%ld: %s = %s, degree %ld\n", c, a, to_string(rep.conductor_oracle).c_str(),
                            to_string(rep.conductor_formula).c_str(), rep.degree);
            } catch (error const& e) {
                v.require(false, tag + ": " + std::string(errc_name(e.code())));
            }
            double s = seconds_since(ti);
            worst = std::max(worst, s);
            v.require(s < limit_oracle_instance, tag + " slower than the per-instance limit");
        }
    std::printf("  slowest oracle instance %.3f s\n", worst);
    report(2, "oracle equals classifier on 14 instances", v, seconds_since(t0), 0);
}

void criterion_cyclotomic()
{
    auto t0 = clock_type::now();
    verdict v;
    for (long p : {2L, 3L, 5L})
        for (int n = 1; n <= 6; ++n) {
            auto up = herbrand::upper_from_lower(filtration::cyclotomic(p, n));
            v.require(herbrand::conductor(up) == n - 1, "p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    report(3, "cyclotomic conductor n - 1", v, seconds_since(t0), limit_cyclotomic);
}

element with_t_valuation(local_field const& K, long vt)
{
    int M = padic::default_precision(4, K.level);
    if (vt == 0) return element::uniformizer(K, M);
    return element::one(K, M) + element::uniformizer(K, M).pow(vt);
}

void criterion_triangle()
{
    auto t0 = clock_type::now();
    verdict v;
    int count = 0;
    for (long p : {2L, 3L, 5L})
        for (int l = 1; l <= 3; ++l) {
            auto K = local_field::cyclotomic(p, l);
            long top = to_int64(ipow(p, l));
            for (long vt = 0; vt < top; ++vt) {
                if (vt > 0 && vt % p == 0) continue;
                element a = with_t_valuation(K, vt);
                for (int c = 1; c <= 4; ++c) {
                    std::string tag = "p=" + std::to_string(p) + " l=" + std::to_string(l) + " c=" +
                                      std::to_string(c) + " vt=" + std::to_string(vt);
                    auto steps = kummer::tower_conductors(a, c);
                    rational h = towers::iterated_degree_p_tower(steps, p);
                    auto m = classify::metabelian_conductor(p, l, c, vt);
                    v.require(h == m.over_kl, tag + " tower");
                    v.require(towers::descend_through_cyclotomic(h, p, l) == m.closure_over_k0, tag + " descent");
                    ++count;
                }
            }
        }
    report(4, "formula triangle on " + std::to_string(count) + " instances", v, seconds_since(t0), limit_triangle);
}

element random_element(local_field const& K, int M, std::mt19937_64& rng)
{
    std::vector<std::vector<integer>> cs(static_cast<std::size_t>(K.e));
    for (auto& c : cs) c.push_back(integer(static_cast<unsigned long>(rng() % 1000)));
    return element::from_coefficients(K, M, cs);
}

element random_unit(local_field const& K, int M, std::mt19937_64& rng)
{
    for (;;) {
        element x = random_element(K, M, rng);
        if (x.valuation_or_precision() == 0) return x;
    }
}

std::optional<rational> conductor_or_trivial(element const& a)
{
    try {
        return kummer::conductor_degree_p(a);
    } catch (error const& e) {
        if (e.code() == errc::trivial_extension) return std::nullopt;
        throw;
    }
}

void criterion_primitive()
{
    auto t0 = clock_type::now();
    verdict v;
    std::mt19937_64 rng(1000);
    int done = 0;
    while (done < primitive_trials) {
        long p = done % 2 ? 3 : 2;
        int l = 1 + (done / 2) % 2;
        auto K = local_field::cyclotomic(p, l);
        int M = 14;
        long bound = K.pth_power_bound();
        element a = random_unit(K, M, rng);
        int shape = static_cast<int>(rng() % 3);
        if (shape == 1) a = a.shift_up(static_cast<long>(rng() % 5));
        if (shape == 2)
            a = element::one(K, M) + random_element(K, M, rng).shift_up(1 + static_cast<long>(rng() % (bound + 1)));
        if (a.valuation_or_precision() >= a.precision()) continue;
        std::string tag = "trial " + std::to_string(done);
        try {
            auto d = kummer::primitivize(a);
            element lhs = a, ap = d.a_prime;
            if (d.beta.field().residue_degree != K.residue_degree) {
                lhs = lhs.lifted();
                ap = ap.lifted();
            }
            v.require(lhs.equals(ap * d.beta.pow(p)), tag + " recombination");
            v.require(d.iterations <= bound, tag + " iteration count");
            element u = random_unit(K, M, rng);
            v.require(conductor_or_trivial(a * u.pow(p)) == conductor_or_trivial(a), tag + " invariance");
        } catch (error const& e) {
            v.require(false, tag + ": " + std::string(errc_name(e.code())));
        }
        ++done;
    }
    report(5, "primitivization on " + std::to_string(done) + " random elements", v, seconds_since(t0), limit_primitive);
}

herbrand::filtration random_lower(std::mt19937_64& rng)
{
    long p = rng() % 2 ? 2 : 3;
    int steps = 1 + static_cast<int>(rng() % 4);
    std::vector<long> orders;
    long order = 1;
    for (int k = 0; k < steps; ++k) {
        order *= p;
        orders.push_back(order);
    }
    std::reverse(orders.begin(), orders.end());
    std::vector<herbrand::jump> js;
    rational at = rng() % 3 == 0 ? rational(0) : q(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
    for (long o : orders) {
        js.push_back({at, o});
        at += q(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 4));
        at.canonicalize();
    }
    return herbrand::normalized(herbrand::numbering::lower, js);
}

void criterion_herbrand()
{
    auto t0 = clock_type::now();
    verdict v;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < herbrand_trials; ++trial) {
        auto f = random_lower(rng), g = random_lower(rng), h = random_lower(rng);
        auto pf = herbrand::phi_from_lower(f), pg = herbrand::phi_from_lower(g), ph = herbrand::phi_from_lower(h);
        std::string tag = "trial " + std::to_string(trial);
        v.require(herbrand::lower_from_upper(herbrand::upper_from_lower(f)) == f, tag + " round trip");
        v.require(herbrand::eval(pf, herbrand::highest_lower_jump(f)) == herbrand::conductor(f), tag + " phi(l) = h");
        v.require(herbrand::eval(herbrand::psi_from_lower(f), herbrand::conductor(f)) == herbrand::highest_lower_jump(f),
                  tag + " psi(h) = l");
        v.require(herbrand::invert(herbrand::invert(pf)) == pf, tag + " double inverse");
        v.require(herbrand::compose(pf, herbrand::invert(pf)) == herbrand::identity(), tag + " inverse");
        v.require(herbrand::compose(herbrand::compose(pf, pg), ph) == herbrand::compose(pf, herbrand::compose(pg, ph)),
                  tag + " associativity");
        rational x = q(static_cast<long>(rng() % 200), 1 + static_cast<long>(rng() % 12));
        v.require(herbrand::eval(herbrand::compose(pf, pg), x) == herbrand::eval(pf, herbrand::eval(pg, x)),
                  tag + " pointwise composition");
    }
    report(6, "Herbrand identities on " + std::to_string(herbrand_trials) + " random filtrations", v,
           seconds_since(t0), limit_herbrand);
}

void criterion_bounds()
{
    auto t0 = clock_type::now();
    verdict v;
    int count = 0;
    for (long p : {2L, 3L, 5L})
        for (int l = 1; l <= 3; ++l)
            for (int c = 1; c <= 4; ++c)
                for (long vt = 0; vt < to_int64(ipow(p, l)); ++vt) {
                    if (vt > 0 && vt % p == 0) continue;
                    std::string tag = "p=" + std::to_string(p) + " l=" + std::to_string(l) + " c=" +
                                      std::to_string(c) + " vt=" + std::to_string(vt);
                    rational exact = classify::metabelian_conductor(p, l, c, vt).closure_over_k0;
                    v.require(classify::bound_c2_specific(p, l, c, vt, std::nullopt) >= exact, tag + " specific");
                    v.require(classify::bound_ccruder(p, l, c, std::max(l, c), vt) >= exact, tag + " cruder");
                    ++count;
                }
    report(7, "bounds dominate the exact conductor on " + std::to_string(count) + " instances", v,
           seconds_since(t0), 0);
}

void criterion_different()
{
    auto t0 = clock_type::now();
    verdict v;
    auto r = oracle::lower_filtration(2, 1, q(3));
    auto classified = herbrand::lower_from_upper(
        herbrand::normalized(herbrand::numbering::upper, {{classify::classify_p2(1, q(3)).conductor, 2}}));
    long d = filtration::different_exponent(classified);
    v.require(r.different == frozen_different, "oracle different " + std::to_string(r.different));
    v.require(d == frozen_different, "classified different " + std::to_string(d));
    v.require(filtration::different_exponent(r.lower) == d, "oracle filtration different");
    report(8, "different exponent of K_1(3^(1/2)) is " + std::to_string(frozen_different), v, seconds_since(t0), 0);
}

}

int main()
{
    std::vector<std::function<void()>> all{criterion_table, criterion_oracle, criterion_cyclotomic, criterion_triangle,
                                           criterion_primitive, criterion_herbrand, criterion_bounds, criterion_different};
    for (auto const& run : all) {
        try {
            run();
        } catch (std::exception const& e) {
            ++failures;
            std::printf("FAIL unexpected exception: %s\n", e.what());
        }
    }
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
