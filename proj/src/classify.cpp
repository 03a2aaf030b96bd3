#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/kummer.hpp"

#include <algorithm>

namespace ramicond::classify {

namespace {

rational canon(rational q)
{
    q.canonicalize();
    return q;
}

rational cyclotomic_scale(long p, int l)
{
    return rational(integer((p - 1) * ipow(p, l - 1)));
}

void check_params(long p, int l, int c)
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    if (l < 1 || c < 1)
        fail(errc::invalid_argument, "level and c must be at least 1");
}

}

metabelian_result metabelian_conductor(long p, int l, int c, long vt)
{
    check_params(p, l, c);
    if (vt < 0 || vt >= to_int64(ipow(p, l)) || (vt > 0 && vt % p == 0))
        fail(errc::not_primitive, "v(t) = " + std::to_string(vt) + " is not admissible");
    rational D = cyclotomic_scale(p, l);
    metabelian_result r;
    r.over_kl = canon(rational(integer((c * (p - 1) + 1) * ipow(p, l - 1) - vt)));
    r.closure_over_k0 = canon(ramicond::max(rational(l - 1), rational(c + l - 1) - rational(vt - 1) / D));
    return r;
}

metabelian_result metabelian_conductor(int c, padic::element const& a)
{
    auto const& K = a.field();
    return metabelian_conductor(K.p, K.level, c, kummer::primitive_t_valuation(a));
}

rational lemma_bound_l2(long p, int l, int c, long vt)
{
    check_params(p, l, c);
    if (l > c)
        fail(errc::out_of_range, "needs l <= c");
    if (vt < 0 || vt >= to_int64(ipow(p, l)))
        fail(errc::out_of_range, "needs 0 <= v(t) < p^l");
    return rational(integer(ipow(p, c + l - 1) - vt));
}

rational bound_c2_specific(long p, int l, int c, std::optional<long> vt_alpha_prime,
                           std::optional<long> vt_beta)
{
    check_params(p, l, c);
    rational D = cyclotomic_scale(p, l);
    rational mu(std::max(l, c) - 1);
    if (vt_alpha_prime)
        mu = ramicond::max(mu, rational(c + l - 1) - rational(*vt_alpha_prime - 1) / D);
    /* the beta part only enters from c = 2 on */
    if (c >= 2 && vt_beta)
        mu = ramicond::max(mu, rational(c + l - 2) - rational(*vt_beta - 1) / D);
    return canon(mu);
}

rational bound_ccruder(long p, int l, int c, int d, std::optional<long> vt_alpha)
{
    check_params(p, l, c);
    if (d < std::max(l, c))
        fail(errc::out_of_range, "needs d >= max(l, c)");
    rational D = cyclotomic_scale(p, l);
    rational mu = ramicond::max(rational(d - 1), rational(c + l - 2) + 1 / D);
    if (vt_alpha)
        mu = ramicond::max(mu, rational(c + l - 1) - rational(*vt_alpha - 1) / D);
    return canon(mu);
}

classified_conductor classify_p2_case(int c, long n, long b_mod4)
{
    if (c < 1 || c > 40)
        fail(errc::invalid_argument, "c out of range");
    if (n < 0 || n >= (1L << c))
        fail(errc::out_of_range, "n must satisfy 0 <= n < 2^c");
    if (b_mod4 != 1 && b_mod4 != 3)
        fail(errc::invalid_argument, "b must be odd");
    bool b1 = b_mod4 == 1;
    if (n % 2 == 1) return {rational(c + 1), "i", false};
    if (c == 1) return b1 ? classified_conductor{rational(0), "iia", true}
                          : classified_conductor{rational(1), "iib", false};
    if (n % 4 == 0) return b1 ? classified_conductor{rational(c - 1), "iic", false}
                              : classified_conductor{rational(c), "iid", false};
    if (b1) return {rational(c), "iie", false};
    if (c == 2) return {rational(1), "iif", false};
    return {rational(2 * c - 1, 2), "iig", false};
}

classified_conductor classify_p2(int c, rational const& a)
{
    if (a == 0)
        fail(errc::invalid_argument, "a must be nonzero");
    if (c < 1 || c > 40)
        fail(errc::invalid_argument, "c out of range");
    long n = *ramicond::valuation(a, 2);
    integer num = a.get_num(), den = a.get_den();
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), integer(2).get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), integer(2).get_mpz_t());
    integer b = num * den;          // den is odd, so den = den^-1 mod 4
    integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), b.get_mpz_t(), 4);
    long period = 1L << c;
    long nn = ((n % period) + period) % period;
    return classify_p2_case(c, nn, r.get_si());
}

classified_conductor classify_p2(int c, padic::element const& a)
{
    auto const& K = a.field();
    if (K.p != 2 || K.level != 1 || K.residue_degree != 1)
        fail(errc::invalid_argument, "classification needs an element of K_1 for p = 2");
    if (a.modulus_exponent() < 2)
        fail(errc::precision_exhausted, "b mod 4 needs precision 2");
    long n = a.valuation();
    padic::element b = a;
    for (long k = 0; k < n; ++k) b = b.divide_by_p();
    if (b.precision() < 2)
        fail(errc::precision_exhausted, "b mod 4 is not determined at this precision");
    long period = 1L << std::min(c, 40);
    long nn = n % period;
    return classify_p2_case(c, nn, static_cast<long>(b.coefficient(0) % 4));
}

rational subextension_conductor(int cprime, rational const& h_inner)
{
    return ramicond::max(rational(cprime - 1), h_inner);
}

rational descriptor_conductor(filtration::field_descriptor const& fd)
{
    if (fd.cprime < 1 || fd.cdouble < 0 || fd.cdouble > fd.cprime)
        fail(errc::invalid_argument, "descriptor needs 0 <= c'' <= c'");
    if (fd.cdouble == 0) return rational(fd.cprime - 1);
    return subextension_conductor(fd.cprime, classify_p2(fd.cdouble, fd.a).conductor);
}

herbrand::filtration full_filtration_p2(int c, rational const& a,
                                        filtration::subextension_lattice lattice)
{
    if (lattice.nodes.empty())
        fail(errc::invalid_argument, "empty lattice");
    for (auto& nd : lattice.nodes) {
        if (!nd.field) continue;
        rational h = descriptor_conductor(*nd.field);
        if (nd.conductor && *nd.conductor != h)
            fail(errc::inconsistent_conductors,
                 "node " + nd.label + " states conductor " + to_string(*nd.conductor) +
                 " but its field has " + to_string(h));
        nd.conductor = h;
    }
    auto top = std::max_element(lattice.nodes.begin(), lattice.nodes.end(),
        [](filtration::lattice_node const& x, filtration::lattice_node const& y) { return x.degree < y.degree; });
    rational expect = subextension_conductor(c, classify_p2(c, a).conductor);
    if (top->conductor && *top->conductor != expect)
        fail(errc::inconsistent_conductors,
             "top node conductor " + to_string(*top->conductor) + " differs from " + to_string(expect));
    return filtration::reconstruct_upper(lattice);
}

}
