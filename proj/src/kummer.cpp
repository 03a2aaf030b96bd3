#include "ramicond/kummer.hpp"
#include "ramicond/errors.hpp"

namespace ramicond::kummer {

using padic::element;
using padic::local_field;

long pth_root_valuation(long vt, local_field const& K)
{
    long bound = K.pth_power_bound();
    if (vt <= 0 || vt >= bound)
        fail(errc::out_of_range,
             "v(t) = " + std::to_string(vt) + " outside (0, " + std::to_string(bound) + ")");
    /* v_L = p v_K, and v_L(r) = v_L(t) / p */
    return vt;
}

namespace {

element constant(element const& like, std::vector<std::uint64_t> const& digits)
{
    std::vector<std::vector<integer>> cs(1);
    for (auto d : digits) cs[0].push_back(integer(static_cast<unsigned long>(d)));
    return element::from_coefficients(like.field(), like.modulus_exponent(), cs);
}

/* digit lift of the p-th root of the residue of x; Frobenius has order f */
element residue_pth_root(element const& x)
{
    auto const& K = x.field();
    return constant(x, x.pow(to_int64(ipow(K.p, K.residue_degree - 1))).residue());
}

}

element teichmuller(element const& x)
{
    if (x.valuation() != 0)
        fail(errc::invalid_argument, "Teichmuller lifts need a unit");
    auto const& K = x.field();
    long q = to_int64(ipow(K.p, K.residue_degree));
    element w = constant(x, x.residue());
    for (int k = 0; k <= x.modulus_exponent(); ++k) w = w.pow(q);
    return w;
}

bool is_p_primitive(element const& a)
{
    long p = a.field().p;
    long v = a.valuation();
    if (v % p != 0) return true;
    if (v != 0) return false;
    element t = a - element::one(a.field(), a.modulus_exponent());
    if (t.is_zero()) return false;
    long vt = t.valuation();
    return vt > 0 && vt < a.field().pth_power_bound() && vt % p != 0;
}

long primitive_t_valuation(element const& a)
{
    if (!is_p_primitive(a))
        fail(errc::not_primitive, "element is not p-primitive");
    long v = a.valuation();
    if (v != 0) return 0;
    return (a - element::one(a.field(), a.modulus_exponent())).valuation();
}

primitive_decomposition primitivize(element const& a0)
{
    local_field const K = a0.field();
    long const p = K.p;
    int const M = a0.modulus_exponent();
    long const bound = K.pth_power_bound();

    primitive_decomposition out;
    long v = a0.valuation();
    long k = v / p;
    element a = a0.shift_down(p * k);
    out.pi_power = k;
    out.beta = element::uniformizer(K, M).pow(k);
    if (v % p != 0) {
        out.a_prime = a;
        out.t_valuation = 0;
        return out;
    }

    /* residue 1: multiply by c^p with c^p = 1 / residue */
    element c = residue_pth_root(constant(a, a.residue()).inverse());
    a = a * c.pow(p);
    out.beta = out.beta * c.inverse();

    element const one = element::one(K, M);
    for (;;) {
        element t = a - one;
        if (t.valuation_or_precision() >= bound) {
            if (t.precision() <= bound)
                fail(errc::precision_exhausted, "precision too low to decide whether a is a p-th power");
            out.beta = out.beta * padic::pth_root(a);
            out.a_prime = one;
            out.t_valuation.reset();
            return out;
        }
        long vt = t.valuation();
        if (vt % p != 0) {
            out.a_prime = a;
            out.t_valuation = vt;
            return out;
        }
        if (++out.iterations > bound)
            fail(errc::precision_exhausted, "primitivization did not terminate");
        long nu = vt / p;
        element w = constant(t, t.shift_down(vt).residue());
        element y = residue_pth_root(-w);
        element step = one + y.shift_up(nu);
        a = a * step.pow(p);
        out.beta = out.beta * step.inverse();
    }
}

rational conductor_degree_p(element const& a)
{
    auto d = primitivize(a);
    if (!d.t_valuation)
        fail(errc::trivial_extension, "element is a p-th power; the extension is trivial");
    local_field const& K = a.field();
    return rational(K.pth_power_bound() - *d.t_valuation);
}

std::vector<rational> tower_conductors(element const& a, int c)
{
    if (c < 1)
        fail(errc::invalid_argument, "c must be at least 1");
    long vt = primitive_t_valuation(a);
    local_field const& K = a.field();
    std::vector<rational> hs;
    for (int i = 1; i <= c; ++i) {
        rational h = rational(integer(ipow(K.p, i) * K.e), integer(K.p - 1)) - vt;
        h.canonicalize();
        hs.push_back(h);
    }
    return hs;
}

}
