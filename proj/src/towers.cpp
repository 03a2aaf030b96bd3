#include "ramicond/towers.hpp"
#include "ramicond/errors.hpp"

namespace ramicond::towers {

namespace {

rational canon(rational q)
{
    q.canonicalize();
    return q;
}

void check_prime(long p)
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
}

}

conductor_value exact(rational const& v) { return {canon(v), kind::exact}; }
conductor_value bound(rational const& v) { return {canon(v), kind::upper_bound}; }

conductor_value compositum(std::vector<conductor_value> const& hs)
{
    if (hs.empty())
        fail(errc::empty_list, "compositum of no fields");
    bool have_exact = false;
    rational best_exact = 0, best_all = hs.front().value;
    for (auto const& h : hs) {
        best_all = ramicond::max(best_all, h.value);
        if (h.is_exact()) {
            best_exact = have_exact ? ramicond::max(best_exact, h.value) : h.value;
            have_exact = true;
        }
    }
    if (have_exact && best_exact == best_all) return exact(best_exact);
    return bound(best_all);
}

conductor_value compositum_exact(rational const& h1, rational const& h2)
{
    if (h1 <= h2)
        fail(errc::hypothesis_violated,
             "needs h1 > h2, got " + ramicond::to_string(h1) + " and " + ramicond::to_string(h2));
    return exact(h1);
}

rational degree_p_tower(rational const& hLK, rational const& hML, long p)
{
    check_prime(p);
    rational pp(p);
    return canon(ramicond::max(hLK, (pp - 1) / pp * hLK + hML / pp));
}

conductor_value degree_p_tower(conductor_value const& hLK, conductor_value const& hML, long p)
{
    rational v = degree_p_tower(hLK.value, hML.value, p);
    return hLK.is_exact() && hML.is_exact() ? exact(v) : bound(v);
}

rational iterated_degree_p_tower(std::vector<rational> const& steps, long p)
{
    if (steps.empty())
        fail(errc::empty_list, "tower with no steps");
    rational h = steps.back();
    for (std::size_t i = steps.size() - 1; i-- > 0;)
        h = degree_p_tower(steps[i], h, p);
    return h;
}

conductor_value tower_relative(rational const& hMK, rational const& hLK,
                               rational const& lLK, long degLK)
{
    if (degLK < 1)
        fail(errc::invalid_argument, "degree must be positive");
    if (hMK < hLK)
        fail(errc::quotient_invariance_violated,
             "h_{M/K} = " + ramicond::to_string(hMK) + " is below h_{L/K} = " + ramicond::to_string(hLK));
    if (hMK == hLK) return bound(lLK);
    return exact(lLK + rational(degLK) * (hMK - hLK));
}

conductor_value base_change_zp(rational const& hLK, rational const& hKpK, long p)
{
    check_prime(p);
    if (hLK > hKpK) return exact(rational(p) * hLK - rational(p - 1) * hKpK);
    return bound(hKpK);
}

rational descend_through_cyclotomic(rational const& hMKl, long p, int l)
{
    check_prime(p);
    if (l < 1)
        fail(errc::invalid_argument, "level must be at least 1");
    rational pp(p);
    rational scale = rational(integer((p - 1) * ipow(p, l - 1)));
    rational alt = rational(l) - pp / (pp - 1) + (hMKl + 1) / scale;
    return canon(ramicond::max(rational(l - 1), alt));
}

conductor_value descend_through_cyclotomic(conductor_value const& hMKl, long p, int l)
{
    rational v = descend_through_cyclotomic(hMKl.value, p, l);
    return hMKl.is_exact() ? exact(v) : bound(v);
}

std::string to_string(conductor_value const& h)
{
    return (h.is_exact() ? "exact " : "bound ") + ramicond::to_string(h.value);
}

}
