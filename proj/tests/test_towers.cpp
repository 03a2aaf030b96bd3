#include "doctest.h"

#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/filtration.hpp"
#include "ramicond/herbrand.hpp"
#include "ramicond/towers.hpp"

#include <random>

using namespace ramicond;
using namespace ramicond::towers;

namespace {

errc code_of(auto&& f)
{
    try {
        f();
    } catch (error const& e) {
        return e.code();
    }
    FAIL("no error raised");
    return errc::invalid_argument;
}

rational q(long n, long d = 1)
{
    rational r(n, d);
    r.canonicalize();
    return r;
}

/* h_{M/K} through phi_{L/K} of a degree-p step with its single jump at hLK */
rational tower_by_herbrand(rational const& hLK, rational const& hML, long p)
{
    auto phi = herbrand::phi_from_lower(herbrand::normalized(herbrand::numbering::lower, {{hLK, p}}));
    return ramicond::max(hLK, herbrand::eval(phi, hML));
}

rational random_rational(std::mt19937_64& rng)
{
    return q(static_cast<long>(rng() % 60), 1 + static_cast<long>(rng() % 6));
}

}

TEST_CASE("compositum")
{
    CHECK(compositum({exact(q(2))}) == exact(q(2)));
    CHECK(compositum({exact(q(1)), exact(q(3))}) == exact(q(3)));
    CHECK(compositum({exact(q(2)), bound(q(1))}) == exact(q(2)));
    CHECK(compositum({exact(q(1)), bound(q(2))}) == bound(q(2)));
    CHECK(compositum({bound(q(1)), bound(q(3))}) == bound(q(3)));
    CHECK(code_of([] { compositum({}); }) == errc::empty_list);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto pick = [&] { return rng() % 2 ? exact(random_rational(rng)) : bound(random_rational(rng)); };
        auto a = pick(), b = pick(), c = pick();
        CHECK(compositum({a, a}) == compositum({a}));
        CHECK(compositum({a, b}) == compositum({b, a}));
        CHECK(compositum({compositum({a, b}), c}) == compositum({a, compositum({b, c})}));
        CHECK(compositum({a, b, c}) == compositum({a, compositum({b, c})}));
    }
}

TEST_CASE("compositum of three subfields")
{
    CHECK(compositum_exact(q(3), q(1)) == exact(q(3)));
    CHECK(compositum_exact(q(4), q(3)) == exact(q(4)));
    CHECK(code_of([] { compositum_exact(q(2), q(2)); }) == errc::hypothesis_violated);
    CHECK(code_of([] { compositum_exact(q(1), q(2)); }) == errc::hypothesis_violated);
}

TEST_CASE("degree p towers")
{
    CHECK(degree_p_tower(q(3), q(3), 2) == 3);
    CHECK(degree_p_tower(q(1), q(5), 2) == 3);
    CHECK(degree_p_tower(q(2), q(8), 2) == 5);
    CHECK(degree_p_tower(q(4), q(1), 3) == 4);
    CHECK(degree_p_tower(exact(q(1)), bound(q(5)), 2) == bound(q(3)));
    CHECK(degree_p_tower(exact(q(1)), exact(q(5)), 2) == exact(q(3)));

    /* K_1(2^(1/8)) over K_1: steps 2, 4, 8 */
    CHECK(iterated_degree_p_tower({q(2), q(4), q(8)}, 2) == 4);
    CHECK(iterated_degree_p_tower({q(2), q(4), q(8)}, 2) == classify::metabelian_conductor(2, 1, 3, 0).over_kl);
    CHECK(iterated_degree_p_tower({q(7, 2)}, 3) == q(7, 2));
    CHECK(code_of([] { iterated_degree_p_tower({}, 2); }) == errc::empty_list);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        long p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 5;
        rational a = random_rational(rng), b = random_rational(rng);
        CHECK(degree_p_tower(a, b, p) == tower_by_herbrand(a, b, p));
    }
}

TEST_CASE("relative conductors")
{
    CHECK(tower_relative(q(2), q(2), q(1), 2) == bound(q(1)));
    CHECK(tower_relative(q(4), q(1), q(1), 2) == exact(q(7)));
    CHECK(tower_relative(q(2), q(1), q(1), 4) == exact(q(5)));
    CHECK(code_of([] { tower_relative(q(1), q(2), q(1), 2); }) == errc::quotient_invariance_violated);

    /* inverse of the forward relation h_{M/K} = h_{L/K} + (h_{M/L} - l_{L/K}) / [L:K] */
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        long deg = 1 + static_cast<long>(rng() % 9);
        rational l = random_rational(rng);
        rational hLK = random_rational(rng);
        rational hML = l + 1 + random_rational(rng);
        rational hMK = hLK + (hML - l) / deg;
        hMK.canonicalize();
        CHECK(tower_relative(hMK, hLK, l, deg) == exact(hML));
    }
}

TEST_CASE("base change by a degree p extension")
{
    CHECK(base_change_zp(q(3), q(1), 2) == exact(q(5)));
    CHECK(base_change_zp(q(1), q(1), 2) == bound(q(1)));
    CHECK(base_change_zp(q(2), q(0), 3) == exact(q(6)));

    /* agrees with the relative formula using l = h for degree p */
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        long p = trial % 2 ? 2 : 3;
        rational hKp = random_rational(rng);
        rational hL = hKp + q(1 + static_cast<long>(rng() % 10), 1 + static_cast<long>(rng() % 3));
        CHECK(base_change_zp(hL, hKp, p) == tower_relative(hL, hKp, hKp, p));
    }
}

TEST_CASE("descent through the cyclotomic tower")
{
    CHECK(descend_through_cyclotomic(q(3), 2, 2) == 2);
    CHECK(descend_through_cyclotomic(q(4), 2, 1) == 4);
    for (long p : {2L, 3L, 5L})
        for (int l = 1; l <= 3; ++l)
            CHECK(descend_through_cyclotomic(rational(integer(ipow(p, l - 1) - 1)), p, l) == l - 1);
    CHECK(descend_through_cyclotomic(bound(q(3)), 2, 2) == bound(q(2)));

    /* phi of K_l / K_0 applied to the conductor over K_l */
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        long p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 5;
        int l = 1 + static_cast<int>(rng() % 3);
        rational h = random_rational(rng);
        auto phi = herbrand::phi_from_lower(filtration::cyclotomic(p, l));
        CHECK(descend_through_cyclotomic(h, p, l) == ramicond::max(rational(l - 1), herbrand::eval(phi, h)));
    }
}

TEST_CASE("conductor value rendering")
{
    CHECK(to_string(exact(q(5, 2))) == "exact 5/2");
    CHECK(to_string(bound(q(1))) == "bound 1/1");
}
