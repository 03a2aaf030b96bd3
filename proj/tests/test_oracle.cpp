#include "doctest.h"

#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/filtration.hpp"
#include "ramicond/oracle.hpp"

#include <random>

using namespace ramicond;
using namespace ramicond::oracle;

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

vec random_vec(extension_ring const& R, std::mt19937_64& rng)
{
    vec x(static_cast<std::size_t>(R.dimension()));
    for (auto& v : x) v = q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    return x;
}

}

TEST_CASE("ring arithmetic")
{
    extension_ring R(2, 2, q(2));
    CHECK(R.dimension() == 8);
    CHECK(R.root_order() == 4);
    CHECK(R.mul(R.zeta(), R.zeta()) == R.scalar(-1));
    CHECK(R.pow(R.y(), 4) == R.scalar(2));
    CHECK(R.monomial(5, 6) == R.mul(R.zeta(), R.scale(R.monomial(0, 2), q(2))));

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        vec a = random_vec(R, rng), b = random_vec(R, rng), c = random_vec(R, rng);
        CHECK(R.mul(a, b) == R.mul(b, a));
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        if (!R.is_zero(a)) CHECK(R.mul(a, R.inverse(a)) == R.scalar(1));
    }
    CHECK(code_of([&] { R.inverse(R.scalar(0)); }) == errc::invalid_argument);
}

TEST_CASE("Galois action")
{
    for (auto [p, c, a] : std::vector<std::tuple<long, int, long>>{{2, 1, 3}, {2, 2, 2}, {3, 1, 2}}) {
        extension_ring R(p, c, q(a));
        auto G = R.group();
        CHECK(static_cast<long>(G.size()) == R.dimension());
        std::mt19937_64 rng(31);
        vec x = random_vec(R, rng), w = random_vec(R, rng);
        for (auto const& g : G) {
            CHECK(R.act(g, R.mul(x, w)) == R.mul(R.act(g, x), R.act(g, w)));
            CHECK(R.pow(R.act(g, R.y()), R.root_order()) == R.scalar(a));
            for (auto const& h : G) {
                auto gh = R.compose(g, h);
                CHECK(R.act(gh, R.zeta()) == R.act(g, R.act(h, R.zeta())));
                CHECK(R.act(gh, R.y()) == R.act(g, R.act(h, R.y())));
            }
        }
    }
}

TEST_CASE("Newton polygon valuations")
{
    extension_ring R(2, 2, q(2));
    CHECK(valuation_np(R, R.scalar(2)) == 1);
    CHECK(valuation_np(R, R.y()) == q(1, 4));
    auto chi = R.charpoly(R.y());
    /* (x^4 - 2)^2 */
    std::vector<rational> expect{q(4), q(0), q(0), q(0), q(-4), q(0), q(0), q(0), q(1)};
    CHECK(chi == expect);

    extension_ring S(2, 1, q(3));
    CHECK(valuation_np(S, S.sub(S.y(), S.scalar(1))) == q(1, 2));
    CHECK(S.charpoly(S.sub(S.y(), S.scalar(1))) == std::vector<rational>{q(-2), q(2), q(1)});

    /* the algebra splits: y - 1 and y + 1 for a = 9 */
    extension_ring T(2, 1, q(9));
    CHECK(code_of([&] { valuation_np(T, T.sub(T.y(), T.scalar(1))); }) == errc::multiple_slopes);

    CHECK(residue_degree(S, S.scalar(1)) == std::optional<long>(1));
    extension_ring U(2, 1, q(5));
    vec w = U.scale(U.sub(U.y(), U.scalar(1)), q(1, 2));
    CHECK(residue_degree(U, w) == std::optional<long>(2));
}

TEST_CASE("lower filtrations of small instances")
{
    auto r3 = lower_filtration(2, 1, q(3));
    std::vector<herbrand::jump> one{{q(1), 2}};
    CHECK(r3.lower.jumps == one);
    CHECK(r3.e == 2);
    CHECK(r3.different == 2);
    CHECK(filtration::different_exponent(r3.lower) == 2);
    CHECK(r3.conductor == 1);

    auto r2 = lower_filtration(2, 2, q(2));
    CHECK(r2.degree == 8);
    CHECK(r2.e == 8);
    CHECK(r2.conductor == 3);
    CHECK(filtration::different_exponent(r2.lower) == r2.different);

    CHECK(lower_filtration(2, 2, q(20)).conductor == 2);

    /* K_2(5^(1/4)) has an unramified quadratic part */
    auto r5 = lower_filtration(2, 2, q(5));
    CHECK(r5.e * r5.f == r5.degree);
    CHECK(r5.f == 2);
    CHECK(r5.conductor == 1);
    CHECK(static_cast<long>(r5.inertia.size()) == r5.e);

    auto t = lower_filtration(3, 1, q(3));
    std::vector<herbrand::jump> tj{{q(0), 6}, {q(3), 3}};
    CHECK(t.lower.jumps == tj);
    CHECK(t.conductor == q(3, 2));
}

TEST_CASE("oracle agrees with the closed forms")
{
    for (int c : {1, 2})
        for (long a : {2L, 3L, 5L, 6L, 10L, 12L, 20L, 48L}) {
            CAPTURE(c);
            CAPTURE(a);
            auto rep = verify_against_classifier(2, c, q(a));
            CHECK(rep.match);
            CHECK(rep.conductor_oracle == classify::classify_p2(c, q(a)).conductor);
            CHECK_NOTHROW(herbrand::validate(rep.lower));
        }
    for (long a : {2L, 3L, 4L, 5L, 6L, 7L}) {
        CAPTURE(a);
        CHECK(verify_against_classifier(3, 1, q(a)).match);
    }
    CHECK(verify_against_classifier(5, 1, q(2)).match);
}

TEST_CASE("oracle lattices reproduce the filtration")
{
    for (int c : {1, 2})
        for (long a : {2L, 3L, 5L, 6L, 10L, 12L, 20L}) {
            CAPTURE(c);
            CAPTURE(a);
            auto r = lower_filtration(2, c, q(a));
            auto lat = obvious_lattice(r);
            CHECK(filtration::reconstruct_upper(lat) == r.upper);
            CHECK(classify::full_filtration_p2(c, q(a), lat) == r.upper);
            for (auto const& nd : lat.nodes)
                if (nd.field && nd.degree > 1)
                    CHECK(*nd.conductor == classify::descriptor_conductor(*nd.field));
        }
}

TEST_CASE("rejections")
{
    options small;
    small.max_degree = 16;
    CHECK(code_of([&] { lower_filtration(2, 3, q(3), small); }) == errc::degree_cap_exceeded);
    /* 10 is a cube in Q_3, so the algebra is not a field */
    CHECK_THROWS_AS(lower_filtration(3, 1, q(10)), error);
    CHECK(code_of([] { lower_filtration(2, 1, q(0)); }) == errc::invalid_argument);
}

TEST_CASE("report JSON")
{
    auto j = to_json(verify_against_classifier(2, 1, q(3)));
    CHECK(j.dump() ==
          R"({"instance":{"p":2,"c":1,"a":"3/1"},"conductor_formula":"1/1","conductor_oracle":"1/1",)"
          R"("lower_jumps":[{"jump":"1/1","order":2}],"match":true})");
}
