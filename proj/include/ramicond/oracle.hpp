#ifndef RAMICOND_ORACLE_HPP_
#define RAMICOND_ORACLE_HPP_

#include "ramicond/filtration.hpp"
#include "ramicond/herbrand.hpp"
#include "ramicond/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

/* Brute-force ramification data for K_c(a^(1/p^c)).
 *
 * The algebra A = Q(zeta_N)[y]/(y^N - a), N = p^c, is held exactly with basis
 * zeta^i y^j.  Valuations come from Newton polygons of characteristic
 * polynomials of multiplication maps.  Once a uniformizer of slope 1/e and a
 * unit whose residue has degree f = dim A / e are found, A (x) Q_p is a
 * field with those invariants, the inertia group is read off from the unit
 * and the lower jumps from v(sigma pi - pi). */
namespace ramicond::oracle {

using vec = std::vector<rational>;

struct sigma {
    long s = 1;   // zeta -> zeta^s
    long t = 0;   // y -> zeta^t y
    bool operator==(sigma const&) const = default;
};

class extension_ring {
public:
    extension_ring(long p, int c, rational a);

    long p() const { return p_; }
    int c() const { return c_; }
    rational const& a() const { return a_; }
    long root_order() const { return n_; }       // N = p^c
    long phi() const { return phi_; }            // phi(N)
    long dimension() const { return n_ * phi_; }

    vec scalar(rational const& q) const;
    vec monomial(long i, long j) const;          // zeta^i y^j, any integers
    vec zeta() const { return monomial(1, 0); }
    vec y() const { return monomial(0, 1); }

    vec add(vec const& x, vec const& y) const;
    vec sub(vec const& x, vec const& y) const;
    vec scale(vec const& x, rational const& q) const;
    vec mul(vec const& x, vec const& y) const;
    vec pow(vec const& x, long n) const;         // negative n needs a unit
    vec inverse(vec const& x) const;             // errc::invalid_argument for zero divisors
    bool is_zero(vec const& x) const;

    std::vector<sigma> group() const;
    sigma compose(sigma const& a, sigma const& b) const;   // a after b
    vec act(sigma const& g, vec const& x) const;

    /* monic, coefficients low to high, length dimension() + 1 */
    std::vector<rational> charpoly(vec const& x) const;

private:
    long p_; int c_; rational a_;
    long n_, phi_;
    std::vector<vec> zeta_powers_;   // zeta^m, 0 <= m < N, in the basis 1, ..., zeta^(phi-1)
};

/* single Newton slope of charpoly(x) at p, i.e. v_p(x); errc::multiple_slopes
 * when the roots have different valuations */
rational valuation_np(extension_ring const& R, vec const& x);

/* smallest j with the residues of x in F_{p^j}, for a unit x whose reduced
 * characteristic polynomial is an irreducible power; empty otherwise */
std::optional<long> residue_degree(extension_ring const& R, vec const& x);

struct options {
    long max_degree = 32;
};

struct sigma_jump {
    sigma g;
    rational jump;            // v_L(g pi - pi) - 1
};

struct result {
    long p = 2;
    int c = 1;
    rational a;
    long degree = 1;          // dim A = [A (x) Q_p : Q_p]
    long e = 1;
    long f = 1;
    std::string uniformizer;
    std::string residue_generator;
    std::vector<sigma> inertia;
    std::vector<sigma_jump> jumps;      // nonidentity inertia elements
    herbrand::filtration lower;
    herbrand::filtration upper;
    rational conductor;
    /* sum over nonidentity inertia of v_L(g pi - pi) */
    long different = 0;
};

result lower_filtration(long p, int c, rational const& a, options const& opt = {});

/* oracle conductor of the fixed field of a normal subgroup h of the inertia group */
rational fixed_field_conductor(result const& r, std::vector<sigma> const& h);

/* lattice of the fields K_{c'}(a^(1/2^{c''})), 0 <= c'' <= c' <= c, for p = 2,
 * with oracle conductors and field descriptors */
filtration::subextension_lattice obvious_lattice(result const& r);

struct report {
    long p = 2;
    int c = 1;
    rational a;
    rational conductor_formula;
    rational conductor_oracle;
    herbrand::filtration lower;
    long degree = 1;
    bool match = false;
};

report verify_against_classifier(long p, int c, rational const& a, options const& opt = {});
/* conductor from the closed forms alone */
rational formula_conductor(long p, int c, rational const& a);

nlohmann::ordered_json to_json(report const& r);

}

#endif
