#ifndef RAMICOND_PADIC_HPP_
#define RAMICOND_PADIC_HPP_

#include "ramicond/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

/* Truncated arithmetic in the rings of integers of K_l = K_0(zeta_{p^l}).
 *
 * An element is a polynomial of degree < e in the uniformizer pi = zeta - 1,
 * reduced by Phi_{p^l}(1 + pi) = 0, whose coefficients live in the Galois
 * ring W(F_{p^f}) / p^M.  The residue degree f is 1 for everything the
 * parser produces; p-th roots at the boundary valuation may need a short
 * unramified lift (f = p, residue field F_p[X]/(X^p - X - 1)), which models
 * the algebraically closed residue field of K_0 just far enough.
 *
 * Every element carries an absolute pi-adic precision N <= e*M: it is known
 * modulo pi^N.  Valuations are exact below N; asking for one at or above N
 * raises errc::precision_exhausted.
 */
namespace ramicond::padic {

struct local_field {
    long p = 2;
    int level = 1;
    int e = 1;                  // absolute ramification index (p-1) p^(level-1)
    int residue_degree = 1;     // 1, or p once lifted

    static local_field cyclotomic(long p, int level);
    local_field unramified_lift() const;

    /* p e / (p - 1) = p^level, the p-th power threshold */
    long pth_power_bound() const;

    bool same_base(local_field const& o) const { return p == o.p && level == o.level; }
    bool operator==(local_field const& o) const = default;
};

/* 2 (c + level + 2) */
int default_precision(int c, int level);

namespace detail { struct ring; }

class element {
    std::shared_ptr<const detail::ring> ring_;
    std::vector<std::uint64_t> c_;      // c_[i * f + k]: X^k part of the pi^i coefficient
    long prec_ = 0;

    element(std::shared_ptr<const detail::ring> r, std::vector<std::uint64_t> c, long prec);
    friend struct detail::ring;
    friend element pth_root(element const& u);

public:
    element() = default;

    static element zero(local_field const& K, int M);
    static element one(local_field const& K, int M);
    static element from_integer(local_field const& K, integer const& n, int M);
    /* errc::non_integral_element when p divides the denominator */
    static element from_rational(local_field const& K, rational const& q, int M);
    static element uniformizer(local_field const& K, int M);
    static element zeta(local_field const& K, int M);
    /* coefficients[i][k]: X^k part of the coefficient of pi^i, reduced mod p^M */
    static element from_coefficients(local_field const& K, int M,
            std::vector<std::vector<integer>> const& coefficients);

    local_field const& field() const;
    int modulus_exponent() const;
    long precision() const { return prec_; }

    bool is_zero() const;                 // zero at the working precision
    long valuation() const;               // exact; throws precision_exhausted
    long valuation_or_precision() const;  // min(valuation, precision)

    /* x / pi^valuation(x) */
    element unit_part() const;
    /* residue of x mod pi as F_{p^f} digits (length f) */
    std::vector<std::uint64_t> residue() const;
    /* X^k part of the coefficient of pi^i, in [0, p^M) */
    std::uint64_t coefficient(int i, int k = 0) const;

    element shift_up(long k) const;       // times pi^k
    element shift_down(long k) const;     // exact division by pi^k
    element divide_by_p() const;          // exact division by p
    element pow(long n) const;            // n >= 0
    element inverse() const;              // units only
    element lifted() const;               // same element over the unramified lift
    element with_precision(long n) const; // lowers (never raises) the precision

    element operator-() const;
    friend element operator+(element const& x, element const& y);
    friend element operator-(element const& x, element const& y);
    friend element operator*(element const& x, element const& y);

    /* x - y vanishes at the common precision */
    bool equals(element const& y) const;

    std::string to_string() const;
};

element add(element const& x, element const& y);
element mul(element const& x, element const& y);
element inv(element const& x);
long valuation(element const& x);

/* p-th root of u = 1 + t with v(t) >= p e/(p-1).
 * The deep case v(t) > p e/(p-1) returns the binomial-series root (the one
 * with v(r - 1) > e/(p-1)).  At the boundary the residue equation
 * x^p - x = d is solved with the first solution in digit order; when F_p has
 * none the result lives over the unramified lift.  The root is known to
 * precision N(u) - e. */
element pth_root(element const& u);

/* integers, rationals a/b, the symbol z for zeta_{p^l}, + - * / ^ and
 * parentheses; exponents are integers, negative ones need a unit base */
element parse(std::string_view expr, local_field const& K, int M);

}

#endif
