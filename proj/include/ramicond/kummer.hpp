#ifndef RAMICOND_KUMMER_HPP_
#define RAMICOND_KUMMER_HPP_

#include "ramicond/padic.hpp"

#include <optional>
#include <vector>

namespace ramicond::kummer {

/* a = a_prime * beta^p.  t_valuation is v(a_prime - 1), 0 when p does not
 * divide v(a_prime), and empty when a_prime = 1. */
struct primitive_decomposition {
    padic::element a_prime;
    padic::element beta;
    std::optional<long> t_valuation;
    long pi_power = 0;     // beta picked up pi^pi_power during valuation normalization
    int iterations = 0;    // passes of the t-raising loop
};

/* v_L(r) for the p-th root 1 + r of 1 + t, in the degree-p extension's own
 * valuation; errc::out_of_range unless 0 < vt < p e / (p - 1) */
long pth_root_valuation(long vt, padic::local_field const& K);

/* the root of unity of order prime to p congruent to the unit x */
padic::element teichmuller(padic::element const& x);

bool is_p_primitive(padic::element const& a);

primitive_decomposition primitivize(padic::element const& a);

/* v(t) for an already p-primitive a; errc::not_primitive otherwise */
long primitive_t_valuation(padic::element const& a);

/* conductor of K(a^(1/p)) / K; errc::trivial_extension for p-th powers */
rational conductor_degree_p(padic::element const& a);

/* [h_1, ..., h_c] with h_i the conductor of L_i / L_{i-1},
 * L_i = K(a^(1/p^i)); a must be p-primitive */
std::vector<rational> tower_conductors(padic::element const& a, int c);

}

#endif
