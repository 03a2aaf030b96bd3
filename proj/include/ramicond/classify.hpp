#ifndef RAMICOND_CLASSIFY_HPP_
#define RAMICOND_CLASSIFY_HPP_

#include "ramicond/filtration.hpp"
#include "ramicond/herbrand.hpp"
#include "ramicond/padic.hpp"

#include <optional>
#include <string>

namespace ramicond::classify {

/* K = K_l(a^(1/p^c)) with a p-primitive in K_l, vt = v_l(t) (0 for
 * valuation prime to p) */
struct metabelian_result {
    rational over_kl;          // h_{K/K_l}
    rational closure_over_k0;  // h_{L/K_0}, L the Galois closure of K over K_0
};

metabelian_result metabelian_conductor(long p, int l, int c, long vt);
/* errc::not_primitive unless a is p-primitive for K_l */
metabelian_result metabelian_conductor(int c, padic::element const& a);

/* p^(c+l-1) - vt */
rational lemma_bound_l2(long p, int l, int c, long vt);

/* mu for the Galois closure of K_max(l,c)(alpha^(1/p^c)), alpha = alpha' beta^p;
 * an empty v(t_alpha') means alpha' = 1, an empty v(t_beta) means beta = 1 */
rational bound_c2_specific(long p, int l, int c, std::optional<long> vt_alpha_prime,
                           std::optional<long> vt_beta);

/* mu for the Galois closure of K_d(alpha^(1/p^c)); empty v(t_alpha) means alpha = 1 */
rational bound_ccruder(long p, int l, int c, int d, std::optional<long> vt_alpha);

struct classified_conductor {
    rational conductor;
    std::string case_label;    // i, iia, ..., iig
    bool trivial = false;
};

/* h of K_c(a^(1/2^c)) / K_1, a = 2^n b */
classified_conductor classify_p2(int c, rational const& a);
/* a in K_1 for p = 2 */
classified_conductor classify_p2(int c, padic::element const& a);
/* the table itself, on normalized data: 0 <= n < 2^c, b mod 4 in {1, 3} */
classified_conductor classify_p2_case(int c, long n, long b_mod4);

/* max(c' - 1, h_inner) */
rational subextension_conductor(int cprime, rational const& h_inner);

/* h over K_1 of K_{c'}(a'^(1/2^{c''})) */
rational descriptor_conductor(filtration::field_descriptor const& fd);

/* fills in conductors from field descriptors, checks the top against
 * classify_p2(c, a) and reconstructs the upper filtration */
herbrand::filtration full_filtration_p2(int c, rational const& a,
                                        filtration::subextension_lattice lattice);

}

#endif
