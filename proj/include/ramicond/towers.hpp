#ifndef RAMICOND_TOWERS_HPP_
#define RAMICOND_TOWERS_HPP_

#include "ramicond/rational.hpp"

#include <string>
#include <vector>

namespace ramicond::towers {

enum class kind { exact, upper_bound };

struct conductor_value {
    rational value;
    kind k = kind::exact;

    bool is_exact() const { return k == kind::exact; }
    bool operator==(conductor_value const&) const = default;
};

conductor_value exact(rational const& v);
conductor_value bound(rational const& v);

/* conductor of a compositum over a common base: the max.  A bound only
 * taints the result when it could exceed the exact max. */
conductor_value compositum(std::vector<conductor_value> const& hs);

/* M_1, M_2, M_3 pairwise generating L with h1 = h(M_1) > h2 = h(M_2):
 * h(M_3) = h(L) = h1 */
conductor_value compositum_exact(rational const& h1, rational const& h2);

/* h_{M/K} for K < L < M with [L:K] = p */
rational degree_p_tower(rational const& hLK, rational const& hML, long p);
conductor_value degree_p_tower(conductor_value const& hLK, conductor_value const& hML, long p);

/* h_{L_c/L_0} from the successive degree-p step conductors h_i of L_i / L_{i-1} */
rational iterated_degree_p_tower(std::vector<rational> const& steps, long p);

/* h_{M/L} from h_{M/K}, h_{L/K} and the highest lower jump of L/K */
conductor_value tower_relative(rational const& hMK, rational const& hLK,
                               rational const& lLK, long degLK);

/* h_{L'/K'} for L' = L K' with [K':K] = p */
conductor_value base_change_zp(rational const& hLK, rational const& hKpK, long p);

/* h_{M/K_0} from h_{M/K_l} */
rational descend_through_cyclotomic(rational const& hMKl, long p, int l);
conductor_value descend_through_cyclotomic(conductor_value const& hMKl, long p, int l);

std::string to_string(conductor_value const& h);

}

#endif
