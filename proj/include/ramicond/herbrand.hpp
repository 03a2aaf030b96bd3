#ifndef RAMICOND_HERBRAND_HPP_
#define RAMICOND_HERBRAND_HPP_

#include "ramicond/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ramicond::herbrand {

enum class numbering { lower, upper };

/* |G_u| = order for u in (previous jump, at]; the first interval is [0, at] */
struct jump {
    rational at;
    long order = 1;
    bool operator==(jump const&) const = default;
};

/* Ramification filtration of a totally ramified Galois extension, stored by
 * its jumps.  The group is trivial past the last jump; the first order is the
 * degree.  An empty jump list is the trivial extension. */
struct filtration {
    numbering kind = numbering::lower;
    std::vector<jump> jumps;

    long degree() const { return jumps.empty() ? 1 : jumps.front().order; }
    bool trivial() const { return jumps.empty(); }
    /* |G_u| */
    long order_at(rational const& u) const;
    /* last jump, 0 for the trivial extension */
    rational highest_jump() const;

    bool operator==(filtration const&) const = default;
};

/* checks jumps increase, orders strictly decrease and exceed 1, and in the
 * lower numbering that each order divides the previous one */
void validate(filtration const& f);
/* drops order-1 entries and merges neighbours of equal order, then validates */
filtration normalized(numbering kind, std::vector<jump> jumps);

/* Piecewise linear, continuous, strictly increasing map [0, inf) -> [0, inf)
 * through (0, 0).  slopes[k] applies from points[k].first onward. */
struct break_function {
    std::vector<std::pair<rational, rational>> points;
    std::vector<rational> slopes;

    bool operator==(break_function const&) const = default;
};

break_function identity();
/* merges collinear segments; rejects malformed data */
break_function make_break_function(std::vector<std::pair<rational, rational>> points,
                                   std::vector<rational> slopes);

rational eval(break_function const& f, rational const& x);
/* f after g */
break_function compose(break_function const& f, break_function const& g);
break_function invert(break_function const& f);

break_function phi_from_lower(filtration const& lower);
break_function psi_from_lower(filtration const& lower);
break_function psi_from_upper(filtration const& upper);

filtration upper_from_lower(filtration const& lower);
filtration lower_from_upper(filtration const& upper);

/* h (largest upper jump, 0 if trivial) and l (largest lower jump) */
rational conductor(filtration const& f);
rational highest_lower_jump(filtration const& f);

/* the conductor under the convention that counts one more */
rational serre_conductor(rational const& h);

std::string to_string(filtration const& f);
std::string to_string(break_function const& f);

}

#endif
