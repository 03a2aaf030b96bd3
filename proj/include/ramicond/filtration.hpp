#ifndef RAMICOND_FILTRATION_HPP_
#define RAMICOND_FILTRATION_HPP_

#include "ramicond/herbrand.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramicond::filtration {

/* K_{c'}(a'^(1/2^{c''})) over K_1, for lattices whose conductors are filled in later */
struct field_descriptor {
    int cprime = 1;
    int cdouble = 0;
    rational a = 1;
    bool operator==(field_descriptor const&) const = default;
};

struct lattice_node {
    std::string label;
    long degree = 1;
    std::optional<rational> conductor;     // absent only for the base
    std::optional<field_descriptor> field;
};

struct subextension_lattice {
    std::vector<lattice_node> nodes;
    std::vector<std::pair<std::string, std::string>> contains;   // (smaller, larger)
};

/* lower filtration of K_n / K_0 */
herbrand::filtration cyclotomic(long p, int n);

/* upper filtration of the top node over the base, from the conductors of
 * the intermediate Galois extensions */
herbrand::filtration reconstruct_upper(subextension_lattice const& lattice);

/* sum over integers i >= 0 of (|G_i| - 1) */
long different_exponent(herbrand::filtration const& lower);

subextension_lattice lattice_from_json(nlohmann::ordered_json const& j);
nlohmann::ordered_json to_json(subextension_lattice const& lattice);

}

#endif
