#ifndef RAMICOND_ERRORS_HPP_
#define RAMICOND_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramicond {

enum class errc {
    invalid_argument,
    syntax_error,
    non_integral_element,
    precision_exhausted,
    not_a_pth_power,
    trivial_extension,
    not_primitive,
    out_of_range,
    empty_list,
    hypothesis_violated,
    quotient_invariance_violated,
    lattice_not_closed,
    inconsistent_conductors,
    non_integral_lower_jump,
    multiple_slopes,
    no_uniformizer_found,
    not_totally_ramified,
    degree_cap_exceeded,
};

/* CamelCase name used in machine-readable error objects */
std::string_view errc_name(errc code);

/* validation errors are caller mistakes; the rest are computational */
bool is_validation_error(errc code);

class error : public std::runtime_error {
    errc code_;
public:
    error(errc code, std::string const& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }
};

[[noreturn]] inline void fail(errc code, std::string const& what) {
    throw error(code, what);
}

}

#endif
