#include "ramicond/rational.hpp"
#include "ramicond/errors.hpp"

#include <cctype>
#include <limits>

namespace ramicond {

std::string_view errc_name(errc code)
{
    switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::syntax_error: return "SyntaxError";
    case errc::non_integral_element: return "NonIntegralElement";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::not_a_pth_power: return "NotAPthPower";
    case errc::trivial_extension: return "TrivialExtension";
    case errc::not_primitive: return "NotPrimitive";
    case errc::out_of_range: return "OutOfRange";
    case errc::empty_list: return "EmptyList";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::quotient_invariance_violated: return "QuotientInvarianceViolated";
    case errc::lattice_not_closed: return "LatticeNotClosed";
    case errc::inconsistent_conductors: return "InconsistentConductors";
    case errc::non_integral_lower_jump: return "NonIntegralLowerJump";
    case errc::multiple_slopes: return "MultipleSlopes";
    case errc::no_uniformizer_found: return "NoUniformizerFound";
    case errc::not_totally_ramified: return "NotTotallyRamified";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    }
    return "Unknown";
}

bool is_validation_error(errc code)
{
    switch (code) {
    case errc::invalid_argument:
    case errc::syntax_error:
    case errc::non_integral_element:
    case errc::not_primitive:
    case errc::out_of_range:
    case errc::empty_list:
    case errc::hypothesis_violated:
    case errc::quotient_invariance_violated:
    case errc::lattice_not_closed:
    case errc::inconsistent_conductors:
    case errc::non_integral_lower_jump:
    case errc::degree_cap_exceeded:
        return true;
    default:
        return false;
    }
}

rational make_rational(long num, long den)
{
    rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(rational const& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(integer const& z)
{
    return z.get_str();
}

std::string to_decimal(rational const& q, int digits)
{
    mpf_class f(q, 256);
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.*Ff", digits, f.get_mpf_t());
    return buf;
}

rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        fail(errc::syntax_error, "empty rational");
    auto valid_int = [](std::string const& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(errc::syntax_error, "malformed rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    integer n(num), d(den);
    if (d == 0)
        fail(errc::syntax_error, "zero denominator in '" + std::string(text) + "'");
    rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(rational const& q)
{
    return q.get_den() == 1;
}

integer floor(rational const& q)
{
    integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t to_int64(integer const& z)
{
    if (!z.fits_slong_p())
        fail(errc::out_of_range, "integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

std::int64_t to_int64(rational const& q)
{
    if (!is_integer(q))
        fail(errc::invalid_argument, "expected an integer, got " + to_string(q));
    return to_int64(q.get_num());
}

std::optional<long> valuation(integer const& z, long p)
{
    if (z == 0) return std::nullopt;
    integer r;
    integer pz(p);
    return static_cast<long>(mpz_remove(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

std::optional<long> valuation(rational const& q, long p)
{
    if (q == 0) return std::nullopt;
    return *valuation(q.get_num(), p) - *valuation(q.get_den(), p);
}

integer ipow(long base, unsigned long exp)
{
    integer r;
    integer b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

rational max(rational const& a, rational const& b) { return a < b ? b : a; }
rational min(rational const& a, rational const& b) { return b < a ? b : a; }

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}
