#ifndef RAMICOND_RATIONAL_HPP_
#define RAMICOND_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ramicond {

/* Jumps, conductors and break points are exact rationals everywhere. */
using rational = mpq_class;
using integer = mpz_class;

rational make_rational(long num, long den = 1);

/* always "num/den", also for integers ("3/1") */
std::string to_string(rational const& q);
std::string to_string(integer const& z);
std::string to_decimal(rational const& q, int digits = 6);

/* accepts "n", "n/d", with optional sign; throws errc::syntax_error */
rational parse_rational(std::string_view text);

bool is_integer(rational const& q);
integer floor(rational const& q);
std::int64_t to_int64(integer const& z);
std::int64_t to_int64(rational const& q);   // requires is_integer(q)

/* p-adic valuation; nullopt for 0 */
std::optional<long> valuation(integer const& z, long p);
std::optional<long> valuation(rational const& q, long p);

integer ipow(long base, unsigned long exp);
rational max(rational const& a, rational const& b);
rational min(rational const& a, rational const& b);

bool is_prime(long n);

}

#endif
