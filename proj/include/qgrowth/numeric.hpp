#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgrowth {

using BigInt = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
	explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text or bad argument values supplied by a caller.
struct ValueError : Error {
	explicit ValueError(const std::string& msg) : Error(msg) {}
};

// A configured resource guard (size, count or iteration cap) was hit.
struct GuardError : Error {
	explicit GuardError(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct InvariantError : Error {
	explicit InvariantError(const std::string& msg) : Error(msg) {}
};

// Natural log of a positive big integer, computed from mantissa and
// binary exponent so values far beyond double range stay accurate.
inline double log_big(const BigInt& v) {
	if (v <= 0) throw ValueError("log_big: argument must be positive");
	signed long exp = 0;
	double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
	return std::log(mant) + static_cast<double>(exp) * M_LN2;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
	if (b == 0) throw ValueError("ceil_div: zero divisor");
	BigInt q;
	mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return q;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
	BigInt r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
	return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// True when q is an integer (denominator 1 after canonicalization).
inline bool is_integer(const Rational& q) {
	return q.get_den() == 1;
}

}  // namespace qgrowth
