#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace liegeo {

// Exact rational numbers, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
	Rational q(num, den);
	q.canonicalize();
	return q;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
	Rational q(num, den);
	q.canonicalize();
	return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational pow(const Rational& q, unsigned e) {
	Rational r = 1;
	Rational base = q;
	for (unsigned k = e; k; k >>= 1) {
		if (k & 1) r *= base;
		if (k > 1) base *= base;
	}
	return r;
}

// Exact square root, or nullopt if q is not the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

std::string rational_to_string(const Rational& q);

} // namespace liegeo
