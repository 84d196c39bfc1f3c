#pragma once

#include "liegeo/polynomial.hpp"

#include <map>
#include <variant>

namespace liegeo {

// Quotient of polynomials, normalized: den nonzero with integer coefficients,
// content 1 and positive leading coefficient; gcd-reduced when within budget.
struct RationalFunction {
	Polynomial num;
	Polynomial den;
};

// Exact scalar: rational number, polynomial, or rational function over Q in
// named parameters. Always stored in the lowest applicable alternative.
class Scalar {
public:
	Scalar() : v_(Rational(0)) {}
	Scalar(int n) : v_(Rational(n)) {}
	Scalar(long n) : v_(Rational(n)) {}
	Scalar(const Rational& q) : v_(q) {}
	Scalar(const Polynomial& p) { assign(p); }
	Scalar(const RationalFunction& f) { assign(f); }

	static Scalar parameter(int param) { return Scalar(Polynomial::variable(param)); }
	static Scalar parameter(const std::string& name);
	static Scalar fraction(const Polynomial& num, const Polynomial& den);

	bool is_zero() const;
	bool is_one() const;
	bool is_rational() const { return std::holds_alternative<Rational>(v_); }
	bool is_polynomial() const { return !std::holds_alternative<RationalFunction>(v_); }

	// Throws MathError unless the value is of the requested shape.
	const Rational& as_rational() const;
	Polynomial as_polynomial() const;
	// Numerator/denominator view valid for every alternative.
	Polynomial numerator() const;
	Polynomial denominator() const;

	std::vector<int> parameters() const;
	int degree_in(int param) const; // max of numerator/denominator degree

	Scalar operator-() const;
	Scalar operator+(const Scalar& o) const;
	Scalar operator-(const Scalar& o) const;
	Scalar operator*(const Scalar& o) const;
	Scalar operator/(const Scalar& o) const; // MathError on zero divisor
	Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
	Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
	Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
	Scalar pow(unsigned e) const;

	// Exact semantic equality (cross-multiplied, independent of reduction).
	bool operator==(const Scalar& o) const;
	bool operator!=(const Scalar& o) const { return !(*this == o); }

	// Substitute parameters; missing parameters stay symbolic.
	Scalar substitute(const std::map<int, Scalar>& values) const;
	// Value as double; throws MathError when parameters remain.
	double to_double() const;

	// Exact square root, or nullopt (for rationals: nonnegative perfect
	// squares; otherwise square of a rational function).
	std::optional<Scalar> sqrt() const;

	// Sign for rationals: -1, 0, +1; nullopt when parametric.
	std::optional<int> sign() const;

	std::string str() const;

	// Parses "-3/4", "2", "w12*w45 - 2*a^2", quotients and parentheses.
	// When `declared` is given, names outside it are a ParseError.
	static Scalar parse(const std::string& text,
	                    const std::vector<std::string>* declared = nullptr);

	// Size guard: gcd reduction of rational functions is skipped when
	// num_terms * den_terms exceeds this (equality stays exact regardless).
	static std::size_t gcd_budget;

private:
	void assign(const Polynomial& p);
	void assign(RationalFunction f);
	std::variant<Rational, Polynomial, RationalFunction> v_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

} // namespace liegeo
