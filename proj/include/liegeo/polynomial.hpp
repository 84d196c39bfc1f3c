#pragma once

#include "liegeo/params.hpp"
#include "liegeo/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liegeo {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct ParseError : Error {
	using Error::Error;
};
struct DimensionError : Error {
	using Error::Error;
};
struct LookupError : Error {
	using Error::Error;
};
struct MathError : Error {
	using Error::Error;
};

// Monomial: sorted (param id, exponent>0) pairs. Ordered by graded lex.
class Monomial {
public:
	Monomial() = default;
	explicit Monomial(std::vector<std::pair<int, int>> factors);
	static Monomial var(int param, int exp = 1);

	const std::vector<std::pair<int, int>>& factors() const { return factors_; }
	bool is_one() const { return factors_.empty(); }
	int total_degree() const { return degree_; }
	int degree_in(int param) const;

	Monomial operator*(const Monomial& o) const;
	// Exact quotient, or nullopt when some exponent would go negative.
	std::optional<Monomial> divide(const Monomial& o) const;
	static Monomial gcd(const Monomial& a, const Monomial& b);

	bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
	bool operator<(const Monomial& o) const;

private:
	std::vector<std::pair<int, int>> factors_; // ascending param id, exp > 0
	int degree_ = 0;
};

// Sparse multivariate polynomial over Q. Term map never stores zero coefficients.
class Polynomial {
public:
	Polynomial() = default;
	explicit Polynomial(const Rational& c);
	static Polynomial variable(int param);
	static Polynomial term(const Rational& c, const Monomial& m);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	// Value of a constant polynomial (zero polynomial gives 0).
	Rational constant_value() const;
	std::size_t term_count() const { return terms_.size(); }
	const std::map<Monomial, Rational>& terms() const { return terms_; }

	int total_degree() const;
	int degree_in(int param) const;
	std::vector<int> parameters() const;

	Polynomial operator-() const;
	Polynomial operator+(const Polynomial& o) const;
	Polynomial operator-(const Polynomial& o) const;
	Polynomial operator*(const Polynomial& o) const;
	Polynomial& operator+=(const Polynomial& o);
	Polynomial& operator-=(const Polynomial& o);
	Polynomial operator*(const Rational& c) const;
	Polynomial pow(unsigned e) const;

	bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
	bool operator!=(const Polynomial& o) const { return !(*this == o); }

	// Leading term under graded lex.
	std::pair<Monomial, Rational> leading_term() const;

	// Exact division: returns q with *this == q * d, or nullopt.
	std::optional<Polynomial> divide_exact(const Polynomial& d) const;

	// GCD via primitive pseudo-remainder sequences. Canonical output:
	// integer coefficients with content 1 and positive leading coefficient.
	static Polynomial gcd(const Polynomial& a, const Polynomial& b);

	// Exact square root, or nullopt when not a square.
	std::optional<Polynomial> sqrt() const;

	// Common monomial factor of all terms (1 for the zero polynomial).
	Monomial monomial_content() const;
	// Rational content: gcd of coefficient numerators / lcm of denominators,
	// signed so that content * primitive_part == *this with integer primitive
	// part of positive leading coefficient.
	Rational rational_content() const;

	Polynomial divide_by_monomial(const Monomial& m) const;

	std::string str() const;

private:
	void insert(const Monomial& m, const Rational& c);
	std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace liegeo
