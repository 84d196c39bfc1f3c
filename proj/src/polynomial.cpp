#include "liegeo/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace liegeo {

std::optional<Rational> rational_sqrt(const Rational& q) {
	if (sgn(q) < 0) return std::nullopt;
	if (sgn(q) == 0) return Rational(0);
	mpz_class num = q.get_num(), den = q.get_den();
	if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
		return std::nullopt;
	mpz_class sn, sd;
	mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
	mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
	return rat(sn, sd);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
	std::sort(factors_.begin(), factors_.end());
	for (auto& [v, e] : factors_) {
		if (e <= 0) throw MathError("monomial exponents must be positive");
		degree_ += e;
	}
	for (std::size_t i = 1; i < factors_.size(); ++i)
		if (factors_[i].first == factors_[i - 1].first)
			throw MathError("duplicate variable in monomial");
}

Monomial Monomial::var(int param, int exp) {
	if (exp == 0) return Monomial{};
	return Monomial({{param, exp}});
}

int Monomial::degree_in(int param) const {
	for (auto& [v, e] : factors_)
		if (v == param) return e;
	return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
	Monomial r;
	auto a = factors_.begin(), b = o.factors_.begin();
	while (a != factors_.end() || b != o.factors_.end()) {
		if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
			r.factors_.push_back(*a++);
		else if (a == factors_.end() || b->first < a->first)
			r.factors_.push_back(*b++);
		else {
			r.factors_.emplace_back(a->first, a->second + b->second);
			++a, ++b;
		}
	}
	r.degree_ = degree_ + o.degree_;
	return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
	Monomial r;
	auto a = factors_.begin();
	for (auto& [v, e] : o.factors_) {
		while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
		if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
		if (a->second > e) r.factors_.emplace_back(v, a->second - e);
		++a;
	}
	while (a != factors_.end()) r.factors_.push_back(*a++);
	r.degree_ = degree_ - o.degree_;
	return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
	Monomial r;
	auto i = a.factors_.begin();
	for (auto& [v, e] : b.factors_) {
		while (i != a.factors_.end() && i->first < v) ++i;
		if (i != a.factors_.end() && i->first == v) {
			int m = std::min(i->second, e);
			r.factors_.emplace_back(v, m);
			r.degree_ += m;
		}
	}
	return r;
}

bool Monomial::operator<(const Monomial& o) const {
	if (degree_ != o.degree_) return degree_ < o.degree_;
	// graded lex: larger exponent on the earliest differing variable wins
	auto a = factors_.begin(), b = o.factors_.begin();
	while (a != factors_.end() && b != o.factors_.end()) {
		if (a->first != b->first) return a->first > b->first; // missing var = exponent 0
		if (a->second != b->second) return a->second < b->second;
		++a, ++b;
	}
	return a == factors_.end() && b != o.factors_.end();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
	if (!liegeo::is_zero(c)) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int param) { return term(1, Monomial::var(param)); }

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
	Polynomial p;
	if (!liegeo::is_zero(c)) p.terms_.emplace(m, c);
	return p;
}

bool Polynomial::is_constant() const {
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
	if (terms_.empty()) return 0;
	if (!is_constant()) throw MathError("polynomial is not constant");
	return terms_.begin()->second;
}

int Polynomial::total_degree() const {
	return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(int param) const {
	int d = 0;
	for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(param));
	return d;
}

std::vector<int> Polynomial::parameters() const {
	std::vector<int> vars;
	for (auto& [m, c] : terms_)
		for (auto& [v, e] : m.factors()) vars.push_back(v);
	std::sort(vars.begin(), vars.end());
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	return vars;
}

void Polynomial::insert(const Monomial& m, const Rational& c) {
	auto [it, fresh] = terms_.emplace(m, c);
	if (!fresh) {
		it->second += c;
		if (liegeo::is_zero(it->second)) terms_.erase(it);
	}
}

Polynomial Polynomial::operator-() const {
	Polynomial r;
	for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
	return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
	Polynomial r = *this;
	r += o;
	return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
	Polynomial r = *this;
	r -= o;
	return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
	for (auto& [m, c] : o.terms_) insert(m, c);
	return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
	for (auto& [m, c] : o.terms_) insert(m, -c);
	return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
	Polynomial r;
	for (auto& [ma, ca] : terms_)
		for (auto& [mb, cb] : o.terms_) r.insert(ma * mb, ca * cb);
	return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
	Polynomial r;
	if (liegeo::is_zero(c)) return r;
	for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
	return r;
}

Polynomial Polynomial::pow(unsigned e) const {
	Polynomial r{Rational(1)};
	Polynomial base = *this;
	for (unsigned k = e; k; k >>= 1) {
		if (k & 1) r = r * base;
		if (k > 1) base = base * base;
	}
	return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
	if (terms_.empty()) throw MathError("leading term of zero polynomial");
	auto it = terms_.rbegin();
	return {it->first, it->second};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
	if (d.is_zero()) throw MathError("division by zero polynomial");
	if (d.is_constant()) return *this * (Rational(1) / d.constant_value());
	Polynomial rem = *this;
	Polynomial quot;
	auto [dm, dc] = d.leading_term();
	while (!rem.is_zero()) {
		auto [rm, rc] = rem.leading_term();
		auto q = rm.divide(dm);
		if (!q) return std::nullopt;
		Polynomial t = term(rc / dc, *q);
		quot += t;
		rem -= t * d;
	}
	return quot;
}

Monomial Polynomial::monomial_content() const {
	if (terms_.empty()) return Monomial{};
	Monomial g = terms_.begin()->first;
	for (auto& [m, c] : terms_) {
		if (g.is_one()) break;
		g = Monomial::gcd(g, m);
	}
	return g;
}

Rational Polynomial::rational_content() const {
	if (terms_.empty()) return 0;
	mpz_class num_gcd = 0, den_lcm = 1;
	for (auto& [m, c] : terms_) {
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
	}
	Rational content = rat(num_gcd, den_lcm);
	if (sgn(leading_term().second) < 0) content = -content;
	return content;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
	Polynomial r;
	for (auto& [mm, c] : terms_) {
		auto q = mm.divide(m);
		if (!q) throw MathError("monomial does not divide all terms");
		r.terms_.emplace(*q, c);
	}
	return r;
}

namespace {

// Coefficients of p viewed as a univariate polynomial in `var`.
std::map<int, Polynomial> coefficients_in(const Polynomial& p, int var) {
	std::map<int, Polynomial> out;
	for (auto& [m, c] : p.terms()) {
		int e = m.degree_in(var);
		auto rest = m.divide(Monomial::var(var, e));
		out[e] += Polynomial::term(c, e ? *rest : m);
	}
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

int degree_in_or_neg(const Polynomial& p, int var) {
	return p.is_zero() ? -1 : p.degree_in(var);
}

Polynomial times_var_pow(const Polynomial& p, int var, int e) {
	if (e == 0) return p;
	return p * Polynomial::term(1, Monomial::var(var, e));
}

// Pseudo-remainder of a by b with respect to var (unit factors irrelevant,
// the caller takes primitive parts).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int var) {
	int db = b.degree_in(var);
	auto bc = coefficients_in(b, var);
	Polynomial lb = bc.rbegin()->second;
	while (true) {
		int da = degree_in_or_neg(a, var);
		if (da < db) return a;
		auto ac = coefficients_in(a, var);
		Polynomial la = ac.rbegin()->second;
		a = a * lb - times_var_pow(la * b, var, da - db);
	}
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// Content of p with respect to var: gcd of the univariate coefficients.
Polynomial content_in(const Polynomial& p, int var) {
	Polynomial g;
	for (auto& [e, c] : coefficients_in(p, var)) {
		g = g.is_zero() ? c : gcd_rec(g, c);
		if (g.is_constant() && !g.is_zero()) break;
	}
	return g;
}

Polynomial canonical_unit(const Polynomial& p) {
	if (p.is_zero()) return p;
	return *p.divide_exact(Polynomial(p.rational_content()));
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
	if (a.is_zero()) return canonical_unit(b);
	if (b.is_zero()) return canonical_unit(a);
	if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
	auto va = a.parameters(), vb = b.parameters();
	int var = std::min(va.front(), vb.front());
	if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
		Polynomial ca = a.degree_in(var) ? content_in(a, var) : a;
		Polynomial cb = b.degree_in(var) ? content_in(b, var) : b;
		return gcd_rec(ca, cb);
	}
	Polynomial cont_a = content_in(a, var);
	Polynomial cont_b = content_in(b, var);
	Polynomial u = *a.divide_exact(cont_a);
	Polynomial v = *b.divide_exact(cont_b);
	Polynomial c = gcd_rec(cont_a, cont_b);
	if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
	while (!v.is_zero()) {
		Polynomial r = pseudo_rem(u, v, var);
		u = v;
		if (r.is_zero()) {
			v = r;
		} else {
			Polynomial cr = content_in(r, var);
			v = *r.divide_exact(cr);
		}
	}
	return canonical_unit(c * u);
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
	// Peel off the shared monomial factor first; PRS on the primitive parts.
	if (a.is_zero()) return canonical_unit(b);
	if (b.is_zero()) return canonical_unit(a);
	Monomial mg = Monomial::gcd(a.monomial_content(), b.monomial_content());
	Polynomial core = gcd_rec(a.divide_by_monomial(a.monomial_content()),
	                          b.divide_by_monomial(b.monomial_content()));
	return core * Polynomial::term(1, mg);
}

std::optional<Polynomial> Polynomial::sqrt() const {
	if (is_zero()) return Polynomial{};
	auto [lm, lc] = leading_term();
	auto root_c = rational_sqrt(lc);
	if (!root_c) return std::nullopt;
	std::vector<std::pair<int, int>> half;
	for (auto& [v, e] : lm.factors()) {
		if (e % 2) return std::nullopt;
		half.emplace_back(v, e / 2);
	}
	// If s is a root with lt(s) = root, then for partial q the residual
	// p - q^2 has leading term 2*lt(root)*next, so the next correction is
	// lt(residual)/(2*root) and its monomial strictly decreases.
	Monomial root_m{half};
	Polynomial q = term(*root_c, root_m);
	Monomial prev = root_m;
	std::size_t guard = 4 * term_count() + 16;
	while (guard--) {
		Polynomial r = *this - q * q;
		if (r.is_zero()) return q;
		auto [rm, rc] = r.leading_term();
		auto dm = rm.divide(root_m);
		if (!dm || !(*dm < prev)) return std::nullopt;
		prev = *dm;
		q += term(rc / (*root_c * 2), *dm);
	}
	return std::nullopt;
}

std::string Polynomial::str() const {
	if (terms_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	// descending graded lex, the usual reading order
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const auto& [m, c] = *it;
		Rational abs_c = sgn(c) < 0 ? Rational(-c) : c;
		if (first) {
			if (sgn(c) < 0) os << "-";
			first = false;
		} else {
			os << (sgn(c) < 0 ? " - " : " + ");
		}
		bool coeff_shown = !(abs_c == 1) || m.is_one();
		if (coeff_shown) os << abs_c.get_str();
		bool star = coeff_shown;
		for (auto& [v, e] : m.factors()) {
			if (star) os << "*";
			os << params::name(v);
			if (e > 1) os << "^" << e;
			star = true;
		}
	}
	return os.str();
}

} // namespace liegeo
