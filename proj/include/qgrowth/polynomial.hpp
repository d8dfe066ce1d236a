#pragma once

#include <vector>

#include "qgrowth/numeric.hpp"

namespace qgrowth {

// Dense univariate polynomials, coefficient of z^i at index i.
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<Rational>;

namespace poly {

inline void trim(QPoly& p) {
	while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void trim(ZPoly& p) {
	while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const QPoly& p) {
	for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
		if (p[i] != 0) return i;
	return -1;
}

inline int degree(const ZPoly& p) {
	for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
		if (p[i] != 0) return i;
	return -1;
}

inline bool is_zero(const QPoly& p) { return degree(p) < 0; }
inline bool is_zero(const ZPoly& p) { return degree(p) < 0; }

inline QPoly to_q(const ZPoly& p) {
	QPoly q(p.size());
	for (size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
	return q;
}

// Requires every coefficient to be integral.
inline ZPoly to_z_exact(const QPoly& p) {
	ZPoly z(p.size());
	for (size_t i = 0; i < p.size(); ++i) {
		if (!is_integer(p[i]))
			throw InvariantError("polynomial has a non-integer coefficient");
		z[i] = p[i].get_num();
	}
	trim(z);
	return z;
}

inline Rational eval(const QPoly& p, const Rational& x) {
	Rational r = 0;
	for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
		r = r * x + p[i];
	return r;
}

inline Rational eval(const ZPoly& p, const Rational& x) {
	Rational r = 0;
	for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
		r = r * x + Rational(p[i]);
	return r;
}

inline QPoly add(const QPoly& a, const QPoly& b) {
	QPoly r(std::max(a.size(), b.size()), Rational(0));
	for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
	for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
	trim(r);
	return r;
}

inline QPoly scale(const QPoly& a, const Rational& c) {
	QPoly r = a;
	for (auto& v : r) v *= c;
	trim(r);
	return r;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
	return add(a, scale(b, -1));
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
	if (is_zero(a) || is_zero(b)) return {};
	QPoly r(a.size() + b.size() - 1, Rational(0));
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0) continue;
		for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
	}
	trim(r);
	return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
	if (is_zero(a) || is_zero(b)) return {};
	ZPoly r(a.size() + b.size() - 1, BigInt(0));
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0) continue;
		for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
	}
	trim(r);
	return r;
}

// Euclidean division; returns {quotient, remainder}.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
	int db = degree(b);
	if (db < 0) throw ValueError("polynomial division by zero");
	QPoly rem = a;
	trim(rem);
	QPoly quot;
	int dr = degree(rem);
	if (dr >= db) quot.assign(dr - db + 1, Rational(0));
	while ((dr = degree(rem)) >= db) {
		Rational c = rem[dr] / b[db];
		quot[dr - db] = c;
		for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
	}
	trim(quot);
	trim(rem);
	return {quot, rem};
}

inline bool divides(const QPoly& d, const QPoly& p) {
	return is_zero(divmod(p, d).second);
}

inline QPoly derivative(const QPoly& p) {
	QPoly r;
	for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(i));
	trim(r);
	return r;
}

inline QPoly monic(const QPoly& p) {
	int d = degree(p);
	if (d < 0) return {};
	return scale(p, Rational(1) / p[d]);
}

inline QPoly gcd(QPoly a, QPoly b) {
	a = monic(a);
	b = monic(b);
	while (!is_zero(b)) {
		QPoly r = divmod(a, b).second;
		a = std::move(b);
		b = monic(r);
	}
	return a;  // monic (or zero)
}

/// p with repeated roots flattened: p / gcd(p, p').
inline QPoly squarefree_part(const QPoly& p) {
	QPoly g = gcd(p, derivative(p));
	if (degree(g) <= 0) return monic(p);
	return monic(divmod(p, g).first);
}

// Coefficients of p read backwards: z^deg * p(1/z).
inline ZPoly reversed(const ZPoly& p) {
	ZPoly r = p;
	trim(r);
	std::reverse(r.begin(), r.end());
	trim(r);
	return r;
}

// All real roots of a monic polynomial lie in [-B, B], B = 1 + max|c_i|.
inline Rational cauchy_bound(const QPoly& p) {
	int d = degree(p);
	if (d < 0) throw ValueError("cauchy bound of zero polynomial");
	Rational lead = p[d];
	Rational m = 0;
	for (int i = 0; i < d; ++i) {
		Rational a = abs(p[i] / lead);
		if (a > m) m = a;
	}
	return m + 1;
}

// Scale to leading coefficient +1 without ever flipping signs.
inline QPoly positive_normalize(const QPoly& p) {
	int d = degree(p);
	if (d < 0) return {};
	return scale(p, Rational(1) / abs(p[d]));
}

// Sturm chain p, p', -rem(...)...; counts distinct real roots.
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
	std::vector<QPoly> chain;
	QPoly a = p;
	trim(a);
	if (is_zero(a)) throw ValueError("sturm chain of zero polynomial");
	chain.push_back(a);
	QPoly b = derivative(a);
	while (!is_zero(b)) {
		chain.push_back(b);
		QPoly r = scale(divmod(a, b).second, -1);
		a = std::move(b);
		// only positive rescaling preserves the sign pattern
		b = positive_normalize(r);
	}
	return chain;
}

inline int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
	int vars = 0, prev = 0;
	for (const QPoly& p : chain) {
		Rational v = eval(p, x);
		int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
		if (s == 0) continue;
		if (prev != 0 && s != prev) ++vars;
		prev = s;
	}
	return vars;
}

// Number of distinct real roots in (a, b], requires a < b.
inline int roots_in(const std::vector<QPoly>& chain, const Rational& a,
		const Rational& b) {
	if (!(a < b)) throw ValueError("empty interval for root count");
	return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace poly

/// Minimal linear-feedback shift register of a sequence: connection
// polynomial C (C[0] = 1) and register length L with
// sum_{i=0}^{deg C} C[i] * s[n-i] = 0 for every L <= n < s.size().
struct LinearRecurrence {
	QPoly connection;
	int length = 0;
};

inline LinearRecurrence berlekamp_massey(const std::vector<Rational>& s) {
	QPoly C{Rational(1)}, B{Rational(1)};
	int L = 0, m = 1;
	Rational b = 1;
	for (size_t n = 0; n < s.size(); ++n) {
		Rational d = s[n];
		for (int i = 1; i <= L && i <= static_cast<int>(n); ++i)
			if (i < static_cast<int>(C.size())) d += C[i] * s[n - i];
		if (d == 0) {
			++m;
			continue;
		}
		QPoly shift(m, Rational(0));
		shift.push_back(Rational(1));
		QPoly adj = poly::mul(poly::scale(B, d / b), shift);
		if (2 * L <= static_cast<int>(n)) {
			QPoly T = C;
			C = poly::sub(C, adj);
			L = static_cast<int>(n) + 1 - L;
			B = std::move(T);
			b = d;
			m = 1;
		} else {
			C = poly::sub(C, adj);
			++m;
		}
	}
	poly::trim(C);
	if (C.empty() || C[0] != 1)
		throw InvariantError("connection polynomial lost its unit constant");
	return {C, L};
}

// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier, exact.
// Intended for cross-checks on small matrices (cost s^4).
inline ZPoly char_poly(const std::vector<std::vector<BigInt>>& M) {
	size_t s = M.size();
	for (const auto& row : M)
		if (row.size() != s) throw ValueError("char_poly needs a square matrix");
	std::vector<Rational> c(s + 1);
	c[s] = 1;  // coefficient of t^s
	std::vector<std::vector<Rational>> Mk(s, std::vector<Rational>(s, 0));
	// Mk starts as M
	for (size_t i = 0; i < s; ++i)
		for (size_t j = 0; j < s; ++j) Mk[i][j] = Rational(M[i][j]);
	for (size_t k = 1; k <= s; ++k) {
		Rational tr = 0;
		for (size_t i = 0; i < s; ++i) tr += Mk[i][i];
		Rational ck = -tr / Rational(static_cast<long>(k));
		c[s - k] = ck;
		if (k == s) break;
		// Mk <- M * (Mk + ck I)
		for (size_t i = 0; i < s; ++i) Mk[i][i] += ck;
		std::vector<std::vector<Rational>> next(s, std::vector<Rational>(s, 0));
		for (size_t i = 0; i < s; ++i)
			for (size_t l = 0; l < s; ++l) {
				if (M[i][l] == 0) continue;
				Rational f = Rational(M[i][l]);
				for (size_t j = 0; j < s; ++j) next[i][j] += f * Mk[l][j];
			}
		Mk = std::move(next);
	}
	QPoly q(c.begin(), c.end());
	return poly::to_z_exact(q);
}

}  // namespace qgrowth
