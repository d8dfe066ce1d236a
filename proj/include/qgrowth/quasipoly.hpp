#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/numeric.hpp"
#include "qgrowth/polynomial.hpp"

namespace qgrowth {

// Eventual shape of a polynomially growing dimension sequence:
// dim_m = polys[m % period](m) for every m >= onset.
struct QuasiPolynomial {
	int period = 1;
	int onset = 0;
	int degree = -1;  // common degree of all residue polynomials
	std::vector<QPoly> polys;

	Rational value_at(long m) const {
		int r = static_cast<int>(m % period);
		return poly::eval(polys[r], Rational(static_cast<long>(m)));
	}
};

namespace detail {

inline std::vector<int> divisors_ascending(int n) {
	std::vector<int> d;
	for (int k = 1; k <= n; ++k)
		if (n % k == 0) d.push_back(k);
	return d;
}

inline QPoly lagrange_interpolate(
		const std::vector<std::pair<int, BigInt>>& pts) {
	QPoly f;
	for (size_t i = 0; i < pts.size(); ++i) {
		QPoly term{Rational(pts[i].second)};
		for (size_t j = 0; j < pts.size(); ++j) {
			if (j == i) continue;
			Rational den(pts[i].first - pts[j].first);
			// (z - x_j) / (x_i - x_j)
			QPoly lin{Rational(-pts[j].first) / den, Rational(1) / den};
			term = poly::mul(term, lin);
		}
		f = poly::add(f, term);
	}
	poly::trim(f);
	return f;
}

}  // namespace detail

// Period candidates are the divisors of lcm(simple circuit lengths),
// tried smallest first, so the reported period is minimal.
inline int quasi_period_bound(const UfnarovskiGraph& g) {
	auto circuits = simple_circuits(g);
	if (circuits.empty())
		throw ValueError("no circuits: dimension sequence is eventually zero");
	long l = 1;
	for (const Circuit& c : circuits)
		l = std::lcm(l, static_cast<long>(c.length()));
	if (l > 1000000)
		throw GuardError("circuit length lcm too large for period search");
	return static_cast<int>(l);
}

inline int quasi_required_horizon(const UfnarovskiGraph& g, int max_degree) {
	int T = quasi_period_bound(g);
	int onset = g.state_count() + g.ell;
	return onset + 3 * T * (max_degree + 1);
}

inline QuasiPolynomial quasi_polynomial_fit(const std::vector<BigInt>& values,
		const UfnarovskiGraph& g, int max_degree) {
	if (max_degree < 0) throw ValueError("negative degree bound");
	int lcm_len = quasi_period_bound(g);
	auto periods = detail::divisors_ascending(lcm_len);
	int N = static_cast<int>(values.size()) - 1;
	int onset0 = g.state_count() + g.ell;
	if (N < quasi_required_horizon(g, max_degree))
		throw ValueError("horizon too short for quasi-polynomial fit: need " +
				std::to_string(quasi_required_horizon(g, max_degree)) +
				" values, have " + std::to_string(N + 1));

	for (int round = 0; round < 8; ++round) {
		int onset = onset0 + round * lcm_len;
		for (int T : periods) {
			int fit_end = onset + T * (max_degree + 1);  // exclusive
			if (N + 1 - fit_end < 2 * T * (max_degree + 1)) break;
			std::vector<QPoly> polys(T);
			bool ok = true;
			int common_deg = -2;
			for (int r = 0; r < T && ok; ++r) {
				std::vector<std::pair<int, BigInt>> pts;
				int m = onset + ((r - onset) % T + T) % T;
				for (; m < fit_end; m += T)
					pts.emplace_back(m, values[m]);
				QPoly f = detail::lagrange_interpolate(pts);
				for (; m <= N; m += T)
					if (poly::eval(f, Rational(m)) != Rational(values[m])) {
						ok = false;
						break;
					}
				if (!ok) break;
				int d = poly::degree(f);
				if (common_deg == -2) common_deg = d;
				else if (d != common_deg)
					ok = false;  // residue polynomials must share a degree
				polys[r] = std::move(f);
			}
			if (!ok) continue;
			QuasiPolynomial qp;
			qp.period = T;
			qp.onset = onset;
			qp.polys = std::move(polys);
			qp.degree = common_deg == -2 ? -1 : common_deg;
			return qp;
		}
	}
	throw InvariantError("quasi-polynomial fit failed on every period/onset");
}

// Certified sandwich C1 * m^D <= dim_m <= C2 * m^D for all m >= onset,
// assuming every residue polynomial has positive leading coefficient.
inline std::pair<Rational, Rational> quasi_asymptotic_bounds(
		const QuasiPolynomial& qp) {
	if (qp.degree < 0)
		throw ValueError("zero quasi-polynomial has no growth constants");
	int D = qp.degree;
	bool have = false;
	Rational c1, c2;
	for (int a = 0; a < qp.period; ++a) {
		const QPoly& f = qp.polys[a];
		if (poly::degree(f) != D)
			throw ValueError("residue polynomial degrees differ");
		Rational lead = f[D];
		if (lead <= 0)
			throw ValueError("nonpositive leading coefficient");
		Rational tail = 0;
		for (int i = 0; i < D; ++i) tail += abs(f[i]);
		// f(m)/m^D is within tail/m of lead once m >= 1.
		Rational lo = lead / 2, hi = lead + tail;
		// Below m1 the +-tail/m slack is weaker than lead/2; check the
		// finitely many earlier points of this residue class directly.
		long m1 = 1;
		if (tail > 0)
			m1 = static_cast<long>(to_double(2 * tail / lead)) + 2;
		long start = std::max(1, qp.onset);
		start += ((a - start) % qp.period + qp.period) % qp.period;
		for (long m = start; m < m1; m += qp.period) {
			Rational ratio = poly::eval(f, Rational(m)) /
					Rational(big_pow(BigInt(m), D));
			if (ratio < lo) lo = ratio;
			if (ratio > hi) hi = ratio;
		}
		if (!have) {
			c1 = lo;
			c2 = hi;
			have = true;
		} else {
			if (lo < c1) c1 = lo;
			if (hi > c2) c2 = hi;
		}
	}
	return {c1, c2};
}

}  // namespace qgrowth
