#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/hilbert.hpp"
#include "qgrowth/numeric.hpp"
#include "qgrowth/polynomial.hpp"
#include "qgrowth/quasipoly.hpp"

namespace qgrowth {

enum class GrowthClass { FiniteDimensional, Polynomial, Exponential };

inline const char* to_string(GrowthClass c) {
	switch (c) {
		case GrowthClass::FiniteDimensional: return "finite-dimensional";
		case GrowthClass::Polynomial: return "polynomial";
		case GrowthClass::Exponential: return "exponential";
	}
	return "?";
}

// log(lambda) for the dominant growth rate lambda, certified: lambda is
// bracketed by exact rationals via Sturm counts on the squarefree
// reversed denominator, never by floating root finding.
struct EntropyCertificate {
	double value = 0;
	double lo = 0, hi = 0;
	bool exact = false;  // lambda pinned exactly (integer root, or 1)
	Rational lambda_lo = 1, lambda_hi = 1;
	ZPoly factor;  // monic squarefree witness polynomial
};

namespace detail {

// Shrink (a, b] keeping the largest real root inside until b - a <= tol.
inline void bisect_largest_root(const std::vector<QPoly>& chain,
		Rational& a, Rational& b, const Rational& tol) {
	while (b - a > tol) {
		Rational m = (a + b) / 2;
		if (poly::roots_in(chain, m, b) >= 1) a = m;
		else b = m;
	}
}

inline double log_lo(const Rational& x) {
	double v = std::log(to_double(x));
	return v - 1e-15 * (std::abs(v) + 1);
}

inline double log_hi(const Rational& x) {
	double v = std::log(to_double(x));
	return v + 1e-15 * (std::abs(v) + 1);
}

}  // namespace detail

// `exponential`: the structural verdict (a state on two circuits).  The
// spectral picture must agree with it or the model is inconsistent.
// `snap_limit`: largest integer tried as an exact root of the witness.
inline EntropyCertificate entropy_from_hilbert(const HilbertData& hd,
		bool exponential, int snap_limit = 64) {
	if (poly::degree(hd.denominator) <= 0)
		throw ValueError("finite-dimensional algebra has no growth entropy");
	QPoly chi_sf = poly::squarefree_part(
			poly::to_q(poly::reversed(hd.denominator)));
	EntropyCertificate cert;
	cert.factor = poly::to_z_exact(chi_sf);
	auto chain = poly::sturm_chain(chi_sf);
	Rational bound = poly::cauchy_bound(chi_sf);
	int above_one = poly::roots_in(chain, Rational(1), bound);
	if ((above_one >= 1) != exponential)
		throw InvariantError(
				"structural and spectral growth classifications disagree");

	if (!exponential) {
		if (poly::eval(chi_sf, Rational(1)) != 0)
			throw InvariantError("polynomial growth without root at 1");
		cert.exact = true;
		cert.value = cert.lo = cert.hi = 0;
		cert.lambda_lo = cert.lambda_hi = 1;
		return cert;
	}

	// Integer roots first: a monic integer polynomial has no other
	// rational roots, and these snap the certificate to exact.
	BigInt best_int = 0;
	for (BigInt k = 2; k <= snap_limit && Rational(k) <= bound; ++k)
		if (poly::eval(cert.factor, Rational(k)) == 0) best_int = k;
	if (best_int > 1 &&
			(Rational(best_int) >= bound ||
					poly::roots_in(chain, Rational(best_int), bound) == 0)) {
		cert.exact = true;
		cert.lambda_lo = cert.lambda_hi = Rational(best_int);
		cert.value = std::log(to_double(best_int));
		cert.lo = detail::log_lo(cert.lambda_lo);
		cert.hi = detail::log_hi(cert.lambda_hi);
		return cert;
	}

	Rational a(1, 2), b = bound;
	if (poly::roots_in(chain, a, b) < 1)
		throw InvariantError("lost the dominant root");
	Rational tol = Rational(1) / Rational(BigInt("10000000000000"));
	detail::bisect_largest_root(chain, a, b, tol);
	// One more snap chance: the enclosure may have converged onto an
	// integer beyond snap_limit.
	{
		BigInt r = (BigInt(b.get_num() / b.get_den()));
		if (Rational(r) > a && Rational(r) <= b &&
				poly::eval(cert.factor, Rational(r)) == 0) {
			cert.exact = true;
			cert.lambda_lo = cert.lambda_hi = Rational(r);
			cert.value = std::log(to_double(r));
			cert.lo = detail::log_lo(cert.lambda_lo);
			cert.hi = detail::log_hi(cert.lambda_hi);
			return cert;
		}
	}
	cert.lambda_lo = a;
	cert.lambda_hi = b;
	cert.lo = detail::log_lo(a);
	cert.hi = detail::log_hi(b);
	cert.value = (cert.lo + cert.hi) / 2;
	return cert;
}

namespace detail {

// Floating cross-check of the certified enclosure: power iteration on
// I + M approximates the spectral radius from outside the exact
// machinery.  Only for unit arrow degrees, where M's Perron root is
// the growth rate.
// Returns the estimate and the last step's change, so the caller can
// widen its tolerance when convergence stalled.
inline std::pair<double, double> power_iteration_radius(
		const std::vector<std::vector<BigInt>>& m, int iters = 20000) {
	int n = static_cast<int>(m.size());
	std::vector<std::vector<double>> md(n, std::vector<double>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) md[i][j] = to_double(m[i][j]);
	std::vector<double> x(n, 1.0), y(n);
	double est = 1.0, delta = 1.0;
	for (int it = 0; it < iters && delta > 1e-13; ++it) {
		for (int i = 0; i < n; ++i) {
			double s = x[i];
			for (int j = 0; j < n; ++j) s += md[j][i] * x[j];
			y[i] = s;
		}
		double norm = 0;
		for (double v : y) norm += v;
		delta = std::abs(norm / n - est);
		est = norm / n;
		for (int i = 0; i < n; ++i) x[i] = y[i] / norm * n;
	}
	return {est - 1.0, delta};  // subtract the +I shift
}

}  // namespace detail

struct GrowthReport {
	GrowthClass classification = GrowthClass::FiniteDimensional;
	bool gk_finite = true;
	int gk_dim = 0;  // meaningful when gk_finite
	HilbertData hilbert;
	std::optional<EntropyCertificate> entropy;  // none: entropy is -infinity
	std::optional<QuasiPolynomial> quasi;
	std::optional<std::pair<Rational, Rational>> growth_constants;
};

inline int entropy_snap_limit(const UfnarovskiGraph& g) {
	int m = 64;
	for (const auto& o : g.out)
		m = std::max(m, static_cast<int>(o.size()));
	return m;
}

inline GrowthReport classify_growth(const UfnarovskiGraph& g,
		const std::vector<PathCountVector>& counts) {
	std::vector<BigInt> totals;
	totals.reserve(counts.size());
	for (const auto& c : counts) totals.push_back(c.total);
	GrowthReport rep;
	rep.hilbert = hilbert_from_counts(totals, transfer_register_bound(g));

	CircuitDepth depth = circuit_chain_depth(g);
	bool structural_exp = has_shared_circuit_state(g);
	if (structural_exp != depth.exponential)
		throw InvariantError("circuit-depth and shared-state tests disagree");

	if (poly::degree(rep.hilbert.denominator) <= 0) {
		if (depth.exponential || depth.depth != 0)
			throw InvariantError("zero-tail series on a graph with circuits");
		rep.classification = GrowthClass::FiniteDimensional;
		rep.gk_dim = 0;
		return rep;
	}
	if (depth.exponential) {
		rep.classification = GrowthClass::Exponential;
		rep.gk_finite = false;
		rep.gk_dim = -1;
	} else {
		rep.classification = GrowthClass::Polynomial;
		rep.gk_dim = depth.depth;
		if (rep.gk_dim < 1)
			throw InvariantError("infinite dimension with circuit depth 0");
	}
	rep.entropy = entropy_from_hilbert(rep.hilbert, depth.exponential,
			entropy_snap_limit(g));

	if (depth.exponential && g.unit_transition_degrees()) {
		auto [rho, slack] = detail::power_iteration_radius(g.adjacency());
		double lam_lo = to_double(rep.entropy->lambda_lo);
		double lam_hi = to_double(rep.entropy->lambda_hi);
		double pad = 1e-8 * lam_hi + 1e-6 + 100 * slack;
		if (rho < lam_lo - pad || rho > lam_hi + pad)
			throw InvariantError("power iteration disagrees with certificate");
	}

	if (rep.classification == GrowthClass::Polynomial) {
		int need = quasi_required_horizon(g, rep.gk_dim - 1);
		if (static_cast<int>(totals.size()) - 1 >= need) {
			rep.quasi = quasi_polynomial_fit(totals, g, rep.gk_dim - 1);
			rep.growth_constants = quasi_asymptotic_bounds(*rep.quasi);
		}
	}
	return rep;
}

inline GrowthReport classify_growth(const UfnarovskiGraph& g) {
	int n = 2 * transfer_register_bound(g) + 4;
	if (!has_shared_circuit_state(g)) {
		CircuitDepth d = circuit_chain_depth(g);
		if (d.depth >= 1)
			n = std::max(n, quasi_required_horizon(g, d.depth - 1));
	}
	auto counts = g.unit_transition_degrees()
			? count_normal_words(g, n)
			: count_normal_by_degree(g, n);
	return classify_growth(g, counts);
}

inline GrowthReport classify_growth(const MonomialPresentation& mp) {
	return classify_growth(build_ufnarovski(mp));
}

inline EntropyCertificate growth_entropy(const UfnarovskiGraph& g) {
	GrowthReport rep = classify_growth(g);
	if (!rep.entropy)
		throw ValueError("finite-dimensional algebra has no growth entropy");
	return *rep.entropy;
}

}  // namespace qgrowth
