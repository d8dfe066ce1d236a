#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/numeric.hpp"
#include "qgrowth/polynomial.hpp"
#include "qgrowth/presentation.hpp"

namespace qgrowth {

// Rational form p(z)/q(z) of a dimension series, recovered from the
// coefficients by Berlekamp-Massey and certified against all of them.
struct HilbertData {
	std::vector<BigInt> coefficients;  // dim A_0 .. dim A_N
	ZPoly numerator;
	ZPoly denominator;  // constant term 1
	// a_n = recurrence[0] a_{n-1} + ... + recurrence[L-1] a_{n-L}
	// for every n >= threshold.
	std::vector<BigInt> recurrence;
	int threshold = 0;

	int horizon() const { return static_cast<int>(coefficients.size()) - 1; }
};

// `register_bound` is an a-priori bound on the minimal recurrence
// length; the caller derives it from the transfer-matrix size.  With
// 2*register_bound coefficients the fit is forced, not heuristic.
inline HilbertData hilbert_from_counts(std::vector<BigInt> coefficients,
		int register_bound) {
	if (coefficients.empty())
		throw ValueError("empty coefficient sequence");
	if (register_bound < 1) register_bound = 1;
	if (static_cast<int>(coefficients.size()) < 2 * register_bound)
		throw ValueError("N too small to certify recurrence: need " +
				std::to_string(2 * register_bound) + " coefficients, have " +
				std::to_string(coefficients.size()));

	std::vector<Rational> s;
	s.reserve(coefficients.size());
	for (const BigInt& c : coefficients) s.emplace_back(c);
	LinearRecurrence rec = berlekamp_massey(s);
	if (rec.length > register_bound)
		throw InvariantError("recurrence length exceeds transfer-matrix bound");

	HilbertData hd;
	hd.denominator = poly::to_z_exact(rec.connection);
	hd.threshold = rec.length;
	for (int i = 1; i <= poly::degree(hd.denominator); ++i)
		hd.recurrence.push_back(-hd.denominator[i]);
	while (static_cast<int>(hd.recurrence.size()) < rec.length)
		hd.recurrence.push_back(0);

	// numerator = q * series, which the recurrence forces to vanish
	// from index L on; recheck over the whole horizon anyway.
	int L = rec.length;
	for (size_t n = 0; n < coefficients.size(); ++n) {
		BigInt p = 0;
		for (size_t i = 0; i < hd.denominator.size() && i <= n; ++i)
			p += hd.denominator[i] * coefficients[n - i];
		if (static_cast<int>(n) < L)
			hd.numerator.push_back(p);
		else if (p != 0)
			throw InvariantError("recurrence fails at index " +
					std::to_string(n));
	}
	poly::trim(hd.numerator);
	hd.coefficients = std::move(coefficients);
	return hd;
}

inline int transfer_register_bound(const UfnarovskiGraph& g) {
	int maxdeg = 1;
	for (const Transition& t : g.transitions)
		maxdeg = std::max(maxdeg, g.quiver.arrow(t.arrow).degree);
	return (g.state_count() + g.ell) * maxdeg;
}

inline HilbertData hilbert_series(const UfnarovskiGraph& g, int N) {
	int bound = transfer_register_bound(g);
	if (N + 1 < 2 * bound)
		throw ValueError("N too small to certify recurrence: need N >= " +
				std::to_string(2 * bound - 1));
	auto counts = g.unit_transition_degrees()
			? count_normal_words(g, N)
			: count_normal_by_degree(g, N);
	std::vector<BigInt> coeffs;
	coeffs.reserve(counts.size());
	for (const auto& c : counts) coeffs.push_back(c.total);
	return hilbert_from_counts(std::move(coeffs), bound);
}

inline HilbertData hilbert_series(const MonomialPresentation& mp, int N) {
	return hilbert_series(build_ufnarovski(mp), N);
}

// Cross-check used by the tests: the denominator, reversed, divides
// the characteristic polynomial of the transition-count matrix.  Only
// meaningful when every transition has degree 1.
inline bool denominator_divides_reversed_charpoly(
		const UfnarovskiGraph& g, const HilbertData& hd) {
	if (!g.unit_transition_degrees())
		throw ValueError("charpoly comparison needs unit arrow degrees");
	ZPoly chi = char_poly(g.adjacency());
	// z^s chi(1/z) = coefficient reversal of chi; q divides it because
	// the counting series has denominator det(I - zM).
	ZPoly rev = poly::reversed(chi);
	return poly::divides(poly::to_q(hd.denominator), poly::to_q(rev));
}

}  // namespace qgrowth
