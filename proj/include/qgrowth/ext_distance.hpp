#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "qgrowth/numeric.hpp"

namespace qgrowth {

// Weighted homological sum: coefficient c_m at exponent m stands for
// c_m e^{-mt}.  Kept exact; evaluated only on request.
struct ExtDistancePoly {
	std::map<int, BigInt> coeff;

	BigInt total() const {
		BigInt s = 0;
		for (const auto& [m, c] : coeff) s += c;
		return s;
	}

	double eval(double t) const {
		double s = 0;
		for (const auto& [m, c] : coeff)
			s += c.get_d() * std::exp(-m * t);
		return s;
	}
};

struct ExtDistancePair {
	ExtDistancePoly line;       // between O and S^n O
	ExtDistancePoly generator;  // between G and S^n G
	double t = 0;
	double line_value = 0;
	double generator_value = 0;
};

// Hom-distances of Serre twists over a regular coherent algebra with
// dim table a_n: all Ext's sit in degree 0, so the distance between O
// and S^n O is a_n, and the one between the l-block generator
// G = O + O(1) + ... + O(l-1) and its twist collects the symmetric
// window sum_{k=-(l-1)}^{l-1} (l-|k|) a_{n+k}.
inline ExtDistancePair ext_distance_regular(const std::vector<BigInt>& dims,
		int l, int n, double t = 0) {
	if (l < 1) throw ValueError("generator needs at least one block");
	if (n - (l - 1) < 0 ||
			n + (l - 1) >= static_cast<int>(dims.size()))
		throw ValueError("dimension table does not cover the index "
				"window of the twist");
	ExtDistancePair out;
	out.t = t;
	out.line.coeff[0] = dims[n];
	BigInt g = 0;
	for (int k = -(l - 1); k <= l - 1; ++k)
		g += BigInt(l - std::abs(k)) * dims[n + k];
	out.generator.coeff[0] = g;
	out.line_value = out.line.eval(t);
	out.generator_value = out.generator.eval(t);
	return out;
}

enum class SequenceMode { automatic, zero_entropy };

struct SequenceEntropy {
	int window_begin = 0;  // 1-based index
	int window_end = 0;
	double h = 0;
	double hpol = 0;
	double residual = 0;   // max deviation from the fitted line
	bool pinned_zero = false;
};

// Growth-rate estimates of a positive sequence v(1..N).  h telescopes
// log v across the tail window; the polynomial rate is the slope of
// log v(n) - n*h against log n.  Sequences whose raw rate is already
// below the pin threshold are treated as subexponential, otherwise
// the n*h subtraction would swallow the polynomial part.
inline SequenceEntropy entropy_from_sequence(const std::vector<BigInt>& vals,
		SequenceMode mode = SequenceMode::automatic) {
	int N = static_cast<int>(vals.size());
	if (N < 40) throw ValueError("sequence shorter than the 40-term window");
	for (const BigInt& v : vals)
		if (v <= 0) throw ValueError("nonpositive value in the sequence");

	SequenceEntropy out;
	int n0 = (3 * N) / 4;
	out.window_begin = n0;
	out.window_end = N;

	auto lv = [&](int n) { return log_big(vals[n - 1]); };
	double h_raw = (lv(N) - lv(n0)) / (N - n0);
	out.pinned_zero = mode == SequenceMode::zero_entropy || h_raw < 0.02;
	double h_used = out.pinned_zero ? 0.0 : h_raw;
	out.h = mode == SequenceMode::zero_entropy ? 0.0 : h_raw;

	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	int m = N - n0 + 1;
	for (int n = n0; n <= N; ++n) {
		double x = std::log(static_cast<double>(n));
		double y = lv(n) - n * h_used;
		sx += x;
		sy += y;
		sxx += x * x;
		sxy += x * y;
	}
	double det = m * sxx - sx * sx;
	out.hpol = (m * sxy - sx * sy) / det;
	double intercept = (sy - out.hpol * sx) / m;
	for (int n = n0; n <= N; ++n) {
		double x = std::log(static_cast<double>(n));
		double y = lv(n) - n * h_used;
		out.residual = std::max(out.residual,
				std::abs(y - intercept - out.hpol * x));
	}
	return out;
}

}  // namespace qgrowth
