#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/numeric.hpp"

namespace qgrowth {

// The m-th tail of the algebra decomposes projectively with one
// multiplicity per automaton state (per vertex of the transition path
// algebra); multiplicities[s] counts graph paths of length m into s.
struct TruncationDecomposition {
	int m = 0;
	std::vector<BigInt> multiplicities;

	BigInt total() const {
		BigInt t = 0;
		for (const BigInt& c : multiplicities) t += c;
		return t;
	}
};

inline TruncationDecomposition truncation_decomposition(
		const UfnarovskiGraph& g, int m) {
	if (m < 0) throw ValueError("negative truncation index");
	TruncationDecomposition td;
	td.m = m;
	td.multiplicities = count_paths_by_state(g, m).back();
	return td;
}

struct RankBound {
	BigInt r = 1;
	int witness_d = 0;  // smallest d attaining the minimum
};

namespace detail {

// max_s ceil(c_s[n+d] / c_s[d]), or nullopt when some state vanished at
// d but feeds paths again at n+d, which disqualifies this d.
inline std::optional<BigInt> rank_ratio(
		const std::vector<std::vector<BigInt>>& table, int n, int d) {
	BigInt worst = 0;
	for (size_t s = 0; s < table[d].size(); ++s) {
		const BigInt& lo = table[d][s];
		const BigInt& hi = table[d + n][s];
		if (lo == 0) {
			if (hi != 0) return std::nullopt;
			continue;
		}
		BigInt q = ceil_div(hi, lo);
		if (q > worst) worst = q;
	}
	return worst;
}

inline RankBound rank_from_table(const std::vector<std::vector<BigInt>>& table,
		int n, int d_max) {
	RankBound best;
	bool have = false;
	for (int d = 0; d <= d_max; ++d) {
		auto q = rank_ratio(table, n, d);
		if (!q) continue;
		if (!have || *q < best.r) {
			best.r = *q;
			best.witness_d = d;
			have = true;
		}
	}
	if (!have) throw InvariantError("no admissible comparison shift");
	if (best.r < 1) best.r = 1;
	return best;
}

}  // namespace detail

// Upper bound for the rank of the identity on the n-th power of the
// twist, from comparing tail decompositions d and n+d.
inline RankBound rank_upper(const UfnarovskiGraph& g, int n, int d_max) {
	if (n < 0) throw ValueError("negative twist power");
	if (d_max < 0) throw ValueError("negative shift bound");
	auto table = count_paths_by_state(g, n + d_max);
	return detail::rank_from_table(table, n, d_max);
}

struct RankSequence {
	std::vector<BigInt> r;        // index n = 0..N
	std::vector<int> witness;
	int d_max_used(int n, int states) const {
		return fixed_d_max >= 0 ? fixed_d_max : 2 * n + states;
	}
	int fixed_d_max = -1;  // negative: default policy 2n + |states|
};

inline RankSequence rank_sequence(const UfnarovskiGraph& g, int N,
		int fixed_d_max = -1) {
	if (N < 0) throw ValueError("negative horizon");
	RankSequence rs;
	rs.fixed_d_max = fixed_d_max;
	int top = 0;
	for (int n = 0; n <= N; ++n)
		top = std::max(top, n + rs.d_max_used(n, g.state_count()));
	auto table = count_paths_by_state(g, top);
	for (int n = 0; n <= N; ++n) {
		auto b = detail::rank_from_table(table, n,
				rs.d_max_used(n, g.state_count()));
		rs.r.push_back(b.r);
		rs.witness.push_back(b.witness_d);
	}
	return rs;
}

struct SerreEntropyReport {
	int window_begin = 0, window_end = 0;  // inclusive range of n
	bool r_constant_on_window = false;
	std::optional<BigInt> stabilized_rank;
	double h_estimate = 0;
	double h_deviation = 0;      // max |log r(n)/n - h| over the window
	bool hpol_exact_zero = false;
	double hpol_estimate = 0;
	double reference_entropy = 0;  // h(A) of the coordinate algebra
	bool gk_finite = true;
	int gk_dim = 0;
	bool h_within_entropy_bound = false;
	bool hpol_within_gk_bound = false;
};

// Categorical entropy estimate of the twist from the rank sequence,
// judged against the algebra's own growth data.
inline SerreEntropyReport serre_entropy_report(const RankSequence& rs,
		const GrowthReport& growth) {
	int N = static_cast<int>(rs.r.size()) - 1;
	if (N < 40)
		throw ValueError("need N >= 40 for a stable tail window");
	int W = N / 4;
	SerreEntropyReport rep;
	rep.window_begin = N - W + 1;
	rep.window_end = N;
	rep.reference_entropy = growth.entropy ? growth.entropy->value : 0.0;
	rep.gk_finite = growth.gk_finite;
	rep.gk_dim = growth.gk_dim;

	rep.r_constant_on_window = true;
	for (int n = rep.window_begin + 1; n <= N; ++n)
		if (rs.r[n] != rs.r[rep.window_begin]) {
			rep.r_constant_on_window = false;
			break;
		}

	if (rep.r_constant_on_window) {
		rep.stabilized_rank = rs.r[N];
		rep.h_estimate = 0;
		rep.h_deviation = 0;
		rep.hpol_exact_zero = true;
		rep.hpol_estimate = 0;
	} else {
		double sum = 0;
		std::vector<double> per_n(N + 1, 0);
		for (int n = rep.window_begin; n <= N; ++n) {
			per_n[n] = log_big(rs.r[n]) / n;
			sum += per_n[n];
		}
		rep.h_estimate = sum / W;
		for (int n = rep.window_begin; n <= N; ++n)
			rep.h_deviation = std::max(rep.h_deviation,
					std::abs(per_n[n] - rep.h_estimate));
		// Blockwise log-log slope; raw points wobble when r oscillates
		// with period > 1, block means do not.
		int blocks = 5;
		std::vector<double> bx(blocks, 0), by(blocks, 0);
		for (int b = 0; b < blocks; ++b) {
			int lo = rep.window_begin + b * W / blocks;
			int hi = rep.window_begin + (b + 1) * W / blocks - 1;
			int cnt = 0;
			for (int n = lo; n <= hi && n <= N; ++n, ++cnt) {
				bx[b] += std::log(static_cast<double>(n));
				by[b] += log_big(rs.r[n]);
			}
			if (cnt > 0) {
				bx[b] /= cnt;
				by[b] /= cnt;
			}
		}
		double mx = 0, my = 0;
		for (int b = 0; b < blocks; ++b) {
			mx += bx[b];
			my += by[b];
		}
		mx /= blocks;
		my /= blocks;
		double num = 0, den = 0;
		for (int b = 0; b < blocks; ++b) {
			num += (bx[b] - mx) * (by[b] - my);
			den += (bx[b] - mx) * (bx[b] - mx);
		}
		rep.hpol_estimate = den > 0 ? num / den : 0;
	}

	rep.h_within_entropy_bound =
			rep.h_estimate <= rep.reference_entropy + 0.05;
	rep.hpol_within_gk_bound = !rep.gk_finite ||
			rep.hpol_estimate <= rep.gk_dim - 1 + 0.05;
	return rep;
}

// Smallest N with N * b^(m+d) >= b^m statewise over the whole range.
// Exists only under polynomial growth.
inline BigInt shift_inequality_constant(const UfnarovskiGraph& g, int m_max,
		int d_max, const BigInt& guard = BigInt("1000000000000000000")) {
	if (has_shared_circuit_state(g))
		throw ValueError(
				"exponential growth admits no uniform shift constant");
	int onset = g.state_count();
	if (m_max < onset)
		throw ValueError("m_max below the validity onset " +
				std::to_string(onset));
	if (d_max < 1) throw ValueError("d_max must be at least 1");
	auto table = count_paths_by_state(g, m_max + d_max);
	BigInt best = 1;
	for (int m = onset; m <= m_max; ++m)
		for (int d = 1; d <= d_max; ++d)
			for (int s = 0; s < g.state_count(); ++s) {
				const BigInt& num = table[m][s];
				const BigInt& den = table[m + d][s];
				if (den == 0) {
					if (num != 0)
						throw InvariantError(
								"state count vanished after the onset");
					continue;
				}
				BigInt q = ceil_div(num, den);
				if (q > best) best = q;
				if (best > guard)
					throw GuardError("shift constant exceeded guard");
			}
	return best;
}

}  // namespace qgrowth
