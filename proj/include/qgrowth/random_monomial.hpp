#pragma once

// Seeded generator of monomial presentations for the property suites.
// Relations are sampled as composable random walks and pruned to an
// antichain; with want_polynomial the draw repeats until the Ufnarovski
// graph carries a circuit but no two circuits share a state, so the
// result classifies as polynomial growth.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "presentation.hpp"

namespace qgrowth {

inline MonomialPresentation random_monomial(std::uint64_t seed,
		int vmax = 4, int amax = 6, int rmax = 4, int lmax = 4,
		bool want_polynomial = false, int budget = 512) {
	if (vmax < 1 || amax < 1 || rmax < 0 || lmax < 2)
		throw ValueError("random_monomial bounds out of range");
	std::mt19937_64 rng(seed);
	// Modulo instead of uniform_int_distribution keeps the stream
	// identical across standard libraries; bias is negligible at
	// spans this small.
	auto draw = [&rng](int lo, int hi) {
		return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
	};
	int attempts = want_polynomial ? budget : 1;
	for (int attempt = 0; attempt < attempts; ++attempt) {
		MonomialPresentation mp;
		int nv = draw(1, vmax);
		for (int v = 0; v < nv; ++v)
			mp.quiver.add_vertex("v" + std::to_string(v));
		int na = draw(1, amax);
		std::vector<std::vector<int>> out(nv);
		for (int i = 0; i < na; ++i) {
			int s = draw(0, nv - 1);
			int t = draw(0, nv - 1);
			out[s].push_back(mp.quiver.add_arrow("a" + std::to_string(i), s, t, 1));
		}
		int nr = draw(0, rmax);
		std::vector<Path> cand;
		for (int r = 0; r < nr; ++r) {
			int len = draw(2, lmax);
			// A sparse quiver can strand a walk early; retry a few
			// times, then let the slot go empty.
			for (int tries = 0; tries < 8; ++tries) {
				int first = draw(0, na - 1);
				Path p{mp.quiver.arrow(first).src, {first}};
				while (p.length() < len) {
					const auto& succ = out[p.target(mp.quiver)];
					if (succ.empty()) break;
					p.arrows.push_back(succ[draw(0, static_cast<int>(succ.size()) - 1)]);
				}
				if (p.length() >= 2) {
					cand.push_back(p);
					break;
				}
			}
		}
		std::sort(cand.begin(), cand.end(),
				[](const Path& a, const Path& b) {
					if (a.length() != b.length()) return a.length() < b.length();
					return a < b;
				});
		for (const Path& p : cand) {
			bool redundant = false;
			for (const Path& kept : mp.relations)
				if (kept == p || is_subword(kept.arrows, p.arrows)) {
					redundant = true;
					break;
				}
			if (!redundant) mp.relations.push_back(p);
		}
		mp.validate();
		if (!want_polynomial) return mp;
		CircuitDepth cd = circuit_chain_depth(build_ufnarovski(mp));
		if (!cd.exponential && cd.depth >= 1) return mp;
	}
	throw GuardError("rejection budget exhausted: no polynomial-growth sample in " +
			std::to_string(budget) + " draws");
}

}
