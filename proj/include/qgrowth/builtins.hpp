#pragma once

#include <string>
#include <vector>

#include "qgrowth/presentation.hpp"

namespace qgrowth {

// Preprojective presentation of an acyclic quiver: arrows are doubled
// (a gets a reverse partner a*), originals graded 0 and partners 1,
// with one relation component e_v (sum_a a.a* - a*.a) e_v per vertex.
inline ParsedPresentation preprojective_of_quiver(const Quiver& base) {
	std::vector<std::vector<int>> adj(base.vertex_count());
	for (const Arrow& a : base.arrows()) adj[a.src].push_back(a.tgt);
	std::vector<int> state(base.vertex_count(), 0);
	// The doubled relations only terminate the degree-0 rewriting when
	// the base quiver has no directed cycle, so reject cyclic input.
	auto has_cycle = [&]() {
		for (int s = 0; s < base.vertex_count(); ++s) {
			if (state[s]) continue;
			std::vector<std::pair<int, size_t>> stack{{s, 0}};
			state[s] = 1;
			while (!stack.empty()) {
				auto& [v, i] = stack.back();
				if (i < adj[v].size()) {
					int w = adj[v][i++];
					if (state[w] == 1) return true;
					if (state[w] == 0) {
						state[w] = 1;
						stack.push_back({w, 0});
					}
				} else {
					state[v] = 2;
					stack.pop_back();
				}
			}
		}
		return false;
	};
	if (has_cycle())
		throw ValueError("preprojective presentation requires an acyclic quiver");

	GradedPresentation gp;
	for (const std::string& v : base.vertices()) gp.quiver.add_vertex(v);
	for (const Arrow& a : base.arrows())
		gp.quiver.add_arrow(a.name, a.src, a.tgt, 0);
	std::vector<int> star(base.arrow_count());
	for (int i = 0; i < base.arrow_count(); ++i) {
		const Arrow& a = base.arrow(i);
		star[i] = gp.quiver.add_arrow(a.name + "*", a.tgt, a.src, 1);
	}
	for (int v = 0; v < base.vertex_count(); ++v) {
		NcPolynomial rel;
		for (int i = 0; i < base.arrow_count(); ++i) {
			const Arrow& a = base.arrow(i);
			if (a.src == v) {
				Path p{v, {i, star[i]}};
				rel.add_term(p, 1);
			}
			if (a.tgt == v) {
				Path p{v, {star[i], i}};
				rel.add_term(p, -1);
			}
		}
		if (rel.zero())
			throw ValueError("vertex " + base.vertex_name(v) +
					" has no incident arrows; its relation component vanishes");
		gp.relations.push_back(rel);
	}
	return classify_presentation(std::move(gp));
}

namespace detail {

inline Quiver loop_quiver(int g, const std::string& stem) {
	Quiver q;
	int v = q.add_vertex("v");
	for (int i = 1; i <= g; ++i)
		q.add_arrow(stem + std::to_string(i), v, v, 1);
	return q;
}

inline ParsedPresentation builtin_free(int g) {
	if (g < 1) throw ValueError("free(g) needs g >= 1");
	GradedPresentation gp;
	gp.quiver = loop_quiver(g, "x");
	return classify_presentation(std::move(gp));
}

inline ParsedPresentation builtin_projective_line(int g) {
	if (g < 2) throw ValueError("projective_line(g) needs g >= 2");
	GradedPresentation gp;
	gp.quiver = loop_quiver(g, "x");
	NcPolynomial f;
	for (int i = 1; 2 * i <= g; ++i) {
		int a = 2 * i - 2, b = 2 * i - 1;
		f.add_term(Path{0, {a, b}}, 1);
		f.add_term(Path{0, {b, a}}, 1);
	}
	if (g % 2 == 1) f.add_term(Path{0, {g - 1, g - 1}}, 1);
	gp.relations.push_back(f);
	return classify_presentation(std::move(gp));
}

inline ParsedPresentation builtin_one_loop_relation(
		const std::vector<int>& word) {
	GradedPresentation gp;
	gp.quiver = Quiver();
	int v = gp.quiver.add_vertex("v");
	gp.quiver.add_arrow("x", v, v, 1);
	gp.quiver.add_arrow("y", v, v, 1);
	NcPolynomial f;
	f.add_term(Path{v, word}, 1);
	gp.relations.push_back(f);
	return classify_presentation(std::move(gp));
}

inline ParsedPresentation builtin_example52() {
	GradedPresentation gp;
	int x = gp.quiver.add_vertex("x");
	int y = gp.quiver.add_vertex("y");
	gp.quiver.add_arrow("a", x, x, 1);
	gp.quiver.add_arrow("b", x, y, 1);
	gp.quiver.add_arrow("c", y, y, 1);
	return classify_presentation(std::move(gp));
}

inline ParsedPresentation builtin_two_cycle_tail() {
	GradedPresentation gp;
	int u = gp.quiver.add_vertex("u");
	int v = gp.quiver.add_vertex("v");
	int w = gp.quiver.add_vertex("w");
	gp.quiver.add_arrow("p", u, v, 1);
	gp.quiver.add_arrow("q", v, u, 1);
	gp.quiver.add_arrow("t", w, u, 1);
	return classify_presentation(std::move(gp));
}

inline ParsedPresentation builtin_preprojective(int g) {
	if (g < 1) throw ValueError("preprojective(g) needs g >= 1");
	Quiver base;
	int u = base.add_vertex("u");
	int w = base.add_vertex("w");
	for (int i = 1; i <= g; ++i)
		base.add_arrow("a" + std::to_string(i), u, w, 1);
	return preprojective_of_quiver(base);
}

}  // namespace detail

inline std::vector<std::string> builtin_names() {
	return {"free", "projective_line", "example52", "xx_algebra",
			"yx_algebra", "preprojective", "two_cycle_tail"};
}

// Named presentation families. Integer parameters follow the name,
// e.g. builtin_presentation("free", {2}).
inline ParsedPresentation builtin_presentation(const std::string& name,
		const std::vector<int>& params = {}) {
	auto want = [&](size_t n) {
		if (params.size() != n)
			throw ValueError("builtin " + name + " expects " +
					std::to_string(n) + " parameter(s)");
	};
	if (name == "free") {
		want(1);
		return detail::builtin_free(params[0]);
	}
	if (name == "projective_line") {
		want(1);
		return detail::builtin_projective_line(params[0]);
	}
	if (name == "example52") {
		want(0);
		return detail::builtin_example52();
	}
	if (name == "xx_algebra") {
		want(0);
		return detail::builtin_one_loop_relation({0, 0});
	}
	if (name == "yx_algebra") {
		want(0);
		return detail::builtin_one_loop_relation({1, 0});
	}
	if (name == "preprojective") {
		want(1);
		return detail::builtin_preprojective(params[0]);
	}
	if (name == "two_cycle_tail") {
		want(0);
		return detail::builtin_two_cycle_tail();
	}
	throw ValueError("unknown builtin presentation: " + name);
}

}  // namespace qgrowth
