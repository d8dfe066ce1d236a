#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qgrowth/presentation.hpp"

namespace qgrowth {

struct Transition {
	int from = -1;
	int to = -1;
	int arrow = -1;

	bool operator==(const Transition& o) const {
		return from == o.from && to == o.to && arrow == o.arrow;
	}
};

// Normal-word automaton of a monomial presentation. With ell the
// maximum relation length (1 when there are no relations), states are
// the normal words of length ell-1 and a transition u -> v labeled by
// arrow a means u extended by a is normal with suffix v. Graph paths
// of length m-(ell-1) then biject with normal words of length m.
struct UfnarovskiGraph {
	Quiver quiver;
	int ell = 1;
	std::vector<Path> states;
	std::vector<int> endpoint;  // state -> vertex, target of the word
	std::vector<Transition> transitions;
	std::vector<std::vector<int>> out;  // state -> transition indices
	// Normal-word counts per vertex for lengths 0..ell-2, which the
	// graph itself does not see.
	std::vector<std::vector<BigInt>> short_by_vertex;
	// The same short words as (weighted degree, endpoint) pairs.
	std::vector<std::pair<int, int>> short_word_info;

	int state_count() const { return static_cast<int>(states.size()); }

	std::vector<std::vector<BigInt>> adjacency() const {
		std::vector<std::vector<BigInt>> m(state_count(),
				std::vector<BigInt>(state_count(), 0));
		for (const Transition& t : transitions) m[t.from][t.to] += 1;
		return m;
	}

	bool unit_transition_degrees() const {
		for (const Transition& t : transitions)
			if (quiver.arrow(t.arrow).degree != 1) return false;
		return true;
	}
};

namespace detail {

inline bool word_stays_normal(const std::vector<int>& word,
		const std::vector<Path>& relations) {
	// The word minus its last arrow is already normal, so only
	// relations landing flush against the new end can appear.
	for (const Path& r : relations) {
		size_t n = r.arrows.size();
		if (n > word.size()) continue;
		if (std::equal(r.arrows.begin(), r.arrows.end(),
				word.end() - static_cast<long>(n)))
			return false;
	}
	return true;
}

}  // namespace detail

inline UfnarovskiGraph build_ufnarovski(const MonomialPresentation& mp) {
	mp.validate();
	UfnarovskiGraph g;
	g.quiver = mp.quiver;
	g.ell = std::max(1, mp.max_relation_length());
	const Quiver& q = g.quiver;

	std::vector<std::vector<int>> arrows_from(q.vertex_count());
	for (int a = 0; a < q.arrow_count(); ++a)
		arrows_from[q.arrow(a).src].push_back(a);

	// Grow normal words length by length; a subword of a normal word
	// is normal, so extending normal words reaches all of them.
	std::vector<Path> layer;
	for (int v = 0; v < q.vertex_count(); ++v)
		layer.push_back(Path::at_vertex(v));
	for (int len = 0; len < g.ell - 1; ++len) {
		std::vector<BigInt> counts(q.vertex_count(), 0);
		for (const Path& w : layer) counts[w.target(q)] += 1;
		g.short_by_vertex.push_back(std::move(counts));
		for (const Path& w : layer)
			g.short_word_info.emplace_back(w.degree(q), w.target(q));
		std::vector<Path> next;
		for (const Path& w : layer)
			for (int a : arrows_from[w.target(q)]) {
				Path ext = w;
				ext.arrows.push_back(a);
				if (detail::word_stays_normal(ext.arrows, mp.relations))
					next.push_back(std::move(ext));
			}
		layer = std::move(next);
	}

	g.states = layer;
	std::map<Path, int> index;
	for (int s = 0; s < g.state_count(); ++s) index[g.states[s]] = s;
	g.endpoint.resize(g.state_count());
	g.out.resize(g.state_count());
	for (int s = 0; s < g.state_count(); ++s)
		g.endpoint[s] = g.states[s].target(q);

	for (int s = 0; s < g.state_count(); ++s) {
		for (int a : arrows_from[g.endpoint[s]]) {
			std::vector<int> word = g.states[s].arrows;
			word.push_back(a);
			if (!detail::word_stays_normal(word, mp.relations)) continue;
			Path suffix;
			suffix.arrows.assign(word.end() - (g.ell - 1), word.end());
			suffix.base = suffix.arrows.empty()
					? q.arrow(a).tgt
					: q.arrow(suffix.arrows.front()).src;
			auto it = index.find(suffix);
			if (it == index.end())
				throw InvariantError("transition suffix is not a state");
			int t = static_cast<int>(g.transitions.size());
			g.transitions.push_back({s, it->second, a});
			g.out[s].push_back(t);
		}
	}
	return g;
}

// Exact normal-word counts split by ending vertex.
struct PathCountVector {
	int m = 0;
	std::vector<BigInt> by_vertex;
	BigInt total = 0;

	static PathCountVector of(int m, std::vector<BigInt> by_vertex) {
		PathCountVector p;
		p.m = m;
		p.by_vertex = std::move(by_vertex);
		for (const BigInt& c : p.by_vertex) {
			if (c < 0) throw InvariantError("negative path count");
			p.total += c;
		}
		return p;
	}
};

// Paths of graph length 0..k_max ending at each state, any start.
inline std::vector<std::vector<BigInt>> count_paths_by_state(
		const UfnarovskiGraph& g, int k_max) {
	std::vector<std::vector<BigInt>> table;
	std::vector<BigInt> cur(g.state_count(), 1);
	table.push_back(cur);
	for (int k = 1; k <= k_max; ++k) {
		std::vector<BigInt> next(g.state_count(), 0);
		for (const Transition& t : g.transitions) next[t.to] += cur[t.from];
		cur = std::move(next);
		table.push_back(cur);
	}
	return table;
}

inline std::vector<PathCountVector> count_normal_words(
		const UfnarovskiGraph& g, int n_max) {
	std::vector<PathCountVector> out;
	int nv = g.quiver.vertex_count();
	for (int m = 0; m <= n_max && m < g.ell - 1; ++m)
		out.push_back(PathCountVector::of(m, g.short_by_vertex[m]));
	if (n_max < g.ell - 1) return out;
	auto by_state = count_paths_by_state(g, n_max - (g.ell - 1));
	for (int m = g.ell - 1; m <= n_max; ++m) {
		std::vector<BigInt> by_vertex(nv, 0);
		const auto& row = by_state[m - (g.ell - 1)];
		for (int s = 0; s < g.state_count(); ++s)
			by_vertex[g.endpoint[s]] += row[s];
		out.push_back(PathCountVector::of(m, std::move(by_vertex)));
	}
	return out;
}

// Normal words bucketed by weighted degree instead of length.
// Degree-0 transitions move within a layer; they are acyclic because a
// degree-0 transition cycle would trace a degree-0 cycle in the quiver,
// which validate() rejects.  Sweeping each layer in topological order
// of the degree-0 edges therefore settles it in one pass.
inline std::vector<PathCountVector> count_normal_by_degree(
		const UfnarovskiGraph& g, int n_max) {
	const Quiver& q = g.quiver;
	int ns = g.state_count();
	std::vector<std::vector<int>> zero_out(ns);
	std::vector<int> indeg(ns, 0);
	for (int i = 0; i < static_cast<int>(g.transitions.size()); ++i) {
		const Transition& t = g.transitions[i];
		if (q.arrow(t.arrow).degree == 0) {
			zero_out[t.from].push_back(t.to);
			++indeg[t.to];
		}
	}
	std::vector<int> topo;
	for (int s = 0; s < ns; ++s)
		if (indeg[s] == 0) topo.push_back(s);
	for (size_t i = 0; i < topo.size(); ++i)
		for (int v : zero_out[topo[i]])
			if (--indeg[v] == 0) topo.push_back(v);
	if (static_cast<int>(topo.size()) != ns)
		throw InvariantError("degree-0 transitions form a cycle");

	std::vector<std::vector<BigInt>> f(n_max + 1,
			std::vector<BigInt>(ns, 0));
	for (int s = 0; s < ns; ++s) {
		int d = g.states[s].degree(q);
		if (d <= n_max) f[d][s] += 1;
	}
	std::vector<std::vector<BigInt>> by_deg(n_max + 1,
			std::vector<BigInt>(q.vertex_count(), 0));
	for (const auto& [d, v] : g.short_word_info)
		if (d <= n_max) by_deg[d][v] += 1;
	for (int n = 0; n <= n_max; ++n) {
		for (int s : topo) {
			if (f[n][s] == 0) continue;
			for (int i : g.out[s]) {
				const Transition& t = g.transitions[i];
				int d = q.arrow(t.arrow).degree;
				if (n + d <= n_max) f[n + d][t.to] += f[n][s];
			}
		}
		for (int s = 0; s < ns; ++s)
			by_deg[n][g.endpoint[s]] += f[n][s];
	}
	std::vector<PathCountVector> out;
	for (int n = 0; n <= n_max; ++n)
		out.push_back(PathCountVector::of(n, std::move(by_deg[n])));
	return out;
}

// Test oracle: generate every composable arrow sequence of length n
// and drop the ones containing a relation subword.
inline PathCountVector enumerate_words_bruteforce(
		const MonomialPresentation& mp, int n, int n_guard = 14) {
	if (n < 0) throw ValueError("word length must be nonnegative");
	if (n > n_guard)
		throw GuardError("brute-force enumeration capped at length " +
				std::to_string(n_guard));
	const Quiver& q = mp.quiver;
	std::vector<std::vector<int>> arrows_from(q.vertex_count());
	for (int a = 0; a < q.arrow_count(); ++a)
		arrows_from[q.arrow(a).src].push_back(a);
	std::vector<BigInt> by_vertex(q.vertex_count(), 0);
	std::vector<int> word;
	auto contains_relation = [&](const std::vector<int>& w) {
		for (const Path& r : mp.relations)
			if (is_subword(r.arrows, w)) return true;
		return false;
	};
	// Depth-first over composable sequences from each base vertex.
	for (int v = 0; v < q.vertex_count(); ++v) {
		struct Frame {
			int vertex;
			size_t next;
		};
		std::vector<Frame> stack{{v, 0}};
		word.clear();
		while (!stack.empty()) {
			if (static_cast<int>(word.size()) == n) {
				if (!contains_relation(word)) by_vertex[stack.back().vertex] += 1;
				stack.pop_back();
				if (!word.empty()) word.pop_back();
				continue;
			}
			Frame& f = stack.back();
			const auto& outs = arrows_from[f.vertex];
			if (f.next < outs.size()) {
				int a = outs[f.next++];
				word.push_back(a);
				stack.push_back({q.arrow(a).tgt, 0});
			} else {
				stack.pop_back();
				if (!word.empty()) word.pop_back();
			}
		}
	}
	return PathCountVector::of(n, std::move(by_vertex));
}

// Directed circuit visiting no state twice, stored with its minimal
// state first so each circuit appears exactly once up to rotation.
struct Circuit {
	std::vector<int> state_seq;
	std::vector<int> transition_seq;

	int length() const { return static_cast<int>(state_seq.size()); }
};

inline std::vector<Circuit> simple_circuits(const UfnarovskiGraph& g,
		size_t guard = 10000) {
	std::vector<Circuit> found;
	int n = g.state_count();
	std::vector<char> on_path(n, 0);
	for (int s = 0; s < n; ++s) {
		// Only walk states >= s so the minimal state is the anchor.
		std::vector<int> path_states{s};
		std::vector<int> path_trans;
		struct Frame {
			int state;
			size_t next;
		};
		std::vector<Frame> stack{{s, 0}};
		on_path[s] = 1;
		while (!stack.empty()) {
			Frame& f = stack.back();
			if (f.next < g.out[f.state].size()) {
				int t = g.out[f.state][f.next++];
				int to = g.transitions[t].to;
				if (to == s) {
					Circuit c;
					c.state_seq = path_states;
					c.transition_seq = path_trans;
					c.transition_seq.push_back(t);
					found.push_back(std::move(c));
					if (found.size() > guard)
						throw GuardError("simple circuit count exceeds " +
								std::to_string(guard));
				} else if (to > s && !on_path[to]) {
					on_path[to] = 1;
					path_states.push_back(to);
					path_trans.push_back(t);
					stack.push_back({to, 0});
				}
			} else {
				on_path[f.state] = 0;
				stack.pop_back();
				if (!path_trans.empty()) {
					path_states.pop_back();
					path_trans.pop_back();
				}
			}
		}
	}
	return found;
}

namespace detail {

// Tarjan strongly connected components, iterative. Returns component
// id per state; ids are in reverse topological order of the condensation.
inline std::vector<int> strong_components(const UfnarovskiGraph& g,
		int& comp_count) {
	int n = g.state_count();
	std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
	std::vector<char> on_stack(n, 0);
	std::vector<int> stack;
	int next_index = 0;
	comp_count = 0;
	struct Frame {
		int v;
		size_t next;
	};
	for (int root = 0; root < n; ++root) {
		if (index[root] != -1) continue;
		std::vector<Frame> call{{root, 0}};
		index[root] = low[root] = next_index++;
		stack.push_back(root);
		on_stack[root] = 1;
		while (!call.empty()) {
			Frame& f = call.back();
			if (f.next < g.out[f.v].size()) {
				int w = g.transitions[g.out[f.v][f.next++]].to;
				if (index[w] == -1) {
					index[w] = low[w] = next_index++;
					stack.push_back(w);
					on_stack[w] = 1;
					call.push_back({w, 0});
				} else if (on_stack[w]) {
					low[f.v] = std::min(low[f.v], index[w]);
				}
			} else {
				if (low[f.v] == index[f.v]) {
					while (true) {
						int w = stack.back();
						stack.pop_back();
						on_stack[w] = 0;
						comp[w] = comp_count;
						if (w == f.v) break;
					}
					++comp_count;
				}
				int v = f.v;
				call.pop_back();
				if (!call.empty())
					low[call.back().v] = std::min(low[call.back().v], low[v]);
			}
		}
	}
	return comp;
}

}  // namespace detail

// True when two distinct simple circuits share a state, i.e. some
// state has two out-transitions staying inside its strong component.
inline bool has_shared_circuit_state(const UfnarovskiGraph& g) {
	int comp_count = 0;
	auto comp = detail::strong_components(g, comp_count);
	std::vector<int> within(g.state_count(), 0);
	for (const Transition& t : g.transitions)
		if (comp[t.from] == comp[t.to] &&
				++within[t.from] >= 2)
			return true;
	return false;
}

struct CircuitDepth {
	bool exponential = false;
	int depth = 0;  // circuits visitable along one walk; 0 when acyclic
};

inline CircuitDepth circuit_chain_depth(const UfnarovskiGraph& g) {
	if (has_shared_circuit_state(g)) return {true, 0};
	int comp_count = 0;
	auto comp = detail::strong_components(g, comp_count);
	// Without shared circuit states every strong component is a lone
	// cycle or a single cycle-free state.
	std::vector<char> is_cycle(comp_count, 0);
	std::vector<std::vector<int>> succ(comp_count);
	for (const Transition& t : g.transitions) {
		if (comp[t.from] == comp[t.to])
			is_cycle[comp[t.from]] = 1;
		else
			succ[comp[t.from]].push_back(comp[t.to]);
	}
	// Tarjan emits components in reverse topological order, so
	// successors of comp c have ids < c and one sweep suffices.
	std::vector<int> best(comp_count, 0);
	int depth = 0;
	for (int c = 0; c < comp_count; ++c) {
		int m = 0;
		for (int s : succ[c]) m = std::max(m, best[s]);
		best[c] = m + (is_cycle[c] ? 1 : 0);
		depth = std::max(depth, best[c]);
	}
	return {false, depth};
}

}  // namespace qgrowth
