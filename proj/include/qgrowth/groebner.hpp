#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/linalg.hpp"
#include "qgrowth/numeric.hpp"
#include "qgrowth/presentation.hpp"

namespace qgrowth {

// Monomial order: weighted degree first, then word length, then the
// first differing position, where an earlier-declared arrow is the
// LARGER one.  Multiplicative, and a well-order within each degree.
inline int term_compare(const Quiver& q, const Path& a, const Path& b) {
	int da = a.degree(q), db = b.degree(q);
	if (da != db) return da < db ? -1 : 1;
	if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
	for (int i = 0; i < a.length(); ++i)
		if (a.arrows[i] != b.arrows[i])
			return a.arrows[i] < b.arrows[i] ? 1 : -1;
	if (a.empty() && b.empty() && a.base != b.base)
		return a.base < b.base ? 1 : -1;
	return 0;
}

inline bool term_less(const Quiver& q, const Path& a, const Path& b) {
	return term_compare(q, a, b) < 0;
}

inline const Path& leading_word(const Quiver& q, const NcPolynomial& f) {
	if (f.zero()) throw ValueError("zero polynomial has no leading word");
	const Path* best = nullptr;
	for (const auto& [p, c] : f.terms())
		if (!best || term_less(q, *best, p)) best = &p;
	return *best;
}

struct GbElement {
	NcPolynomial poly;  // monic: leading coefficient 1
	Path lw;
};

inline GbElement make_gb_element(const Quiver& q, NcPolynomial f) {
	Path lw = leading_word(q, f);
	Rational lc = f.terms().at(lw);
	f *= 1 / lc;
	return GbElement{std::move(f), std::move(lw)};
}

namespace detail {

// Position of `word` inside `host`, or -1.
inline int find_subword(const std::vector<int>& host,
		const std::vector<int>& word) {
	if (word.empty() || word.size() > host.size()) return -1;
	auto it = std::search(host.begin(), host.end(), word.begin(), word.end());
	return it == host.end() ? -1 : static_cast<int>(it - host.begin());
}

// a * f * b with a, b paths (either may be trivial).
inline NcPolynomial frame(const Quiver& q, const Path& a,
		const NcPolynomial& f, const Path& b, const Rational& scale) {
	NcPolynomial out;
	for (const auto& [t, c] : f.terms())
		out.add_term(a.concat(q, t).concat(q, b), c * scale);
	return out;
}

}  // namespace detail

// Two-sided normal form: rewrite every monomial containing a leading
// word until none does.  Homogeneity makes each step strictly
// decreasing, so this terminates.
inline NcPolynomial reduce_normal_form(const Quiver& q, NcPolynomial f,
		const std::vector<GbElement>& gb) {
	bool changed = true;
	while (changed && !f.zero()) {
		changed = false;
		for (const auto& [m, coef] : f.terms()) {
			for (const GbElement& g : gb) {
				int pos = detail::find_subword(m.arrows, g.lw.arrows);
				if (pos < 0) continue;
				Path a{m.base, {m.arrows.begin(), m.arrows.begin() + pos}};
				int cut = pos + g.lw.length();
				Path b{q.arrow(m.arrows[cut - 1]).tgt,
						{m.arrows.begin() + cut, m.arrows.end()}};
				f += detail::frame(q, a, g.poly, b, -coef);
				changed = true;
				break;
			}
			if (changed) break;
		}
	}
	return f;
}

struct TruncatedGB {
	Quiver quiver;
	std::vector<GbElement> elements;
	int degree_cap = 0;
	bool complete = false;  // no overlap was deferred past the cap
};

namespace detail {

struct Overlap {
	int deg;
	int seq;  // tiebreak: processing stays deterministic
	int i, j;
	int t;  // suffix of lw(i) of length t == prefix of lw(j)
};

struct OverlapOrder {
	bool operator()(const Overlap& a, const Overlap& b) const {
		return std::tie(a.deg, a.seq) > std::tie(b.deg, b.seq);
	}
};

inline void queue_overlaps(const Quiver& q, const std::vector<GbElement>& el,
		int i, int j,
		std::priority_queue<Overlap, std::vector<Overlap>, OverlapOrder>& pq,
		int& seq) {
	const auto& u = el[i].lw.arrows;
	const auto& v = el[j].lw.arrows;
	int maxt = static_cast<int>(std::min(u.size(), v.size()));
	for (int t = 1; t <= maxt; ++t) {
		if (t == static_cast<int>(u.size()) && t == static_cast<int>(v.size()))
			continue;  // identical words: no proper overlap
		if (!std::equal(u.end() - t, u.end(), v.begin())) continue;
		// overlap word u + v[t:], degree additive on the pieces
		int deg = el[i].lw.degree(q);
		for (auto it = v.begin() + t; it != v.end(); ++it)
			deg += q.arrow(*it).degree;
		pq.push(Overlap{deg, seq++, i, j, t});
	}
}

}  // namespace detail

// Buchberger-Mora completion, degree-truncated.  All data stays
// homogeneous, so an overlap past the cap can only produce elements
// past the cap and deferring it keeps every degree <= cap exact.
inline TruncatedGB buchberger_truncated(const GradedPresentation& gp,
		int degree_cap, int element_guard = 10000) {
	gp.validate();
	TruncatedGB gb;
	gb.quiver = gp.quiver;
	gb.degree_cap = degree_cap;
	const Quiver& q = gb.quiver;

	std::vector<GbElement> el;      // all ever added, some retired
	std::vector<bool> alive;
	std::priority_queue<detail::Overlap, std::vector<detail::Overlap>,
			detail::OverlapOrder> pq;
	int seq = 0;
	bool deferred = false;

	auto alive_view = [&]() {
		std::vector<GbElement> v;
		for (size_t k = 0; k < el.size(); ++k)
			if (alive[k]) v.push_back(el[k]);
		return v;
	};

	std::vector<NcPolynomial> work;
	for (const NcPolynomial& r : gp.relations) work.push_back(r);

	auto add_poly = [&](NcPolynomial f) {
		f = reduce_normal_form(q, std::move(f), alive_view());
		if (f.zero()) return;
		GbElement e = make_gb_element(q, std::move(f));
		if (e.lw.degree(q) > degree_cap) {
			deferred = true;  // cannot represent it below the cap anyway
			return;
		}
		// Retire elements whose tip the new one divides; their bodies
		// re-enter the queue for re-reduction.
		for (size_t k = 0; k < el.size(); ++k) {
			if (!alive[k]) continue;
			if (detail::find_subword(el[k].lw.arrows, e.lw.arrows) >= 0) {
				alive[k] = false;
				work.push_back(el[k].poly);
			}
		}
		int id = static_cast<int>(el.size());
		el.push_back(std::move(e));
		alive.push_back(true);
		if (id + 1 > element_guard)
			throw GuardError("basis exceeded the element guard");
		for (size_t k = 0; k < el.size(); ++k) {
			if (!alive[k]) continue;
			detail::queue_overlaps(q, el, static_cast<int>(k), id, pq, seq);
			if (static_cast<int>(k) != id)
				detail::queue_overlaps(q, el, id, static_cast<int>(k), pq, seq);
		}
	};

	while (!work.empty() || !pq.empty()) {
		if (!work.empty()) {
			NcPolynomial f = std::move(work.back());
			work.pop_back();
			add_poly(std::move(f));
			continue;
		}
		detail::Overlap o = pq.top();
		pq.pop();
		if (!alive[o.i] || !alive[o.j]) continue;
		if (o.deg > degree_cap) {
			deferred = true;
			continue;
		}
		const GbElement& e1 = el[o.i];
		const GbElement& e2 = el[o.j];
		// lw1 = u w, lw2 = w v with |w| = t: S = e1 * v - u * e2.
		const auto& w1 = e1.lw.arrows;
		const auto& w2 = e2.lw.arrows;
		Path u{e1.lw.base, {w1.begin(), w1.end() - o.t}};
		Path v{q.arrow(w2[o.t - 1]).tgt, {w2.begin() + o.t, w2.end()}};
		NcPolynomial s = detail::frame(q, Path::at_vertex(e1.lw.source(q)),
				e1.poly, v, Rational(1));
		s += detail::frame(q, u, e2.poly, Path::at_vertex(v.target(q)),
				Rational(-1));
		add_poly(std::move(s));
	}

	gb.elements = alive_view();
	std::sort(gb.elements.begin(), gb.elements.end(),
			[&](const GbElement& a, const GbElement& b) {
				return term_less(q, a.lw, b.lw);
			});
	gb.complete = !deferred;
	return gb;
}

// The monomial algebra on the same quiver presented by the leading
// words; its dimensions equal the original's up to the cap.
inline MonomialPresentation gb_leading_model(const TruncatedGB& gb) {
	MonomialPresentation mp;
	mp.quiver = gb.quiver;
	for (const GbElement& e : gb.elements) {
		if (e.lw.length() < 2)
			throw ValueError("leading word of length " +
					std::to_string(e.lw.length()) +
					": quotient eliminates an arrow, not supported");
		mp.relations.push_back(e.lw);
	}
	mp.canonicalize();
	mp.validate();
	return mp;
}

inline std::vector<PathCountVector> dims_from_gb(const TruncatedGB& gb,
		int n_max) {
	if (!gb.complete && n_max > gb.degree_cap)
		throw ValueError("dimensions past the cap need a complete basis");
	auto g = build_ufnarovski(gb_leading_model(gb));
	return g.unit_transition_degrees() ? count_normal_words(g, n_max)
			: count_normal_by_degree(g, n_max);
}

// Independent oracle: dimension = free paths minus the exact rank of
// all relation shifts a * r * b, degree by degree.
inline std::vector<PathCountVector> dims_bruteforce(
		const GradedPresentation& gp, int n_max, int n_guard = 8) {
	gp.validate();
	if (n_max > n_guard)
		throw GuardError("brute-force dimensions capped at degree " +
				std::to_string(n_guard));
	const Quiver& q = gp.quiver;

	// Every path of weighted degree <= n_max, bucketed by degree.
	std::vector<std::vector<Path>> paths(n_max + 1);
	std::vector<Path> stack;
	for (int v = 0; v < q.vertex_count(); ++v)
		stack.push_back(Path::at_vertex(v));
	while (!stack.empty()) {
		Path p = std::move(stack.back());
		stack.pop_back();
		int d = p.degree(q);
		paths[d].push_back(p);
		for (int a = 0; a < q.arrow_count(); ++a) {
			if (q.arrow(a).src != p.target(q)) continue;
			if (d + q.arrow(a).degree > n_max) continue;
			Path e = p;
			e.arrows.push_back(a);
			stack.push_back(std::move(e));
		}
	}

	std::vector<PathCountVector> out;
	for (int n = 0; n <= n_max; ++n) {
		std::map<Path, int> index;
		for (const Path& p : paths[n])
			index.emplace(p, static_cast<int>(index.size()));
		// Every shift a*r*b keeps one target vertex, so the rank splits
		// cleanly across per-vertex reducers.
		std::vector<RowReducer> red(q.vertex_count());
		for (const NcPolynomial& r : gp.relations) {
			int d = r.common_degree(q);
			if (d > n) continue;
			int src = r.terms().begin()->first.source(q);
			int tgt = r.terms().begin()->first.target(q);
			for (int k = 0; k + d <= n; ++k)
				for (const Path& a : paths[k]) {
					if (a.target(q) != src) continue;
					for (const Path& b : paths[n - d - k]) {
						if (b.source(q) != tgt) continue;
						SparseRow row;
						for (const auto& [t, c] : r.terms()) {
							Path full = a.concat(q, t).concat(q, b);
							auto [it, fresh] = row.emplace(index.at(full), c);
							if (!fresh) it->second += c;
						}
						for (auto it = row.begin(); it != row.end();)
							it = it->second == 0 ? row.erase(it) : ++it;
						red[b.target(q)].add_row(std::move(row));
					}
				}
		}
		std::vector<BigInt> by_vertex(q.vertex_count(), 0);
		for (const Path& p : paths[n]) by_vertex[p.target(q)] += 1;
		for (int v = 0; v < q.vertex_count(); ++v)
			by_vertex[v] -= red[v].rank();
		out.push_back(PathCountVector::of(n, std::move(by_vertex)));
	}
	return out;
}

}  // namespace qgrowth
