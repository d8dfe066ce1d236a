#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/groebner.hpp"

namespace qgrowth {

namespace detail {

// Visit every normal word from src of exactly the given weighted
// degree.  Only the new suffix is checked against the obstructions,
// since the prefix stays normal along the recursion.  Degree-0 arrows
// extend a finished word without changing its degree; the acyclicity
// of the degree-0 subquiver bounds that tail.
template <class F>
void walk_normal_words(const Quiver& q,
		const std::vector<std::vector<int>>& arrows_from,
		const std::vector<Path>& obstructions,
		Path& word, int remaining, F& f) {
	if (remaining == 0) f(word);
	int at = word.target(q);
	for (int a : arrows_from[at]) {
		int da = q.arrow(a).degree;
		if (da > remaining) continue;
		word.arrows.push_back(a);
		if (word_stays_normal(word.arrows, obstructions))
			walk_normal_words(q, arrows_from, obstructions, word,
					remaining - da, f);
		word.arrows.pop_back();
	}
}

}  // namespace detail

// Degree-by-degree view of a graded quiver algebra presented by a
// rewriting system: normal-word bases plus exact multiplication by
// concatenate-then-reduce.  Bases materialize lazily; streaming
// callers never pay for them.
struct AlgebraTables {
	Quiver quiver;
	std::vector<GbElement> rewriters;
	std::vector<Path> obstructions;  // the leading words
	int cap = 0;                     // largest certified degree
	bool monomial = true;            // every rewriter kills its word outright

	template <class F>
	void for_each_normal(int src, int degree, F&& f) const {
		check_degree(degree);
		Path w = Path::at_vertex(src);
		detail::walk_normal_words(quiver, arrows_from_, obstructions, w,
				degree, f);
	}

	const std::vector<Path>& basis(int d) const {
		check_degree(d);
		auto it = basis_cache_.find(d);
		if (it != basis_cache_.end()) return it->second;
		std::vector<Path> rows;
		auto take = [&](const Path& w) { rows.push_back(w); };
		for (int v = 0; v < quiver.vertex_count(); ++v)
			for_each_normal(v, d, take);
		std::sort(rows.begin(), rows.end(),
				[&](const Path& a, const Path& b) {
					return term_less(quiver, a, b);
				});
		return basis_cache_.emplace(d, std::move(rows)).first->second;
	}

	NcPolynomial reduce(NcPolynomial f) const {
		return reduce_normal_form(quiver, std::move(f), rewriters);
	}

	// a · b in the normal basis; zero when the endpoints mismatch.
	NcPolynomial mul(const Path& a, const Path& b) const {
		NcPolynomial out;
		if (a.target(quiver) != b.source(quiver)) return out;
		Path ab = a.concat(quiver, b);
		if (monomial) {
			// Both factors are normal, so an obstruction can only
			// straddle the junction.
			int la = a.length();
			for (const Path& o : obstructions) {
				int lo = o.length();
				int lab = ab.length();
				for (int p = std::max(0, la - lo + 1);
						p < la && p + lo <= lab; ++p)
					if (std::equal(o.arrows.begin(), o.arrows.end(),
							ab.arrows.begin() + p))
						return out;
			}
			out.add_term(ab, 1);
			return out;
		}
		out.add_term(ab, 1);
		return reduce(std::move(out));
	}

	// Monomial-only product into a reusable buffer; false when it dies
	// or the endpoints mismatch.
	bool mul_word(const Path& a, const Path& b, Path& out) const {
		if (a.target(quiver) != b.source(quiver)) return false;
		out.base = a.base;
		out.arrows = a.arrows;
		out.arrows.insert(out.arrows.end(), b.arrows.begin(),
				b.arrows.end());
		int la = a.length();
		int lab = static_cast<int>(out.arrows.size());
		for (const Path& o : obstructions) {
			int lo = o.length();
			for (int p = std::max(0, la - lo + 1);
					p < la && p + lo <= lab; ++p)
				if (std::equal(o.arrows.begin(), o.arrows.end(),
						out.arrows.begin() + p))
					return false;
		}
		return true;
	}

	void attach() {
		arrows_from_.assign(quiver.vertex_count(), {});
		for (int a = 0; a < quiver.arrow_count(); ++a)
			arrows_from_[quiver.arrow(a).src].push_back(a);
	}

private:
	void check_degree(int d) const {
		if (d < 0) throw ValueError("negative degree");
		if (d > cap)
			throw ValueError("degree " + std::to_string(d) +
					" beyond the certified cap " + std::to_string(cap));
	}

	std::vector<std::vector<int>> arrows_from_;
	mutable std::map<int, std::vector<Path>> basis_cache_;
};

inline AlgebraTables algebra_tables(const MonomialPresentation& mp, int N) {
	mp.validate();
	if (N < 0) throw ValueError("negative degree bound");
	AlgebraTables t;
	t.quiver = mp.quiver;
	t.cap = N;
	t.monomial = true;
	for (const Path& r : mp.relations) {
		NcPolynomial f;
		f.add_term(r, 1);
		t.rewriters.push_back(GbElement{std::move(f), r});
		t.obstructions.push_back(r);
	}
	t.attach();
	return t;
}

inline AlgebraTables algebra_tables(const TruncatedGB& gb, int N) {
	if (N < 0) throw ValueError("negative degree bound");
	if (!gb.complete && N > gb.degree_cap)
		throw ValueError("degree " + std::to_string(N) +
				" is not certified by the truncated basis");
	AlgebraTables t;
	t.quiver = gb.quiver;
	t.cap = N;
	t.rewriters = gb.elements;
	t.monomial = true;
	for (const GbElement& e : gb.elements) {
		t.obstructions.push_back(e.lw);
		if (!e.poly.single_path()) t.monomial = false;
	}
	t.attach();
	return t;
}

// A graded right module, presented degree-by-degree against the
// algebra tables.  Two shapes cover everything needed here: the top
// quotient spanned by the vertices, and the truncation A_{>=n}[n],
// which keeps the ambient grading so its degree-d slice holds the
// normal words of degree d.
struct GradedModuleData {
	std::string tag;
	bool truncation = false;
	int offset = 0;  // the cut for truncations
	std::vector<int> generator_degrees;

	int degree_begin() const { return truncation ? offset : 0; }

	// Basis labels of the degree-d slice.
	template <class F>
	void for_each_basis(const AlgebraTables& A, int d, F&& f) const {
		if (truncation) {
			if (d < offset) return;
			for (int v = 0; v < A.quiver.vertex_count(); ++v)
				A.for_each_normal(v, d, f);
			return;
		}
		if (d != 0) return;
		for (int v = 0; v < A.quiver.vertex_count(); ++v) {
			Path e = Path::at_vertex(v);
			f(e);
		}
	}

	// Right action of a word on a basis label, expanded in basis labels.
	NcPolynomial act(const AlgebraTables& A, const Path& label,
			const Path& word) const {
		if (truncation) return A.mul(label, word);
		NcPolynomial out;
		if (word.empty() && label.target(A.quiver) == word.source(A.quiver))
			out.add_term(label, 1);
		return out;
	}
};

inline GradedModuleData trivial_module(const Quiver& q) {
	GradedModuleData m;
	m.tag = "k";
	m.generator_degrees.assign(q.vertex_count(), 0);
	return m;
}

inline GradedModuleData truncation_module(int n) {
	if (n < 0) throw ValueError("negative truncation cut");
	GradedModuleData m;
	m.tag = "A_{>=" + std::to_string(n) + "}[" + std::to_string(n) + "]";
	m.truncation = true;
	m.offset = n;
	return m;
}

}  // namespace qgrowth
