#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgrowth/numeric.hpp"
#include "qgrowth/quiver.hpp"

namespace qgrowth {

// Finite rational linear combination of parallel paths. Zero
// coefficients are never stored.
class NcPolynomial {
public:
	NcPolynomial() = default;

	void add_term(const Path& p, const Rational& c) {
		if (c == 0) return;
		auto [it, inserted] = terms_.try_emplace(p, c);
		if (!inserted) {
			it->second += c;
			if (it->second == 0) terms_.erase(it);
		}
	}

	const std::map<Path, Rational>& terms() const { return terms_; }
	bool zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }

	bool single_path() const {
		return terms_.size() == 1;
	}

	NcPolynomial& operator*=(const Rational& c) {
		if (c == 0) {
			terms_.clear();
			return *this;
		}
		for (auto& [p, v] : terms_) v *= c;
		return *this;
	}

	NcPolynomial& operator+=(const NcPolynomial& o) {
		for (const auto& [p, c] : o.terms()) add_term(p, c);
		return *this;
	}

	bool operator==(const NcPolynomial& o) const { return terms_ == o.terms_; }

	// All terms must be composable paths sharing one source, one target
	// and one weighted degree; the common degree must be positive.
	void validate_homogeneous_parallel(const Quiver& q) const {
		if (terms_.empty())
			throw ValueError("relation polynomial is zero");
		int src = -1, tgt = -1, deg = -1;
		for (const auto& [p, c] : terms_) {
			p.validate(q);
			if (p.length() < 1)
				throw ValueError("relation term is an empty path");
			int s = p.source(q), t = p.target(q), d = p.degree(q);
			if (src == -1) {
				src = s;
				tgt = t;
				deg = d;
			} else if (s != src || t != tgt) {
				throw ValueError("relation terms are not parallel");
			} else if (d != deg) {
				throw ValueError("relation is not homogeneous");
			}
		}
		if (deg < 1)
			throw ValueError("relation has degree 0");
	}

	int common_degree(const Quiver& q) const {
		if (terms_.empty()) throw ValueError("zero polynomial has no degree");
		return terms_.begin()->first.degree(q);
	}

	std::string str(const Quiver& q) const {
		std::string s;
		for (const auto& [p, c] : terms_) {
			if (!s.empty()) s += c >= 0 ? " + " : " - ";
			else if (c < 0) s += "-";
			Rational a = abs(c);
			if (a != 1) s += a.get_str() + "*";
			s += p.str(q);
		}
		return s;
	}

private:
	std::map<Path, Rational> terms_;
};

// Relations are plain paths of length >= 2 forming an antichain under
// the subword order (no relation occurs inside another).
struct MonomialPresentation {
	Quiver quiver;
	std::vector<Path> relations;

	void validate() const {
		quiver.validate();
		for (const Path& r : relations) {
			r.validate(quiver);
			if (r.length() < 2)
				throw ValueError("monomial relation shorter than two arrows: " +
						r.str(quiver));
		}
		for (size_t i = 0; i < relations.size(); ++i)
			for (size_t j = 0; j < relations.size(); ++j) {
				if (i == j) continue;
				if (is_subword(relations[i].arrows, relations[j].arrows))
					throw ValueError("relation " + relations[i].str(quiver) +
							" is a subword of " + relations[j].str(quiver));
			}
	}

	// Sort relations and drop duplicates; keeps validate() output stable.
	void canonicalize() {
		std::sort(relations.begin(), relations.end(),
				[](const Path& a, const Path& b) {
					if (a.length() != b.length()) return a.length() < b.length();
					return a < b;
				});
		relations.erase(std::unique(relations.begin(), relations.end()),
				relations.end());
	}

	int max_relation_length() const {
		int m = 0;
		for (const Path& r : relations) m = std::max(m, r.length());
		return m;
	}

	bool all_unit_degrees() const {
		for (const Arrow& a : quiver.arrows())
			if (a.degree != 1) return false;
		return true;
	}
};

// Homogeneous parallel polynomial relations over the quiver's grading.
struct GradedPresentation {
	Quiver quiver;
	std::vector<NcPolynomial> relations;

	void validate() const {
		quiver.validate();
		for (const NcPolynomial& r : relations) {
			r.validate_homogeneous_parallel(quiver);
			if (r.single_path() && r.terms().begin()->first.length() < 2)
				throw ValueError(
						"single-path relation shorter than two arrows: " +
						r.str(quiver));
		}
	}

	bool all_unit_degrees() const {
		for (const Arrow& a : quiver.arrows())
			if (a.degree != 1) return false;
		return true;
	}
};

// Parse/builtin result: always carries the graded form; monomial is
// set exactly when every relation is a single path (scaled monic).
struct ParsedPresentation {
	GradedPresentation graded;
	std::optional<MonomialPresentation> monomial;

	bool is_monomial() const { return monomial.has_value(); }
};

// Classify a graded presentation, extracting the monomial form when
// every relation is a single path. Single-path relations are rescaled
// monic first, so `2*x.x` still counts as the monomial relation x.x.
inline ParsedPresentation classify_presentation(GradedPresentation gp) {
	for (NcPolynomial& r : gp.relations) {
		if (r.single_path()) {
			Rational lead = r.terms().begin()->second;
			r *= Rational(1) / lead;
		}
	}
	gp.validate();
	bool monomial = true;
	for (const NcPolynomial& r : gp.relations)
		if (!r.single_path()) monomial = false;
	ParsedPresentation out;
	out.graded = gp;
	if (monomial) {
		MonomialPresentation mp;
		mp.quiver = out.graded.quiver;
		for (const NcPolynomial& r : out.graded.relations)
			mp.relations.push_back(r.terms().begin()->first);
		mp.canonicalize();
		mp.validate();
		out.monomial = std::move(mp);
	}
	return out;
}

}  // namespace qgrowth
