#pragma once

// JSON / CSV / DOT writers for the report types. Output is
// deterministic: fixed field order, exact integers and rationals as
// decimal strings, doubles through the shortest round-trip form.

#include <string>

#include "json.hpp"

#include "automaton.hpp"
#include "ext_distance.hpp"
#include "growth.hpp"
#include "hilbert.hpp"
#include "parse.hpp"
#include "quasipoly.hpp"
#include "resolution.hpp"
#include "serre.hpp"

namespace qgrowth {

using Json = nlohmann::ordered_json;

namespace io {

inline std::string str(const BigInt& z) { return z.get_str(); }
inline std::string str(const Rational& q) { return q.get_str(); }

inline Json arr(const std::vector<BigInt>& v) {
	Json a = Json::array();
	for (const BigInt& x : v) a.push_back(str(x));
	return a;
}

inline Json arr(const std::vector<Rational>& v) {
	Json a = Json::array();
	for (const Rational& x : v) a.push_back(str(x));
	return a;
}

}  // namespace io

inline Json presentation_json(const ParsedPresentation& pp) {
	const Quiver& q = pp.graded.quiver;
	Json j;
	Json verts = Json::array();
	for (int v = 0; v < q.vertex_count(); ++v) verts.push_back(q.vertex_name(v));
	j["vertices"] = verts;
	Json arrows = Json::array();
	for (int a = 0; a < q.arrow_count(); ++a) {
		const Arrow& ar = q.arrow(a);
		arrows.push_back(Json{{"name", ar.name},
				{"source", q.vertex_name(ar.src)},
				{"target", q.vertex_name(ar.tgt)},
				{"degree", ar.degree}});
	}
	j["arrows"] = arrows;
	Json rels = Json::array();
	for (const NcPolynomial& r : pp.graded.relations) rels.push_back(r.str(q));
	j["relations"] = rels;
	j["monomial"] = pp.is_monomial();
	return j;
}

inline Json hilbert_json(const HilbertData& hd) {
	Json j;
	j["horizon"] = hd.horizon();
	j["coefficients"] = io::arr(hd.coefficients);
	j["numerator"] = io::arr(hd.numerator);
	j["denominator"] = io::arr(hd.denominator);
	j["recurrence"] = io::arr(hd.recurrence);
	j["threshold"] = hd.threshold;
	return j;
}

inline Json entropy_json(const EntropyCertificate& c) {
	Json j;
	j["value"] = c.value;
	j["lo"] = c.lo;
	j["hi"] = c.hi;
	j["exact"] = c.exact;
	j["lambda_lo"] = io::str(c.lambda_lo);
	j["lambda_hi"] = io::str(c.lambda_hi);
	j["factor"] = io::arr(c.factor);
	return j;
}

inline Json quasi_json(const QuasiPolynomial& qp) {
	Json j;
	j["period"] = qp.period;
	j["onset"] = qp.onset;
	j["degree"] = qp.degree;
	Json polys = Json::array();
	for (const QPoly& p : qp.polys) polys.push_back(io::arr(p));
	j["polys"] = polys;
	return j;
}

inline Json growth_json(const GrowthReport& rep) {
	Json j;
	j["classification"] = to_string(rep.classification);
	j["gk_finite"] = rep.gk_finite;
	if (rep.gk_finite) j["gk_dim"] = rep.gk_dim;
	j["hilbert"] = hilbert_json(rep.hilbert);
	j["entropy"] = rep.entropy ? entropy_json(*rep.entropy) : Json(nullptr);
	j["quasi"] = rep.quasi ? quasi_json(*rep.quasi) : Json(nullptr);
	if (rep.growth_constants)
		j["growth_constants"] = Json{{"lower", io::str(rep.growth_constants->first)},
				{"upper", io::str(rep.growth_constants->second)}};
	else
		j["growth_constants"] = nullptr;
	return j;
}

inline std::string rank_csv(const RankSequence& rs) {
	std::string s = "n,rank,witness_d\n";
	for (size_t n = 0; n < rs.r.size(); ++n) {
		s += std::to_string(n);
		s += ',';
		s += io::str(rs.r[n]);
		s += ',';
		s += std::to_string(rs.witness[n]);
		s += '\n';
	}
	return s;
}

inline Json serre_json(const SerreEntropyReport& rep) {
	Json j;
	j["window_begin"] = rep.window_begin;
	j["window_end"] = rep.window_end;
	j["r_constant_on_window"] = rep.r_constant_on_window;
	j["stabilized_rank"] = rep.stabilized_rank
			? Json(io::str(*rep.stabilized_rank)) : Json(nullptr);
	j["h_estimate"] = rep.h_estimate;
	j["h_deviation"] = rep.h_deviation;
	j["hpol_exact_zero"] = rep.hpol_exact_zero;
	j["hpol_estimate"] = rep.hpol_estimate;
	j["reference_entropy"] = rep.reference_entropy;
	j["gk_finite"] = rep.gk_finite;
	if (rep.gk_finite) j["gk_dim"] = rep.gk_dim;
	j["h_within_entropy_bound"] = rep.h_within_entropy_bound;
	j["hpol_within_gk_bound"] = rep.hpol_within_gk_bound;
	return j;
}

inline std::string betti_csv(const BettiTable& bt) {
	std::string s = "i,j,b\n";
	for (const auto& [ij, b] : bt.entries) {
		s += std::to_string(ij.first);
		s += ',';
		s += std::to_string(ij.second);
		s += ',';
		s += std::to_string(b);
		s += '\n';
	}
	return s;
}

inline Json betti_json(const BettiTable& bt) {
	Json j;
	j["i_max"] = bt.i_max;
	j["j_max"] = bt.j_max;
	j["finished"] = bt.finished;
	j["minimal_certified"] = bt.minimal_certified;
	Json e = Json::array();
	for (const auto& [ij, b] : bt.entries)
		e.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"b", b}});
	j["entries"] = e;
	return j;
}

// Coefficient map of a Laurent polynomial in u = e^{-t}: key m holds
// the coefficient of e^{-mt}.
inline Json ext_poly_json(const ExtDistancePoly& p) {
	Json j = Json::object();
	for (const auto& [m, c] : p.coeff) j[std::to_string(m)] = io::str(c);
	return j;
}

inline Json ext_pair_json(const ExtDistancePair& pr) {
	Json j;
	j["line"] = ext_poly_json(pr.line);
	j["generator"] = ext_poly_json(pr.generator);
	j["t"] = pr.t;
	j["line_value"] = pr.line_value;
	j["generator_value"] = pr.generator_value;
	return j;
}

inline std::string ufnarovski_dot(const UfnarovskiGraph& g) {
	std::string s = "digraph ufnarovski {\n\trankdir=LR;\n";
	for (int i = 0; i < g.state_count(); ++i) {
		s += '\t';
		s += std::to_string(i);
		s += " [label=\"";
		s += g.states[i].str(g.quiver);
		s += "\"];\n";
	}
	for (const Transition& t : g.transitions) {
		s += '\t';
		s += std::to_string(t.from);
		s += " -> ";
		s += std::to_string(t.to);
		s += " [label=\"";
		s += g.quiver.arrow(t.arrow).name;
		s += "\"];\n";
	}
	s += "}\n";
	return s;
}

}
