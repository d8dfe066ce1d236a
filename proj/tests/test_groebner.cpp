#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "qgrowth/builtins.hpp"
#include "qgrowth/groebner.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/parse.hpp"

using namespace qgrowth;

namespace {

GradedPresentation graded(const std::string& src) {
	return parse_presentation(src).graded;
}

std::set<std::string> element_strings(const TruncatedGB& gb) {
	std::set<std::string> s;
	for (const GbElement& e : gb.elements) s.insert(e.poly.str(gb.quiver));
	return s;
}

const std::string kCommutator2 =
		"vertices v;\n"
		"arrows x : v -> v @ 1, y : v -> v @ 1;\n"
		"relations x.y - y.x;\n";

const std::string kCommutator3 =
		"vertices v;\n"
		"arrows x : v -> v @ 1, y : v -> v @ 1, z : v -> v @ 1;\n"
		"relations x.y - y.x, x.z - z.x, y.z - z.y;\n";

}  // namespace

TEST_CASE("term order: degree, then length, then earlier arrow is larger") {
	auto gp = graded(kCommutator2);
	const Quiver& q = gp.quiver;
	int x = q.arrow_id("x"), y = q.arrow_id("y");
	Path xy{0, {x, y}}, yx{0, {y, x}}, xx{0, {x, x}}, ypath{0, {y}};
	CHECK(term_compare(q, xy, yx) > 0);
	CHECK(term_compare(q, yx, xy) < 0);
	CHECK(term_compare(q, xy, xy) == 0);
	CHECK(term_compare(q, xx, xy) > 0);   // x before y at position 2
	CHECK(term_compare(q, ypath, xx) < 0);  // lower degree

	// Weighted: a length-1 arrow of degree 2 is smaller than a
	// degree-2 word of length 2.
	auto wp = parse_presentation(
			"vertices v;\narrows x : v -> v @ 1, y : v -> v @ 2;\n");
	const Quiver& wq = wp.graded.quiver;
	Path wxx{0, {wq.arrow_id("x"), wq.arrow_id("x")}};
	Path wy{0, {wq.arrow_id("y")}};
	CHECK(term_compare(wq, wxx, wy) > 0);
	CHECK(term_compare(wq, wy, wxx) < 0);
}

TEST_CASE("reduction rewrites xy to yx, normalizing to reverse-sorted words") {
	auto gp = graded(kCommutator2);
	const Quiver& q = gp.quiver;
	auto gb = buchberger_truncated(gp, 10);
	REQUIRE(gb.elements.size() == 1);
	CHECK(gb.complete);
	CHECK(gb.elements[0].lw.str(q) == "x.y");

	int x = q.arrow_id("x"), y = q.arrow_id("y");
	NcPolynomial f;
	f.add_term(Path{0, {x, y, x}}, Rational(1));
	auto r = reduce_normal_form(q, f, gb.elements);
	REQUIRE(r.term_count() == 1);
	CHECK(r.terms().begin()->first == Path{0, {y, x, x}});
	CHECK(r.terms().begin()->second == 1);

	NcPolynomial g;
	g.add_term(Path{0, {x, x, y}}, Rational(2));
	auto rg = reduce_normal_form(q, g, gb.elements);
	REQUIRE(rg.term_count() == 1);
	CHECK(rg.terms().begin()->first == Path{0, {y, x, x}});
	CHECK(rg.terms().begin()->second == 2);

	// Already normal: untouched.
	NcPolynomial h;
	h.add_term(Path{0, {y, x}}, Rational(1));
	CHECK(reduce_normal_form(q, h, gb.elements) == h);
}

TEST_CASE("two-variable polynomial ring dimensions via the basis") {
	auto gb = buchberger_truncated(graded(kCommutator2), 12);
	auto dims = dims_from_gb(gb, 12);
	for (int n = 0; n <= 12; ++n) CHECK(dims[n].total == n + 1);
}

TEST_CASE("three-variable commutators close after one round of overlaps") {
	auto gb = buchberger_truncated(graded(kCommutator3), 12);
	CHECK(gb.complete);
	CHECK(gb.elements.size() == 3);
	auto dims = dims_from_gb(gb, 10);
	for (int n = 0; n <= 10; ++n)
		CHECK(dims[n].total == (n + 1) * (n + 2) / 2);
}

TEST_CASE("self-overlap of xx-y forces the commutator into the basis") {
	auto gp = graded(
			"vertices v;\n"
			"arrows x : v -> v @ 1, y : v -> v @ 2;\n"
			"relations x.x - y;\n");
	auto gb = buchberger_truncated(gp, 12);
	CHECK(gb.complete);
	CHECK(element_strings(gb) ==
			std::set<std::string>{"x.x - y", "x.y - y.x"});
	// The quotient is k[x] in disguise: one dimension per degree.
	auto dims = dims_from_gb(gb, 12);
	for (int n = 0; n <= 12; ++n) CHECK(dims[n].total == 1);
	auto brute = dims_bruteforce(gp, 8);
	for (int n = 0; n <= 8; ++n) CHECK(brute[n].total == 1);
}

TEST_CASE("projective line: the single relation is already a basis") {
	for (int g : {2, 3, 4}) {
		auto pp = builtin_presentation("projective_line", {g});
		auto gb = buchberger_truncated(pp.graded, 12);
		CHECK(gb.complete);
		CHECK(gb.elements.size() == 1);
		CHECK(gb.elements[0].lw.str(gb.quiver) == "x1.x2");
	}
}

TEST_CASE("projective line dimensions satisfy a_n = g a_(n-1) - a_(n-2)") {
	auto gb2 = buchberger_truncated(
			builtin_presentation("projective_line", {2}).graded, 12);
	auto d2 = dims_from_gb(gb2, 20);
	for (int n = 0; n <= 20; ++n) CHECK(d2[n].total == n + 1);

	auto gb3 = buchberger_truncated(
			builtin_presentation("projective_line", {3}).graded, 12);
	auto d3 = dims_from_gb(gb3, 15);
	CHECK(d3[0].total == 1);
	CHECK(d3[1].total == 3);
	for (int n = 2; n <= 15; ++n)
		CHECK(d3[n].total == 3 * d3[n - 1].total - d3[n - 2].total);
	CHECK(d3[2].total == 8);
	CHECK(d3[3].total == 21);
}

TEST_CASE("gb dimensions equal brute-force dimensions") {
	auto check_pair = [](const GradedPresentation& gp, int n_max) {
		auto gb = buchberger_truncated(gp, n_max + 2);
		auto fast = dims_from_gb(gb, n_max);
		auto slow = dims_bruteforce(gp, n_max);
		for (int n = 0; n <= n_max; ++n) {
			CHECK(fast[n].total == slow[n].total);
			CHECK(fast[n].by_vertex == slow[n].by_vertex);
		}
	};
	check_pair(graded(kCommutator2), 8);
	check_pair(builtin_presentation("projective_line", {2}).graded, 8);
	check_pair(builtin_presentation("projective_line", {3}).graded, 8);
	check_pair(builtin_presentation("example52").graded, 8);
	check_pair(builtin_presentation("xx_algebra").graded, 8);
}

TEST_CASE("monomial input passes through as its own basis") {
	auto pp = builtin_presentation("xx_algebra");
	auto gb = buchberger_truncated(pp.graded, 10);
	CHECK(gb.complete);
	REQUIRE(gb.elements.size() == 1);
	CHECK(gb.elements[0].poly.single_path());
	CHECK(gb.elements[0].lw.str(gb.quiver) == "x.x");
	auto dims = dims_from_gb(gb, 10);
	auto direct = count_normal_words(
			build_ufnarovski(*pp.monomial), 10);
	for (int n = 0; n <= 10; ++n)
		CHECK(dims[n].by_vertex == direct[n].by_vertex);
}

TEST_CASE("preprojective doubled Kronecker grows linearly: 8n + 4") {
	auto pp = builtin_presentation("preprojective", {2});
	auto gb = buchberger_truncated(pp.graded, 12);
	auto dims = dims_from_gb(gb, std::min(10, gb.degree_cap));
	CHECK(dims[0].total == 4);
	for (int n = 1; n < static_cast<int>(dims.size()); ++n)
		CHECK(dims[n].total == 8 * n + 4);

	auto brute = dims_bruteforce(pp.graded, 5);
	for (int n = 0; n <= 5; ++n)
		CHECK(brute[n].by_vertex == dims[n].by_vertex);
}

TEST_CASE("preprojective basis is finite: four elements") {
	auto pp = builtin_presentation("preprojective", {2});
	auto gb = buchberger_truncated(pp.graded, 6);
	CHECK(gb.complete);
	CHECK(gb.elements.size() == 4);
	auto dims = dims_from_gb(gb, 6);
	CHECK(dims[6].total == 52);
}

TEST_CASE("incomplete truncations refuse to extrapolate") {
	// x y^k x - x y^(k+1): one new element per degree, never finished.
	auto gp = graded(
			"vertices v;\n"
			"arrows x : v -> v @ 1, y : v -> v @ 1;\n"
			"relations x.x - x.y;\n");
	auto gb = buchberger_truncated(gp, 8);
	CHECK_FALSE(gb.complete);
	CHECK(gb.elements.size() == 7);  // leading words x y^k x, k = 0..6
	auto dims = dims_from_gb(gb, 8);
	auto brute = dims_bruteforce(gp, 8);
	for (int n = 0; n <= 8; ++n) {
		CHECK(dims[n].total == n + 1);  // only words with at most one x
		CHECK(brute[n].total == n + 1);
	}
	CHECK_THROWS_AS(dims_from_gb(gb, 9), ValueError);
}

TEST_CASE("a relation eliminating an arrow is rejected by the model") {
	auto gp = graded(
			"vertices v;\n"
			"arrows x : v -> v @ 1, y : v -> v @ 1;\n"
			"relations x - y;\n");
	auto gb = buchberger_truncated(gp, 8);
	REQUIRE(gb.elements.size() == 1);
	CHECK(gb.elements[0].lw.length() == 1);
	CHECK_THROWS_AS(gb_leading_model(gb), ValueError);
}

TEST_CASE("basis computation is deterministic") {
	auto gp = builtin_presentation("preprojective", {2}).graded;
	auto a = buchberger_truncated(gp, 8);
	auto b = buchberger_truncated(gp, 8);
	REQUIRE(a.elements.size() == b.elements.size());
	for (size_t i = 0; i < a.elements.size(); ++i)
		CHECK(a.elements[i].poly == b.elements[i].poly);
	CHECK(a.complete == b.complete);
}

TEST_CASE("brute-force dimension guard") {
	CHECK_THROWS_AS(dims_bruteforce(graded(kCommutator2), 9), GuardError);
}
