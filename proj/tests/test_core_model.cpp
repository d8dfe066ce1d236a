#include <catch2/catch_amalgamated.hpp>

#include "qgrowth/builtins.hpp"
#include "qgrowth/parse.hpp"

using namespace qgrowth;

TEST_CASE("monomial presentation parses from text") {
	auto pp = parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.x;");
	REQUIRE(pp.is_monomial());
	const MonomialPresentation& mp = *pp.monomial;
	CHECK(mp.quiver.vertex_count() == 1);
	CHECK(mp.quiver.arrow_count() == 2);
	REQUIRE(mp.relations.size() == 1);
	CHECK(mp.relations[0].arrows == std::vector<int>{0, 0});
}

TEST_CASE("commutator relation yields a graded, non-monomial presentation") {
	auto pp = parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.y - y.x;");
	CHECK_FALSE(pp.is_monomial());
	REQUIRE(pp.graded.relations.size() == 1);
	const NcPolynomial& f = pp.graded.relations[0];
	CHECK(f.term_count() == 2);
	CHECK(f.common_degree(pp.graded.quiver) == 2);
}

TEST_CASE("scaled single-path relation is rescaled monic and kept monomial") {
	auto pp = parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations 2*x.x;");
	REQUIRE(pp.is_monomial());
	CHECK(pp.monomial->relations[0].arrows == std::vector<int>{0, 0});
	auto c = pp.graded.relations[0].terms().begin()->second;
	CHECK(c == 1);
}

TEST_CASE("rational coefficients parse") {
	auto pp = parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1;"
			"relations x.y - 2/3*y.x;");
	const auto& terms = pp.graded.relations[0].terms();
	REQUIRE(terms.size() == 2);
	bool saw = false;
	for (const auto& [p, c] : terms)
		if (c == Rational(-2, 3)) saw = true;
	CHECK(saw);
}

TEST_CASE("weighted homogeneity is checked against arrow degrees") {
	// x.x has degree 2 and so does y when deg y = 2.
	CHECK_NOTHROW(parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@2; relations x.x - y;"));
	CHECK_THROWS_AS(parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.x - y;"),
			ParseError);
}

TEST_CASE("parse errors carry position and message") {
	SECTION("non-composable path") {
		try {
			parse_presentation("vertices u,w; arrows a:u->w@1; relations a.a;");
			FAIL("expected ParseError");
		} catch (const ParseError& e) {
			CHECK(std::string(e.what()).find("not composable") !=
					std::string::npos);
			CHECK(e.line == 1);
		}
	}
	SECTION("arrows before vertices") {
		CHECK_THROWS_AS(parse_presentation("arrows x:v->v@1;"), ParseError);
	}
	SECTION("duplicate vertex") {
		CHECK_THROWS_AS(parse_presentation("vertices v, v;"), ParseError);
	}
	SECTION("duplicate arrow") {
		CHECK_THROWS_AS(parse_presentation(
				"vertices v; arrows x:v->v@1, x:v->v@1;"), ParseError);
	}
	SECTION("unknown arrow in relation") {
		CHECK_THROWS_AS(parse_presentation(
				"vertices v; arrows x:v->v@1; relations z.z;"), ParseError);
	}
	SECTION("unknown statement") {
		CHECK_THROWS_AS(parse_presentation("vertices v; widgets w;"),
				ParseError);
	}
	SECTION("zero denominator") {
		CHECK_THROWS_AS(parse_presentation(
				"vertices v; arrows x:v->v@1; relations 1/0*x.x;"), ParseError);
	}
	SECTION("missing semicolon") {
		CHECK_THROWS_AS(parse_presentation("vertices v"), ParseError);
	}
	SECTION("line and column track newlines") {
		try {
			parse_presentation("vertices v;\n# comment\narrows !;");
			FAIL("expected ParseError");
		} catch (const ParseError& e) {
			CHECK(e.line == 3);
			CHECK(e.col == 8);
		}
	}
}

TEST_CASE("non-parallel relation rejected") {
	CHECK_THROWS_AS(parse_presentation(
			"vertices u,w; arrows a:u->w@1, b:w->u@1; relations a.b - b.a;"),
			ParseError);
}

TEST_CASE("antichain condition on monomial relations") {
	CHECK_THROWS_AS(parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.x, y.x.x.y;"),
			ParseError);
	// Equal relations are deduplicated, not treated as mutual subwords.
	auto pp = parse_presentation(
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.x, x.x;");
	CHECK(pp.monomial->relations.size() == 1);
}

TEST_CASE("degree-0 arrow cycles rejected") {
	CHECK_THROWS_AS(parse_presentation(
			"vertices u,w; arrows a:u->w@0, b:w->u@0, c:u->u@1;"),
			ParseError);
	CHECK_NOTHROW(parse_presentation(
			"vertices u,w; arrows a:u->w@0, b:u->w@1;"));
}

TEST_CASE("trivial grading rejected") {
	CHECK_THROWS_AS(parse_presentation("vertices u,w; arrows a:u->w@0;"),
			ParseError);
	// No arrows at all is fine.
	CHECK_NOTHROW(parse_presentation("vertices u;"));
}

TEST_CASE("serialize then parse is structurally the identity") {
	std::vector<std::string> sources = {
			"vertices v; arrows x:v->v@1, y:v->v@1; relations x.x;",
			"vertices v; arrows x:v->v@1, y:v->v@1;"
			" relations x.y - y.x, 3*x.x + 1/2*y.y;",
			"vertices x,y; arrows a:x->x@1, b:x->y@1, c:y->y@1;",
			"vertices u,w; arrows a:u->w@0, s:w->u@1;"
			" relations a.s, s.a;",
	};
	for (const std::string& src : sources) {
		auto first = parse_presentation(src);
		std::string text = serialize_presentation(first);
		auto second = parse_presentation(text);
		CHECK(first.graded.quiver == second.graded.quiver);
		CHECK(first.graded.relations == second.graded.relations);
		CHECK(first.is_monomial() == second.is_monomial());
		// Serialization is a fixed point after one round.
		CHECK(serialize_presentation(second) == text);
	}
}

TEST_CASE("path composition and subwords") {
	Quiver q;
	int u = q.add_vertex("u");
	int w = q.add_vertex("w");
	int a = q.add_arrow("a", u, w, 1);
	int b = q.add_arrow("b", w, u, 1);
	Path p{u, {a}};
	Path r{w, {b}};
	Path pr = p.concat(q, r);
	CHECK(pr.length() == 2);
	CHECK(pr.source(q) == u);
	CHECK(pr.target(q) == u);
	CHECK(pr.str(q) == "a.b");
	CHECK_THROWS_AS(p.concat(q, p), ValueError);
	CHECK(Path::at_vertex(u).str(q) == "e(u)");
	CHECK(is_subword({a, b}, {b, a, b, a}));
	CHECK_FALSE(is_subword({a, a}, {a, b, a}));
	CHECK(is_subword({}, {a}));
}

TEST_CASE("builtin free algebras") {
	auto pp = builtin_presentation("free", {2});
	CHECK(pp.is_monomial());
	CHECK(pp.graded.quiver.vertex_count() == 1);
	CHECK(pp.graded.quiver.arrow_count() == 2);
	CHECK(pp.graded.relations.empty());
	CHECK(builtin_presentation("free", {5}).graded.quiver.arrow_count() == 5);
	CHECK_THROWS_AS(builtin_presentation("free", {0}), ValueError);
	CHECK_THROWS_AS(builtin_presentation("free", {}), ValueError);
}

TEST_CASE("builtin projective line relation has tensor rank g") {
	for (int g = 2; g <= 5; ++g) {
		auto pp = builtin_presentation("projective_line", {g});
		CHECK_FALSE(pp.is_monomial());
		REQUIRE(pp.graded.relations.size() == 1);
		const NcPolynomial& f = pp.graded.relations[0];
		CHECK(static_cast<int>(f.term_count()) == g);
		CHECK(f.common_degree(pp.graded.quiver) == 2);
		for (const auto& [p, c] : f.terms()) CHECK(c == 1);
	}
	// g = 2 is the commutation-style pairing x1.x2 + x2.x1.
	auto p2 = builtin_presentation("projective_line", {2});
	NcPolynomial expect;
	expect.add_term(Path{0, {0, 1}}, 1);
	expect.add_term(Path{0, {1, 0}}, 1);
	CHECK(p2.graded.relations[0] == expect);
	// g = 3 adds the odd square x3.x3.
	auto p3 = builtin_presentation("projective_line", {3});
	CHECK(p3.graded.relations[0].terms().count(Path{0, {2, 2}}) == 1);
	CHECK_THROWS_AS(builtin_presentation("projective_line", {1}), ValueError);
}

TEST_CASE("builtin example52 and two_cycle_tail are path algebras") {
	auto e = builtin_presentation("example52");
	CHECK(e.is_monomial());
	CHECK(e.graded.relations.empty());
	const Quiver& q = e.graded.quiver;
	REQUIRE(q.vertex_count() == 2);
	CHECK(q.vertex_name(0) == "x");
	CHECK(q.arrow(q.arrow_id("a")).src == q.vertex_id("x"));
	CHECK(q.arrow(q.arrow_id("b")).tgt == q.vertex_id("y"));
	CHECK(q.arrow(q.arrow_id("c")).src == q.vertex_id("y"));

	auto t = builtin_presentation("two_cycle_tail");
	CHECK(t.graded.quiver.vertex_count() == 3);
	CHECK(t.graded.quiver.arrow_count() == 3);
	CHECK(t.graded.relations.empty());
}

TEST_CASE("builtin xx and yx algebras") {
	auto xx = builtin_presentation("xx_algebra");
	REQUIRE(xx.is_monomial());
	CHECK(xx.monomial->relations[0].str(xx.graded.quiver) == "x.x");
	auto yx = builtin_presentation("yx_algebra");
	REQUIRE(yx.is_monomial());
	CHECK(yx.monomial->relations[0].str(yx.graded.quiver) == "y.x");
}

TEST_CASE("preprojective presentation doubles the quiver") {
	auto pp = builtin_presentation("preprojective", {2});
	const Quiver& q = pp.graded.quiver;
	CHECK(q.vertex_count() == 2);
	REQUIRE(q.arrow_count() == 4);
	CHECK(q.arrow(q.arrow_id("a1")).degree == 0);
	CHECK(q.arrow(q.arrow_id("a1*")).degree == 1);
	CHECK(q.arrow(q.arrow_id("a1*")).src == q.arrow(q.arrow_id("a1")).tgt);
	CHECK(q.arrow(q.arrow_id("a1*")).tgt == q.arrow(q.arrow_id("a1")).src);

	// One relation component per vertex, each homogeneous of degree 1.
	REQUIRE(pp.graded.relations.size() == 2);
	for (const NcPolynomial& r : pp.graded.relations) {
		CHECK(r.common_degree(q) == 1);
		CHECK(r.term_count() == 2);
		CHECK_NOTHROW(r.validate_homogeneous_parallel(q));
	}
	// Component at u collects +a.a*, component at w collects -a*.a.
	const auto& ru = pp.graded.relations[0].terms();
	for (const auto& [p, c] : ru) CHECK(c == 1);
	const auto& rw = pp.graded.relations[1].terms();
	for (const auto& [p, c] : rw) CHECK(c == -1);
}

TEST_CASE("preprojective of larger acyclic quivers keeps one relation per vertex") {
	Quiver base;
	int a = base.add_vertex("1");
	int b = base.add_vertex("2");
	int c = base.add_vertex("3");
	base.add_arrow("p", a, b, 1);
	base.add_arrow("q", b, c, 1);
	auto pp = preprojective_of_quiver(base);
	CHECK(pp.graded.quiver.arrow_count() == 4);
	REQUIRE(pp.graded.relations.size() == 3);
	for (const NcPolynomial& r : pp.graded.relations)
		CHECK(r.common_degree(pp.graded.quiver) == 1);
}

TEST_CASE("preprojective rejects cyclic base quivers") {
	Quiver base;
	int u = base.add_vertex("u");
	int w = base.add_vertex("w");
	base.add_arrow("a", u, w, 1);
	base.add_arrow("b", w, u, 1);
	CHECK_THROWS_AS(preprojective_of_quiver(base), ValueError);
	Quiver loop;
	int v = loop.add_vertex("v");
	loop.add_arrow("x", v, v, 1);
	CHECK_THROWS_AS(preprojective_of_quiver(loop), ValueError);
}

TEST_CASE("builtin dispatcher rejects bad input") {
	CHECK_THROWS_AS(builtin_presentation("nope"), ValueError);
	CHECK_THROWS_AS(builtin_presentation("example52", {1}), ValueError);
	CHECK_THROWS_AS(builtin_presentation("preprojective", {0}), ValueError);
	auto names = builtin_names();
	for (const auto& n : names) {
		std::vector<int> params;
		if (n == "free" || n == "projective_line" || n == "preprojective")
			params.push_back(2);
		CHECK_NOTHROW(builtin_presentation(n, params));
	}
}

TEST_CASE("builtins serialize and reparse") {
	for (const char* name : {"xx_algebra", "example52", "two_cycle_tail"}) {
		auto pp = builtin_presentation(name);
		auto back = parse_presentation(serialize_presentation(pp));
		CHECK(back.graded.quiver == pp.graded.quiver);
		CHECK(back.graded.relations == pp.graded.relations);
	}
	// Starred arrow names survive the round trip.
	auto pre = builtin_presentation("preprojective", {3});
	auto back = parse_presentation(serialize_presentation(pre));
	CHECK(back.graded.quiver == pre.graded.quiver);
	CHECK(back.graded.relations == pre.graded.relations);
	CHECK(back.graded.quiver.has_arrow("a2*"));
}
