#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qgrowth/builtins.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/hilbert.hpp"
#include "qgrowth/parse.hpp"
#include "qgrowth/polynomial.hpp"
#include "qgrowth/quasipoly.hpp"

using namespace qgrowth;

namespace {

const MonomialPresentation& monomial(const ParsedPresentation& pp) {
	REQUIRE(pp.is_monomial());
	return *pp.monomial;
}

UfnarovskiGraph graph_of(const std::string& builtin) {
	return build_ufnarovski(monomial(builtin_presentation(builtin)));
}

std::vector<Rational> rationals(std::vector<long> v) {
	std::vector<Rational> out;
	for (long x : v) out.emplace_back(x);
	return out;
}

// Frozen independently of the library: log((1+sqrt 5)/2), log 2, log 3,
// log((3+sqrt 5)/2).
const double kLogPhi = 0.4812118250596035;
const double kLog2 = 0.6931471805599453;
const double kLog3 = 1.0986122886681098;
const double kLogPline3 = 0.9624236501192069;

}  // namespace

TEST_CASE("berlekamp-massey recovers short recurrences") {
	auto fib = berlekamp_massey(rationals({1, 1, 2, 3, 5, 8, 13, 21}));
	CHECK(fib.length == 2);
	CHECK(fib.connection == QPoly{Rational(1), Rational(-1), Rational(-1)});

	auto lin = berlekamp_massey(rationals({1, 2, 3, 4, 5, 6, 7, 8}));
	CHECK(lin.length == 2);
	CHECK(lin.connection == QPoly{Rational(1), Rational(-2), Rational(1)});

	auto geo = berlekamp_massey(rationals({1, 2, 4, 8, 16, 32}));
	CHECK(geo.length == 1);
	CHECK(geo.connection == QPoly{Rational(1), Rational(-2)});

	// Eventually zero: connection collapses to 1 but the register still
	// spans the nonzero prefix.
	auto fin = berlekamp_massey(rationals({1, 1, 0, 0, 0, 0}));
	CHECK(fin.length == 2);
	CHECK(fin.connection == QPoly{Rational(1)});
}

TEST_CASE("sturm chain counts real roots in half-open intervals") {
	// (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
	QPoly p{Rational(-6), Rational(11), Rational(-6), Rational(1)};
	auto chain = poly::sturm_chain(p);
	CHECK(poly::roots_in(chain, Rational(0), Rational(4)) == 3);
	CHECK(poly::roots_in(chain, Rational(1), Rational(4)) == 2);
	CHECK(poly::roots_in(chain, Rational(1), Rational(2)) == 1);
	CHECK(poly::roots_in(chain, Rational(3), Rational(9)) == 0);
	// Half-open: b is included, a is not.
	CHECK(poly::roots_in(chain, Rational(2), Rational(3)) == 1);
	CHECK(poly::roots_in(chain, Rational(29, 10), Rational(3)) == 1);
}

TEST_CASE("squarefree part flattens repeated roots") {
	// (z-2)^2 (z+1)
	QPoly p{Rational(4), Rational(0), Rational(-3), Rational(1)};
	QPoly sf = poly::squarefree_part(p);
	CHECK(sf == QPoly{Rational(-2), Rational(-1), Rational(1)});
}

TEST_CASE("characteristic polynomial of small integer matrices") {
	CHECK(char_poly({{BigInt(2)}}) == ZPoly{BigInt(-2), BigInt(1)});
	std::vector<std::vector<BigInt>> m{{BigInt(0), BigInt(1)},
			{BigInt(1), BigInt(1)}};
	CHECK(char_poly(m) == ZPoly{BigInt(-1), BigInt(-1), BigInt(1)});
}

TEST_CASE("hilbert data for the xx algebra is the fibonacci series") {
	auto hd = hilbert_series(monomial(builtin_presentation("xx_algebra")), 20);
	REQUIRE(hd.coefficients.size() == 21);
	CHECK(hd.coefficients[0] == 1);
	CHECK(hd.coefficients[1] == 2);
	CHECK(hd.coefficients[5] == 13);
	CHECK(hd.denominator == ZPoly{BigInt(1), BigInt(-1), BigInt(-1)});
	CHECK(hd.numerator == ZPoly{BigInt(1), BigInt(1)});
	CHECK(hd.threshold == 2);
	REQUIRE(hd.recurrence.size() == 2);
	CHECK(hd.recurrence[0] == 1);
	CHECK(hd.recurrence[1] == 1);
	for (size_t n = hd.threshold; n < hd.coefficients.size(); ++n)
		CHECK(hd.coefficients[n] ==
				hd.recurrence[0] * hd.coefficients[n - 1] +
						hd.recurrence[1] * hd.coefficients[n - 2]);
}

TEST_CASE("hilbert data for yx algebra is 1/(1-z)^2") {
	auto hd = hilbert_series(monomial(builtin_presentation("yx_algebra")), 20);
	for (int n = 0; n <= 20; ++n) CHECK(hd.coefficients[n] == n + 1);
	CHECK(hd.denominator == ZPoly{BigInt(1), BigInt(-2), BigInt(1)});
	CHECK(hd.numerator == ZPoly{BigInt(1)});
}

TEST_CASE("hilbert data for free algebras and the two-vertex examples") {
	auto f3 = hilbert_series(monomial(builtin_presentation("free", {3})), 12);
	CHECK(f3.denominator == ZPoly{BigInt(1), BigInt(-3)});
	CHECK(f3.numerator == ZPoly{BigInt(1)});
	CHECK(f3.coefficients[5] == 243);

	auto ex = hilbert_series(monomial(builtin_presentation("example52")), 16);
	for (int n = 0; n <= 16; ++n) CHECK(ex.coefficients[n] == n + 2);
	CHECK(ex.denominator == ZPoly{BigInt(1), BigInt(-2), BigInt(1)});
	CHECK(ex.numerator == ZPoly{BigInt(2), BigInt(-1)});

	auto tc = hilbert_series(monomial(builtin_presentation("two_cycle_tail")), 14);
	for (int n = 0; n <= 14; ++n) CHECK(tc.coefficients[n] == 3);
	CHECK(tc.denominator == ZPoly{BigInt(1), BigInt(-1)});
	CHECK(tc.numerator == ZPoly{BigInt(3)});
	CHECK(tc.threshold == 1);
}

TEST_CASE("hilbert refuses a horizon too short to certify") {
	auto mp = monomial(builtin_presentation("xx_algebra"));
	CHECK_THROWS_AS(hilbert_series(mp, 5), ValueError);
	CHECK_THROWS_WITH(hilbert_series(mp, 5),
			Catch::Matchers::ContainsSubstring("N too small"));
	std::vector<BigInt> three{BigInt(1), BigInt(2), BigInt(3)};
	CHECK_THROWS_AS(hilbert_from_counts(three, 4), ValueError);
}

TEST_CASE("denominator divides the reversed characteristic polynomial") {
	for (const char* name : {"xx_algebra", "yx_algebra", "example52",
				 "two_cycle_tail", "free"}) {
		auto pp = std::string(name) == "free"
				? builtin_presentation("free", {2})
				: builtin_presentation(name);
		auto g = build_ufnarovski(monomial(pp));
		auto hd = hilbert_series(g, 2 * transfer_register_bound(g) + 4);
		CHECK(denominator_divides_reversed_charpoly(g, hd));
	}
}

TEST_CASE("entropy certificate snaps integer growth rates") {
	auto g2 = build_ufnarovski(monomial(builtin_presentation("free", {2})));
	auto c2 = growth_entropy(g2);
	CHECK(c2.exact);
	CHECK(c2.lambda_lo == 2);
	CHECK(c2.lambda_hi == 2);
	CHECK(c2.lo <= kLog2);
	CHECK(c2.hi >= kLog2);
	CHECK(c2.hi - c2.lo <= 1e-12);

	auto g3 = build_ufnarovski(monomial(builtin_presentation("free", {3})));
	auto c3 = growth_entropy(g3);
	CHECK(c3.exact);
	CHECK(c3.lambda_lo == 3);
	CHECK(c3.lo <= kLog3);
	CHECK(c3.hi >= kLog3);
}

TEST_CASE("entropy certificate brackets the golden ratio for xx") {
	auto cert = growth_entropy(graph_of("xx_algebra"));
	CHECK_FALSE(cert.exact);
	CHECK(cert.lo <= kLogPhi);
	CHECK(cert.hi >= kLogPhi);
	CHECK(cert.hi - cert.lo <= 1e-12);
	CHECK(cert.factor == ZPoly{BigInt(-1), BigInt(-1), BigInt(1)});
	CHECK(cert.lambda_lo < cert.lambda_hi);
}

TEST_CASE("entropy of the projective-line recurrence sequence, g = 3") {
	// a_n = 3 a_{n-1} - a_{n-2}, the normal-word counts of the g = 3
	// leading-word model.
	std::vector<BigInt> a{BigInt(1), BigInt(3)};
	for (int n = 2; n <= 30; ++n)
		a.push_back(3 * a[n - 1] - a[n - 2]);
	auto hd = hilbert_from_counts(a, 4);
	CHECK(hd.denominator == ZPoly{BigInt(1), BigInt(-3), BigInt(1)});
	auto cert = entropy_from_hilbert(hd, true);
	CHECK_FALSE(cert.exact);
	CHECK(cert.lo <= kLogPline3);
	CHECK(cert.hi >= kLogPline3);
	CHECK(cert.hi - cert.lo <= 1e-12);
}

TEST_CASE("polynomial growth gets exact zero entropy") {
	for (const char* name : {"yx_algebra", "example52", "two_cycle_tail"}) {
		auto rep = classify_growth(graph_of(name));
		CHECK(rep.classification == GrowthClass::Polynomial);
		REQUIRE(rep.entropy.has_value());
		CHECK(rep.entropy->exact);
		CHECK(rep.entropy->value == 0.0);
		CHECK(rep.entropy->lo == 0.0);
		CHECK(rep.entropy->hi == 0.0);
		CHECK(rep.entropy->lambda_lo == 1);
		CHECK(rep.entropy->lambda_hi == 1);
	}
}

TEST_CASE("classification and gk dimension across the fixture family") {
	auto yx = classify_growth(graph_of("yx_algebra"));
	CHECK(yx.gk_finite);
	CHECK(yx.gk_dim == 2);

	auto ex = classify_growth(graph_of("example52"));
	CHECK(ex.gk_dim == 2);

	auto tc = classify_growth(graph_of("two_cycle_tail"));
	CHECK(tc.gk_dim == 1);

	auto xx = classify_growth(graph_of("xx_algebra"));
	CHECK(xx.classification == GrowthClass::Exponential);
	CHECK_FALSE(xx.gk_finite);
	CHECK_FALSE(xx.quasi.has_value());

	// A single arrow with no circuits at all.
	auto pp = parse_presentation(
			"vertices u, v;\narrows e : u -> v @ 1;\n");
	auto fin = classify_growth(build_ufnarovski(monomial(pp)));
	CHECK(fin.classification == GrowthClass::FiniteDimensional);
	CHECK(fin.gk_dim == 0);
	CHECK_FALSE(fin.entropy.has_value());
}

TEST_CASE("quasi-polynomial fit on the builtin polynomial algebras") {
	auto gex = graph_of("example52");
	auto rep = classify_growth(gex);
	REQUIRE(rep.quasi.has_value());
	CHECK(rep.quasi->period == 1);
	CHECK(rep.quasi->degree == 1);
	CHECK(rep.quasi->value_at(100) == Rational(102));
	REQUIRE(rep.growth_constants.has_value());
	CHECK(rep.growth_constants->first > 0);
	CHECK(rep.growth_constants->second >= 1);

	auto tc = classify_growth(graph_of("two_cycle_tail"));
	REQUIRE(tc.quasi.has_value());
	CHECK(tc.quasi->period == 1);
	CHECK(tc.quasi->degree == 0);
	CHECK(tc.quasi->value_at(77) == Rational(3));
}

TEST_CASE("per-vertex counts of the tailed two-cycle need period 2") {
	auto g = graph_of("two_cycle_tail");
	int u = g.quiver.vertex_id("u");
	auto counts = count_normal_words(g, 40);
	std::vector<BigInt> bu;
	for (const auto& c : counts) bu.push_back(c.by_vertex[u]);
	// Frozen by hand: 2, 1, 2, 1, ... from m = 1.
	CHECK(bu[1] == 2);
	CHECK(bu[2] == 1);
	CHECK(bu[3] == 2);
	CHECK(bu[4] == 1);
	auto qp = quasi_polynomial_fit(bu, g, 0);
	CHECK(qp.period == 2);
	CHECK(qp.degree == 0);
	CHECK(qp.value_at(100) == Rational(1));
	CHECK(qp.value_at(101) == Rational(2));
}

TEST_CASE("quasi fit raises the onset past a corrupted prefix") {
	auto g = graph_of("yx_algebra");
	std::vector<BigInt> v;
	for (int m = 0; m <= 30; ++m)
		v.push_back(m < 6 ? BigInt(99) : BigInt(m + 1));
	auto qp = quasi_polynomial_fit(v, g, 1);
	CHECK(qp.period == 1);
	CHECK(qp.degree == 1);
	CHECK(qp.onset == 6);
	CHECK(qp.value_at(500) == Rational(501));
}

TEST_CASE("quasi fit rejects sequences that are not quasi-polynomial") {
	auto g = graph_of("yx_algebra");
	std::vector<BigInt> v;
	BigInt p = 1;
	for (int m = 0; m <= 30; ++m, p *= 2) v.push_back(p);
	CHECK_THROWS_AS(quasi_polynomial_fit(v, g, 1), InvariantError);
	std::vector<BigInt> tiny{BigInt(1), BigInt(2)};
	CHECK_THROWS_AS(quasi_polynomial_fit(tiny, g, 1), ValueError);
}

TEST_CASE("weighted degree counts agree with brute enumeration") {
	// x has degree 1, y degree 2, and xx is forbidden.
	auto pp = parse_presentation(
			"vertices v;\n"
			"arrows x : v -> v @ 1, y : v -> v @ 2;\n"
			"relations x.x;\n");
	const auto& mp = monomial(pp);
	auto g = build_ufnarovski(mp);
	auto by_deg = count_normal_by_degree(g, 8);

	// Enumerate words by length and bucket by weighted degree.
	std::vector<BigInt> expect(9, 0);
	std::vector<std::vector<int>> words{{}};
	for (int len = 0; len <= 8; ++len) {
		std::vector<std::vector<int>> next;
		for (const auto& w : words) {
			int deg = 0;
			for (int a : w) deg += mp.quiver.arrow(a).degree;
			if (deg <= 8) expect[deg] += 1;
			for (int a = 0; a < mp.quiver.arrow_count(); ++a) {
				std::vector<int> e = w;
				e.push_back(a);
				bool bad = e.size() >= 2 && e[e.size() - 2] == 0 && a == 0;
				if (!bad) next.push_back(std::move(e));
			}
		}
		words = std::move(next);
	}
	for (int n = 0; n <= 8; ++n) CHECK(by_deg[n].total == expect[n]);
}

TEST_CASE("degree-0 arrows shift words between layers without cycling") {
	auto pp = parse_presentation(
			"vertices u, v;\n"
			"arrows e : u -> v @ 0, x : v -> v @ 1;\n");
	auto g = build_ufnarovski(monomial(pp));
	auto by_deg = count_normal_by_degree(g, 6);
	CHECK(by_deg[0].total == 3);  // e_u, e_v, e
	for (int n = 1; n <= 6; ++n) CHECK(by_deg[n].total == 2);  // x^n, e x^n
	CHECK(by_deg[0].by_vertex[g.quiver.vertex_id("u")] == 1);
	CHECK(by_deg[0].by_vertex[g.quiver.vertex_id("v")] == 2);

	auto rep = classify_growth(g);
	CHECK(rep.classification == GrowthClass::Polynomial);
	CHECK(rep.gk_dim == 1);
	CHECK(rep.entropy->exact);
	CHECK(rep.entropy->value == 0.0);
}

TEST_CASE("unit-degree graphs count identically by length and by degree") {
	for (const char* name : {"xx_algebra", "example52", "two_cycle_tail"}) {
		auto g = graph_of(name);
		auto a = count_normal_words(g, 10);
		auto b = count_normal_by_degree(g, 10);
		REQUIRE(a.size() == b.size());
		for (size_t i = 0; i < a.size(); ++i)
			CHECK(a[i].by_vertex == b[i].by_vertex);
	}
}
