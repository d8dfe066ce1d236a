#include <catch2/catch_amalgamated.hpp>

#include "qgrowth/builtins.hpp"
#include "qgrowth/io.hpp"
#include "qgrowth/random_monomial.hpp"
#include "qgrowth/resolution.hpp"
#include "qgrowth/verify.hpp"

using namespace qgrowth;

#ifndef QGROWTH_CORPUS_DIR
#define QGROWTH_CORPUS_DIR "corpus"
#endif

TEST_CASE("random presentations are reproducible") {
	MonomialPresentation a = random_monomial(7);
	MonomialPresentation b = random_monomial(7);
	CHECK(a.quiver == b.quiver);
	CHECK(a.relations == b.relations);
	MonomialPresentation c = random_monomial(8);
	bool same = a.quiver == c.quiver && a.relations == c.relations;
	CHECK_FALSE(same);
}

TEST_CASE("random presentations validate and respect the bounds") {
	for (std::uint64_t seed = 1; seed <= 40; ++seed) {
		MonomialPresentation mp = random_monomial(seed, 4, 6, 4, 4);
		CHECK_NOTHROW(mp.validate());
		CHECK(mp.quiver.vertex_count() <= 4);
		CHECK(mp.quiver.arrow_count() <= 6);
		CHECK(mp.relations.size() <= 4);
		for (const Path& r : mp.relations) CHECK(r.length() <= 4);
	}
}

TEST_CASE("want_polynomial rejection-samples to polynomial growth") {
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		MonomialPresentation mp = random_monomial(seed, 4, 6, 4, 4, true);
		CHECK(classify_growth(mp).classification == GrowthClass::Polynomial);
	}
}

TEST_CASE("exhausted rejection budget raises the guard") {
	CHECK_THROWS_AS(random_monomial(1, 1, 2, 0, 4, true, 0), GuardError);
	CHECK_THROWS_AS(random_monomial(3, 0, 2, 0, 4, true), ValueError);
}

TEST_CASE("betti table serializes in row order") {
	auto pp = builtin_presentation("yx_algebra");
	BettiTable bt = anick_betti(*pp.monomial, 4);
	CHECK(betti_csv(bt) == "i,j,b\n0,0,1\n1,1,2\n2,2,1\n");
	Json j = betti_json(bt);
	CHECK(j["finished"] == true);
	CHECK(j["entries"].size() == 3);
	CHECK(j["entries"][2]["b"] == 1);
}

TEST_CASE("rank csv carries one line per twist power") {
	auto pp = builtin_presentation("free", {2});
	auto g = build_ufnarovski(*pp.monomial);
	RankSequence rs = rank_sequence(g, 5);
	std::string csv = rank_csv(rs);
	CHECK(csv.substr(0, 17) == "n,rank,witness_d\n");
	CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
	CHECK(csv.find("\n5,32,") != std::string::npos);
}

TEST_CASE("growth json is deterministic and tagged") {
	auto pp = builtin_presentation("xx_algebra");
	GrowthReport rep = classify_growth(*pp.monomial);
	std::string once = growth_json(rep).dump(2);
	std::string twice = growth_json(classify_growth(*pp.monomial)).dump(2);
	CHECK(once == twice);
	Json j = Json::parse(once);
	CHECK(j["classification"] == "exponential");
	CHECK(j["entropy"]["exact"] == false);
	double lo = j["entropy"]["lo"].get<double>();
	double hi = j["entropy"]["hi"].get<double>();
	CHECK(lo <= 0.4812118250596035);
	CHECK(hi >= 0.4812118250596035);
}

TEST_CASE("ext polynomial maps exponents to coefficients") {
	std::vector<BigInt> dims{1, 2, 3, 4, 5};
	ExtDistancePair pr = ext_distance_regular(dims, 2, 2, 0.0);
	Json j = ext_poly_json(pr.generator);
	CHECK(j.size() == 1);
	CHECK(j["0"] == "12");
	CHECK(ext_pair_json(pr)["line"]["0"] == "3");
}

TEST_CASE("dot output names every state and transition") {
	auto pp = builtin_presentation("example52");
	auto g = build_ufnarovski(*pp.monomial);
	std::string dot = ufnarovski_dot(g);
	CHECK(dot.find("digraph ufnarovski") == 0);
	for (int i = 0; i < g.state_count(); ++i)
		CHECK(dot.find(g.states[i].str(g.quiver)) != std::string::npos);
	CHECK(std::count(dot.begin(), dot.end(), '>') ==
			static_cast<long>(g.transitions.size()));
}

TEST_CASE("corpus files parse and match their builtin counterparts") {
	auto corpus = load_corpus(QGROWTH_CORPUS_DIR);
	REQUIRE(corpus.size() == 8);

	auto find = [&](const std::string& n) -> const CorpusEntry& {
		for (const auto& e : corpus)
			if (e.name == n) return e;
		FAIL("missing " + n);
		return corpus.front();
	};

	struct Pair {
		const char* entry;
		const char* builtin;
		std::vector<int> params;
	};
	for (const Pair& p : std::vector<Pair>{
				{"free2", "free", {2}},
				{"free3", "free", {3}},
				{"xx", "xx_algebra", {}},
				{"yx", "yx_algebra", {}},
				{"example52", "example52", {}},
				{"two_cycle_tail", "two_cycle_tail", {}},
				{"pline2", "projective_line", {2}},
				{"pline3", "projective_line", {3}}}) {
		const CorpusEntry& e = find(p.entry);
		ParsedPresentation ref = builtin_presentation(p.builtin, p.params);
		INFO(p.entry);
		CHECK(e.pp.graded.quiver == ref.graded.quiver);
		REQUIRE(e.pp.graded.relations.size() == ref.graded.relations.size());
		for (size_t i = 0; i < ref.graded.relations.size(); ++i)
			CHECK(e.pp.graded.relations[i].str(e.pp.graded.quiver) ==
					ref.graded.relations[i].str(ref.graded.quiver));
		CHECK(e.pp.is_monomial() == e.monomial);
	}
}

TEST_CASE("corpus models reduce graded entries to leading words") {
	auto corpus = load_corpus(QGROWTH_CORPUS_DIR);
	for (const auto& e : corpus) {
		MonomialPresentation model = corpus_model(e);
		CHECK_NOTHROW(model.validate());
		if (e.name == "pline2") {
			REQUIRE(model.relations.size() == 1);
			CHECK(model.relations[0].arrows == std::vector<int>{0, 1});
		}
	}
}
