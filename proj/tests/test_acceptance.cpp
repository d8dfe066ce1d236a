#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "qgrowth/verify.hpp"

using namespace qgrowth;

#ifndef QGROWTH_CORPUS_DIR
#define QGROWTH_CORPUS_DIR "corpus"
#endif

TEST_CASE("acceptance suite passes every claim") {
	auto records = run_verification(QGROWTH_CORPUS_DIR);
	REQUIRE(records.size() == 11);
	for (const auto& r : records) {
		std::printf("[%s] %s: %s (%.0f ms)\n", r.status.c_str(),
				r.id.c_str(),
				r.status == "pass" ? r.computed.c_str() : r.reason.c_str(),
				r.runtime_ms);
		std::fflush(stdout);
		INFO(r.id << ": " << r.reason);
		CHECK(r.status == "pass");
	}
}
