// Minimal tour: parse a presentation, classify its growth, and follow
// the twist rank sequence.

#include <iostream>

#include "qgrowth/growth.hpp"
#include "qgrowth/io.hpp"
#include "qgrowth/parse.hpp"
#include "qgrowth/serre.hpp"

using namespace qgrowth;

int main() {
	auto pp = parse_presentation(
			"vertices v;"
			"arrows x : v -> v @ 1, y : v -> v @ 1;"
			"relations x.x;");

	GrowthReport rep = classify_growth(*pp.monomial);
	std::cout << "classification: " << to_string(rep.classification) << "\n";
	std::cout << "dim A_n for n <= 10:";
	for (int n = 0; n <= 10; ++n)
		std::cout << " " << rep.hilbert.coefficients[n].get_str();
	std::cout << "\n";
	if (rep.entropy)
		std::cout << "entropy in [" << rep.entropy->lo << ", "
				<< rep.entropy->hi << "]\n";

	auto g = build_ufnarovski(*pp.monomial);
	RankSequence rs = rank_sequence(g, 12);
	std::cout << "twist ranks:";
	for (const BigInt& r : rs.r) std::cout << " " << r.get_str();
	std::cout << "\n";
	std::cout << growth_json(rep)["entropy"].dump(2) << "\n";
	return 0;
}
