// Command-line front end: per-file reports, corpus management and the
// verification suite.
//
// Exit codes: 0 success, 1 failed verification or internal
// inconsistency, 2 usage or parse error, 3 resource guard.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qgrowth/builtins.hpp"
#include "qgrowth/ext_distance.hpp"
#include "qgrowth/groebner.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/io.hpp"
#include "qgrowth/random_monomial.hpp"
#include "qgrowth/resolution.hpp"
#include "qgrowth/serre.hpp"
#include "qgrowth/tables.hpp"
#include "qgrowth/verify.hpp"

using namespace qgrowth;

namespace {

struct Flags {
	std::string input;
	int n = -1;
	int dmax = 8;
	std::vector<double> t_grid;
	std::uint64_t seed = 1;
	bool want_polynomial = false;
	std::string json_path;
	std::string csv_path;
	std::string dot_path;
	long long guard = 0;  // 0: per-operation default
	std::string corpus_dir;
	std::string out_dir = "reports";
	int i_max = 4;
	int ext_l = 1;
};

std::string default_corpus_dir(const std::string& flag) {
	if (!flag.empty()) return flag;
	if (const char* env = std::getenv("QGROWTH_CORPUS_DIR")) return env;
	return "corpus";
}

// "random" generates a presentation from --seed; anything else is a
// file in the presentation grammar.
ParsedPresentation load_input(const Flags& f) {
	if (f.input == "random") {
		MonomialPresentation mp =
				random_monomial(f.seed, 4, 6, 4, 4, f.want_polynomial);
		GradedPresentation gp;
		gp.quiver = mp.quiver;
		for (const Path& r : mp.relations) {
			NcPolynomial p;
			p.add_term(r, 1);
			gp.relations.push_back(p);
		}
		return classify_presentation(std::move(gp));
	}
	return parse_presentation(read_text_file(f.input));
}

// Monomial model of the input: itself, or the leading-word model of a
// complete truncated GB.
MonomialPresentation model_of(const ParsedPresentation& pp, int dmax,
		long long guard) {
	if (pp.is_monomial()) return *pp.monomial;
	TruncatedGB gb = buchberger_truncated(pp.graded, dmax,
			guard > 0 ? static_cast<int>(guard) : 10000);
	if (!gb.complete)
		throw ValueError("Groebner basis is incomplete at degree " +
				std::to_string(dmax) + "; raise --dmax");
	return gb_leading_model(gb);
}

// classify_growth with the coefficient horizon stretched to at least n.
GrowthReport growth_with_horizon(const UfnarovskiGraph& g, int n) {
	int need = 2 * transfer_register_bound(g) + 4;
	if (!has_shared_circuit_state(g)) {
		CircuitDepth d = circuit_chain_depth(g);
		if (d.depth >= 1)
			need = std::max(need, quasi_required_horizon(g, d.depth - 1));
	}
	need = std::max(need, n);
	auto counts = g.unit_transition_degrees()
			? count_normal_words(g, need)
			: count_normal_by_degree(g, need);
	return classify_growth(g, counts);
}

void write_file(const std::string& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw ValueError("cannot write " + path);
	out << text;
}

void emit_json(const Json& j, const std::string& path) {
	std::string text = j.dump(2) + "\n";
	if (path.empty() || path == "-")
		std::cout << text;
	else
		write_file(path, text);
}

void emit_text(const std::string& text, const std::string& path) {
	if (path.empty() || path == "-")
		std::cout << text;
	else
		write_file(path, text);
}

int cmd_show(const Flags& f) {
	ParsedPresentation pp = load_input(f);
	Json j = presentation_json(pp);
	if (pp.is_monomial()) {
		auto g = build_ufnarovski(*pp.monomial);
		j["automaton"] = Json{{"states", g.state_count()},
				{"transitions", g.transitions.size()}};
	}
	emit_json(j, f.json_path);
	if (!f.dot_path.empty()) {
		auto g = build_ufnarovski(model_of(pp, f.dmax, f.guard));
		emit_text(ufnarovski_dot(g), f.dot_path);
	}
	return 0;
}

int cmd_hilbert(const Flags& f) {
	auto g = build_ufnarovski(model_of(load_input(f), f.dmax, f.guard));
	GrowthReport rep = growth_with_horizon(g, f.n < 0 ? 0 : f.n);
	emit_json(hilbert_json(rep.hilbert), f.json_path);
	return 0;
}

int cmd_growth(const Flags& f) {
	auto g = build_ufnarovski(model_of(load_input(f), f.dmax, f.guard));
	GrowthReport rep = growth_with_horizon(g, f.n < 0 ? 0 : f.n);
	emit_json(growth_json(rep), f.json_path);
	return 0;
}

int cmd_serre(const Flags& f) {
	auto g = build_ufnarovski(model_of(load_input(f), f.dmax, f.guard));
	int n = f.n < 0 ? 200 : f.n;
	RankSequence rs = rank_sequence(g, n);
	bool wrote = false;
	if (!f.csv_path.empty()) {
		emit_text(rank_csv(rs), f.csv_path);
		wrote = true;
	}
	if (!f.json_path.empty()) {
		// The entropy report needs a tail window, so only build it on demand.
		SerreEntropyReport rep =
				serre_entropy_report(rs, growth_with_horizon(g, 0));
		emit_json(serre_json(rep), f.json_path);
		wrote = true;
	}
	if (!wrote) emit_text(rank_csv(rs), "");
	return 0;
}

int cmd_betti(const Flags& f) {
	ParsedPresentation pp = load_input(f);
	BettiTable bt;
	if (pp.is_monomial()) {
		bt = anick_betti(*pp.monomial, f.i_max,
				f.guard > 0 ? f.guard : 200000);
	} else {
		TruncatedGB gb = buchberger_truncated(pp.graded, f.dmax);
		if (!gb.complete)
			throw ValueError("Groebner basis is incomplete at degree " +
					std::to_string(f.dmax) + "; raise --dmax");
		AlgebraTables A = algebra_tables(gb, f.dmax);
		bt = minimal_resolution(trivial_module(A.quiver), A, f.i_max, f.dmax,
				f.guard > 0 ? f.guard : 400000);
	}
	if (!f.csv_path.empty()) emit_text(betti_csv(bt), f.csv_path);
	if (f.csv_path.empty() || !f.json_path.empty())
		emit_json(betti_json(bt), f.json_path);
	return 0;
}

int cmd_gb(const Flags& f) {
	ParsedPresentation pp = load_input(f);
	TruncatedGB gb = buchberger_truncated(pp.graded, f.dmax,
			f.guard > 0 ? static_cast<int>(f.guard) : 10000);
	Json j;
	j["degree_cap"] = gb.degree_cap;
	j["complete"] = gb.complete;
	Json els = Json::array();
	for (const GbElement& e : gb.elements)
		els.push_back(Json{{"leading_word", e.lw.str(gb.quiver)},
				{"polynomial", e.poly.str(gb.quiver)}});
	j["elements"] = els;
	emit_json(j, f.json_path);
	return 0;
}

int cmd_ext(const Flags& f) {
	auto g = build_ufnarovski(model_of(load_input(f), f.dmax, f.guard));
	int n = f.n < 0 ? 10 : f.n;
	int top = n + std::max(f.ext_l - 1, 0);
	auto counts = g.unit_transition_degrees()
			? count_normal_words(g, top)
			: count_normal_by_degree(g, top);
	std::vector<BigInt> dims;
	for (const auto& c : counts) dims.push_back(c.total);
	std::vector<double> grid = f.t_grid.empty()
			? std::vector<double>{0.0} : f.t_grid;
	Json pairs = Json::array();
	for (double t : grid)
		pairs.push_back(ext_pair_json(ext_distance_regular(dims, f.ext_l, n, t)));
	emit_json(Json{{"l", f.ext_l}, {"n", n}, {"pairs", pairs}}, f.json_path);
	return 0;
}

int cmd_verify(const Flags& f) {
	auto records = run_verification(default_corpus_dir(f.corpus_dir));
	for (const auto& r : records)
		std::printf("[%s] %s: %s (%.0f ms)\n", r.status.c_str(),
				r.id.c_str(),
				r.status == "pass" ? r.computed.c_str() : r.reason.c_str(),
				r.runtime_ms);
	if (!f.json_path.empty())
		emit_json(verification_json(records), f.json_path);
	return all_passed(records) ? 0 : 1;
}

int cmd_report(const Flags& f) {
	auto corpus = load_corpus(default_corpus_dir(f.corpus_dir));
	std::filesystem::create_directories(f.out_dir);
	int n = f.n < 0 ? 60 : f.n;
	for (const CorpusEntry& e : corpus) {
		MonomialPresentation model = corpus_model(e);
		auto g = build_ufnarovski(model);
		GrowthReport rep = growth_with_horizon(g, n);
		write_file(f.out_dir + "/" + e.name + ".growth.json",
				growth_json(rep).dump(2) + "\n");
		RankSequence rs = rank_sequence(g, n);
		write_file(f.out_dir + "/" + e.name + ".ranks.csv", rank_csv(rs));
		if (e.monomial)
			write_file(f.out_dir + "/" + e.name + ".betti.csv",
					betti_csv(anick_betti(*e.pp.monomial, f.i_max)));
		std::printf("%s: wrote growth, ranks%s\n", e.name.c_str(),
				e.monomial ? ", betti" : "");
	}
	return 0;
}

int cmd_corpus(const Flags& f) {
	auto corpus = load_corpus(default_corpus_dir(f.corpus_dir));
	Json arr = Json::array();
	for (const CorpusEntry& e : corpus) {
		Json j;
		j["name"] = e.name;
		j["path"] = e.path;
		j["monomial"] = e.monomial;
		j["growth"] = e.growth;
		j["entropy"] = e.entropy ? Json(*e.entropy) : Json(nullptr);
		j["gk"] = e.gk ? Json(*e.gk) : Json(nullptr);
		j["vertices"] = e.pp.graded.quiver.vertex_count();
		j["arrows"] = e.pp.graded.quiver.arrow_count();
		j["relations"] = e.pp.graded.relations.size();
		arr.push_back(j);
	}
	emit_json(Json{{"entries", arr}}, f.json_path);
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"growth invariants of graded quiver algebras"};
	app.require_subcommand(1);
	Flags f;

	auto add_common = [&f](CLI::App* sub, bool with_input) {
		if (with_input)
			sub->add_option("input", f.input,
					"presentation file, or 'random' with --seed")
					->required();
		sub->add_option("--n", f.n, "horizon (degree or twist power)");
		sub->add_option("--dmax", f.dmax, "Groebner truncation degree");
		sub->add_option("--seed", f.seed, "generator seed");
		sub->add_flag("--polynomial", f.want_polynomial,
				"make 'random' rejection-sample to polynomial growth");
		sub->add_option("--json", f.json_path, "JSON output path ('-' stdout)");
		sub->add_option("--csv", f.csv_path, "CSV output path ('-' stdout)");
		sub->add_option("--guard", f.guard, "resource guard override");
	};

	auto* show = app.add_subcommand("show", "parsed presentation and automaton");
	add_common(show, true);
	show->add_option("--dot", f.dot_path, "write the word graph as DOT");

	auto* hilbert = app.add_subcommand("hilbert", "certified Hilbert series");
	add_common(hilbert, true);

	auto* growth = app.add_subcommand("growth", "full growth report");
	add_common(growth, true);

	auto* serre = app.add_subcommand("serre", "twist rank sequence and entropy");
	add_common(serre, true);

	auto* betti = app.add_subcommand("betti", "Betti table of the ground module");
	add_common(betti, true);
	betti->add_option("--i", f.i_max, "homological degree bound");

	auto* gbc = app.add_subcommand("gb", "truncated Groebner basis");
	add_common(gbc, true);

	auto* ext = app.add_subcommand("ext", "twist distance polynomials");
	add_common(ext, true);
	ext->add_option("--l", f.ext_l, "generator block count")->required();
	ext->add_option("--t", f.t_grid, "evaluation grid")->delimiter(',');

	auto* verify = app.add_subcommand("verify", "run the verification suite");
	verify->add_flag("--all", "run every claim (the default and only mode)");
	verify->add_option("--json", f.json_path, "JSON output path ('-' stdout)");
	verify->add_option("--corpus", f.corpus_dir, "corpus directory");

	auto* report = app.add_subcommand("report", "emit corpus-wide artifacts");
	report->add_option("--out", f.out_dir, "output directory");
	report->add_option("--n", f.n, "rank horizon");
	report->add_option("--i", f.i_max, "Betti homological bound");
	report->add_option("--corpus", f.corpus_dir, "corpus directory");

	auto* corpus = app.add_subcommand("corpus", "list corpus entries");
	corpus->add_option("--corpus", f.corpus_dir, "corpus directory");
	corpus->add_option("--json", f.json_path, "JSON output path ('-' stdout)");

	try {
		app.parse(argc, argv);
		if (show->parsed()) return cmd_show(f);
		if (hilbert->parsed()) return cmd_hilbert(f);
		if (growth->parsed()) return cmd_growth(f);
		if (serre->parsed()) return cmd_serre(f);
		if (betti->parsed()) return cmd_betti(f);
		if (gbc->parsed()) return cmd_gb(f);
		if (ext->parsed()) return cmd_ext(f);
		if (verify->parsed()) return cmd_verify(f);
		if (report->parsed()) return cmd_report(f);
		if (corpus->parsed()) return cmd_corpus(f);
		return 2;
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	} catch (const GuardError& e) {
		std::cerr << "guard: " << e.what() << "\n";
		return 3;
	} catch (const ParseError& e) {
		std::cerr << "parse: " << e.what() << "\n";
		return 2;
	} catch (const ValueError& e) {
		std::cerr << "input: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
