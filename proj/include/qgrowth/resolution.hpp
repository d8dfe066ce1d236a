#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/automaton.hpp"
#include "qgrowth/serre.hpp"
#include "qgrowth/tables.hpp"

namespace qgrowth {

// Graded Betti numbers b_{ij}: homological degree i, internal degree j
// in the ambient grading (shifted modules keep their ambient degrees).
struct BettiTable {
	int i_max = 0;
	int j_max = 0;
	std::map<std::pair<int, int>, long long> entries;  // zeros omitted
	bool finished = false;  // a syzygy level vanished inside the window
	bool minimal_certified = true;

	long long b(int i) const {
		long long s = 0;
		for (const auto& [ij, c] : entries)
			if (ij.first == i) s += c;
		return s;
	}

	long long b(int i, int j) const {
		auto it = entries.find({i, j});
		return it == entries.end() ? 0 : it->second;
	}

	// Largest internal degree carrying a generator up to row i.
	int D(int i) const {
		int m = 0;
		for (const auto& [ij, c] : entries)
			if (ij.first <= i && c > 0) m = std::max(m, ij.second);
		return m;
	}

	int top_level() const {
		int m = -1;
		for (const auto& [ij, c] : entries)
			if (c > 0) m = std::max(m, ij.first);
		return m;
	}
};

namespace detail {

// Coordinate of a free-module basis element: generator block and the
// normal word multiplying it.  Block -1 addresses the module itself.
struct ModKey {
	int block;
	Path word;

	bool operator<(const ModKey& o) const {
		if (block != o.block) return block < o.block;
		return word < o.word;
	}
};

using ModVec = std::map<ModKey, Rational>;

struct FreeGen {
	int vertex;
	int degree;
	ModVec image;  // differential value, previous level's coordinates
};

inline ModVec to_modvec(const NcPolynomial& p, int block) {
	ModVec v;
	for (const auto& [t, c] : p.terms()) v.emplace(ModKey{block, t}, c);
	return v;
}

// kappa * u, pushed through the component-wise multiplication.
inline ModVec push_forward(const GradedModuleData& mod,
		const AlgebraTables& A, const ModVec& vec, const Path& u) {
	ModVec out;
	for (const auto& [k, c] : vec) {
		NcPolynomial prod = k.block < 0 ? mod.act(A, k.word, u)
				: A.mul(k.word, u);
		for (const auto& [t, pc] : prod.terms()) {
			Rational& slot = out[ModKey{k.block, t}];
			slot += c * pc;
		}
	}
	for (auto it = out.begin(); it != out.end();)
		it = it->second == 0 ? out.erase(it) : std::next(it);
	return out;
}

// Incremental row space over ModKey coordinates.
struct VecReducer {
	std::map<ModKey, ModVec> pivots;

	ModVec reduce(ModVec v) const {
		auto it = v.begin();
		while (it != v.end()) {
			auto p = pivots.find(it->first);
			if (p == pivots.end()) {
				++it;
				continue;
			}
			Rational c = it->second;
			ModKey head = it->first;
			for (const auto& [k, pc] : p->second) {
				Rational& slot = v[k];
				slot -= c * pc;
				if (slot == 0) v.erase(k);
			}
			it = v.upper_bound(head);
		}
		return v;
	}

	bool add(ModVec v) {
		v = reduce(std::move(v));
		if (v.empty()) return false;
		Rational lead = v.begin()->second;
		if (lead != 1)
			for (auto& [k, c] : v) c /= lead;
		ModKey head = v.begin()->first;
		pivots.emplace(std::move(head), std::move(v));
		return true;
	}
};

// Fixed-width packing for the all-monomial fast path.  Block is
// stored +1 big-endian, then word length, then arrow ids +1; empty
// words carry their base vertex instead.
constexpr int kPackWord = 19;

struct PackedKey {
	std::array<std::uint8_t, 24> b{};

	bool operator<(const PackedKey& o) const { return b < o.b; }
	bool operator==(const PackedKey& o) const { return b == o.b; }
};

inline bool pack_key(int block, const Path& w, PackedKey& out) {
	if (w.length() > kPackWord) return false;
	out.b.fill(0);
	std::uint32_t bl = static_cast<std::uint32_t>(block + 1);
	out.b[0] = static_cast<std::uint8_t>(bl >> 24);
	out.b[1] = static_cast<std::uint8_t>(bl >> 16);
	out.b[2] = static_cast<std::uint8_t>(bl >> 8);
	out.b[3] = static_cast<std::uint8_t>(bl);
	out.b[4] = static_cast<std::uint8_t>(w.length());
	if (w.empty()) {
		if (w.base > 253) return false;
		out.b[5] = static_cast<std::uint8_t>(w.base + 1);
		return true;
	}
	for (int i = 0; i < w.length(); ++i) {
		if (w.arrows[i] > 253) return false;
		out.b[5 + i] = static_cast<std::uint8_t>(w.arrows[i] + 1);
	}
	return true;
}

inline ModKey unpack_key(const Quiver& q, const PackedKey& p) {
	int block = static_cast<int>(
			(std::uint32_t(p.b[0]) << 24) | (std::uint32_t(p.b[1]) << 16) |
			(std::uint32_t(p.b[2]) << 8) | std::uint32_t(p.b[3])) - 1;
	int len = p.b[4];
	if (len == 0) return ModKey{block, Path::at_vertex(p.b[5] - 1)};
	Path w;
	w.arrows.reserve(len);
	for (int i = 0; i < len; ++i) w.arrows.push_back(int(p.b[5 + i]) - 1);
	w.base = q.arrow(w.arrows.front()).src;
	return ModKey{block, std::move(w)};
}

inline bool pack_word64(const Path& u, std::uint64_t& out) {
	if (u.length() > 7) return false;
	out = static_cast<std::uint64_t>(u.length());
	for (int i = 0; i < u.length(); ++i) {
		if (u.arrows[i] > 253) return false;
		out |= std::uint64_t(u.arrows[i] + 1) << (8 * (i + 1));
	}
	return true;
}

inline Path unpack_word64(int base, std::uint64_t v) {
	Path p = Path::at_vertex(base);
	int len = static_cast<int>(v & 0xff);
	p.arrows.reserve(len);
	for (int i = 0; i < len; ++i)
		p.arrows.push_back(static_cast<int>((v >> (8 * (i + 1))) & 0xff) - 1);
	return p;
}

inline bool pack_feasible(const Quiver& q, int degree) {
	return q.vertex_count() <= 254 && q.arrow_count() <= 254 &&
			degree <= kPackWord;
}

struct FastRow {
	PackedKey img;
	std::int32_t gen;
	std::uint64_t dom;
};

// Kernel of one graded slice of the differential out of the current
// level.  Monomial systems take the packed route: each row maps a
// domain basis element to at most one image basis element, so sorting
// by image exposes the kernel as dead rows plus collision differences.
inline std::vector<ModVec> kernel_slice(const GradedModuleData& mod,
		const AlgebraTables& A, const std::vector<FreeGen>& gens, int d,
		long long row_guard) {
	std::vector<ModVec> kernel;
	std::vector<FastRow> fast;
	std::map<ModKey, std::pair<ModVec, ModVec>> piv;  // head -> (img, dom)

	auto generic_row = [&](ModVec img, ModVec dom) {
		auto it = img.begin();
		while (it != img.end()) {
			auto p = piv.find(it->first);
			if (p == piv.end()) {
				++it;
				continue;
			}
			Rational c = it->second;
			ModKey head = it->first;
			for (const auto& [k, pc] : p->second.first) {
				Rational& slot = img[k];
				slot -= c * pc;
				if (slot == 0) img.erase(k);
			}
			for (const auto& [k, pc] : p->second.second) {
				Rational& slot = dom[k];
				slot -= c * pc;
				if (slot == 0) dom.erase(k);
			}
			it = img.upper_bound(head);
		}
		if (img.empty()) {
			if (!dom.empty()) kernel.push_back(std::move(dom));
			return;
		}
		Rational lead = img.begin()->second;
		if (lead != 1) {
			for (auto& [k, c] : img) c /= lead;
			for (auto& [k, c] : dom) c /= lead;
		}
		ModKey head = img.begin()->first;
		piv.emplace(std::move(head),
				std::make_pair(std::move(img), std::move(dom)));
		if (static_cast<long long>(piv.size()) > row_guard)
			throw GuardError("kernel elimination exceeded the row guard");
	};

	bool fast_mode = A.monomial && pack_feasible(A.quiver, d);
	for (const FreeGen& g : gens)
		if (g.image.size() != 1 || g.image.begin()->second != 1)
			fast_mode = false;

	auto demote = [&]() {
		fast_mode = false;
		for (const FastRow& r : fast) {
			ModVec img;
			img.emplace(unpack_key(A.quiver, r.img), 1);
			ModVec dom;
			dom.emplace(ModKey{r.gen,
					unpack_word64(gens[r.gen].vertex, r.dom)}, 1);
			generic_row(std::move(img), std::move(dom));
		}
		fast.clear();
	};

	Path buf;
	for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
		const FreeGen& g = gens[gi];
		int need = d - g.degree;
		if (need < 0) continue;
		auto visit = [&](const Path& u) {
			if (fast_mode) {
				const auto& [k, c] = *g.image.begin();
				bool alive;
				if (k.block < 0 && !mod.truncation) {
					alive = u.empty();
					if (alive) buf = k.word;
				} else {
					alive = A.mul_word(k.word, u, buf);
				}
				if (!alive) {
					ModVec dom;
					dom.emplace(ModKey{gi, u}, 1);
					kernel.push_back(std::move(dom));
					return;
				}
				FastRow fr;
				fr.gen = gi;
				if (pack_key(k.block, buf, fr.img) &&
						pack_word64(u, fr.dom)) {
					fast.push_back(fr);
					return;
				}
				demote();
			}
			ModVec img = push_forward(mod, A, g.image, u);
			ModVec dom;
			dom.emplace(ModKey{gi, u}, 1);
			if (img.empty()) {
				kernel.push_back(std::move(dom));
				return;
			}
			generic_row(std::move(img), std::move(dom));
		};
		A.for_each_normal(g.vertex, need, visit);
	}

	if (fast_mode) {
		std::sort(fast.begin(), fast.end(),
				[](const FastRow& a, const FastRow& b) {
					if (!(a.img == b.img)) return a.img < b.img;
					if (a.gen != b.gen) return a.gen < b.gen;
					return a.dom < b.dom;
				});
		for (size_t i = 0; i < fast.size();) {
			size_t j = i + 1;
			while (j < fast.size() && fast[j].img == fast[i].img) {
				ModVec v;
				v.emplace(ModKey{fast[i].gen,
						unpack_word64(gens[fast[i].gen].vertex,
								fast[i].dom)}, -1);
				v.emplace(ModKey{fast[j].gen,
						unpack_word64(gens[fast[j].gen].vertex,
								fast[j].dom)}, 1);
				kernel.push_back(std::move(v));
				++j;
			}
			i = j;
		}
	}
	return kernel;
}

// Minimal generators of the module itself, one degree slice.
inline void module_generators_slice(const GradedModuleData& mod,
		const AlgebraTables& A, int d, std::vector<FreeGen>& gens,
		BettiTable& table) {
	const Quiver& q = A.quiver;
	int dmin = mod.degree_begin();
	bool fast = A.monomial && mod.truncation && pack_feasible(q, d);
	std::vector<PackedKey> covered;
	VecReducer red;
	Path buf;

	for (int a = 0; a < q.arrow_count(); ++a) {
		int src_d = d - q.arrow(a).degree;
		if (src_d < dmin) continue;
		Path pa{q.arrow(a).src, {a}};
		auto visit = [&](const Path& label) {
			if (fast) {
				if (!A.mul_word(label, pa, buf)) return;
				PackedKey pk;
				if (!pack_key(-1, buf, pk))
					throw InvariantError("packable degree produced an "
							"unpackable word");
				covered.push_back(pk);
				return;
			}
			ModVec v = to_modvec(mod.act(A, label, pa), -1);
			if (!v.empty()) red.add(std::move(v));
		};
		mod.for_each_basis(A, src_d, visit);
	}
	if (fast) std::sort(covered.begin(), covered.end());

	auto candidate = [&](const Path& label) {
		bool fresh;
		if (fast) {
			PackedKey pk;
			if (!pack_key(-1, label, pk))
				throw InvariantError("packable degree produced an "
						"unpackable word");
			fresh = !std::binary_search(covered.begin(), covered.end(), pk);
		} else {
			ModVec v;
			v.emplace(ModKey{-1, label}, 1);
			fresh = red.add(std::move(v));
		}
		if (!fresh) return;
		ModVec unit;
		unit.emplace(ModKey{-1, label}, 1);
		gens.push_back(FreeGen{label.target(q), d, std::move(unit)});
		table.entries[{0, d}] += 1;
	};
	mod.for_each_basis(A, d, candidate);
}

}  // namespace detail

// Minimal graded free resolution, computed degree by degree: each
// level's generators are kernel elements surviving reduction modulo
// (kernel)·(augmentation ideal).  Betti entries count them; degrees
// beyond j_max stay invisible, so `finished` certifies termination
// only within the window.
inline BettiTable minimal_resolution(const GradedModuleData& mod,
		const AlgebraTables& A, int i_max, int j_max,
		long long row_guard = 400000) {
	if (i_max < 0) throw ValueError("negative homological bound");
	if (j_max > A.cap)
		throw ValueError("degree window beyond the certified table cap");
	const Quiver& q = A.quiver;
	for (int a = 0; a < q.arrow_count(); ++a)
		if (q.arrow(a).degree < 1)
			throw ValueError(
					"resolution needs strictly positive arrow degrees");

	BettiTable table;
	table.i_max = i_max;
	table.j_max = j_max;
	int dmin = mod.degree_begin();

	std::vector<detail::FreeGen> cur;
	for (int d = dmin; d <= j_max; ++d)
		detail::module_generators_slice(mod, A, d, cur, table);
	if (cur.empty()) {
		table.finished = true;
		return table;
	}

	for (int i = 1; i <= i_max; ++i) {
		std::map<int, std::vector<detail::ModVec>> kernels;
		bool any = false;
		for (int d = dmin; d <= j_max; ++d) {
			auto ker = detail::kernel_slice(mod, A, cur, d, row_guard);
			any = any || !ker.empty();
			kernels.emplace(d, std::move(ker));
		}
		if (!any) {
			table.finished = true;
			break;
		}
		std::vector<detail::FreeGen> next;
		for (int d = dmin; d <= j_max; ++d) {
			detail::VecReducer red;
			for (int a = 0; a < q.arrow_count(); ++a) {
				auto lower = kernels.find(d - q.arrow(a).degree);
				if (lower == kernels.end()) continue;
				Path pa{q.arrow(a).src, {a}};
				for (const detail::ModVec& kv : lower->second) {
					detail::ModVec w = detail::push_forward(mod, A, kv, pa);
					if (!w.empty()) red.add(std::move(w));
				}
			}
			for (const detail::ModVec& kv : kernels[d]) {
				if (!red.add(kv)) continue;
				for (const auto& [k, c] : kv)
					if (k.word.empty()) table.minimal_certified = false;
				int vtx = kv.begin()->first.word.target(q);
				next.push_back(detail::FreeGen{vtx, d, kv});
				table.entries[{i, d}] += 1;
			}
		}
		if (next.empty())
			throw InvariantError("nonzero syzygies produced no generators");
		cur = std::move(next);
	}
	return table;
}

// Chain combinatorics of a monomial algebra.  Level 0 holds the
// vertices and level 1 the arrows; a level i+1 chain extends a level
// i chain so that its tail plus the extension contains exactly one
// obstruction occurrence, flush right and properly straddling the
// tail boundary.
inline BettiTable anick_betti(const MonomialPresentation& mp, int i_max,
		long long chain_guard = 200000) {
	mp.validate();
	if (i_max < 0) throw ValueError("negative homological bound");
	const Quiver& q = mp.quiver;

	BettiTable table;
	table.i_max = i_max;
	table.entries[{0, 0}] = q.vertex_count();

	struct Chain {
		Path word;
		int tail;  // length of the last extension
	};
	std::vector<Chain> cur;
	if (i_max >= 1)
		for (int a = 0; a < q.arrow_count(); ++a) {
			cur.push_back(Chain{Path{q.arrow(a).src, {a}}, 1});
			table.entries[{1, q.arrow(a).degree}] += 1;
		}
	long long total = q.vertex_count() + static_cast<long long>(cur.size());

	for (int i = 2; i <= i_max && !cur.empty(); ++i) {
		std::vector<Chain> next;
		std::set<std::pair<std::vector<int>, int>> seen;
		for (const Chain& c : cur) {
			for (const Path& r : mp.relations) {
				int lt = c.tail;
				int lr = r.length();
				for (int ov = 1; ov <= std::min(lt, lr - 1); ++ov) {
					if (!std::equal(r.arrows.begin(), r.arrows.begin() + ov,
							c.word.arrows.end() - ov))
						continue;
					std::vector<int> win(c.word.arrows.end() - lt,
							c.word.arrows.end());
					win.insert(win.end(), r.arrows.begin() + ov,
							r.arrows.end());
					int occurrences = 0;
					bool flush = false;
					for (const Path& o : mp.relations) {
						int lo = o.length();
						for (int p = 0; p + lo <= static_cast<int>(win.size());
								++p)
							if (std::equal(o.arrows.begin(), o.arrows.end(),
									win.begin() + p)) {
								++occurrences;
								if (p + lo == static_cast<int>(win.size()) &&
										p < lt)
									flush = true;
							}
					}
					if (occurrences != 1 || !flush) continue;
					Chain nc;
					nc.word = c.word;
					nc.word.arrows.insert(nc.word.arrows.end(),
							r.arrows.begin() + ov, r.arrows.end());
					nc.tail = lr - ov;
					if (!seen.emplace(nc.word.arrows, nc.tail).second)
						throw InvariantError("duplicate chain");
					table.entries[{i, nc.word.degree(q)}] += 1;
					next.push_back(std::move(nc));
				}
			}
		}
		total += static_cast<long long>(next.size());
		if (total > chain_guard)
			throw GuardError("chain count exceeded the guard");
		cur = std::move(next);
	}
	table.finished = cur.empty();
	for (const auto& [ij, c] : table.entries)
		if (c > 0) table.j_max = std::max(table.j_max, ij.second);
	return table;
}

struct BettiInequalityRow {
	int i;
	long long module_betti;
	long long trivial_betti;
	int D_i;
	BigInt dim_window;  // dim A_n + ... + dim A_{n+D_i}
	BigInt bound;
	bool holds;
};

struct BettiInequalityReport {
	int n = 0;
	int i_max = 0;
	int j_max = 0;
	BettiTable module_table;
	BettiTable trivial_table;
	std::vector<BettiInequalityRow> rows;
	bool all_hold = true;
};

// Compares the Betti numbers of the truncation A_{>=n}[n] against
// (trivial-module Betti) x (a dim window) row by row.  The degree
// window for the resolution follows the localization of truncation
// generators, with slack.
inline BettiInequalityReport check_betti_inequality(
		const MonomialPresentation& mp, int n, int i_max, int slack = 2) {
	if (n < 0) throw ValueError("negative truncation cut");
	BettiInequalityReport rep;
	rep.n = n;
	rep.i_max = i_max;
	rep.trivial_table = anick_betti(mp, i_max);
	rep.j_max = n + rep.trivial_table.D(i_max) + slack;

	AlgebraTables A = algebra_tables(mp, rep.j_max);
	GradedModuleData M = truncation_module(n);
	rep.module_table = minimal_resolution(M, A, i_max, rep.j_max);

	auto dims = count_normal_by_degree(build_ufnarovski(mp),
			rep.j_max + rep.trivial_table.D(i_max));
	for (int i = 0; i <= i_max; ++i) {
		BettiInequalityRow row;
		row.i = i;
		row.module_betti = rep.module_table.b(i);
		row.trivial_betti = rep.trivial_table.b(i);
		row.D_i = rep.trivial_table.D(i);
		row.dim_window = 0;
		for (int j = n; j <= n + row.D_i; ++j)
			row.dim_window += dims[j].total;
		row.bound = BigInt(static_cast<long>(row.trivial_betti)) * row.dim_window;
		row.holds = BigInt(static_cast<long>(row.module_betti)) <= row.bound;
		rep.all_hold = rep.all_hold && row.holds;
		rep.rows.push_back(std::move(row));
	}
	return rep;
}

struct TowerBoundReport {
	int global_dim = 0;
	int D = 0;
	std::vector<long long> betti;  // b_0 .. b_{global_dim}
	std::vector<double> t_grid;
	std::vector<double> C_values;
	std::vector<double> B_values;
	BigInt C0 = 0;            // exact C(0)
	BigInt window_sum = 0;    // dim A_{n-D} + ... + dim A_{n+D}
	BigInt rank_complexity = 0;
	bool rank_bounded = false;            // exact comparison at t = 0
	std::vector<bool> rank_bounded_grid;  // per grid point, in doubles
};

// B(n,t) = C(t) * (dim A_{n-D} + ... + dim A_{n+D}) with
// C(t) = sum_{i=1}^{d} b_{i-1} e^{it} over the trivial-module Betti
// numbers, for algebras of finite global dimension d.  Also checks
// that the rank-based complexity sum_{j=-D}^{0} r(n+j) stays under
// B(n,0), exactly.
inline TowerBoundReport tower_bound(const MonomialPresentation& mp, int n,
		int D, const std::vector<double>& t_grid, int gd_guard = 12) {
	if (n < 0) throw ValueError("negative twist power");
	BettiTable bt = anick_betti(mp, gd_guard);
	if (!bt.finished)
		throw GuardError("global dimension not resolved below the guard");

	TowerBoundReport rep;
	rep.global_dim = bt.top_level();
	int d = rep.global_dim;
	int need = 0;
	for (int i = 0; i + 1 <= d; ++i) need = std::max(need, bt.D(i));
	if (D < need)
		throw ValueError("window radius below the Betti spread");
	rep.D = D;
	for (int i = 0; i <= d; ++i) rep.betti.push_back(bt.b(i));
	for (int i = 1; i <= d; ++i) rep.C0 += BigInt(static_cast<long>(bt.b(i - 1)));

	auto dims = count_normal_by_degree(build_ufnarovski(mp), n + D);
	for (int j = n - D; j <= n + D; ++j)
		if (j >= 0) rep.window_sum += dims[j].total;

	rep.t_grid = t_grid;
	double window = rep.window_sum.get_d();
	for (double t : t_grid) {
		double C = 0;
		for (int i = 1; i <= d; ++i)
			C += static_cast<double>(bt.b(i - 1)) * std::exp(i * t);
		rep.C_values.push_back(C);
		rep.B_values.push_back(C * window);
	}

	RankSequence rs = rank_sequence(build_ufnarovski(mp), n);
	for (int j = -D; j <= 0; ++j)
		if (n + j >= 0) rep.rank_complexity += rs.r[n + j];
	rep.rank_bounded = rep.rank_complexity <= rep.C0 * rep.window_sum;
	double rk = rep.rank_complexity.get_d();
	for (double B : rep.B_values)
		rep.rank_bounded_grid.push_back(rk <= B * (1 + 1e-12));
	return rep;
}

struct EulerIdentity {
	int degree_cap = 0;
	int levels = 0;  // chain levels that contributed
	bool holds = false;
};

// Alternating chain series times the Hilbert series, as matrices over
// vertex pairs, must telescope to the identity.  Chains are pruned by
// internal degree, which keeps every coefficient below the cap exact
// even at infinite global dimension.
inline EulerIdentity euler_identity_check(const MonomialPresentation& mp,
		int degree_cap = 12, long long chain_guard = 2000000) {
	mp.validate();
	const Quiver& q = mp.quiver;
	for (int a = 0; a < q.arrow_count(); ++a)
		if (q.arrow(a).degree < 1)
			throw ValueError("identity check needs strictly positive "
					"arrow degrees");
	int nv = q.vertex_count();
	EulerIdentity rep;
	rep.degree_cap = degree_cap;

	using Series = std::vector<BigInt>;
	auto zero = [&]() { return Series(degree_cap + 1, BigInt(0)); };
	std::vector<std::vector<Series>> H(nv, std::vector<Series>(nv, zero()));
	std::vector<std::vector<Series>> E(nv, std::vector<Series>(nv, zero()));

	AlgebraTables A = algebra_tables(mp, degree_cap);
	for (int u = 0; u < nv; ++u)
		for (int n = 0; n <= degree_cap; ++n)
			A.for_each_normal(u, n, [&](const Path& w) {
				H[u][w.target(q)][n] += 1;
			});

	struct Chain {
		Path word;
		int tail;
	};
	for (int v = 0; v < nv; ++v) E[v][v][0] += 1;
	std::vector<Chain> cur;
	long long total = 0;
	for (int a = 0; a < q.arrow_count(); ++a) {
		if (q.arrow(a).degree > degree_cap) continue;
		cur.push_back(Chain{Path{q.arrow(a).src, {a}}, 1});
	}
	int sign = -1;
	int level = 1;
	while (!cur.empty()) {
		rep.levels = level;
		for (const Chain& c : cur)
			E[c.word.base][c.word.target(q)][c.word.degree(q)] += sign;
		std::vector<Chain> next;
		for (const Chain& c : cur)
			for (const Path& r : mp.relations)
				for (int ov = 1; ov <= std::min(c.tail, r.length() - 1);
						++ov) {
					if (!std::equal(r.arrows.begin(), r.arrows.begin() + ov,
							c.word.arrows.end() - ov))
						continue;
					std::vector<int> win(c.word.arrows.end() - c.tail,
							c.word.arrows.end());
					win.insert(win.end(), r.arrows.begin() + ov,
							r.arrows.end());
					int occurrences = 0;
					bool flush = false;
					for (const Path& o : mp.relations) {
						int lo = o.length();
						for (int p = 0;
								p + lo <= static_cast<int>(win.size()); ++p)
							if (std::equal(o.arrows.begin(), o.arrows.end(),
									win.begin() + p)) {
								++occurrences;
								if (p + lo == static_cast<int>(win.size()) &&
										p < c.tail)
									flush = true;
							}
					}
					if (occurrences != 1 || !flush) continue;
					Chain nc;
					nc.word = c.word;
					nc.word.arrows.insert(nc.word.arrows.end(),
							r.arrows.begin() + ov, r.arrows.end());
					nc.tail = r.length() - ov;
					if (nc.word.degree(q) > degree_cap) continue;
					next.push_back(std::move(nc));
				}
		total += static_cast<long long>(next.size());
		if (total > chain_guard)
			throw GuardError("chain count exceeded the guard");
		cur = std::move(next);
		sign = -sign;
		++level;
	}

	rep.holds = true;
	for (int u = 0; u < nv; ++u)
		for (int v = 0; v < nv; ++v)
			for (int n = 0; n <= degree_cap; ++n) {
				BigInt acc = 0;
				for (int w = 0; w < nv; ++w)
					for (int k = 0; k <= n; ++k)
						acc += E[u][w][k] * H[w][v][n - k];
				BigInt want = (u == v && n == 0) ? 1 : 0;
				if (acc != want) rep.holds = false;
			}
	return rep;
}

}  // namespace qgrowth
