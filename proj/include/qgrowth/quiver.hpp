#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qgrowth/numeric.hpp"

namespace qgrowth {

struct Arrow {
	std::string name;
	int src = -1;
	int tgt = -1;
	int degree = 1;
};

// Finite quiver with nonnegative integer arrow degrees. Vertices and
// arrows are referenced by dense indices in declaration order.
class Quiver {
public:
	int add_vertex(const std::string& name) {
		if (name.empty()) throw ValueError("vertex name must be nonempty");
		if (vertex_index_.count(name))
			throw ValueError("duplicate vertex name: " + name);
		vertex_index_[name] = static_cast<int>(vertices_.size());
		vertices_.push_back(name);
		return static_cast<int>(vertices_.size()) - 1;
	}

	int add_arrow(const std::string& name, int src, int tgt, int degree) {
		if (name.empty()) throw ValueError("arrow name must be nonempty");
		if (arrow_index_.count(name))
			throw ValueError("duplicate arrow name: " + name);
		if (src < 0 || src >= vertex_count() || tgt < 0 || tgt >= vertex_count())
			throw ValueError("arrow " + name + " references unknown vertex");
		if (degree < 0)
			throw ValueError("arrow " + name + " has negative degree");
		arrow_index_[name] = static_cast<int>(arrows_.size());
		arrows_.push_back(Arrow{name, src, tgt, degree});
		return static_cast<int>(arrows_.size()) - 1;
	}

	int vertex_count() const { return static_cast<int>(vertices_.size()); }
	int arrow_count() const { return static_cast<int>(arrows_.size()); }

	const std::string& vertex_name(int v) const { return vertices_.at(v); }
	const Arrow& arrow(int a) const { return arrows_.at(a); }
	const std::vector<Arrow>& arrows() const { return arrows_; }
	const std::vector<std::string>& vertices() const { return vertices_; }

	int vertex_id(const std::string& name) const {
		auto it = vertex_index_.find(name);
		if (it == vertex_index_.end())
			throw ValueError("unknown vertex: " + name);
		return it->second;
	}

	int arrow_id(const std::string& name) const {
		auto it = arrow_index_.find(name);
		if (it == arrow_index_.end())
			throw ValueError("unknown arrow: " + name);
		return it->second;
	}

	bool has_vertex(const std::string& name) const {
		return vertex_index_.count(name) > 0;
	}
	bool has_arrow(const std::string& name) const {
		return arrow_index_.count(name) > 0;
	}

	// Grading sanity: degrees nonnegative (enforced on insert), some arrow
	// of positive degree unless there are none, and no directed cycle of
	// degree-0 arrows (such a cycle would make a graded piece infinite).
	void validate() const {
		if (vertices_.empty()) throw ValueError("quiver has no vertices");
		if (!arrows_.empty()) {
			bool positive = std::any_of(arrows_.begin(), arrows_.end(),
					[](const Arrow& a) { return a.degree > 0; });
			if (!positive)
				throw ValueError("grading is trivial: every arrow has degree 0");
		}
		if (has_degree_zero_cycle())
			throw ValueError("degree-0 arrows form a directed cycle");
	}

	bool has_degree_zero_cycle() const {
		std::vector<std::vector<int>> adj(vertex_count());
		for (const Arrow& a : arrows_)
			if (a.degree == 0) adj[a.src].push_back(a.tgt);
		// 0 = unseen, 1 = on stack, 2 = done
		std::vector<int> state(vertex_count(), 0);
		for (int s = 0; s < vertex_count(); ++s) {
			if (state[s]) continue;
			std::vector<std::pair<int, size_t>> stack{{s, 0}};
			state[s] = 1;
			while (!stack.empty()) {
				auto& [v, i] = stack.back();
				if (i < adj[v].size()) {
					int w = adj[v][i++];
					if (state[w] == 1) return true;
					if (state[w] == 0) {
						state[w] = 1;
						stack.push_back({w, 0});
					}
				} else {
					state[v] = 2;
					stack.pop_back();
				}
			}
		}
		return false;
	}

	bool operator==(const Quiver& o) const {
		if (vertices_ != o.vertices_) return false;
		if (arrows_.size() != o.arrows_.size()) return false;
		for (size_t i = 0; i < arrows_.size(); ++i) {
			const Arrow &a = arrows_[i], &b = o.arrows_[i];
			if (a.name != b.name || a.src != b.src || a.tgt != b.tgt ||
					a.degree != b.degree)
				return false;
		}
		return true;
	}

private:
	std::vector<std::string> vertices_;
	std::vector<Arrow> arrows_;
	std::map<std::string, int> vertex_index_;
	std::map<std::string, int> arrow_index_;
};

// Composable arrow sequence. The empty path sits at a single vertex
// (base); for nonempty paths base always equals the first arrow's source.
struct Path {
	int base = -1;
	std::vector<int> arrows;

	static Path at_vertex(int v) { return Path{v, {}}; }

	int length() const { return static_cast<int>(arrows.size()); }
	bool empty() const { return arrows.empty(); }

	int source(const Quiver&) const { return base; }
	int target(const Quiver& q) const {
		return arrows.empty() ? base : q.arrow(arrows.back()).tgt;
	}

	int degree(const Quiver& q) const {
		int d = 0;
		for (int a : arrows) d += q.arrow(a).degree;
		return d;
	}

	void validate(const Quiver& q) const {
		if (base < 0 || base >= q.vertex_count())
			throw ValueError("path based at unknown vertex");
		int at = base;
		for (int a : arrows) {
			if (a < 0 || a >= q.arrow_count())
				throw ValueError("path uses unknown arrow");
			if (q.arrow(a).src != at)
				throw ValueError("path is not composable at arrow " +
						q.arrow(a).name);
			at = q.arrow(a).tgt;
		}
	}

	// p.q traverses p first, then q.
	Path concat(const Quiver& q, const Path& rhs) const {
		if (target(q) != rhs.source(q))
			throw ValueError("paths are not composable");
		Path r = *this;
		r.arrows.insert(r.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
		return r;
	}

	bool operator==(const Path& o) const {
		if (arrows != o.arrows) return false;
		return !arrows.empty() || base == o.base;
	}
	bool operator!=(const Path& o) const { return !(*this == o); }

	// Arbitrary strict order for use as a map key.
	bool operator<(const Path& o) const {
		if (arrows != o.arrows) return arrows < o.arrows;
		if (arrows.empty()) return base < o.base;
		return false;
	}

	std::string str(const Quiver& q) const {
		if (arrows.empty()) return "e(" + q.vertex_name(base) + ")";
		std::string s;
		for (size_t i = 0; i < arrows.size(); ++i) {
			if (i) s += ".";
			s += q.arrow(arrows[i]).name;
		}
		return s;
	}
};

// Contiguous subword test: does `inner` occur inside `outer`?
inline bool is_subword(const std::vector<int>& inner,
		const std::vector<int>& outer) {
	if (inner.size() > outer.size()) return false;
	if (inner.empty()) return true;
	auto it = std::search(outer.begin(), outer.end(), inner.begin(), inner.end());
	return it != outer.end();
}

}  // namespace qgrowth
