#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qgrowth/numeric.hpp"

namespace qgrowth {

using SparseRow = std::map<int, Rational>;

// Incremental exact row space: feed rows, read off the rank.  Rows stay
// sparse; only the leading entry is chased, which is enough for rank
// and membership.
class RowReducer {
 public:
	SparseRow reduce(SparseRow row) const {
		while (!row.empty()) {
			auto head = row.begin();
			auto piv = pivots_.find(head->first);
			if (piv == pivots_.end()) break;
			Rational c = head->second;
			for (const auto& [col, v] : piv->second) {
				auto it = row.find(col);
				if (it == row.end()) {
					row.emplace(col, -c * v);
				} else {
					it->second -= c * v;
					if (it->second == 0) row.erase(it);
				}
			}
		}
		return row;
	}

	bool add_row(SparseRow row) {
		row = reduce(std::move(row));
		if (row.empty()) return false;
		Rational lead = row.begin()->second;
		for (auto& [col, v] : row) v /= lead;
		pivots_.emplace(row.begin()->first, std::move(row));
		return true;
	}

	bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

	int rank() const { return static_cast<int>(pivots_.size()); }

 private:
	std::map<int, SparseRow> pivots_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(DenseMatrix& a) {
	std::vector<int> pivot_cols;
	if (a.empty()) return pivot_cols;
	int rows = static_cast<int>(a.size());
	int cols = static_cast<int>(a[0].size());
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c) {
		int sel = -1;
		for (int i = r; i < rows; ++i)
			if (a[i][c] != 0) {
				sel = i;
				break;
			}
		if (sel < 0) continue;
		std::swap(a[r], a[sel]);
		Rational inv = a[r][c];
		for (int j = c; j < cols; ++j) a[r][j] /= inv;
		for (int i = 0; i < rows; ++i) {
			if (i == r || a[i][c] == 0) continue;
			Rational f = a[i][c];
			for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
		}
		pivot_cols.push_back(c);
		++r;
	}
	return pivot_cols;
}

inline int rank_dense(DenseMatrix a) {
	return static_cast<int>(rref(a).size());
}

// Basis of { x : a x = 0 }, columns of a being the unknowns.
inline std::vector<std::vector<Rational>> kernel_basis(DenseMatrix a) {
	if (a.empty()) return {};
	int cols = static_cast<int>(a[0].size());
	auto pivot_cols = rref(a);
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivot_cols) is_pivot[c] = true;
	std::vector<std::vector<Rational>> basis;
	for (int j = 0; j < cols; ++j) {
		if (is_pivot[j]) continue;
		std::vector<Rational> v(cols, Rational(0));
		v[j] = 1;
		for (size_t r = 0; r < pivot_cols.size(); ++r)
			v[pivot_cols[r]] = -a[r][j];
		basis.push_back(std::move(v));
	}
	return basis;
}

}  // namespace qgrowth
