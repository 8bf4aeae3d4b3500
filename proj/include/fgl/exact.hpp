#pragma once

#include "fgl/numeric.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fgl {

// Sparse integer matrix with fixed dimensions. Absent entries are zero;
// stored entries are always nonzero, keyed by (row, col) in sorted order.
class ExactMatrix {
public:
	using Key = std::pair<std::size_t, std::size_t>;

	ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

	static ExactMatrix identity(std::size_t n)
	{
		ExactMatrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m.set(i, i, 1);
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Int at(std::size_t r, std::size_t c) const
	{
		check_index(r, c);
		auto it = entries_.find({r, c});
		return it == entries_.end() ? Int(0) : it->second;
	}

	void set(std::size_t r, std::size_t c, Int v)
	{
		check_index(r, c);
		if (v == 0)
			entries_.erase({r, c});
		else
			entries_[{r, c}] = std::move(v);
	}

	const std::map<Key, Int>& entries() const { return entries_; }

	bool operator==(const ExactMatrix& o) const
	{
		return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
	}

	ExactMatrix transpose() const
	{
		ExactMatrix t(cols_, rows_);
		for (const auto& [k, v] : entries_)
			t.set(k.second, k.first, v);
		return t;
	}

	friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
	{
		if (a.cols_ != b.rows_)
			throw std::invalid_argument("shape");
		ExactMatrix p(a.rows_, b.cols_);
		std::map<Key, Int> acc;
		for (const auto& [ka, va] : a.entries_)
			for (const auto& [kb, vb] : b.entries_)
				if (ka.second == kb.first)
					acc[{ka.first, kb.second}] += va * vb;
		for (auto& [k, v] : acc)
			p.set(k.first, k.second, std::move(v));
		return p;
	}

	std::vector<Rat> apply(const std::vector<Rat>& v) const
	{
		if (v.size() != cols_)
			throw std::invalid_argument("shape");
		std::vector<Rat> out(rows_, Rat(0));
		for (const auto& [k, e] : entries_)
			out[k.first] += Rat(e) * v[k.second];
		return out;
	}

	std::vector<Int> apply(const std::vector<Int>& v) const
	{
		if (v.size() != cols_)
			throw std::invalid_argument("shape");
		std::vector<Int> out(rows_, Int(0));
		for (const auto& [k, e] : entries_)
			out[k.first] += e * v[k.second];
		return out;
	}

private:
	void check_index(std::size_t r, std::size_t c) const
	{
		if (r >= rows_ || c >= cols_)
			throw std::out_of_range("matrix index");
	}

	std::size_t rows_, cols_;
	std::map<Key, Int> entries_;
};

// left_transform * input * right_transform == diagonal matrix of `diagonal`,
// each nonzero entry nonnegative and dividing its successor. The inverse
// transforms are accumulated during the reduction so callers can reconstruct
// the input without a separate matrix inversion.
struct SnfResult {
	std::vector<Int> diagonal;
	ExactMatrix left_transform;
	ExactMatrix right_transform;
	ExactMatrix left_inverse;
	ExactMatrix right_inverse;

	ExactMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const
	{
		ExactMatrix d(rows, cols);
		for (std::size_t i = 0; i < diagonal.size(); ++i)
			d.set(i, i, diagonal[i]);
		return d;
	}
};

namespace detail {

class SnfWorker {
public:
	// track_right = false skips the column transforms: the working matrix
	// is still fully reduced, but only L and L^-1 come out.  Saves
	// O(cols^2) big integers when the input has many more columns than
	// rows' worth of content (relation matrices do).
	explicit SnfWorker(const ExactMatrix& m, bool track_right = true)
	    : rows_(m.rows()), cols_(m.cols()), track_right_(track_right),
	      w_(rows_, std::vector<Int>(cols_, Int(0))),
	      left_(ExactMatrix::identity(rows_)), left_inv_(ExactMatrix::identity(rows_)),
	      right_(ExactMatrix::identity(track_right ? cols_ : 0)),
	      right_inv_(ExactMatrix::identity(track_right ? cols_ : 0))
	{
		for (const auto& [k, v] : m.entries())
			w_[k.first][k.second] = v;
	}

	SnfResult run()
	{
		std::size_t limit = std::min(rows_, cols_);
		for (std::size_t t = 0; t < limit; ++t) {
			if (!select_pivot(t))
				break;
			reduce_pivot(t);
			if (w_[t][t] < 0)
				negate_row(t);
		}
		SnfResult out{{}, std::move(left_), std::move(right_), std::move(left_inv_),
		              std::move(right_inv_)};
		out.diagonal.reserve(limit);
		for (std::size_t i = 0; i < limit; ++i)
			out.diagonal.push_back(w_[i][i]);
		return out;
	}

private:
	// Smallest |value| wins, ties broken by (row, col); keeps runs deterministic.
	bool select_pivot(std::size_t t)
	{
		bool found = false;
		std::size_t pr = t, pc = t;
		Int best;
		for (std::size_t r = t; r < rows_; ++r)
			for (std::size_t c = t; c < cols_; ++c) {
				if (w_[r][c] == 0)
					continue;
				Int a = abs(w_[r][c]);
				if (!found || a < best) {
					found = true;
					best = a;
					pr = r;
					pc = c;
				}
			}
		if (!found)
			return false;
		if (pr != t)
			swap_rows(t, pr);
		if (pc != t)
			swap_cols(t, pc);
		return true;
	}

	void reduce_pivot(std::size_t t)
	{
		for (;;) {
			if (w_[t][t] < 0)
				negate_row(t);
			bool restart = false;
			for (std::size_t r = t + 1; r < rows_ && !restart; ++r) {
				if (w_[r][t] == 0)
					continue;
				Int q = nearest_quotient(w_[r][t], w_[t][t]);
				if (q != 0)
					add_row(r, t, -q);
				if (w_[r][t] != 0) {
					// remainder strictly smaller than the pivot; restart
					// so the new pivot is normalized before reuse
					swap_rows(t, r);
					restart = true;
				}
			}
			if (restart)
				continue;
			for (std::size_t c = t + 1; c < cols_ && !restart; ++c) {
				if (w_[t][c] == 0)
					continue;
				Int q = nearest_quotient(w_[t][c], w_[t][t]);
				if (q != 0)
					add_col(c, t, -q);
				if (w_[t][c] != 0) {
					swap_cols(t, c);
					restart = true;
				}
			}
			if (restart)
				continue;
			// enforce the divisibility chain before moving on
			if (!fix_divisibility(t))
				return;
		}
	}

	bool fix_divisibility(std::size_t t)
	{
		for (std::size_t r = t + 1; r < rows_; ++r)
			for (std::size_t c = t + 1; c < cols_; ++c)
				if (w_[r][c] % w_[t][t] != 0) {
					add_row(t, r, 1);
					return true;
				}
		return false;
	}

	static Int nearest_quotient(const Int& a, const Int& b)
	{
		// b > 0 here; pick q with |a - q*b| <= b/2
		Int q, r;
		mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
		if (2 * r > b)
			q += 1;
		return q;
	}

	// Row ops premultiply (W = L * A * R), so L gets the same op and
	// L^-1 the inverse op on columns; dually for column ops.
	void swap_rows(std::size_t a, std::size_t b)
	{
		std::swap(w_[a], w_[b]);
		mat_swap_rows(left_, a, b);
		mat_swap_cols(left_inv_, a, b);
	}

	void swap_cols(std::size_t a, std::size_t b)
	{
		for (std::size_t r = 0; r < rows_; ++r)
			std::swap(w_[r][a], w_[r][b]);
		if (!track_right_)
			return;
		mat_swap_cols(right_, a, b);
		mat_swap_rows(right_inv_, a, b);
	}

	void negate_row(std::size_t a)
	{
		for (std::size_t c = 0; c < cols_; ++c)
			w_[a][c] = -w_[a][c];
		mat_scale_row(left_, a, -1);
		mat_scale_col(left_inv_, a, -1);
	}

	// row_a += q*row_b: W' = E*W, so L' = E*L and L'^-1 = L^-1 * E^-1
	void add_row(std::size_t a, std::size_t b, const Int& q)
	{
		for (std::size_t c = 0; c < cols_; ++c)
			w_[a][c] += q * w_[b][c];
		mat_add_row(left_, a, b, q);
		mat_add_col(left_inv_, b, a, -q);
	}

	void add_col(std::size_t a, std::size_t b, const Int& q)
	{
		for (std::size_t r = 0; r < rows_; ++r)
			w_[r][a] += q * w_[r][b];
		if (!track_right_)
			return;
		mat_add_col(right_, a, b, q);
		mat_add_row(right_inv_, b, a, -q);
	}

	static void mat_swap_rows(ExactMatrix& m, std::size_t a, std::size_t b)
	{
		std::vector<std::pair<std::size_t, Int>> ra, rb;
		for (const auto& [k, v] : m.entries()) {
			if (k.first == a)
				ra.emplace_back(k.second, v);
			else if (k.first == b)
				rb.emplace_back(k.second, v);
		}
		for (auto& [c, v] : ra)
			m.set(a, c, 0);
		for (auto& [c, v] : rb)
			m.set(b, c, 0);
		for (auto& [c, v] : ra)
			m.set(b, c, v);
		for (auto& [c, v] : rb)
			m.set(a, c, v);
	}

	static void mat_swap_cols(ExactMatrix& m, std::size_t a, std::size_t b)
	{
		std::vector<std::pair<std::size_t, Int>> ca, cb;
		for (const auto& [k, v] : m.entries()) {
			if (k.second == a)
				ca.emplace_back(k.first, v);
			else if (k.second == b)
				cb.emplace_back(k.first, v);
		}
		for (auto& [r, v] : ca)
			m.set(r, a, 0);
		for (auto& [r, v] : cb)
			m.set(r, b, 0);
		for (auto& [r, v] : ca)
			m.set(r, b, v);
		for (auto& [r, v] : cb)
			m.set(r, a, v);
	}

	static void mat_scale_row(ExactMatrix& m, std::size_t a, int s)
	{
		std::vector<std::pair<std::size_t, Int>> row;
		for (const auto& [k, v] : m.entries())
			if (k.first == a)
				row.emplace_back(k.second, v);
		for (auto& [c, v] : row)
			m.set(a, c, v * s);
	}

	static void mat_scale_col(ExactMatrix& m, std::size_t a, int s)
	{
		std::vector<std::pair<std::size_t, Int>> col;
		for (const auto& [k, v] : m.entries())
			if (k.second == a)
				col.emplace_back(k.first, v);
		for (auto& [r, v] : col)
			m.set(r, a, v * s);
	}

	// row_a += q * row_b
	static void mat_add_row(ExactMatrix& m, std::size_t a, std::size_t b, const Int& q)
	{
		std::vector<std::pair<std::size_t, Int>> rb;
		for (const auto& [k, v] : m.entries())
			if (k.first == b)
				rb.emplace_back(k.second, v);
		for (auto& [c, v] : rb)
			m.set(a, c, m.at(a, c) + q * v);
	}

	// col_a += q * col_b
	static void mat_add_col(ExactMatrix& m, std::size_t a, std::size_t b, const Int& q)
	{
		std::vector<std::pair<std::size_t, Int>> cb;
		for (const auto& [k, v] : m.entries())
			if (k.second == b)
				cb.emplace_back(k.first, v);
		for (auto& [r, v] : cb)
			m.set(r, a, m.at(r, a) + q * v);
	}

	std::size_t rows_, cols_;
	bool track_right_;
	std::vector<std::vector<Int>> w_;
	ExactMatrix left_, left_inv_, right_, right_inv_;
};

} // namespace detail

inline SnfResult smith_normal_form(const ExactMatrix& m)
{
	return detail::SnfWorker(m).run();
}

// Diagonal and row transforms only; right_transform/right_inverse come back
// with zero dimensions.
inline SnfResult smith_normal_form_left(const ExactMatrix& m)
{
	return detail::SnfWorker(m, false).run();
}

// transform * input == hermite, transform unimodular; the Hermite form is
// the canonical row-echelon representative of the row lattice: positive
// pivots, entries above a pivot reduced into [0, pivot), zero rows last.
struct HnfResult {
	ExactMatrix hermite;
	ExactMatrix transform;
};

inline HnfResult hermite_normal_form(const ExactMatrix& m)
{
	std::size_t rows = m.rows(), cols = m.cols();
	std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols, Int(0)));
	for (const auto& [k, v] : m.entries())
		w[k.first][k.second] = v;
	ExactMatrix u = ExactMatrix::identity(rows);

	auto add_row = [&](std::size_t a, std::size_t b, const Int& q) {
		for (std::size_t c = 0; c < cols; ++c)
			w[a][c] += q * w[b][c];
		std::vector<std::pair<std::size_t, Int>> rb;
		for (const auto& [k, v] : u.entries())
			if (k.first == b)
				rb.emplace_back(k.second, v);
		for (auto& [c, v] : rb)
			u.set(a, c, u.at(a, c) + q * v);
	};
	auto swap_rows = [&](std::size_t a, std::size_t b) {
		std::swap(w[a], w[b]);
		std::vector<std::pair<std::size_t, Int>> ra, rb;
		for (const auto& [k, v] : u.entries()) {
			if (k.first == a)
				ra.emplace_back(k.second, v);
			else if (k.first == b)
				rb.emplace_back(k.second, v);
		}
		for (auto& [c, v] : ra)
			u.set(a, c, 0);
		for (auto& [c, v] : rb)
			u.set(b, c, 0);
		for (auto& [c, v] : ra)
			u.set(b, c, v);
		for (auto& [c, v] : rb)
			u.set(a, c, v);
	};
	auto negate_row = [&](std::size_t a) {
		for (std::size_t c = 0; c < cols; ++c)
			w[a][c] = -w[a][c];
		std::vector<std::pair<std::size_t, Int>> ra;
		for (const auto& [k, v] : u.entries())
			if (k.first == a)
				ra.emplace_back(k.second, v);
		for (auto& [c, v] : ra)
			u.set(a, c, -v);
	};

	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		for (;;) {
			bool found = false;
			std::size_t best = r;
			for (std::size_t i = r; i < rows; ++i) {
				if (w[i][c] == 0)
					continue;
				if (!found || abs(w[i][c]) < abs(w[best][c])) {
					found = true;
					best = i;
				}
			}
			if (!found)
				break;
			if (best != r)
				swap_rows(r, best);
			if (w[r][c] < 0)
				negate_row(r);
			bool clean = true;
			for (std::size_t i = r + 1; i < rows; ++i) {
				if (w[i][c] == 0)
					continue;
				Int q, rem;
				mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
				            w[i][c].get_mpz_t(), w[r][c].get_mpz_t());
				if (2 * rem > w[r][c])
					q += 1;
				if (q != 0)
					add_row(i, r, -q);
				if (w[i][c] != 0)
					clean = false;
			}
			if (clean) {
				// reduce the entries above the pivot into [0, pivot)
				for (std::size_t i = 0; i < r; ++i) {
					Int q;
					mpz_fdiv_q(q.get_mpz_t(), w[i][c].get_mpz_t(),
					           w[r][c].get_mpz_t());
					if (q != 0)
						add_row(i, r, -q);
				}
				++r;
				break;
			}
		}
	}

	ExactMatrix h(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t c = 0; c < cols; ++c)
			if (w[i][c] != 0)
				h.set(i, c, w[i][c]);
	return {std::move(h), std::move(u)};
}

struct LatticeMembership {
	bool member = false;
	std::vector<Int> coords; // witness with basis * coords == v when member
};

// Does v lie in the integer span of the columns of `basis`?  Solved through
// the Smith form: L*B*R = D turns B*x = v into D*z = L*v with x = R*z.
inline LatticeMembership lattice_member(const ExactMatrix& basis, const std::vector<Rat>& v)
{
	if (v.size() != basis.rows())
		throw std::invalid_argument("shape");
	SnfResult snf = smith_normal_form(basis);
	std::vector<Rat> w = snf.left_transform.apply(v);
	std::size_t n = basis.cols();
	std::vector<Int> z(n, Int(0));
	for (std::size_t i = 0; i < w.size(); ++i) {
		bool pivot = i < snf.diagonal.size() && snf.diagonal[i] != 0;
		if (!pivot) {
			if (w[i] != 0)
				return {};
			continue;
		}
		Rat q = w[i] / Rat(snf.diagonal[i]);
		if (!is_integer(q))
			return {};
		z[i] = numerator(q);
	}
	std::vector<Int> x = snf.right_transform.apply(z);
	return {true, std::move(x)};
}

} // namespace fgl
