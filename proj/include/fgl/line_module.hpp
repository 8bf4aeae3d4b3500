#pragma once

#include "fgl/fgl_calculus.hpp"
#include "fgl/mishchenko.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgl {

// Element of the free module B^{*,1}(pt) on the basis e_i = [P^i, O(1)]:
// a finitely supported coordinate vector over the coefficient ring.
template <typename R>
class LbElement {
public:
	using Elem = typename R::Elem;

	explicit LbElement(R ring) : ring_(std::move(ring)) {}

	static LbElement basis(const R& ring, int i)
	{
		if (i < 0)
			throw std::invalid_argument("negative basis index");
		LbElement e(ring);
		e.terms_.emplace(i, ring.one());
		return e;
	}

	const R& ring() const { return ring_; }
	const std::map<int, Elem>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	int max_index() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

	Elem coeff(int i) const
	{
		auto it = terms_.find(i);
		return it == terms_.end() ? ring_.zero() : it->second;
	}

	void set_coeff(int i, Elem v)
	{
		if (i < 0)
			throw std::invalid_argument("negative basis index");
		if (ring_.is_zero(v))
			terms_.erase(i);
		else
			terms_[i] = std::move(v);
	}

	void add_coeff(int i, const Elem& v)
	{
		auto it = terms_.find(i);
		if (it == terms_.end()) {
			if (!ring_.is_zero(v))
				terms_.emplace(i, v);
			return;
		}
		it->second = ring_.add(it->second, v);
		if (ring_.is_zero(it->second))
			terms_.erase(it);
	}

	friend LbElement operator+(const LbElement& a, const LbElement& b)
	{
		a.check(b);
		LbElement out = a;
		for (const auto& [i, v] : b.terms_)
			out.add_coeff(i, v);
		return out;
	}

	friend LbElement operator-(const LbElement& a, const LbElement& b)
	{
		a.check(b);
		LbElement out = a;
		for (const auto& [i, v] : b.terms_)
			out.add_coeff(i, b.ring_.neg(v));
		return out;
	}

	LbElement operator-() const
	{
		LbElement out(ring_);
		for (const auto& [i, v] : terms_)
			out.terms_.emplace(i, ring_.neg(v));
		return out;
	}

	// coefficientwise scaling: the point-level shadow of the cross product
	LbElement scaled(const Elem& s) const
	{
		LbElement out(ring_);
		if (ring_.is_zero(s))
			return out;
		for (const auto& [i, v] : terms_) {
			Elem sv = ring_.mul(s, v);
			if (!ring_.is_zero(sv))
				out.terms_.emplace(i, std::move(sv));
		}
		return out;
	}

	bool operator==(const LbElement& o) const
	{
		check(o);
		if (terms_.size() != o.terms_.size())
			return false;
		auto i = terms_.begin();
		auto j = o.terms_.begin();
		for (; i != terms_.end(); ++i, ++j)
			if (i->first != j->first || !ring_.equal(i->second, j->second))
				return false;
		return true;
	}

	// e_i carries homological weight i on top of its coefficient's weight.
	bool is_homogeneous(long w) const
	{
		for (const auto& [i, v] : terms_)
			if (!ring_.is_homogeneous(v, w - i))
				return false;
		return true;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (const auto& [i, v] : terms_) {
			if (!s.empty())
				s += " + ";
			s += "(" + ring_.to_string(v) + ")*e" + std::to_string(i);
		}
		return s;
	}

private:
	void check(const LbElement& o) const
	{
		if (!ring_.compatible(o.ring_))
			throw std::invalid_argument("ring mismatch");
	}

	R ring_;
	std::map<int, Elem> terms_;
};

template <typename R>
LbElement<R> kunneth_scale(const typename R::Elem& s, const LbElement<R>& e)
{
	return e.scaled(s);
}

// The differential: d e_i = e_{i-1} (a hyperplane section carrying O(1)),
// d e_0 = 0, extended coefficient-linearly.
template <typename R>
LbElement<R> shift(const LbElement<R>& e)
{
	LbElement<R> out(e.ring());
	for (const auto& [i, v] : e.terms())
		if (i > 0)
			out.set_coeff(i - 1, v);
	return out;
}

// Forgetful map e_i -> p_i.
template <typename R>
typename R::Elem forget(const LbElement<R>& e, const MishchenkoCache<R>& cache)
{
	if (e.max_index() > cache.depth())
		throw std::out_of_range("insufficient Mishchenko depth");
	auto acc = e.ring().zero();
	for (const auto& [i, v] : e.terms())
		acc = e.ring().add(acc, e.ring().mul(v, cache.at(i)));
	return acc;
}

// gamma = (sum_i p_i s^i)^{-1} truncated at s^K: the coefficient series of
// the projector psi_0 = sum gamma_k F d^k.
template <typename R>
struct PsiSeries {
	std::vector<typename R::Elem> gamma;

	int depth() const { return static_cast<int>(gamma.size()) - 1; }
};

template <typename R>
PsiSeries<R> build_psi(const MishchenkoCache<R>& cache, int depth)
{
	if (depth < 0)
		throw std::invalid_argument("negative depth");
	if (cache.depth() < depth)
		throw std::out_of_range("insufficient Mishchenko depth");
	const R& ring = cache.ring;
	PsiSeries<R> psi;
	psi.gamma.reserve(static_cast<std::size_t>(depth) + 1);
	psi.gamma.push_back(ring.one());
	for (int i = 1; i <= depth; ++i) {
		auto acc = ring.zero();
		for (int k = 1; k <= i; ++k)
			acc = ring.add(acc, ring.mul(cache.at(k), psi.gamma[i - k]));
		psi.gamma.push_back(ring.neg(acc));
	}
	return psi;
}

// psi_0(e) = sum_k gamma_k * forget(shift^k(e)); projects onto the e_0
// coordinate.
template <typename R>
typename R::Elem psi0(const LbElement<R>& e, const PsiSeries<R>& psi,
                      const MishchenkoCache<R>& cache)
{
	int top = e.max_index();
	if (top > psi.depth())
		throw std::out_of_range("insufficient psi depth");
	auto acc = e.ring().zero();
	LbElement<R> cur = e;
	for (int k = 0; k <= top; ++k) {
		acc = e.ring().add(acc, e.ring().mul(psi.gamma[k], forget(cur, cache)));
		cur = shift(cur);
	}
	return acc;
}

// Coordinates (beta_0,...,beta_M) with e = sum beta_i e_i, via psi_0 d^i.
template <typename R>
std::vector<typename R::Elem> coordinates(const LbElement<R>& e, const PsiSeries<R>& psi,
                                          const MishchenkoCache<R>& cache)
{
	std::vector<typename R::Elem> out;
	LbElement<R> cur = e;
	for (int i = 0; i <= e.max_index(); ++i) {
		out.push_back(psi0(cur, psi, cache));
		cur = shift(cur);
	}
	return out;
}

// Opaque tag for the Bott tower classes [P_i, M_i]; they generate the same
// module but no coordinates over the e_i are computed for them.
struct BottTowerClass {
	int index;

	bool operator==(const BottTowerClass& o) const { return index == o.index; }

	std::string str() const { return "[P_" + std::to_string(index) + ", M_" +
		                         std::to_string(index) + "]"; }
};

// The internal product e_i * e_j = [P^i x P^j, O(1,1)], computed through the
// recursion d eps_{ij} = sum f_ab eps_{i-a,j-b} ((a,b) != (0,0)) with
// forget(eps_{ij}) = p_i p_j, and coordinates recovered via psi_0 d^k.
template <typename R>
class LbProduct {
public:
	LbProduct(R ring, FglTable<R> table, PsiSeries<R> psi, MishchenkoCache<R> cache)
	    : ring_(std::move(ring)), table_(std::move(table)), psi_(std::move(psi)),
	      cache_(std::move(cache))
	{
	}

	const R& ring() const { return ring_; }
	const MishchenkoCache<R>& cache() const { return cache_; }
	const PsiSeries<R>& psi() const { return psi_; }

	// eps_{ij}; memoized, symmetric in (i,j)
	LbElement<R> basis_product(int i, int j) const
	{
		if (i < 0 || j < 0)
			throw std::invalid_argument("negative basis index");
		if (i == 0)
			return LbElement<R>::basis(ring_, j);
		if (j == 0)
			return LbElement<R>::basis(ring_, i);
		if (i > j)
			std::swap(i, j);
		{
			std::lock_guard<std::mutex> lock(mutex_);
			auto it = memo_.find({i, j});
			if (it != memo_.end())
				return it->second;
		}
		if (i + j > psi_.depth() || i + j > cache_.depth())
			throw std::out_of_range("insufficient depth for product");

		// d eps_{ij}: the formal group law spreads the hyperplane class
		LbElement<R> d(ring_);
		d = d + basis_product(i - 1, j) + basis_product(i, j - 1);
		for (const auto& [ab, c] : table_.entries()) {
			auto [a, b] = ab;
			if (a <= i && b <= j)
				d = d + basis_product(i - a, j - b).scaled(c);
			if (a != b && b <= i && a <= j)
				d = d + basis_product(i - b, j - a).scaled(c);
		}
		typename R::Elem ph = ring_.mul(cache_.at(i), cache_.at(j));
		LbElement<R> eps = assemble(d, ph, i + j);

		std::lock_guard<std::mutex> lock(mutex_);
		auto [it, fresh] = memo_.emplace(std::make_pair(i, j), std::move(eps));
		return it->second;
	}

	LbElement<R> mul(const LbElement<R>& a, const LbElement<R>& b) const
	{
		LbElement<R> out(ring_);
		for (const auto& [i, va] : a.terms())
			for (const auto& [j, vb] : b.terms())
				out = out + basis_product(i, j).scaled(ring_.mul(va, vb));
		return out;
	}

private:
	// Reconstruct eps from d(eps) and forget(eps): beta_k = psi_0(d^{k-1}
	// d(eps)) for k >= 1, and beta_0 folds the forgetful value into the
	// gamma series.
	LbElement<R> assemble(const LbElement<R>& d, const typename R::Elem& forgotten,
	                      int top) const
	{
		LbElement<R> out(ring_);
		typename R::Elem beta0 = ring_.mul(psi_.gamma[0], forgotten);
		LbElement<R> cur = d;
		for (int m = 1; m <= d.max_index() + 1; ++m) {
			beta0 = ring_.add(beta0, ring_.mul(psi_.gamma[m], forget(cur, cache_)));
			cur = shift(cur);
		}
		out.set_coeff(0, beta0);
		cur = d;
		for (int k = 1; k <= top; ++k) {
			out.set_coeff(k, psi0(cur, psi_, cache_));
			cur = shift(cur);
		}
		return out;
	}

	R ring_;
	FglTable<R> table_;
	PsiSeries<R> psi_;
	MishchenkoCache<R> cache_;

	mutable std::mutex mutex_;
	mutable std::map<std::pair<int, int>, LbElement<R>> memo_;
};

} // namespace fgl
