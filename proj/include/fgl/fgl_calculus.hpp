#pragma once

#include "fgl/series.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgl {

// Coefficient table {a_ij : i,j >= 1} of a one-dimensional commutative
// formal group law F(x,y) = x + y + sum a_ij x^i y^j over R, truncated to
// i+j <= degree_bound.  Entries are stored once with i <= j; lookups are
// symmetric.  Absent entries are zero (which for a truncated coefficient
// ring is exactly the truncation of the full table).
template <typename R>
class FglTable {
public:
	using Elem = typename R::Elem;

	FglTable(R ring, int degree_bound) : ring_(std::move(ring)), degree_bound_(degree_bound)
	{
		if (degree_bound_ < 2)
			throw std::invalid_argument("degree bound below 2");
	}

	const R& ring() const { return ring_; }
	int degree_bound() const { return degree_bound_; }

	void set(int i, int j, Elem v)
	{
		check_index(i, j);
		auto key = canonical(i, j);
		if (ring_.is_zero(v))
			entries_.erase(key);
		else
			entries_[key] = std::move(v);
	}

	Elem at(int i, int j) const
	{
		if (i < 1 || j < 1)
			throw std::out_of_range("table index");
		auto it = entries_.find(canonical(i, j));
		return it == entries_.end() ? ring_.zero() : it->second;
	}

	// canonical (i <= j) nonzero entries
	const std::map<std::pair<int, int>, Elem>& entries() const { return entries_; }

private:
	static std::pair<int, int> canonical(int i, int j)
	{
		return i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
	}

	void check_index(int i, int j) const
	{
		if (i < 1 || j < 1 || i + j > degree_bound_)
			throw std::out_of_range("table index");
	}

	R ring_;
	int degree_bound_;
	std::map<std::pair<int, int>, Elem> entries_;
};

// F(p, q) for nilpotent-like series p, q sharing a shape.
template <typename R>
TruncatedSeries<R> formal_sum(const FglTable<R>& f, const TruncatedSeries<R>& p,
                              const TruncatedSeries<R>& q)
{
	if (p.has_constant_term() || q.has_constant_term())
		throw std::invalid_argument("not nilpotent-like");
	TruncatedSeries<R> out = p + q;
	std::vector<TruncatedSeries<R>> pp = {out.shape(), p}, qq = {out.shape(), q};
	pp[0].set_coeff(typename TruncatedSeries<R>::Exp(out.vars().size(), 0), f.ring().one());
	qq[0] = pp[0];
	auto term = [&](int a, int b, const typename R::Elem& c) {
		while (static_cast<int>(pp.size()) <= a)
			pp.push_back(pp.back() * p);
		while (static_cast<int>(qq.size()) <= b)
			qq.push_back(qq.back() * q);
		out = out + (pp[a] * qq[b]).scaled(c);
	};
	for (const auto& [ij, c] : f.entries()) {
		auto [i, j] = ij;
		term(i, j, c);
		if (i != j)
			term(j, i, c);
	}
	return out;
}

// The unique series with F(t, iota(t)) = 0 mod t^{cap+1}, solved degreewise.
template <typename R>
TruncatedSeries<R> formal_inverse(const FglTable<R>& f, int cap,
                                  const std::string& var = "t")
{
	if (cap < 1)
		throw std::invalid_argument("cap below 1");
	const R& ring = f.ring();
	TruncatedSeries<R> t =
	    TruncatedSeries<R>::variable(ring, {var}, {cap}, 0);
	TruncatedSeries<R> inv = t.shape();
	inv.set_coeff({1}, ring.neg(ring.one()));
	for (int k = 2; k <= cap; ++k) {
		// coefficient of t^k in t + sum a_ij t^i inv^j depends only on
		// lower-order coefficients of inv; the linear inv term absorbs it
		TruncatedSeries<R> residue = t;
		for (const auto& [ij, c] : f.entries()) {
			auto [i, j] = ij;
			residue = residue + (t.pow(i) * inv.pow(j)).scaled(c);
			if (i != j)
				residue = residue + (t.pow(j) * inv.pow(i)).scaled(c);
		}
		inv.set_coeff({k}, ring.neg(residue.coeff({k})));
	}
	return inv;
}

// [n]_F applied to a nilpotent-like series t: [0] = 0, [n+1] = F(t, [n]),
// [-n] = iota([n]).
template <typename R>
TruncatedSeries<R> n_series(const FglTable<R>& f, long n, const TruncatedSeries<R>& t)
{
	TruncatedSeries<R> acc = t.shape();
	long steps = n < 0 ? -n : n;
	for (long k = 0; k < steps; ++k)
		acc = formal_sum(f, t, acc);
	if (n < 0) {
		// depth large enough that substitution saturates the caps
		int depth = 1;
		for (int c : t.caps())
			depth = std::max(depth, c);
		if (t.total_cap())
			depth = std::min(depth, std::max(1, *t.total_cap()));
		TruncatedSeries<R> inv = formal_inverse(f, depth);
		acc = substitute(inv, {acc});
	}
	return acc;
}

// P(u) = -sum_{i,j>=1} a_ij u^{i-1} iota(u)^{j-1}: the class of the
// projective completion P(L (+) O) over the base, as a series in u = c1(L).
template <typename R>
TruncatedSeries<R> pbundle_class(const FglTable<R>& f, int cap,
                                 const std::string& var = "u")
{
	if (cap < 0)
		throw std::invalid_argument("negative cap");
	const R& ring = f.ring();
	TruncatedSeries<R> u =
	    TruncatedSeries<R>::variable(ring, {var}, {std::max(cap, 1)}, 0);
	TruncatedSeries<R> inv = formal_inverse(f, std::max(cap, 1), var);
	TruncatedSeries<R> out = u.shape();
	for (const auto& [ij, c] : f.entries()) {
		auto [i, j] = ij;
		out = out - (u.pow(i - 1) * inv.pow(j - 1)).scaled(c);
		if (i != j)
			out = out - (u.pow(j - 1) * inv.pow(i - 1)).scaled(c);
	}
	if (cap == 0) {
		// only the constant term survives
		TruncatedSeries<R> trunc(ring, out.vars(), {0});
		trunc.set_coeff({0}, out.constant_term());
		return trunc;
	}
	return out;
}

template <typename R>
struct IdentityReport {
	bool ok;
	TruncatedSeries<R> residual;
};

// Residual of u + iota - u*iota*P for independently supplied ingredients;
// nonzero residuals pinpoint which degree went wrong.
template <typename R>
TruncatedSeries<R> inverse_identity_residual(const TruncatedSeries<R>& u,
                                             const TruncatedSeries<R>& iota,
                                             const TruncatedSeries<R>& pclass)
{
	return u + iota - u * iota * pclass;
}

// u + iota(u) - u*iota(u)*P(u) = 0 mod u^{cap+1}; both series derived from f.
template <typename R>
IdentityReport<R> verify_inverse_identity(const FglTable<R>& f, int cap)
{
	const R& ring = f.ring();
	TruncatedSeries<R> u = TruncatedSeries<R>::variable(ring, {"u"}, {cap}, 0);
	TruncatedSeries<R> inv = formal_inverse(f, cap, "u");
	TruncatedSeries<R> p = pbundle_class(f, cap);
	TruncatedSeries<R> res = inverse_identity_residual(u, inv, p);
	return {res.is_zero(), res};
}

// S(x,y) = sum_{i,j>=1} a_ij x^{i-1} y^{j-1}, together with the exact
// splitting F(x,y) = x + y + x*y*S(x,y).
template <typename R>
TruncatedSeries<R> dpc_expand(const FglTable<R>& f, int cap_x, int cap_y)
{
	const R& ring = f.ring();
	std::vector<std::string> vars = {"x", "y"};
	std::vector<int> caps = {cap_x, cap_y};
	TruncatedSeries<R> x = TruncatedSeries<R>::variable(ring, vars, caps, 0);
	TruncatedSeries<R> y = TruncatedSeries<R>::variable(ring, vars, caps, 1);
	TruncatedSeries<R> s = x.shape();
	for (const auto& [ij, c] : f.entries()) {
		auto [i, j] = ij;
		s = s + (x.pow(i - 1) * y.pow(j - 1)).scaled(c);
		if (i != j)
			s = s + (x.pow(j - 1) * y.pow(i - 1)).scaled(c);
	}
	// the splitting is definitional; a failure here means broken arithmetic
	TruncatedSeries<R> lhs = formal_sum(f, x, y);
	TruncatedSeries<R> rhs = x + y + x * y * s;
	if (!(lhs == rhs))
		throw std::logic_error("double point splitting failed");
	return s;
}

} // namespace fgl
