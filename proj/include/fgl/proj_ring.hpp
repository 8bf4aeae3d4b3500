#pragma once

#include "fgl/fgl_calculus.hpp"
#include "fgl/mishchenko.hpp"
#include "fgl/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fgl {

// B*(P^{n_1} x ... x P^{n_k}) = R[t_1,...,t_k]/(t_i^{n_i+1}).  The caps are
// the relations: no t_i^{n_i+1} is ever stored, so nilpotency of the
// hyperplane classes is structural.
template <typename R>
struct ProjRing {
	using Series = TruncatedSeries<R>;

	R ring;
	std::vector<int> caps;

	ProjRing(R r, std::vector<int> c) : ring(std::move(r)), caps(std::move(c))
	{
		if (caps.empty())
			throw std::invalid_argument("no factors");
		for (int n : caps)
			if (n < 0)
				throw std::invalid_argument("negative dimension");
	}

	std::size_t factors() const { return caps.size(); }

	std::vector<std::string> var_names() const
	{
		switch (caps.size()) {
		case 1:
			return {"t"};
		case 2:
			return {"x", "y"};
		case 3:
			return {"x", "y", "z"};
		default: {
			std::vector<std::string> names;
			for (std::size_t i = 1; i <= caps.size(); ++i)
				names.push_back("t" + std::to_string(i));
			return names;
		}
		}
	}

	Series zero() const { return Series(ring, var_names(), caps); }

	Series one() const
	{
		return Series::constant(ring, var_names(), caps, ring.one());
	}

	Series constant(typename R::Elem v) const
	{
		return Series::constant(ring, var_names(), caps, std::move(v));
	}

	Series hyperplane(std::size_t factor) const
	{
		return Series::variable(ring, var_names(), caps, factor);
	}
};

// c1(O(d_1,...,d_k)) as the iterated formal sum of [d_i]_F(t_i).
template <typename R>
TruncatedSeries<R> chern_of_line_bundle(const ProjRing<R>& pr, const FglTable<R>& f,
                                        const std::vector<long>& d)
{
	if (d.size() != pr.factors())
		throw std::invalid_argument("twist arity");
	TruncatedSeries<R> acc = pr.zero();
	for (std::size_t i = 0; i < d.size(); ++i)
		acc = formal_sum(f, acc, n_series(f, d[i], pr.hyperplane(i)));
	return acc;
}

// Read the a_ij (i <= n, j <= m) back off an expansion of c1(O(1,1)).
template <typename R>
FglTable<R> extract_fgl_coeffs(const ProjRing<R>& pr, const TruncatedSeries<R>& c)
{
	if (pr.factors() != 2)
		throw std::invalid_argument("extraction needs two factors");
	if (c.has_constant_term())
		throw std::invalid_argument("not a first Chern class");
	FglTable<R> out(pr.ring, std::max(2, pr.caps[0] + pr.caps[1]));
	for (const auto& [e, v] : c.terms()) {
		int i = e[0], j = e[1];
		if (i < 1 || j < 1)
			continue;
		if (i > j)
			continue; // symmetric partner checked below
		out.set(i, j, v);
	}
	for (const auto& [e, v] : c.terms()) {
		int i = e[0], j = e[1];
		if (i < 1 || j < 1 || i <= j)
			continue;
		typename R::Elem stored = out.at(i, j);
		if (pr.ring.is_zero(stored))
			out.set(i, j, v);
		else if (!pr.ring.equal(stored, v))
			throw std::invalid_argument("asymmetric Chern expansion");
	}
	return out;
}

// t^a, the class of a codimension-a linear subspace; zero past the cap.
template <typename R>
TruncatedSeries<R> hyperplane_divisor_power(const ProjRing<R>& pr, int a)
{
	if (pr.factors() != 1)
		throw std::invalid_argument("single factor expected");
	if (a < 0)
		throw std::invalid_argument("negative power");
	TruncatedSeries<R> out = pr.zero();
	if (a <= pr.caps[0])
		out.set_coeff({a}, pr.ring.one());
	return out;
}

// pi_*(sum c_a t^a) = sum c_a p_{n-a} along P^n -> pt.
template <typename R>
typename R::Elem pushforward_to_point(const ProjRing<R>& pr, const TruncatedSeries<R>& e,
                                      const MishchenkoCache<R>& cache)
{
	if (pr.factors() != 1)
		throw std::invalid_argument("single factor expected");
	int n = pr.caps[0];
	if (cache.depth() < n)
		throw std::out_of_range("insufficient Mishchenko depth");
	auto acc = pr.ring.zero();
	for (const auto& [exp, v] : e.terms())
		acc = pr.ring.add(acc, pr.ring.mul(v, cache.at(n - exp[0])));
	return acc;
}

// Multi-factor pushforward: integrate out factors left to right.
template <typename R>
typename R::Elem pushforward_full(const ProjRing<R>& pr, const TruncatedSeries<R>& e,
                                  const MishchenkoCache<R>& cache)
{
	if (pr.factors() == 1)
		return pushforward_to_point(pr, e, cache);
	int n = pr.caps[0];
	if (cache.depth() < n)
		throw std::out_of_range("insufficient Mishchenko depth");
	ProjRing<R> rest(pr.ring, std::vector<int>(pr.caps.begin() + 1, pr.caps.end()));
	TruncatedSeries<R> pushed = rest.zero();
	for (const auto& [exp, v] : e.terms()) {
		std::vector<int> tail(exp.begin() + 1, exp.end());
		pushed.add_coeff(tail, pr.ring.mul(v, cache.at(n - exp[0])));
	}
	return pushforward_full(rest, pushed, cache);
}

} // namespace fgl
