#pragma once

#include "fgl/line_module.hpp"
#include "fgl/proj_ring.hpp"

#include <stdexcept>
#include <vector>

namespace fgl {

// A point of the left-hand side of the weak projective bundle formula:
// (alpha_0,...,alpha_n) with alpha_i destined for t^i.
template <typename R>
struct WpbfDecomposition {
	int n;
	std::vector<typename R::Elem> alphas; // exactly n+1

	static WpbfDecomposition zero(const R& ring, int n)
	{
		WpbfDecomposition d{n, {}};
		d.alphas.assign(static_cast<std::size_t>(n) + 1, ring.zero());
		return d;
	}
};

// Proj: (alpha_i) -> sum t^i alpha_i in B*(P^n); the orientation theta(pr_2)
// is already absorbed into the ring model.
template <typename R>
TruncatedSeries<R> proj_map(const WpbfDecomposition<R>& d, const ProjRing<R>& pr)
{
	if (pr.factors() != 1 || pr.caps[0] != d.n)
		throw std::invalid_argument("dimension mismatch");
	if (static_cast<int>(d.alphas.size()) != d.n + 1)
		throw std::invalid_argument("length mismatch");
	TruncatedSeries<R> out = pr.zero();
	for (int i = 0; i <= d.n; ++i)
		out.set_coeff({i}, d.alphas[static_cast<std::size_t>(i)]);
	return out;
}

// Embed B*(P^n) into B^{*,1}(pt): t^a is a linear P^{n-a} carrying O(1), so
// sum c_a t^a -> sum kunneth_scale(c_a, e_{n-a}).
template <typename R>
LbElement<R> iota(const TruncatedSeries<R>& e, const ProjRing<R>& pr)
{
	if (pr.factors() != 1)
		throw std::invalid_argument("single factor expected");
	int n = pr.caps[0];
	LbElement<R> out(pr.ring);
	for (const auto& [exp, v] : e.terms())
		out.add_coeff(n - exp[0], v);
	return out;
}

// Invert Proj through psi_0 d^i: alpha_{n-i} = psi_0(d^i iota(e)).
template <typename R>
WpbfDecomposition<R> decompose(const TruncatedSeries<R>& e, const ProjRing<R>& pr,
                               const PsiSeries<R>& psi, const MishchenkoCache<R>& cache)
{
	if (pr.factors() != 1)
		throw std::invalid_argument("single factor expected");
	int n = pr.caps[0];
	LbElement<R> emb = iota(e, pr);
	std::vector<typename R::Elem> beta = coordinates(emb, psi, cache);
	WpbfDecomposition<R> out = WpbfDecomposition<R>::zero(pr.ring, n);
	for (std::size_t i = 0; i < beta.size(); ++i)
		out.alphas[static_cast<std::size_t>(n) - i] = beta[i];
	return out;
}

} // namespace fgl
