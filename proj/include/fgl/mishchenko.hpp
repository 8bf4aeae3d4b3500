#pragma once

#include "fgl/fgl_calculus.hpp"
#include "fgl/lazard.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fgl {

// The classes p_n = [P^n -> pt], indexed from p_0 = 1.
template <typename R>
struct MishchenkoCache {
	R ring;
	std::vector<typename R::Elem> p;

	int depth() const { return static_cast<int>(p.size()) - 1; }

	const typename R::Elem& at(int n) const
	{
		if (n < 0 || n > depth())
			throw std::out_of_range("insufficient Mishchenko depth");
		return p[static_cast<std::size_t>(n)];
	}
};

// Coefficients of log_F(t) = t + m_1 t^2 + ... solved degreewise from
// log(F(x,y)) = log(x) + log(y) over a ring containing the rationals.
// Returns c with log(t) = sum c[k] t^k, c[0] = 0, c[1] = 1, c[k+1] = m_k.
template <typename RQ>
std::vector<typename RQ::Elem> solve_logarithm(const FglTable<RQ>& f, int n_max)
{
	if (n_max < 0)
		throw std::invalid_argument("negative depth");
	const RQ& ring = f.ring();
	using Ser = TruncatedSeries<RQ>;
	int cap = n_max + 1;
	std::vector<std::string> vars = {"x", "y"};
	std::vector<int> caps = {cap, cap};
	Ser x = Ser::variable(ring, vars, caps, 0, cap);
	Ser y = Ser::variable(ring, vars, caps, 1, cap);
	Ser fxy = formal_sum(f, x, y);

	std::vector<Ser> fpow = {x.shape(), fxy};
	std::vector<Ser> xpow = {x.shape(), x};
	std::vector<Ser> ypow = {x.shape(), y};
	for (int l = 2; l <= cap; ++l) {
		fpow.push_back(fpow.back() * fxy);
		xpow.push_back(xpow.back() * x);
		ypow.push_back(ypow.back() * y);
	}

	// gradedness of m_k is only a meaningful invariant when the table
	// itself is graded (entry (i,j) of weight i+j-1); numeric
	// specializations collapse the grading
	bool graded = true;
	for (const auto& [ij, coeffv] : f.entries())
		if (!ring.is_homogeneous(coeffv, ij.first + ij.second - 1))
			graded = false;

	std::vector<typename RQ::Elem> c(static_cast<std::size_t>(cap) + 1, ring.zero());
	c[1] = ring.one();
	for (int k = 1; k <= n_max; ++k) {
		// coefficient of x^k y in sum_{l<=k} c_l F^l; the unknown c_{k+1}
		// enters through (x+y)^{k+1} with multiplicity k+1
		auto known = ring.zero();
		for (int l = 1; l <= k; ++l)
			known = ring.add(known, ring.mul(c[l], fpow[l].coeff({k, 1})));
		c[k + 1] = ring.div_int(ring.neg(known), k + 1);
		if (graded && !ring.is_homogeneous(c[k + 1], k))
			throw std::logic_error("logarithm coefficient not homogeneous");
	}

	Ser residual = x.shape();
	for (int l = 1; l <= cap; ++l)
		residual = residual + (fpow[l] - xpow[l] - ypow[l]).scaled(c[l]);
	if (!residual.is_zero())
		throw std::logic_error("logarithm functional equation failed");
	return c;
}

// p_n := (n+1) m_n for any rational-mode table.
template <typename RQ>
MishchenkoCache<RQ> mishchenko_for_table(const FglTable<RQ>& f, int n_max)
{
	const RQ& ring = f.ring();
	std::vector<typename RQ::Elem> c = solve_logarithm(f, n_max);
	MishchenkoCache<RQ> cache{ring, {}};
	cache.p.reserve(static_cast<std::size_t>(n_max) + 1);
	cache.p.push_back(ring.one());
	for (int n = 1; n <= n_max; ++n)
		cache.p.push_back(ring.mul(c[n + 1], ring.from_int(n + 1)));
	return cache;
}

inline GradedElement<Rat> to_rational(const GradedElement<Int>& e)
{
	GradedElement<Rat> out(e.presentation());
	for (const auto& [w, v] : e.coords()) {
		std::vector<Rat> nv(v.size());
		for (std::size_t k = 0; k < v.size(); ++k)
			nv[k] = Rat(v[k]);
		out.set_component(w, std::move(nv));
	}
	return out;
}

inline std::optional<GradedElement<Int>> to_integral(const GradedElement<Rat>& e)
{
	GradedElement<Int> out(e.presentation());
	for (const auto& [w, v] : e.coords()) {
		std::vector<Int> nv(v.size());
		for (std::size_t k = 0; k < v.size(); ++k) {
			if (!is_integer(v[k]))
				return std::nullopt;
			nv[k] = numerator(v[k]);
		}
		out.set_component(w, std::move(nv));
	}
	return out;
}

// Universal cache: rational classes plus, for each integral p_n, an explicit
// integer polynomial in the a_ij reducing to it.  The certificate is the
// witness returned by the lattice-membership test against the image of the
// weight-n monomial lattice.
struct UniversalMishchenko {
	std::shared_ptr<const LazardPresentation> pres;
	MishchenkoCache<LazardRing<Rat>> rational;
	std::vector<std::optional<MultiPoly<Int>>> certificates;

	int depth() const { return rational.depth(); }

	bool integral(int n) const
	{
		if (n < 0 || n > depth())
			throw std::out_of_range("insufficient Mishchenko depth");
		return certificates[static_cast<std::size_t>(n)].has_value();
	}

	MishchenkoCache<LazardRing<Int>> integral_cache() const
	{
		LazardRing<Int> ring(pres);
		MishchenkoCache<LazardRing<Int>> out{ring, {}};
		for (int n = 0; n <= depth(); ++n) {
			if (!integral(n))
				throw std::domain_error("non-integral Mishchenko element p_" +
				                        std::to_string(n));
			out.p.push_back(
			    reduce<Int>(pres, *certificates[static_cast<std::size_t>(n)]));
		}
		return out;
	}

	template <typename Target>
	MishchenkoCache<Target> specialized(const LazardMorphism<Target>& m) const
	{
		m.validate();
		MishchenkoCache<Target> out{m.target, {}};
		for (int n = 0; n <= depth(); ++n) {
			if (!integral(n))
				throw std::domain_error("non-integral Mishchenko element p_" +
				                        std::to_string(n));
			out.p.push_back(
			    m.apply_poly(*certificates[static_cast<std::size_t>(n)]));
		}
		return out;
	}
};

inline UniversalMishchenko universal_mishchenko(
    const std::shared_ptr<const LazardPresentation>& pres, int n_max)
{
	if (n_max > pres->max_weight())
		throw std::invalid_argument("depth beyond truncation");
	FglTable<LazardRing<Rat>> fq = universal_fgl_table_q(pres);
	UniversalMishchenko out{pres, mishchenko_for_table(fq, n_max), {}};
	out.certificates.resize(static_cast<std::size_t>(n_max) + 1);

	// p_0 = 1
	out.certificates[0] = MultiPoly<Int>::constant(Int(1));

	for (int n = 1; n <= n_max; ++n) {
		const GradedElement<Rat>& pn = out.rational.p[static_cast<std::size_t>(n)];
		if (pn.is_zero()) {
			out.certificates[static_cast<std::size_t>(n)] = MultiPoly<Int>::zero();
			continue;
		}
		if (!pn.is_homogeneous(n))
			throw std::logic_error("p_n not homogeneous");
		const auto& comp = pres->component(n);
		// normal-form coordinates are exactly the free coordinates
		std::vector<Rat> target = pn.component(n);
		LatticeMembership hit = lattice_member(pres->lattice_basis_matrix(n), target);
		if (!hit.member)
			continue;
		MultiPoly<Int> cert;
		for (std::size_t idx = 0; idx < hit.coords.size(); ++idx)
			cert.add_term(comp.monomials[idx], hit.coords[idx]);
		if (!(to_rational(reduce<Int>(pres, cert)) == pn))
			throw std::logic_error("certificate does not reduce to p_n");
		out.certificates[static_cast<std::size_t>(n)] = std::move(cert);
	}
	return out;
}

// Exactness-checked conversions for the scalar rings, used when a
// specialized cache is produced by the rational logarithm directly.
inline MishchenkoCache<IntRing> integral_cache_of(const MishchenkoCache<RatRing>& c)
{
	MishchenkoCache<IntRing> out{IntRing{}, {}};
	for (const Rat& q : c.p) {
		if (!is_integer(q))
			throw std::domain_error("non-integral Mishchenko element");
		out.p.push_back(numerator(q));
	}
	return out;
}

inline MishchenkoCache<UniPolyRing<Int>> integral_cache_of(
    const MishchenkoCache<UniPolyRing<Rat>>& c)
{
	MishchenkoCache<UniPolyRing<Int>> out{UniPolyRing<Int>{c.ring.var}, {}};
	for (const auto& e : c.p) {
		std::vector<Int> v;
		v.reserve(e.size());
		for (const Rat& q : e) {
			if (!is_integer(q))
				throw std::domain_error("non-integral Mishchenko element");
			v.push_back(numerator(q));
		}
		out.p.push_back(std::move(v));
	}
	return out;
}

inline FglTable<RatRing> rational_table_of(const FglTable<IntRing>& f)
{
	FglTable<RatRing> out(RatRing{}, f.degree_bound());
	for (const auto& [ij, c] : f.entries())
		out.set(ij.first, ij.second, Rat(c));
	return out;
}

inline FglTable<UniPolyRing<Rat>> rational_table_of(const FglTable<UniPolyRing<Int>>& f)
{
	UniPolyRing<Rat> ring{f.ring().var};
	FglTable<UniPolyRing<Rat>> out(ring, f.degree_bound());
	for (const auto& [ij, c] : f.entries()) {
		std::vector<Rat> v;
		v.reserve(c.size());
		for (const Int& n : c)
			v.emplace_back(n);
		out.set(ij.first, ij.second, std::move(v));
	}
	return out;
}

} // namespace fgl
