#pragma once

#include "fgl/numeric.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fgl {

// A fixed, ordered list of commuting variables with positive weights.
struct VariableSet {
	std::vector<std::string> names;
	std::vector<int> weights;

	std::size_t size() const { return names.size(); }
};

// Sparse exponent vector over a VariableSet: (var index, exponent > 0),
// ascending by variable index.
class Monomial {
public:
	using Factor = std::pair<std::size_t, int>;

	Monomial() = default;
	explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {}

	static Monomial one() { return Monomial(); }

	static Monomial var(std::size_t v, int exp = 1)
	{
		return exp == 0 ? Monomial() : Monomial({{v, exp}});
	}

	const std::vector<Factor>& factors() const { return factors_; }
	bool is_one() const { return factors_.empty(); }

	int degree() const
	{
		int d = 0;
		for (const auto& [v, e] : factors_)
			d += e;
		return d;
	}

	long weight(const VariableSet& vars) const
	{
		long w = 0;
		for (const auto& [v, e] : factors_)
			w += static_cast<long>(vars.weights[v]) * e;
		return w;
	}

	int exponent(std::size_t v) const
	{
		for (const auto& [u, e] : factors_)
			if (u == v)
				return e;
		return 0;
	}

	friend Monomial operator*(const Monomial& a, const Monomial& b)
	{
		std::vector<Factor> out;
		out.reserve(a.factors_.size() + b.factors_.size());
		auto i = a.factors_.begin(), j = b.factors_.begin();
		while (i != a.factors_.end() && j != b.factors_.end()) {
			if (i->first < j->first)
				out.push_back(*i++);
			else if (j->first < i->first)
				out.push_back(*j++);
			else {
				out.emplace_back(i->first, i->second + j->second);
				++i;
				++j;
			}
		}
		out.insert(out.end(), i, a.factors_.end());
		out.insert(out.end(), j, b.factors_.end());
		return Monomial(std::move(out));
	}

	bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

	// Canonical order: higher exponent on the earliest variable comes first,
	// so within a fixed weight a11^2 precedes a12 and "1" comes last.
	bool operator<(const Monomial& o) const
	{
		auto i = factors_.begin(), j = o.factors_.begin();
		while (i != factors_.end() && j != o.factors_.end()) {
			if (i->first != j->first)
				return i->first < j->first;
			if (i->second != j->second)
				return i->second > j->second;
			++i;
			++j;
		}
		return i != factors_.end();
	}

	std::string str(const VariableSet& vars) const
	{
		if (factors_.empty())
			return "1";
		std::string s;
		for (const auto& [v, e] : factors_) {
			if (!s.empty())
				s += "*";
			s += vars.names[v];
			if (e > 1)
				s += "^" + std::to_string(e);
		}
		return s;
	}

private:
	std::vector<Factor> factors_;
};

template <typename T>
typename T::Elem embed_scalar(const T& ring, const Int& c)
{
	return ring.from_int(c);
}

template <typename T>
typename T::Elem embed_scalar(const T& ring, const Rat& c)
{
	return ring.from_rat(c);
}

// Sparse polynomial with exact coefficients over a shared VariableSet.
template <typename S>
class MultiPoly {
public:
	MultiPoly() = default;

	static MultiPoly zero() { return MultiPoly(); }

	static MultiPoly constant(S c)
	{
		MultiPoly p;
		p.add_term(Monomial::one(), std::move(c));
		return p;
	}

	static MultiPoly monomial(Monomial m, S c)
	{
		MultiPoly p;
		p.add_term(std::move(m), std::move(c));
		return p;
	}

	const std::map<Monomial, S>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(Monomial m, S c)
	{
		if (c == 0)
			return;
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(std::move(m), std::move(c));
		} else {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	MultiPoly& operator+=(const MultiPoly& o)
	{
		for (const auto& [m, c] : o.terms_) {
			auto [it, fresh] = terms_.emplace(m, c);
			if (!fresh) {
				it->second += c;
				if (it->second == 0)
					terms_.erase(it);
			}
		}
		return *this;
	}

	MultiPoly& operator-=(const MultiPoly& o)
	{
		for (const auto& [m, c] : o.terms_) {
			auto [it, fresh] = terms_.emplace(m, -c);
			if (!fresh) {
				it->second -= c;
				if (it->second == 0)
					terms_.erase(it);
			}
		}
		return *this;
	}

	friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
	friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

	friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
	{
		MultiPoly p;
		for (const auto& [ma, ca] : a.terms_)
			for (const auto& [mb, cb] : b.terms_)
				p.add_term(ma * mb, ca * cb);
		return p;
	}

	MultiPoly operator-() const
	{
		MultiPoly p;
		for (const auto& [m, c] : terms_)
			p.terms_.emplace(m, -c);
		return p;
	}

	MultiPoly scaled(const S& s) const
	{
		MultiPoly p;
		if (s == 0)
			return p;
		for (const auto& [m, c] : terms_)
			p.add_term(m, c * s);
		return p;
	}

	bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

	bool is_homogeneous(const VariableSet& vars, long w) const
	{
		for (const auto& [m, c] : terms_)
			if (m.weight(vars) != w)
				return false;
		return true;
	}

	// Substitute ring elements for the variables; T must expose zero/add/mul
	// plus from_int (from_rat when S is rational).
	template <typename T>
	typename T::Elem evaluate(const T& target,
	                          const std::vector<typename T::Elem>& images) const
	{
		auto acc = target.zero();
		for (const auto& [m, c] : terms_) {
			auto t = embed_scalar(target, c);
			for (const auto& [v, e] : m.factors())
				for (int k = 0; k < e; ++k)
					t = target.mul(t, images.at(v));
			acc = target.add(acc, t);
		}
		return acc;
	}

	std::string str(const VariableSet& vars) const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (const auto& [m, c] : terms_) {
			std::string cs = coeff_str(c);
			bool neg = !cs.empty() && cs[0] == '-';
			if (s.empty())
				s += neg ? "-" : "";
			else
				s += neg ? " - " : " + ";
			std::string mag = neg ? cs.substr(1) : cs;
			if (m.is_one())
				s += mag;
			else if (mag == "1")
				s += m.str(vars);
			else
				s += mag + "*" + m.str(vars);
		}
		return s;
	}

private:
	static std::string coeff_str(const Int& c) { return c.get_str(); }
	static std::string coeff_str(const Rat& c) { return rat_to_string(c); }

	std::map<Monomial, S> terms_;
};

// Enumerate all monomials of exact weight w over vars[from..], canonical order.
inline void enumerate_monomials_rec(const VariableSet& vars, std::size_t from, long w,
                                    std::vector<Monomial::Factor>& prefix,
                                    std::vector<Monomial>& out)
{
	if (w == 0) {
		out.emplace_back(prefix);
		return;
	}
	if (from >= vars.size())
		return;
	long gw = vars.weights[from];
	for (long e = w / gw; e >= 1; --e) {
		prefix.emplace_back(from, static_cast<int>(e));
		enumerate_monomials_rec(vars, from + 1, w - e * gw, prefix, out);
		prefix.pop_back();
	}
	enumerate_monomials_rec(vars, from + 1, w, prefix, out);
}

inline std::vector<Monomial> monomials_of_weight(const VariableSet& vars, long w)
{
	std::vector<Monomial> out;
	std::vector<Monomial::Factor> prefix;
	enumerate_monomials_rec(vars, 0, w, prefix, out);
	std::sort(out.begin(), out.end());
	return out;
}

// Polynomials over a weighted variable set as a coefficient ring for series.
template <typename S>
struct MultiPolyRing {
	using Elem = MultiPoly<S>;

	std::shared_ptr<const VariableSet> vars;

	explicit MultiPolyRing(std::shared_ptr<const VariableSet> v) : vars(std::move(v)) {}

	Elem zero() const { return Elem::zero(); }
	Elem one() const { return Elem::constant(S(1)); }
	Elem from_int(const Int& n) const { return Elem::constant(S(n)); }
	Elem var(std::size_t v) const { return Elem::monomial(Monomial::var(v), S(1)); }

	Elem add(const Elem& a, const Elem& b) const { return a + b; }
	Elem sub(const Elem& a, const Elem& b) const { return a - b; }
	Elem neg(const Elem& a) const { return -a; }
	Elem mul(const Elem& a, const Elem& b) const { return a * b; }

	bool is_zero(const Elem& a) const { return a.is_zero(); }
	bool equal(const Elem& a, const Elem& b) const { return a == b; }

	bool compatible(const MultiPolyRing& o) const
	{
		return vars == o.vars ||
		       (vars->names == o.vars->names && vars->weights == o.vars->weights);
	}

	bool is_homogeneous(const Elem& a, long w) const { return a.is_homogeneous(*vars, w); }

	std::string to_string(const Elem& a) const { return a.str(*vars); }
};

} // namespace fgl
