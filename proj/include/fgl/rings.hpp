#pragma once

#include "fgl/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fgl {

// Coefficient rings share a duck-typed interface: Elem, zero/one/from_int,
// add/sub/neg/mul, is_zero/equal, compatible, is_homogeneous, to_string.
// Rational rings additionally provide from_rat and div_int.

struct IntRing {
	using Elem = Int;

	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	Elem from_int(const Int& n) const { return n; }

	Elem add(const Elem& a, const Elem& b) const { return a + b; }
	Elem sub(const Elem& a, const Elem& b) const { return a - b; }
	Elem neg(const Elem& a) const { return -a; }
	Elem mul(const Elem& a, const Elem& b) const { return a * b; }

	bool is_zero(const Elem& a) const { return a == 0; }
	bool equal(const Elem& a, const Elem& b) const { return a == b; }
	bool compatible(const IntRing&) const { return true; }

	// Integers sit in weight zero.
	bool is_homogeneous(const Elem& a, long w) const { return a == 0 || w == 0; }

	std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct RatRing {
	using Elem = Rat;

	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	Elem from_int(const Int& n) const { return Rat(n); }
	Elem from_rat(const Rat& q) const { return q; }

	Elem add(const Elem& a, const Elem& b) const { return a + b; }
	Elem sub(const Elem& a, const Elem& b) const { return a - b; }
	Elem neg(const Elem& a) const { return -a; }
	Elem mul(const Elem& a, const Elem& b) const { return a * b; }
	Elem div_int(const Elem& a, long n) const { return a / Rat(n); }

	bool is_zero(const Elem& a) const { return a == 0; }
	bool equal(const Elem& a, const Elem& b) const { return a == b; }
	bool compatible(const RatRing&) const { return true; }
	bool is_homogeneous(const Elem& a, long w) const { return a == 0 || w == 0; }

	std::string to_string(const Elem& a) const { return rat_to_string(a); }
};

// Univariate polynomials S[b], dense by degree, with weight(b^k) = k.
// Hosts the multiplicative formal group law x + y - b*x*y.
template <typename S>
struct UniPolyRing {
	using Elem = std::vector<S>; // coefficient of b^k at index k, no trailing zeros

	std::string var = "b";

	static Elem trim(Elem e)
	{
		while (!e.empty() && e.back() == 0)
			e.pop_back();
		return e;
	}

	Elem zero() const { return {}; }
	Elem one() const { return {S(1)}; }
	Elem from_int(const Int& n) const { return trim({S(n)}); }
	Elem from_rat(const Rat& q) const { return trim({S(q)}); }
	Elem variable(int exp = 1) const
	{
		Elem e(exp + 1, S(0));
		e[exp] = 1;
		return e;
	}

	Elem add(const Elem& a, const Elem& b) const
	{
		Elem r = a;
		if (b.size() > r.size())
			r.resize(b.size(), S(0));
		for (std::size_t i = 0; i < b.size(); ++i)
			r[i] += b[i];
		return trim(std::move(r));
	}

	Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

	Elem neg(const Elem& a) const
	{
		Elem r = a;
		for (auto& c : r)
			c = -c;
		return r;
	}

	Elem mul(const Elem& a, const Elem& b) const
	{
		if (a.empty() || b.empty())
			return {};
		Elem r(a.size() + b.size() - 1, S(0));
		for (std::size_t i = 0; i < a.size(); ++i)
			for (std::size_t j = 0; j < b.size(); ++j)
				r[i + j] += a[i] * b[j];
		return trim(std::move(r));
	}

	Elem div_int(const Elem& a, long n) const
	{
		static_assert(std::is_same_v<S, Rat>, "exact division needs rationals");
		Elem r = a;
		for (auto& c : r)
			c /= Rat(n);
		return r;
	}

	bool is_zero(const Elem& a) const { return a.empty(); }
	bool equal(const Elem& a, const Elem& b) const { return a == b; }
	bool compatible(const UniPolyRing& o) const { return var == o.var; }

	bool is_homogeneous(const Elem& a, long w) const
	{
		for (std::size_t k = 0; k < a.size(); ++k)
			if (a[k] != 0 && static_cast<long>(k) != w)
				return false;
		return true;
	}

	std::string to_string(const Elem& a) const
	{
		if (a.empty())
			return "0";
		std::string s;
		for (std::size_t k = 0; k < a.size(); ++k) {
			if (a[k] == 0)
				continue;
			std::string cs = scalar_str(a[k]);
			bool neg_term = !cs.empty() && cs[0] == '-';
			if (s.empty())
				s += neg_term ? "-" : "";
			else
				s += neg_term ? " - " : " + ";
			std::string mag = neg_term ? cs.substr(1) : cs;
			if (k == 0)
				s += mag;
			else {
				if (mag != "1")
					s += mag + "*";
				s += var;
				if (k > 1)
					s += "^" + std::to_string(k);
			}
		}
		return s;
	}

private:
	static std::string scalar_str(const Int& c) { return c.get_str(); }
	static std::string scalar_str(const Rat& c) { return rat_to_string(c); }
};

} // namespace fgl
