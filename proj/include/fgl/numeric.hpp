#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgl {

// All exact arithmetic in this library runs on GMP integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from(long v) { return Int(v); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int numerator(const Rat& q) { return Int(q.get_num()); }
inline Int denominator(const Rat& q) { return Int(q.get_den()); }

// Canonical decimal rendering, "num/den" for rationals (den always printed).
inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string rat_to_string(const Rat& q)
{
	Rat c = q;
	c.canonicalize();
	return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s)
{
	Rat q;
	if (q.set_str(s, 10) != 0)
		throw std::invalid_argument("bad rational literal: " + s);
	q.canonicalize();
	return q;
}

inline Int int_from_string(const std::string& s)
{
	Int v;
	if (v.set_str(s, 10) != 0)
		throw std::invalid_argument("bad integer literal: " + s);
	return v;
}

inline Int binomial(unsigned long n, unsigned long k)
{
	Int r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

} // namespace fgl
