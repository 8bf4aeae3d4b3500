#pragma once

#include "fgl/numeric.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgl {

// Multivariate polynomial with per-variable exponent caps and an optional
// total-degree cap, over an exact coefficient ring.  Models elements of
// R[t_1,...,t_k]/(t_i^{cap_i+1}); arithmetic silently discards monomials
// beyond the caps, which is the quotient-ring product.
template <typename R>
class TruncatedSeries {
public:
	using Elem = typename R::Elem;
	using Exp = std::vector<int>;

	TruncatedSeries(R ring, std::vector<std::string> vars, std::vector<int> caps,
	                std::optional<int> total_cap = std::nullopt)
	    : ring_(std::move(ring)), vars_(std::move(vars)), caps_(std::move(caps)),
	      total_cap_(total_cap)
	{
		if (vars_.size() != caps_.size())
			throw std::invalid_argument("vars/caps size mismatch");
		for (int c : caps_)
			if (c < 0)
				throw std::invalid_argument("negative cap");
	}

	static TruncatedSeries constant(const R& ring, std::vector<std::string> vars,
	                                std::vector<int> caps, Elem value,
	                                std::optional<int> total_cap = std::nullopt)
	{
		TruncatedSeries s(ring, std::move(vars), std::move(caps), total_cap);
		s.set_coeff(Exp(s.vars_.size(), 0), std::move(value));
		return s;
	}

	static TruncatedSeries variable(const R& ring, std::vector<std::string> vars,
	                                std::vector<int> caps, std::size_t idx,
	                                std::optional<int> total_cap = std::nullopt)
	{
		TruncatedSeries s(ring, std::move(vars), std::move(caps), total_cap);
		Exp e(s.vars_.size(), 0);
		e.at(idx) = 1;
		s.set_coeff(e, s.ring_.one());
		return s;
	}

	const R& ring() const { return ring_; }
	const std::vector<std::string>& vars() const { return vars_; }
	const std::vector<int>& caps() const { return caps_; }
	std::optional<int> total_cap() const { return total_cap_; }
	const std::map<Exp, Elem>& terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }

	Elem coeff(const Exp& e) const
	{
		auto it = terms_.find(e);
		return it == terms_.end() ? ring_.zero() : it->second;
	}

	Elem constant_term() const { return coeff(Exp(vars_.size(), 0)); }

	bool has_constant_term() const
	{
		auto it = terms_.find(Exp(vars_.size(), 0));
		return it != terms_.end();
	}

	void set_coeff(const Exp& e, Elem v)
	{
		if (e.size() != vars_.size())
			throw std::invalid_argument("exponent arity");
		if (!admits(e) || ring_.is_zero(v))
			terms_.erase(e);
		else
			terms_[e] = std::move(v);
	}

	void add_coeff(const Exp& e, const Elem& v)
	{
		if (e.size() != vars_.size())
			throw std::invalid_argument("exponent arity");
		if (!admits(e))
			return;
		auto it = terms_.find(e);
		if (it == terms_.end()) {
			if (!ring_.is_zero(v))
				terms_.emplace(e, v);
			return;
		}
		it->second = ring_.add(it->second, v);
		if (ring_.is_zero(it->second))
			terms_.erase(it);
	}

	bool admits(const Exp& e) const
	{
		int total = 0;
		for (std::size_t i = 0; i < e.size(); ++i) {
			if (e[i] < 0 || e[i] > caps_[i])
				return false;
			total += e[i];
		}
		return !total_cap_ || total <= *total_cap_;
	}

	friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		TruncatedSeries out = a.merged_shape(b);
		for (const auto& [e, v] : a.terms_)
			out.add_coeff(e, v);
		for (const auto& [e, v] : b.terms_)
			out.add_coeff(e, v);
		return out;
	}

	friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		TruncatedSeries out = a.merged_shape(b);
		for (const auto& [e, v] : a.terms_)
			out.add_coeff(e, v);
		for (const auto& [e, v] : b.terms_)
			out.add_coeff(e, b.ring_.neg(v));
		return out;
	}

	friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
	{
		TruncatedSeries out = a.merged_shape(b);
		for (const auto& [ea, va] : a.terms_)
			for (const auto& [eb, vb] : b.terms_) {
				Exp e(ea.size());
				for (std::size_t i = 0; i < e.size(); ++i)
					e[i] = ea[i] + eb[i];
				if (!out.admits(e))
					continue;
				out.add_coeff(e, a.ring_.mul(va, vb));
			}
		return out;
	}

	TruncatedSeries operator-() const
	{
		TruncatedSeries out = shape();
		for (const auto& [e, v] : terms_)
			out.terms_.emplace(e, ring_.neg(v));
		return out;
	}

	TruncatedSeries scaled(const Elem& s) const
	{
		TruncatedSeries out = shape();
		if (ring_.is_zero(s))
			return out;
		for (const auto& [e, v] : terms_)
			out.add_coeff(e, ring_.mul(v, s));
		return out;
	}

	TruncatedSeries pow(int n) const
	{
		if (n < 0)
			throw std::invalid_argument("negative power");
		TruncatedSeries acc = constant(ring_, vars_, caps_, ring_.one(), total_cap_);
		for (int k = 0; k < n; ++k)
			acc = acc * *this;
		return acc;
	}

	bool operator==(const TruncatedSeries& a) const
	{
		if (vars_ != a.vars_)
			return false;
		if (terms_.size() != a.terms_.size())
			return false;
		auto i = terms_.begin();
		auto j = a.terms_.begin();
		for (; i != terms_.end(); ++i, ++j)
			if (i->first != j->first || !ring_.equal(i->second, j->second))
				return false;
		return true;
	}

	// A series has pure cohomological degree g when every coefficient is
	// homogeneous of weight (sum of exponents) - g; first Chern classes
	// have g = 1.
	bool is_graded(int cohomological_degree) const
	{
		for (const auto& [e, v] : terms_) {
			long d = std::accumulate(e.begin(), e.end(), 0L);
			if (!ring_.is_homogeneous(v, d - cohomological_degree))
				return false;
		}
		return true;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (const auto& [e, v] : terms_) {
			if (!s.empty())
				s += " + ";
			s += "(" + ring_.to_string(v) + ")";
			for (std::size_t i = 0; i < e.size(); ++i) {
				if (e[i] == 0)
					continue;
				s += "*" + vars_[i];
				if (e[i] > 1)
					s += "^" + std::to_string(e[i]);
			}
		}
		return s;
	}

	// Empty series with this shape (vars, caps, ring).
	TruncatedSeries shape() const { return TruncatedSeries(ring_, vars_, caps_, total_cap_); }

private:
	TruncatedSeries merged_shape(const TruncatedSeries& o) const
	{
		if (!ring_.compatible(o.ring_))
			throw std::invalid_argument("ring mismatch");
		if (vars_ != o.vars_)
			throw std::invalid_argument("variable mismatch");
		std::vector<int> caps(vars_.size());
		for (std::size_t i = 0; i < caps.size(); ++i)
			caps[i] = std::min(caps_[i], o.caps_[i]);
		std::optional<int> total = total_cap_;
		if (o.total_cap_ && (!total || *o.total_cap_ < *total))
			total = o.total_cap_;
		return TruncatedSeries(ring_, vars_, std::move(caps), total);
	}

	R ring_;
	std::vector<std::string> vars_;
	std::vector<int> caps_;
	std::optional<int> total_cap_;
	std::map<Exp, Elem> terms_;
};

// Substitute args[i] for variable i.  All args share a shape; each must be
// nilpotent-like (no constant term) because the host is a power series.
template <typename R>
TruncatedSeries<R> substitute(const TruncatedSeries<R>& host,
                              const std::vector<TruncatedSeries<R>>& args)
{
	if (args.size() != host.vars().size())
		throw std::invalid_argument("substitution arity");
	for (const auto& a : args)
		if (a.has_constant_term())
			throw std::invalid_argument("not nilpotent-like");
	if (args.empty())
		throw std::invalid_argument("substitution into constant series");

	TruncatedSeries<R> out = args.front().shape();
	// cache powers per argument
	std::vector<std::vector<TruncatedSeries<R>>> pows(args.size());
	for (std::size_t i = 0; i < args.size(); ++i)
		pows[i].push_back(TruncatedSeries<R>::constant(out.ring(), out.vars(), out.caps(),
		                                               out.ring().one(), out.total_cap()));
	auto power = [&](std::size_t i, int e) -> const TruncatedSeries<R>& {
		while (static_cast<int>(pows[i].size()) <= e)
			pows[i].push_back(pows[i].back() * args[i]);
		return pows[i][e];
	};
	for (const auto& [e, v] : host.terms()) {
		TruncatedSeries<R> term = TruncatedSeries<R>::constant(
		    out.ring(), out.vars(), out.caps(), v, out.total_cap());
		for (std::size_t i = 0; i < e.size(); ++i)
			if (e[i] > 0)
				term = term * power(i, e[i]);
		out = out + term;
	}
	return out;
}

} // namespace fgl
