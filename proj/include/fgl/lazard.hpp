#pragma once

#include "fgl/exact.hpp"
#include "fgl/fgl_calculus.hpp"
#include "fgl/multipoly.hpp"
#include "fgl/rings.hpp"
#include "fgl/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fgl {

struct FglGenerator {
	int i, j; // 1 <= i <= j
	long weight() const { return i + j - 1; }
};

struct GradedComponentInfo {
	long rank;
	std::vector<Int> torsion;
};

// The truncated Lazard ring L_{<=N}: generic formal group law coefficients
// a_ij modulo the relations forced by commutativity (baked into the
// generator set) and associativity, with degreewise canonical normal forms.
//
// Weight w <= N data: the monomial list M_w of Z[a_ij]_w and the Smith form
// L*A*R = D of the weight-w slice of the relation ideal (columns of A).  In
// the coordinates y = L*c the relation lattice is d_i Z on the pivot rows, so
// the unpivoted rows of y are canonical coordinates of the quotient class and
// the matching columns of L^-1 are the canonical basis.  Monomial subsets do
// not suffice as bases: already in weight 3 the relation 2*a11*a12 + 3*a13 -
// 2*a22 has no unit coefficient.
class LazardPresentation {
public:
	struct Component {
		std::vector<Monomial> monomials;       // canonical order
		std::map<Monomial, std::size_t> index; // monomial -> position
		std::vector<Int> pivots;               // nonzero invariant factors
		std::vector<Int> torsion;              // pivots > 1
		std::vector<std::size_t> free_rows;    // unpivoted rows of lmat
		ExactMatrix lmat{0, 0};                // left transform of the SNF
		ExactMatrix linv{0, 0};                // its inverse (basis columns)

		std::size_t rank() const { return free_rows.size(); }
	};

	static std::shared_ptr<const LazardPresentation> build(int max_weight)
	{
		if (max_weight < 1)
			throw std::invalid_argument("empty truncation");
		auto p = std::shared_ptr<LazardPresentation>(new LazardPresentation(max_weight));
		p->construct();
		return p;
	}

	// Rehydrate a presentation from previously computed data (the memoized
	// form the CLI stores on disk).  Regenerates what is cheap, validates
	// what is not.
	struct Parts {
		int max_weight = 0;
		std::vector<MultiPoly<Int>> relations;
		std::vector<Component> components;
	};

	static std::shared_ptr<const LazardPresentation> restore(Parts parts)
	{
		if (parts.max_weight < 1)
			throw std::invalid_argument("empty truncation");
		auto p = std::shared_ptr<LazardPresentation>(
		    new LazardPresentation(parts.max_weight));
		p->make_generators();
		p->relations_ = std::move(parts.relations);
		if (parts.components.size() != static_cast<std::size_t>(parts.max_weight) + 1)
			throw std::invalid_argument("corrupt presentation data");
		for (int w = 0; w <= parts.max_weight; ++w) {
			Component& comp = parts.components[static_cast<std::size_t>(w)];
			if (comp.monomials != monomials_of_weight(*p->vars_, w))
				throw std::invalid_argument("corrupt presentation data");
			std::size_t m = comp.monomials.size();
			if (comp.lmat.rows() != m || comp.lmat.cols() != m ||
			    comp.linv.rows() != m || comp.linv.cols() != m ||
			    comp.pivots.size() + comp.free_rows.size() != m)
				throw std::invalid_argument("corrupt presentation data");
			comp.index.clear();
			for (std::size_t k = 0; k < comp.monomials.size(); ++k)
				comp.index.emplace(comp.monomials[k], k);
		}
		p->components_ = std::move(parts.components);
		return p;
	}

	Parts parts() const
	{
		return Parts{max_weight_, relations_, components_};
	}

	int max_weight() const { return max_weight_; }
	const std::vector<FglGenerator>& generators() const { return generators_; }
	const VariableSet& generator_vars() const { return *vars_; }
	std::shared_ptr<const VariableSet> generator_vars_ptr() const { return vars_; }
	const std::vector<MultiPoly<Int>>& relations() const { return relations_; }

	std::size_t generator_index(int i, int j) const
	{
		if (i > j)
			std::swap(i, j);
		auto it = generator_index_.find({i, j});
		if (it == generator_index_.end())
			throw std::out_of_range("no such generator");
		return it->second;
	}

	const Component& component(int w) const
	{
		if (w < 0 || w > max_weight_)
			throw std::out_of_range("beyond truncation");
		return components_[static_cast<std::size_t>(w)];
	}

	GradedComponentInfo graded_component(int w) const
	{
		const Component& c = component(w);
		return {static_cast<long>(c.rank()), c.torsion};
	}

	// Normal form of a monomial-coordinate vector at weight w.
	template <typename S>
	std::vector<S> reduce_coords(int w, const std::vector<S>& c) const
	{
		const Component& comp = component(w);
		if (c.size() != comp.monomials.size())
			throw std::invalid_argument("coordinate arity");
		std::vector<S> y = apply_matrix<S>(comp.lmat, c);
		if constexpr (std::is_same_v<S, Int>) {
			for (std::size_t i = 0; i < comp.pivots.size(); ++i)
				if (comp.pivots[i] > 1 && y[i] % comp.pivots[i] != 0)
					throw std::runtime_error(
					    "torsion class escapes the free basis");
		}
		std::vector<S> q(comp.free_rows.size());
		for (std::size_t k = 0; k < comp.free_rows.size(); ++k)
			q[k] = y[comp.free_rows[k]];
		return q;
	}

	// Raw polynomial -> per-weight normal forms; rejects monomials beyond N.
	template <typename S>
	std::map<int, std::vector<S>> reduce_poly(const MultiPoly<S>& p) const
	{
		std::map<int, std::map<Monomial, S>> by_weight;
		for (const auto& [m, c] : p.terms()) {
			long w = m.weight(*vars_);
			if (w > max_weight_)
				throw std::out_of_range("beyond truncation");
			by_weight[static_cast<int>(w)].emplace(m, c);
		}
		std::map<int, std::vector<S>> out;
		for (const auto& [w, terms] : by_weight) {
			const Component& comp = component(w);
			std::vector<S> c(comp.monomials.size(), S(0));
			for (const auto& [m, v] : terms)
				c[comp.index.at(m)] = v;
			std::vector<S> beta = reduce_coords<S>(w, c);
			bool nonzero = false;
			for (const auto& b : beta)
				if (b != 0)
					nonzero = true;
			if (nonzero)
				out.emplace(w, std::move(beta));
		}
		return out;
	}

	// Coordinates of (basis element ia at weight wa) * (ib at wb); the
	// empty vector encodes zero past the truncation weight.  Memoized.
	std::vector<Int> basis_product(int wa, std::size_t ia, int wb, std::size_t ib) const
	{
		if (wa + wb > max_weight_)
			return {};
		auto key = std::make_tuple(wa, ia, wb, ib);
		if (std::make_pair(wa, ia) > std::make_pair(wb, ib))
			key = std::make_tuple(wb, ib, wa, ia);
		{
			std::lock_guard<std::mutex> lock(memo_mutex_);
			auto it = product_memo_.find(key);
			if (it != product_memo_.end())
				return it->second;
		}
		MultiPoly<Int> prod = basis_element(wa, ia) * basis_element(wb, ib);
		const Component& cw = component(wa + wb);
		std::vector<Int> c(cw.monomials.size(), Int(0));
		for (const auto& [m, v] : prod.terms())
			c[cw.index.at(m)] = v;
		std::vector<Int> beta = reduce_coords<Int>(wa + wb, c);
		std::lock_guard<std::mutex> lock(memo_mutex_);
		auto [it, fresh] = product_memo_.emplace(key, std::move(beta));
		return it->second;
	}

	// Canonical basis element b_k at weight w, as an integer polynomial:
	// the free_rows[k] column of L^-1.
	MultiPoly<Int> basis_element(int w, std::size_t k) const
	{
		const Component& comp = component(w);
		MultiPoly<Int> p;
		for (std::size_t m = 0; m < comp.monomials.size(); ++m) {
			Int v = comp.linv.at(m, comp.free_rows.at(k));
			if (v != 0)
				p.add_term(comp.monomials[m], v);
		}
		return p;
	}

	// Polynomial representing the class with the given normal form.
	template <typename S>
	MultiPoly<S> representative(int w, const std::vector<S>& beta) const
	{
		const Component& comp = component(w);
		if (beta.size() != comp.rank())
			throw std::invalid_argument("coordinate arity");
		MultiPoly<S> p;
		for (std::size_t k = 0; k < beta.size(); ++k) {
			if (beta[k] == 0)
				continue;
			for (std::size_t m = 0; m < comp.monomials.size(); ++m) {
				Int v = comp.linv.at(m, comp.free_rows[k]);
				if (v != 0)
					p.add_term(comp.monomials[m], beta[k] * S(v));
			}
		}
		return p;
	}

	// Free-coordinate image of the full monomial lattice at weight w: the
	// integral lattice the Mishchenko certificates are checked against.
	ExactMatrix lattice_basis_matrix(int w) const
	{
		const Component& comp = component(w);
		ExactMatrix b(comp.free_rows.size(), comp.monomials.size());
		for (std::size_t r = 0; r < comp.free_rows.size(); ++r)
			for (std::size_t c = 0; c < comp.monomials.size(); ++c)
				b.set(r, c, comp.lmat.at(comp.free_rows[r], c));
		return b;
	}

	std::string monomial_name(int w, std::size_t monomial_idx) const
	{
		return component(w).monomials[monomial_idx].str(*vars_);
	}

private:
	explicit LazardPresentation(int max_weight) : max_weight_(max_weight) {}

	template <typename S>
	static std::vector<S> apply_matrix(const ExactMatrix& m, const std::vector<S>& v)
	{
		if (v.size() != m.cols())
			throw std::invalid_argument("shape");
		std::vector<S> out(m.rows(), S(0));
		for (const auto& [k, e] : m.entries())
			out[k.first] += S(e) * v[k.second];
		return out;
	}

	void construct()
	{
		make_generators();
		make_relations();
		components_.resize(static_cast<std::size_t>(max_weight_) + 1);
		for (int w = 0; w <= max_weight_; ++w)
			make_component(w);
	}

	void make_generators()
	{
		auto vars = std::make_shared<VariableSet>();
		for (int w = 1; w <= max_weight_; ++w)
			for (int i = 1; 2 * i <= w + 1; ++i) {
				int j = w + 1 - i;
				generators_.push_back({i, j});
				generator_index_[{i, j}] = vars->names.size();
				vars->names.push_back(generator_name(i, j));
				vars->weights.push_back(w);
			}
		vars_ = std::move(vars);
	}

	static std::string generator_name(int i, int j)
	{
		if (i < 10 && j < 10)
			return "a" + std::to_string(i) + std::to_string(j);
		return "a" + std::to_string(i) + "_" + std::to_string(j);
	}

	// Relations are the coefficients of F(F(x,y),z) - F(x,F(y,z)) through
	// total degree N+1; a degree-d coefficient has weight d-1, so these are
	// exactly the relations visible below the truncation weight.
	void make_relations()
	{
		using PR = MultiPolyRing<Int>;
		PR ring(vars_);
		FglTable<PR> table(ring, max_weight_ + 1);
		for (std::size_t g = 0; g < generators_.size(); ++g)
			table.set(generators_[g].i, generators_[g].j,
			          MultiPoly<Int>::monomial(Monomial::var(g), Int(1)));

		int cap = max_weight_ + 1;
		std::vector<std::string> names = {"x", "y", "z"};
		std::vector<int> caps = {cap, cap, cap};
		using Ser = TruncatedSeries<PR>;
		Ser x = Ser::variable(ring, names, caps, 0, cap);
		Ser y = Ser::variable(ring, names, caps, 1, cap);
		Ser z = Ser::variable(ring, names, caps, 2, cap);
		Ser diff = formal_sum(table, formal_sum(table, x, y), z) -
		           formal_sum(table, x, formal_sum(table, y, z));

		std::set<std::string> seen;
		for (const auto& [e, poly] : diff.terms()) {
			long w = e[0] + e[1] + e[2] - 1;
			if (!poly.is_homogeneous(*vars_, w))
				throw std::logic_error("inhomogeneous associativity relation");
			if (seen.insert(poly.str(*vars_)).second)
				relations_.push_back(poly);
		}
	}

	void make_component(int w)
	{
		Component comp;
		comp.monomials = monomials_of_weight(*vars_, w);
		for (std::size_t k = 0; k < comp.monomials.size(); ++k)
			comp.index.emplace(comp.monomials[k], k);

		// weight-w slice of the relation ideal: monomial multiples of the
		// stored generators, as columns of the matrix handed to the Smith
		// reduction.  The redundancy among the columns is deliberate: it
		// supplies small pivots that keep the transform entries tame.
		std::vector<std::map<std::size_t, Int>> rows;
		for (const auto& rel : relations_) {
			long v = rel.terms().begin()->first.weight(*vars_);
			if (v > w)
				continue;
			for (const Monomial& mu : monomials_of_weight(*vars_, w - v)) {
				std::map<std::size_t, Int> row;
				if (mu.is_one()) {
					for (const auto& [m, c] : rel.terms())
						row.emplace(comp.index.at(m), c);
				} else {
					for (const auto& [m, c] : rel.terms())
						row.emplace(comp.index.at(m * mu), c);
				}
				rows.push_back(std::move(row));
			}
		}

		ExactMatrix a(comp.monomials.size(), rows.size());
		for (std::size_t c = 0; c < rows.size(); ++c)
			for (const auto& [r, value] : rows[c])
				a.set(r, c, value);

		SnfResult snf = smith_normal_form_left(a);
		comp.lmat = std::move(snf.left_transform);
		comp.linv = std::move(snf.left_inverse);
		for (const Int& d : snf.diagonal) {
			if (d == 0)
				break;
			comp.pivots.push_back(d);
			if (d > 1)
				comp.torsion.push_back(d);
		}
		for (std::size_t r = comp.pivots.size(); r < comp.monomials.size(); ++r)
			comp.free_rows.push_back(r);
		components_[static_cast<std::size_t>(w)] = std::move(comp);
	}

	int max_weight_;
	std::shared_ptr<const VariableSet> vars_;
	std::vector<FglGenerator> generators_;
	std::map<std::pair<int, int>, std::size_t> generator_index_;
	std::vector<MultiPoly<Int>> relations_;
	std::vector<Component> components_;

	mutable std::mutex memo_mutex_;
	mutable std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<Int>>
	    product_memo_;
};

// An element of L_{<=N} (or its rationalization) in canonical normal form:
// per-weight coordinates over that weight's monomial basis.
template <typename S>
class GradedElement {
public:
	GradedElement() = default;

	explicit GradedElement(std::shared_ptr<const LazardPresentation> pres)
	    : pres_(std::move(pres))
	{
	}

	static GradedElement from_coords(std::shared_ptr<const LazardPresentation> pres,
	                                 std::map<int, std::vector<S>> coords)
	{
		GradedElement e(std::move(pres));
		for (auto& [w, v] : coords)
			e.set_component(w, std::move(v));
		return e;
	}

	const std::shared_ptr<const LazardPresentation>& presentation() const { return pres_; }
	const std::map<int, std::vector<S>>& coords() const { return coords_; }

	bool is_zero() const { return coords_.empty(); }

	std::vector<S> component(int w) const
	{
		auto it = coords_.find(w);
		if (it != coords_.end())
			return it->second;
		return std::vector<S>(pres_->component(w).rank(), S(0));
	}

	void set_component(int w, std::vector<S> v)
	{
		if (v.size() != pres_->component(w).rank())
			throw std::invalid_argument("coordinate arity");
		bool nonzero = false;
		for (const auto& c : v)
			if (c != 0)
				nonzero = true;
		if (nonzero)
			coords_[w] = std::move(v);
		else
			coords_.erase(w);
	}

	friend GradedElement operator+(const GradedElement& a, const GradedElement& b)
	{
		const auto& pres = merged(a, b);
		GradedElement out(pres);
		out.coords_ = a.coords_;
		for (const auto& [w, v] : b.coords_) {
			auto it = out.coords_.find(w);
			if (it == out.coords_.end()) {
				out.coords_.emplace(w, v);
				continue;
			}
			bool nonzero = false;
			for (std::size_t k = 0; k < v.size(); ++k) {
				it->second[k] += v[k];
				if (it->second[k] != 0)
					nonzero = true;
			}
			if (!nonzero)
				out.coords_.erase(it);
		}
		return out;
	}

	friend GradedElement operator-(const GradedElement& a, const GradedElement& b)
	{
		return a + (-b);
	}

	GradedElement operator-() const
	{
		GradedElement out(pres_);
		for (const auto& [w, v] : coords_) {
			std::vector<S> nv(v.size());
			for (std::size_t k = 0; k < v.size(); ++k)
				nv[k] = -v[k];
			out.coords_.emplace(w, std::move(nv));
		}
		return out;
	}

	friend GradedElement operator*(const GradedElement& a, const GradedElement& b)
	{
		const auto& pres = merged(a, b);
		GradedElement out(pres);
		int n = pres->max_weight();
		for (const auto& [wa, va] : a.coords_)
			for (const auto& [wb, vb] : b.coords_) {
				if (wa + wb > n)
					continue; // the truncation ideal
				for (std::size_t ia = 0; ia < va.size(); ++ia) {
					if (va[ia] == 0)
						continue;
					for (std::size_t ib = 0; ib < vb.size(); ++ib) {
						if (vb[ib] == 0)
							continue;
						std::vector<Int> prod =
						    pres->basis_product(wa, ia, wb, ib);
						S scale = va[ia] * vb[ib];
						auto& acc = out.coords_[wa + wb];
						acc.resize(prod.size(), S(0));
						for (std::size_t k = 0; k < prod.size(); ++k)
							if (prod[k] != 0)
								acc[k] += scale * S(prod[k]);
					}
				}
			}
		out.prune();
		return out;
	}

	GradedElement scaled(const S& s) const
	{
		GradedElement out(pres_);
		if (s == 0)
			return out;
		for (const auto& [w, v] : coords_) {
			std::vector<S> nv(v.size());
			for (std::size_t k = 0; k < v.size(); ++k)
				nv[k] = v[k] * s;
			out.coords_.emplace(w, std::move(nv));
		}
		out.prune();
		return out;
	}

	bool operator==(const GradedElement& o) const
	{
		merged(*this, o);
		return coords_ == o.coords_;
	}

	bool is_homogeneous(long w) const
	{
		for (const auto& [cw, v] : coords_)
			if (cw != w)
				return false;
		return true;
	}

	MultiPoly<S> representative() const
	{
		MultiPoly<S> p;
		for (const auto& [w, v] : coords_)
			p += pres_->representative<S>(w, v);
		return p;
	}

	std::string str() const
	{
		MultiPoly<S> p = representative();
		return p.str(pres_->generator_vars());
	}

private:
	static const std::shared_ptr<const LazardPresentation>& merged(const GradedElement& a,
	                                                               const GradedElement& b)
	{
		if (!a.pres_ || !b.pres_)
			throw std::invalid_argument("element without presentation");
		if (a.pres_ != b.pres_ && a.pres_->max_weight() != b.pres_->max_weight())
			throw std::invalid_argument("mixed truncation");
		return a.pres_;
	}

	void prune()
	{
		for (auto it = coords_.begin(); it != coords_.end();) {
			bool nonzero = false;
			for (const auto& c : it->second)
				if (c != 0)
					nonzero = true;
			it = nonzero ? std::next(it) : coords_.erase(it);
		}
	}

	std::shared_ptr<const LazardPresentation> pres_;
	std::map<int, std::vector<S>> coords_;
};

// Ring-interface handle over a shared presentation; S is Int for the
// integral ring and Rat for rational mode.
template <typename S>
struct LazardRing {
	using Elem = GradedElement<S>;

	std::shared_ptr<const LazardPresentation> pres;

	explicit LazardRing(std::shared_ptr<const LazardPresentation> p) : pres(std::move(p)) {}

	Elem zero() const { return Elem(pres); }

	Elem one() const { return from_int(1); }

	Elem from_int(const Int& n) const
	{
		Elem e(pres);
		if (n != 0)
			e.set_component(0, {S(n)});
		return e;
	}

	Elem from_rat(const Rat& q) const
	{
		static_assert(std::is_same_v<S, Rat>, "rational scalars need rational mode");
		Elem e(pres);
		if (q != 0)
			e.set_component(0, {q});
		return e;
	}

	Elem generator_class(int i, int j) const
	{
		if (i > j)
			std::swap(i, j);
		int w = i + j - 1;
		const auto& comp = pres->component(w);
		std::vector<S> c(comp.monomials.size(), S(0));
		Monomial m = Monomial::var(pres->generator_index(i, j));
		c[comp.index.at(m)] = S(1);
		Elem e(pres);
		e.set_component(w, pres->reduce_coords<S>(w, c));
		return e;
	}

	Elem add(const Elem& a, const Elem& b) const { return a + b; }
	Elem sub(const Elem& a, const Elem& b) const { return a - b; }
	Elem neg(const Elem& a) const { return -a; }
	Elem mul(const Elem& a, const Elem& b) const { return a * b; }

	Elem div_int(const Elem& a, long n) const
	{
		static_assert(std::is_same_v<S, Rat>, "exact division needs rational mode");
		return a.scaled(Rat(1) / Rat(n));
	}

	bool is_zero(const Elem& a) const { return a.is_zero(); }
	bool equal(const Elem& a, const Elem& b) const { return a == b; }

	bool compatible(const LazardRing& o) const
	{
		return pres == o.pres || pres->max_weight() == o.pres->max_weight();
	}

	bool is_homogeneous(const Elem& a, long w) const { return a.is_homogeneous(w); }

	std::string to_string(const Elem& a) const { return a.is_zero() ? "0" : a.str(); }
};

// Reduce an arbitrary raw polynomial in the generators to normal form.
template <typename S>
GradedElement<S> reduce(const std::shared_ptr<const LazardPresentation>& pres,
                        const MultiPoly<S>& p)
{
	return GradedElement<S>::from_coords(pres, pres->reduce_poly<S>(p));
}

// The universal table: entry (i,j) is the class of a_ij.
inline FglTable<LazardRing<Int>> universal_fgl_table(
    const std::shared_ptr<const LazardPresentation>& pres)
{
	LazardRing<Int> ring(pres);
	FglTable<LazardRing<Int>> table(ring, pres->max_weight() + 1);
	for (const FglGenerator& g : pres->generators())
		table.set(g.i, g.j, ring.generator_class(g.i, g.j));
	return table;
}

inline FglTable<LazardRing<Rat>> universal_fgl_table_q(
    const std::shared_ptr<const LazardPresentation>& pres)
{
	LazardRing<Rat> ring(pres);
	FglTable<LazardRing<Rat>> table(ring, pres->max_weight() + 1);
	for (const FglGenerator& g : pres->generators())
		table.set(g.i, g.j, ring.generator_class(g.i, g.j));
	return table;
}

inline std::pair<std::shared_ptr<const LazardPresentation>, FglTable<LazardRing<Int>>>
build_universal_fgl(int max_weight)
{
	auto pres = LazardPresentation::build(max_weight);
	return {pres, universal_fgl_table(pres)};
}

// A specialization of the universal coefficients: a_ij -> images[ij] in the
// target ring, checked against every stored relation.
template <typename Target>
struct LazardMorphism {
	std::shared_ptr<const LazardPresentation> pres;
	Target target;
	std::vector<typename Target::Elem> images; // by generator index

	typename Target::Elem apply_poly(const MultiPoly<Int>& p) const
	{
		return p.evaluate(target, images);
	}

	typename Target::Elem apply(const GradedElement<Int>& e) const
	{
		if (e.is_zero())
			return target.zero();
		return apply_poly(e.representative());
	}

	void validate() const
	{
		if (images.size() != pres->generators().size())
			throw std::invalid_argument("not a ring morphism");
		for (const auto& rel : pres->relations())
			if (!target.is_zero(apply_poly(rel)))
				throw std::invalid_argument("not a ring morphism");
	}
};

template <typename Target>
FglTable<Target> specialize(const FglTable<LazardRing<Int>>& univ,
                            const LazardMorphism<Target>& m)
{
	m.validate();
	FglTable<Target> out(m.target, univ.degree_bound());
	for (const FglGenerator& g : m.pres->generators())
		out.set(g.i, g.j, m.images[m.pres->generator_index(g.i, g.j)]);
	return out;
}

inline LazardMorphism<IntRing> additive_morphism(
    const std::shared_ptr<const LazardPresentation>& pres)
{
	LazardMorphism<IntRing> m{pres, IntRing{}, {}};
	m.images.assign(pres->generators().size(), Int(0));
	return m;
}

inline LazardMorphism<UniPolyRing<Int>> multiplicative_morphism(
    const std::shared_ptr<const LazardPresentation>& pres)
{
	LazardMorphism<UniPolyRing<Int>> m{pres, UniPolyRing<Int>{}, {}};
	m.images.assign(pres->generators().size(), m.target.zero());
	m.images[pres->generator_index(1, 1)] = m.target.neg(m.target.variable());
	return m;
}

} // namespace fgl
