#pragma once

#include "fgl/lazard.hpp"
#include "fgl/line_module.hpp"
#include "fgl/rings.hpp"
#include "fgl/series.hpp"
#include "fgl/wpbf.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fgl {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fgl-cobord/1";

// --- coefficient serialization, one overload pair per ring -----------------

inline ojson elem_to_json(const IntRing&, const Int& v) { return v.get_str(); }

inline Int elem_from_json(const IntRing&, const ojson& j)
{
	return int_from_string(j.get_ref<const std::string&>());
}

inline ojson elem_to_json(const RatRing&, const Rat& v) { return rat_to_string(v); }

inline Rat elem_from_json(const RatRing&, const ojson& j)
{
	return rat_from_string(j.get_ref<const std::string&>());
}

template <typename S>
ojson elem_to_json(const UniPolyRing<S>& ring, const typename UniPolyRing<S>::Elem& v)
{
	ojson coeffs = ojson::array();
	for (const auto& c : v) {
		if constexpr (std::is_same_v<S, Int>)
			coeffs.push_back(c.get_str());
		else
			coeffs.push_back(rat_to_string(c));
	}
	return ojson{{"var", ring.var}, {"coeffs", coeffs}};
}

template <typename S>
typename UniPolyRing<S>::Elem elem_from_json(const UniPolyRing<S>&, const ojson& j)
{
	typename UniPolyRing<S>::Elem v;
	for (const auto& c : j.at("coeffs")) {
		if constexpr (std::is_same_v<S, Int>)
			v.push_back(int_from_string(c.template get_ref<const std::string&>()));
		else
			v.push_back(rat_from_string(c.template get_ref<const std::string&>()));
	}
	return UniPolyRing<S>::trim(std::move(v));
}

template <typename S>
ojson elem_to_json(const LazardRing<S>&, const GradedElement<S>& v)
{
	ojson coords = ojson::array();
	for (const auto& [w, vec] : v.coords()) {
		ojson cs = ojson::array();
		for (const auto& c : vec) {
			if constexpr (std::is_same_v<S, Int>)
				cs.push_back(c.get_str());
			else
				cs.push_back(rat_to_string(c));
		}
		coords.push_back(ojson{{"weight", w}, {"coeffs", cs}});
	}
	return ojson{{"coords", coords}};
}

template <typename S>
GradedElement<S> elem_from_json(const LazardRing<S>& ring, const ojson& j)
{
	GradedElement<S> out(ring.pres);
	for (const auto& comp : j.at("coords")) {
		int w = comp.at("weight").get<int>();
		std::vector<S> vec;
		for (const auto& c : comp.at("coeffs")) {
			if constexpr (std::is_same_v<S, Int>)
				vec.push_back(
				    int_from_string(c.template get_ref<const std::string&>()));
			else
				vec.push_back(
				    rat_from_string(c.template get_ref<const std::string&>()));
		}
		out.set_component(w, std::move(vec));
	}
	return out;
}

// --- series / module elements ----------------------------------------------

template <typename R>
ojson series_to_json(const TruncatedSeries<R>& s)
{
	ojson terms = ojson::array();
	for (const auto& [e, v] : s.terms())
		terms.push_back(ojson{{"exp", e}, {"coeff", elem_to_json(s.ring(), v)}});
	ojson out{{"schema", kSchema},
	          {"vars", s.vars()},
	          {"caps", s.caps()},
	          {"terms", terms}};
	if (s.total_cap())
		out["total_cap"] = *s.total_cap();
	return out;
}

template <typename R>
TruncatedSeries<R> series_from_json(const R& ring, const ojson& j)
{
	std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
	std::vector<int> caps = j.at("caps").get<std::vector<int>>();
	std::optional<int> total;
	if (j.contains("total_cap"))
		total = j.at("total_cap").get<int>();
	TruncatedSeries<R> s(ring, std::move(vars), std::move(caps), total);
	for (const auto& t : j.at("terms"))
		s.set_coeff(t.at("exp").get<std::vector<int>>(),
		            elem_from_json(ring, t.at("coeff")));
	return s;
}

template <typename R>
ojson lb_to_json(const LbElement<R>& e)
{
	ojson terms = ojson::array();
	for (const auto& [i, v] : e.terms())
		terms.push_back(ojson{{"i", i}, {"coeff", elem_to_json(e.ring(), v)}});
	return ojson{{"schema", kSchema}, {"basis", "e"}, {"terms", terms}};
}

template <typename R>
LbElement<R> lb_from_json(const R& ring, const ojson& j)
{
	LbElement<R> e(ring);
	for (const auto& t : j.at("terms"))
		e.set_coeff(t.at("i").get<int>(), elem_from_json(ring, t.at("coeff")));
	return e;
}

template <typename R>
ojson decomposition_to_json(const WpbfDecomposition<R>& d, const R& ring)
{
	ojson alphas = ojson::array();
	for (const auto& a : d.alphas)
		alphas.push_back(elem_to_json(ring, a));
	return ojson{{"schema", kSchema}, {"n", d.n}, {"alphas", alphas}};
}

template <typename R>
WpbfDecomposition<R> decomposition_from_json(const R& ring, const ojson& j)
{
	WpbfDecomposition<R> d{j.at("n").get<int>(), {}};
	for (const auto& a : j.at("alphas"))
		d.alphas.push_back(elem_from_json(ring, a));
	if (static_cast<int>(d.alphas.size()) != d.n + 1)
		throw std::invalid_argument("length mismatch");
	return d;
}

// --- presentation export (the public JSON shape) ----------------------------

inline ojson presentation_to_json(const std::shared_ptr<const LazardPresentation>& pres)
{
	ojson gens = ojson::array();
	for (const FglGenerator& g : pres->generators())
		gens.push_back(pres->generator_vars().names[pres->generator_index(g.i, g.j)]);

	ojson comps = ojson::array();
	for (int w = 0; w <= pres->max_weight(); ++w) {
		const auto& comp = pres->component(w);
		ojson basis = ojson::array();
		for (std::size_t k = 0; k < comp.rank(); ++k)
			basis.push_back(pres->basis_element(w, k).str(pres->generator_vars()));
		ojson torsion = ojson::array();
		for (const Int& t : comp.torsion)
			torsion.push_back(t.get_str());
		comps.push_back(ojson{{"weight", w},
		                      {"rank", comp.rank()},
		                      {"torsion", torsion},
		                      {"basis", basis}});
	}

	LazardRing<Int> ring(pres);
	ojson fgl = ojson::array();
	for (const FglGenerator& g : pres->generators())
		fgl.push_back(ojson{{"i", g.i},
		                    {"j", g.j},
		                    {"coords", elem_to_json(ring, ring.generator_class(g.i, g.j))}});

	return ojson{{"schema", kSchema},
	             {"max_weight", pres->max_weight()},
	             {"generators", gens},
	             {"components", comps},
	             {"fgl", fgl}};
}

// --- presentation cache (full reduction data, for FGL_COBORD_CACHE) ---------

inline ojson matrix_to_json(const ExactMatrix& m)
{
	ojson entries = ojson::array();
	for (const auto& [k, v] : m.entries())
		entries.push_back(ojson::array({k.first, k.second, v.get_str()}));
	return ojson{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline ExactMatrix matrix_from_json(const ojson& j)
{
	ExactMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
	for (const auto& e : j.at("entries"))
		m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
		      int_from_string(e.at(2).get_ref<const std::string&>()));
	return m;
}

inline ojson poly_to_json(const MultiPoly<Int>& p)
{
	ojson terms = ojson::array();
	for (const auto& [m, c] : p.terms()) {
		ojson factors = ojson::array();
		for (const auto& [v, e] : m.factors())
			factors.push_back(ojson::array({v, e}));
		terms.push_back(ojson{{"m", factors}, {"c", c.get_str()}});
	}
	return terms;
}

inline MultiPoly<Int> poly_from_json(const ojson& j)
{
	MultiPoly<Int> p;
	for (const auto& t : j) {
		std::vector<Monomial::Factor> factors;
		for (const auto& f : t.at("m"))
			factors.emplace_back(f.at(0).get<std::size_t>(), f.at(1).get<int>());
		p.add_term(Monomial(std::move(factors)),
		           int_from_string(t.at("c").get_ref<const std::string&>()));
	}
	return p;
}

inline ojson presentation_cache_to_json(const std::shared_ptr<const LazardPresentation>& pres)
{
	LazardPresentation::Parts parts = pres->parts();
	ojson rels = ojson::array();
	for (const auto& r : parts.relations)
		rels.push_back(poly_to_json(r));
	ojson comps = ojson::array();
	for (std::size_t w = 0; w < parts.components.size(); ++w) {
		const auto& comp = parts.components[w];
		ojson monomials = ojson::array();
		for (const Monomial& m : comp.monomials) {
			ojson factors = ojson::array();
			for (const auto& [v, e] : m.factors())
				factors.push_back(ojson::array({v, e}));
			monomials.push_back(factors);
		}
		ojson pivots = ojson::array();
		for (const Int& d : comp.pivots)
			pivots.push_back(d.get_str());
		comps.push_back(ojson{{"weight", w},
		                      {"monomials", monomials},
		                      {"pivots", pivots},
		                      {"free_rows", comp.free_rows},
		                      {"lmat", matrix_to_json(comp.lmat)},
		                      {"linv", matrix_to_json(comp.linv)}});
	}
	return ojson{{"schema", kSchema},
	             {"kind", "presentation-cache"},
	             {"max_weight", parts.max_weight},
	             {"relations", rels},
	             {"components", comps}};
}

inline std::shared_ptr<const LazardPresentation> presentation_cache_from_json(const ojson& j)
{
	if (j.at("schema").get<std::string>() != kSchema ||
	    j.at("kind").get<std::string>() != "presentation-cache")
		throw std::invalid_argument("not a presentation cache");
	LazardPresentation::Parts parts;
	parts.max_weight = j.at("max_weight").get<int>();
	for (const auto& r : j.at("relations"))
		parts.relations.push_back(poly_from_json(r));
	for (const auto& c : j.at("components")) {
		LazardPresentation::Component comp;
		for (const auto& mj : c.at("monomials")) {
			std::vector<Monomial::Factor> factors;
			for (const auto& f : mj)
				factors.emplace_back(f.at(0).get<std::size_t>(),
				                     f.at(1).get<int>());
			comp.monomials.emplace_back(std::move(factors));
		}
		for (const auto& d : c.at("pivots")) {
			Int p = int_from_string(d.get_ref<const std::string&>());
			if (p > 1)
				comp.torsion.push_back(p);
			comp.pivots.push_back(std::move(p));
		}
		comp.free_rows = c.at("free_rows").get<std::vector<std::size_t>>();
		comp.lmat = matrix_from_json(c.at("lmat"));
		comp.linv = matrix_from_json(c.at("linv"));
		parts.components.push_back(std::move(comp));
	}
	return LazardPresentation::restore(std::move(parts));
}

} // namespace fgl
