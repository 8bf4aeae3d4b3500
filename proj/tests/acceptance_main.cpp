// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, exit 0 iff everything passes.

#include "fgl/json_io.hpp"
#include "fgl/line_module.hpp"
#include "fgl/mishchenko.hpp"
#include "fgl/proj_ring.hpp"
#include "fgl/wpbf.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

using namespace fgl;

namespace {

using ZRing = LazardRing<Int>;
using ZSeries = TruncatedSeries<ZRing>;
using ZElem = LbElement<ZRing>;

struct Suite {
	bool all_ok = true;

	void criterion(int n, bool ok, const std::string& what)
	{
		all_ok = all_ok && ok;
		std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << n << ": "
		          << what << "\n";
	}
};

ZSeries var3(const ZRing& ring, std::size_t idx, int cap)
{
	return ZSeries::variable(ring, {"x", "y", "z"}, {cap, cap, cap}, idx, cap);
}

// 1. unit, commutativity, associativity of the universal law at N = 6,
// checked through total degree 8
bool universal_fgl_laws(const std::shared_ptr<const LazardPresentation>& pres,
                        const FglTable<ZRing>& f)
{
	ZRing ring(pres);
	int cap = 8;
	ZSeries t = ZSeries::variable(ring, {"t"}, {cap}, 0);
	if (!(formal_sum(f, t, t.shape()) == t))
		return false;
	ZSeries x2 = ZSeries::variable(ring, {"x", "y"}, {cap, cap}, 0, cap);
	ZSeries y2 = ZSeries::variable(ring, {"x", "y"}, {cap, cap}, 1, cap);
	if (!(formal_sum(f, x2, y2) - formal_sum(f, y2, x2)).is_zero())
		return false;
	ZSeries x = var3(ring, 0, cap), y = var3(ring, 1, cap), z = var3(ring, 2, cap);
	ZSeries assoc = formal_sum(f, formal_sum(f, x, y), z) -
	                formal_sum(f, x, formal_sum(f, y, z));
	return assoc.is_zero();
}

// 2. graded ranks against the rational buds oracle
bool graded_ranks(const std::shared_ptr<const LazardPresentation>& pres)
{
	const long expect[] = {1, 1, 2, 3, 5, 7, 11};
	test::BudsOracle oracle(6);
	for (int w = 0; w <= 6; ++w) {
		auto info = pres->graded_component(w);
		if (info.rank != expect[w] || !info.torsion.empty())
			return false;
		if (oracle.rank_at_weight(*pres, w) != info.rank)
			return false;
	}
	return true;
}

// 3. p_n integral for n <= 5 and p_1 = -a_11 via the bundle-class constant
bool mishchenko_integrality(const std::shared_ptr<const LazardPresentation>& pres,
                            const UniversalMishchenko& mish, const FglTable<ZRing>& f)
{
	for (int n = 0; n <= 5; ++n)
		if (!mish.integral(n))
			return false;
	ZRing ring(pres);
	LazardRing<Rat> qring(pres);
	auto p1_log = mish.rational.p[1];
	if (!qring.equal(p1_log, qring.neg(qring.generator_class(1, 1))))
		return false;
	// cross-derivation: the constant term of [P(L+O)] is [P^1]
	auto pclass = pbundle_class(f, 0);
	return qring.equal(to_rational(pclass.constant_term()), p1_log);
}

// 4. inverse identity and its mutation sensitivity
bool inverse_identity(const std::shared_ptr<const LazardPresentation>& pres,
                      const FglTable<ZRing>& f)
{
	if (!verify_inverse_identity(f, 6).ok)
		return false;
	auto add = specialize(f, additive_morphism(pres));
	if (!verify_inverse_identity(add, 6).ok)
		return false;
	auto mul = specialize(f, multiplicative_morphism(pres));
	if (!verify_inverse_identity(mul, 6).ok)
		return false;
	// every single bumped a_ij must break it (cap N+2: the perturbation
	// u^i iota^j + u^j iota^i starts one degree past i+j when i+j is odd)
	ZRing ring(pres);
	int cap = pres->max_weight() + 2;
	ZSeries u = ZSeries::variable(ring, {"u"}, {cap}, 0);
	ZSeries iota_clean = formal_inverse(f, cap, "u");
	for (const FglGenerator& g : pres->generators()) {
		auto bad = f;
		bad.set(g.i, g.j, ring.add(f.at(g.i, g.j), ring.one()));
		auto res = inverse_identity_residual(u, iota_clean, pbundle_class(bad, cap));
		if (res.is_zero())
			return false;
	}
	return true;
}

// 5. double point split and the bridge to the bundle class
bool dpc_split(const std::shared_ptr<const LazardPresentation>& pres,
               const FglTable<ZRing>& f)
{
	ZRing ring(pres);
	auto s = dpc_expand(f, 6, 6); // asserts F = x + y + x*y*S internally
	ZSeries x = ZSeries::variable(ring, {"u"}, {6}, 0);
	auto bridge = substitute(s, {x, formal_inverse(f, 6, "u")}) + pbundle_class(f, 6);
	return bridge.is_zero();
}

// 6. FGL coefficients round-trip through B*(P^n x P^m)
bool fgl_roundtrip(const std::shared_ptr<const LazardPresentation>& pres,
                   const FglTable<ZRing>& f)
{
	ZRing ring(pres);
	ProjRing<ZRing> big(ring, {6, 6});
	auto ext = extract_fgl_coeffs(big, chern_of_line_bundle(big, f, {1, 1}));
	for (int i = 1; i <= 6; ++i)
		for (int j = 1; j <= 6; ++j)
			if (!ring.equal(ext.at(i, j), f.at(i, j)))
				return false;
	ProjRing<ZRing> small(ring, {3, 5});
	auto ext_small = extract_fgl_coeffs(small, chern_of_line_bundle(small, f, {1, 1}));
	for (int i = 1; i <= 3; ++i)
		for (int j = 1; j <= 5; ++j)
			if (!ring.equal(ext_small.at(i, j), ext.at(i, j)))
				return false;
	return true;
}

// 7. psi_0 series coefficients and biorthogonality
bool psi_series(const std::shared_ptr<const LazardPresentation>& pres,
                const MishchenkoCache<ZRing>& cache, const PsiSeries<ZRing>& psi)
{
	ZRing ring(pres);
	if (!ring.equal(psi.gamma[1], ring.neg(cache.at(1))))
		return false;
	if (!ring.equal(psi.gamma[2], cache.at(1) * cache.at(1) - cache.at(2)))
		return false;
	for (int j = 0; j <= 6; ++j) {
		ZElem cur = ZElem::basis(ring, j);
		for (int i = 0; i <= 6; ++i) {
			auto v = psi0(cur, psi, cache);
			if (!ring.equal(v, i == j ? ring.one() : ring.zero()))
				return false;
			cur = shift(cur);
		}
	}
	return true;
}

// 8. coordinates invert assembly on random module elements
bool basis_roundtrip(const std::shared_ptr<const LazardPresentation>& pres,
                     const MishchenkoCache<ZRing>& cache, const PsiSeries<ZRing>& psi)
{
	ZRing ring(pres);
	std::mt19937 rng(808);
	for (int t = 0; t < 100; ++t) {
		ZElem e(ring);
		for (int i = 0; i <= 6; ++i)
			e.set_coeff(i, test::random_element(pres, rng, 3));
		auto beta = coordinates(e, psi, cache);
		ZElem back(ring);
		for (std::size_t i = 0; i < beta.size(); ++i)
			back.set_coeff(static_cast<int>(i), beta[i]);
		if (!(back == e))
			return false;
	}
	return true;
}

// 9. divided powers under the additive specialization, i+j <= 8
bool divided_powers()
{
	IntRing ring;
	RatRing qring;
	FglTable<RatRing> qtable(qring, 2);
	auto cache = integral_cache_of(mishchenko_for_table(qtable, 8));
	FglTable<IntRing> table(ring, 2);
	LbProduct<IntRing> prod(ring, table, build_psi(cache, 8), cache);
	for (int i = 0; i <= 8; ++i)
		for (int j = 0; i + j <= 8; ++j) {
			LbElement<IntRing> want(ring);
			want.set_coeff(i + j, binomial(i + j, i));
			if (!(prod.basis_product(i, j) == want))
				return false;
		}
	return true;
}

// 10. e_1 * e_1 in the universal module and its additive image
bool universal_product(const std::shared_ptr<const LazardPresentation>& pres,
                       const FglTable<ZRing>& f, const MishchenkoCache<ZRing>& cache,
                       const PsiSeries<ZRing>& psi)
{
	ZRing ring(pres);
	LbProduct<ZRing> prod(ring, f, psi, cache);
	auto p1 = cache.at(1);
	auto p2 = cache.at(2);
	ZElem want(ring);
	want.set_coeff(2, ring.from_int(2));
	want.set_coeff(1, ring.neg(p1));
	want.set_coeff(0, (p1 * p1 - p2).scaled(Int(2)));
	auto e11 = prod.basis_product(1, 1);
	if (!(e11 == want))
		return false;
	// additive image collapses to 2 e_2
	auto add = additive_morphism(pres);
	IntRing target;
	LbElement<IntRing> image(target);
	for (const auto& [k, c] : e11.terms())
		image.set_coeff(k, add.apply(c));
	LbElement<IntRing> expect(target);
	expect.set_coeff(2, 2);
	return image == expect;
}

// 11. weak projective bundle formula round trips
bool wpbf_roundtrip(const std::shared_ptr<const LazardPresentation>& pres,
                    const MishchenkoCache<ZRing>& cache, const PsiSeries<ZRing>& psi)
{
	ZRing ring(pres);
	std::mt19937 rng(1111);
	for (int n = 0; n <= 6; ++n) {
		ProjRing<ZRing> pn(ring, {n});
		for (int t = 0; t < 100; ++t) {
			auto d = WpbfDecomposition<ZRing>::zero(ring, n);
			for (auto& a : d.alphas)
				a = test::random_element(pres, rng, 3);
			auto e = proj_map(d, pn);
			auto back = decompose(e, pn, psi, cache);
			for (int i = 0; i <= n; ++i)
				if (!ring.equal(back.alphas[i], d.alphas[i]))
					return false;
			if (!(proj_map(back, pn) == e))
				return false;
			auto emb = iota(e, pn);
			for (int k = 0; k <= n; ++k)
				emb = shift(emb);
			if (!emb.is_zero())
				return false;
		}
	}
	return true;
}

// 12. multiplicative specialization: P(u) = b, iota(u) = -u/(1 - b u)
bool multiplicative_forms(const std::shared_ptr<const LazardPresentation>& pres,
                          const FglTable<ZRing>& f)
{
	auto mul = specialize(f, multiplicative_morphism(pres));
	UniPolyRing<Int> ring;
	auto p = pbundle_class(mul, 8);
	auto want = TruncatedSeries<UniPolyRing<Int>>::constant(ring, {"u"}, {8},
	                                                        ring.variable());
	if (!(p == want))
		return false;
	auto inv = formal_inverse(mul, 8);
	for (int k = 1; k <= 8; ++k)
		if (!ring.equal(inv.coeff({k}), ring.neg(ring.variable(k - 1))))
			return false;
	return true;
}

} // namespace

int main()
{
	auto t0 = std::chrono::steady_clock::now();
	auto pres = LazardPresentation::build(6);
	auto table = universal_fgl_table(pres);
	auto mish = universal_mishchenko(pres, 6);
	auto cache = mish.integral_cache();
	auto psi = build_psi(cache, cache.depth());

	Suite suite;
	suite.criterion(1, universal_fgl_laws(pres, table),
	                "universal FGL at N=6: unit, commutativity, associativity "
	                "through total degree 8");
	suite.criterion(2, graded_ranks(pres),
	                "graded ranks (1,1,2,3,5,7,11), no torsion, buds oracle agrees");
	suite.criterion(3, mishchenko_integrality(pres, mish, table),
	                "p_n integral for n<=5; p_1 = -a_11 via the bundle class");
	suite.criterion(4, inverse_identity(pres, table),
	                "u + iota - u*iota*P = 0 through degree 6; every single "
	                "mutation flips");
	suite.criterion(5, dpc_split(pres, table),
	                "F = x + y + x*y*S with S(x, iota(x)) = -P(x) through degree 6");
	suite.criterion(6, fgl_roundtrip(pres, table),
	                "c1(O(1,1)) coefficients round-trip; caps (3,5) and (6,6) agree");
	suite.criterion(7, psi_series(pres, cache, psi),
	                "gamma_1 = -p_1, gamma_2 = p_1^2 - p_2; psi0(d^i e_j) = delta_ij");
	suite.criterion(8, basis_roundtrip(pres, cache, psi),
	                "coordinates invert assembly on 100 random elements");
	suite.criterion(9, divided_powers(),
	                "additive e_i * e_j = C(i+j,i) e_{i+j} for i+j <= 8");
	suite.criterion(10, universal_product(pres, table, cache, psi),
	                "e_1 * e_1 = 2e_2 - p_1 e_1 + (2p_1^2 - 2p_2) e_0; additive "
	                "image 2e_2");
	suite.criterion(11, wpbf_roundtrip(pres, cache, psi),
	                "WPBF round trips for n<=6, 100 random elements; shift^{n+1} "
	                "kills iota");
	suite.criterion(12, multiplicative_forms(pres, table),
	                "multiplicative P(u) = b and iota(u) = -u/(1 - b u) through "
	                "degree 8");

	auto t1 = std::chrono::steady_clock::now();
	std::cout << (suite.all_ok ? "all criteria passed" : "FAILURES present") << " ("
	          << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
	          << " ms)\n";
	return suite.all_ok ? 0 : 1;
}
