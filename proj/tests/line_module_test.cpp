#include "fgl/line_module.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fgl;

namespace {

using ZRing = LazardRing<Int>;
using ZElem = LbElement<ZRing>;

std::shared_ptr<const LazardPresentation> pres6()
{
	static auto p = LazardPresentation::build(6);
	return p;
}

const UniversalMishchenko& mish6()
{
	static auto m = universal_mishchenko(pres6(), 6);
	return m;
}

const MishchenkoCache<ZRing>& zcache()
{
	static auto c = mish6().integral_cache();
	return c;
}

const PsiSeries<ZRing>& zpsi()
{
	static auto p = build_psi(zcache(), 6);
	return p;
}

ZRing zring() { return ZRing(pres6()); }

const LbProduct<ZRing>& zproduct()
{
	static LbProduct<ZRing> p(zring(), universal_fgl_table(pres6()), zpsi(), zcache());
	return p;
}

LbProduct<IntRing> additive_product(int depth)
{
	IntRing ring;
	RatRing qring;
	FglTable<RatRing> qtable(qring, 2);
	auto cache = integral_cache_of(mishchenko_for_table(qtable, depth));
	FglTable<IntRing> table(ring, 2);
	return LbProduct<IntRing>(ring, table, build_psi(cache, depth), cache);
}

TEST(Shift, BasisAndLinearity)
{
	auto ring = zring();
	EXPECT_TRUE(shift(ZElem::basis(ring, 0)).is_zero());
	EXPECT_TRUE(shift(ZElem::basis(ring, 3)) == ZElem::basis(ring, 2));
	std::mt19937 rng(3);
	auto alpha = test::random_element(pres6(), rng);
	ZElem e(ring);
	e.set_coeff(2, alpha);
	e.set_coeff(0, ring.one());
	ZElem want(ring);
	want.set_coeff(1, alpha);
	EXPECT_TRUE(shift(e) == want);
}

TEST(Forget, BasisValues)
{
	auto ring = zring();
	EXPECT_TRUE(ring.equal(forget(ZElem::basis(ring, 0), zcache()), ring.one()));
	EXPECT_TRUE(ring.equal(forget(ZElem::basis(ring, 1), zcache()),
	                       ring.neg(ring.generator_class(1, 1))));
	std::mt19937 rng(5);
	auto alpha = test::random_element(pres6(), rng);
	ZElem e(ring);
	e.set_coeff(0, alpha);
	EXPECT_TRUE(ring.equal(forget(e, zcache()), alpha));
}

TEST(Forget, DepthChecked)
{
	auto ring = zring();
	auto shallow = universal_mishchenko(pres6(), 2).integral_cache();
	EXPECT_THROW(forget(ZElem::basis(ring, 3), shallow), std::out_of_range);
}

TEST(Psi, LeadingGammas)
{
	auto ring = zring();
	const auto& g = zpsi().gamma;
	EXPECT_TRUE(ring.equal(g[0], ring.one()));
	// gamma_1 = -p_1, gamma_2 = p_1^2 - p_2: the displayed psi_0 expansion
	EXPECT_TRUE(ring.equal(g[1], ring.neg(zcache().at(1))));
	EXPECT_TRUE(ring.equal(g[2], zcache().at(1) * zcache().at(1) - zcache().at(2)));
}

TEST(Psi, GammaConvolutionVanishes)
{
	auto ring = zring();
	for (int i = 1; i <= 6; ++i) {
		auto acc = ring.zero();
		for (int k = 0; k <= i; ++k)
			acc = ring.add(acc, zpsi().gamma[k] * zcache().at(i - k));
		EXPECT_TRUE(ring.is_zero(acc)) << "i=" << i;
	}
}

TEST(Psi0, ProjectsOntoE0)
{
	auto ring = zring();
	std::mt19937 rng(7);
	auto alpha = test::random_element(pres6(), rng);
	EXPECT_TRUE(ring.equal(psi0(ZElem::basis(ring, 0).scaled(alpha), zpsi(), zcache()),
	                       alpha));
	for (int j = 1; j <= 6; ++j)
		EXPECT_TRUE(ring.is_zero(psi0(ZElem::basis(ring, j), zpsi(), zcache())))
		    << "j=" << j;
	// e_0 + p_1 e_1 -> 1
	ZElem e = ZElem::basis(ring, 0) + ZElem::basis(ring, 1).scaled(zcache().at(1));
	EXPECT_TRUE(ring.equal(psi0(e, zpsi(), zcache()), ring.one()));
}

TEST(Psi0, Biorthogonality)
{
	auto ring = zring();
	for (int j = 0; j <= 6; ++j) {
		ZElem cur = ZElem::basis(ring, j);
		for (int i = 0; i <= 6; ++i) {
			auto v = psi0(cur, zpsi(), zcache());
			EXPECT_TRUE(ring.equal(v, i == j ? ring.one() : ring.zero()))
			    << i << "," << j;
			cur = shift(cur);
		}
	}
}

TEST(Psi0, DepthChecked)
{
	auto ring = zring();
	auto psi2 = build_psi(zcache(), 2);
	EXPECT_THROW(psi0(ZElem::basis(ring, 4), psi2, zcache()), std::out_of_range);
}

TEST(Coordinates, RoundTrip)
{
	auto ring = zring();
	std::mt19937 rng(11);
	for (int t = 0; t < 100; ++t) {
		ZElem e(ring);
		std::uniform_int_distribution<int> pick(0, 6);
		for (int i = 0; i <= 6; ++i)
			if (pick(rng) >= 3)
				e.set_coeff(i, test::random_element(pres6(), rng, 3));
		auto beta = coordinates(e, zpsi(), zcache());
		ZElem back(ring);
		for (std::size_t i = 0; i < beta.size(); ++i)
			back.set_coeff(static_cast<int>(i), beta[i]);
		EXPECT_TRUE(back == e);
	}
}

TEST(Coordinates, SpecExamples)
{
	auto ring = zring();
	EXPECT_TRUE(coordinates(ZElem(ring), zpsi(), zcache()).empty());
	std::mt19937 rng(13);
	auto alpha = test::random_element(pres6(), rng);
	ZElem e(ring);
	e.set_coeff(0, ring.from_int(3));
	e.set_coeff(2, alpha);
	auto beta = coordinates(e, zpsi(), zcache());
	ASSERT_EQ(beta.size(), 3u);
	EXPECT_TRUE(ring.equal(beta[0], ring.from_int(3)));
	EXPECT_TRUE(ring.is_zero(beta[1]));
	EXPECT_TRUE(ring.equal(beta[2], alpha));
	auto b5 = coordinates(ZElem::basis(ring, 5), zpsi(), zcache());
	ASSERT_EQ(b5.size(), 6u);
	for (int i = 0; i <= 5; ++i)
		EXPECT_TRUE(ring.equal(b5[i], i == 5 ? ring.one() : ring.zero()));
}

TEST(Product, UnitAndCommutativity)
{
	auto ring = zring();
	for (int j = 0; j <= 6; ++j)
		EXPECT_TRUE(zproduct().basis_product(0, j) == ZElem::basis(ring, j));
	for (int i = 0; i <= 6; ++i)
		for (int j = 0; i + j <= 6; ++j)
			EXPECT_TRUE(zproduct().basis_product(i, j) ==
			            zproduct().basis_product(j, i));
}

TEST(Product, HandComputedE1E1)
{
	// e_1 * e_1 = 2 e_2 - p_1 e_1 + (2 p_1^2 - 2 p_2) e_0
	auto ring = zring();
	auto p1 = zcache().at(1);
	auto p2 = zcache().at(2);
	ZElem want(ring);
	want.set_coeff(2, ring.from_int(2));
	want.set_coeff(1, ring.neg(p1));
	want.set_coeff(0, (p1 * p1 - p2).scaled(Int(2)));
	EXPECT_TRUE(zproduct().basis_product(1, 1) == want);
}

TEST(Product, HomogeneousOfSummedWeight)
{
	for (int i = 1; i <= 3; ++i)
		for (int j = i; i + j <= 6; ++j)
			EXPECT_TRUE(zproduct().basis_product(i, j).is_homogeneous(i + j))
			    << i << "," << j;
}

TEST(Product, DividedPowersUnderAdditive)
{
	auto prod = additive_product(8);
	IntRing ring;
	for (int i = 0; i <= 8; ++i)
		for (int j = 0; i + j <= 8; ++j) {
			LbElement<IntRing> want(ring);
			want.set_coeff(i + j, binomial(i + j, i));
			EXPECT_TRUE(prod.basis_product(i, j) == want) << i << "," << j;
		}
}

TEST(Product, AssociativityAndBilinearity)
{
	auto ring = zring();
	// associativity on triples with i+j+k <= 5
	for (int i = 0; i <= 5; ++i)
		for (int j = 0; i + j <= 5; ++j)
			for (int k = 0; i + j + k <= 5; ++k) {
				auto ei = ZElem::basis(ring, i);
				auto ej = ZElem::basis(ring, j);
				auto ek = ZElem::basis(ring, k);
				auto lhs = zproduct().mul(zproduct().mul(ei, ej), ek);
				auto rhs = zproduct().mul(ei, zproduct().mul(ej, ek));
				EXPECT_TRUE(lhs == rhs) << i << "," << j << "," << k;
			}
	// bilinearity over random coefficients
	std::mt19937 rng(19);
	auto alpha = test::random_element(pres6(), rng, 2);
	auto beta = test::random_element(pres6(), rng, 2);
	ZElem a = ZElem::basis(ring, 1).scaled(alpha) + ZElem::basis(ring, 0);
	ZElem b = ZElem::basis(ring, 2).scaled(beta);
	auto lhs = zproduct().mul(a, b);
	auto rhs = zproduct().basis_product(1, 2).scaled(alpha * beta) +
	           zproduct().basis_product(0, 2).scaled(beta);
	EXPECT_TRUE(lhs == rhs);
}

TEST(Product, SpecializationNaturality)
{
	// specialize coefficients then multiply == multiply then specialize
	auto add = additive_morphism(pres6());
	IntRing target;
	auto addprod = additive_product(6);
	for (int i = 0; i <= 6; ++i)
		for (int j = i; i + j <= 6; ++j) {
			auto u = zproduct().basis_product(i, j);
			LbElement<IntRing> mapped(target);
			for (const auto& [k, c] : u.terms())
				mapped.set_coeff(k, add.apply(c));
			EXPECT_TRUE(mapped == addprod.basis_product(i, j))
			    << i << "," << j;
		}

	auto mul = multiplicative_morphism(pres6());
	UniPolyRing<Int> ztarget;
	UniPolyRing<Rat> qtarget;
	FglTable<UniPolyRing<Rat>> qtable(qtarget, 2);
	qtable.set(1, 1, qtarget.neg(qtarget.variable()));
	auto mcache = integral_cache_of(mishchenko_for_table(qtable, 6));
	FglTable<UniPolyRing<Int>> mtable(ztarget, 2);
	mtable.set(1, 1, ztarget.neg(ztarget.variable()));
	LbProduct<UniPolyRing<Int>> mulprod(ztarget, mtable, build_psi(mcache, 6), mcache);
	for (int i = 0; i <= 6; ++i)
		for (int j = i; i + j <= 6; ++j) {
			auto u = zproduct().basis_product(i, j);
			LbElement<UniPolyRing<Int>> mapped(ztarget);
			for (const auto& [k, c] : u.terms())
				mapped.set_coeff(k, mul.apply(c));
			EXPECT_TRUE(mapped == mulprod.basis_product(i, j))
			    << i << "," << j;
		}
}

TEST(Product, ShiftConsistencyWithRecursion)
{
	// d(e_i * e_j) must equal the recursion's right-hand side
	auto ring = zring();
	auto table = universal_fgl_table(pres6());
	for (int i = 1; i <= 3; ++i)
		for (int j = i; i + j <= 6; ++j) {
			auto lhs = shift(zproduct().basis_product(i, j));
			ZElem rhs(ring);
			rhs = rhs + zproduct().basis_product(i - 1, j) +
			      zproduct().basis_product(i, j - 1);
			for (const auto& [ab, c] : table.entries()) {
				auto [a, b] = ab;
				if (a <= i && b <= j)
					rhs = rhs +
					      zproduct().basis_product(i - a, j - b).scaled(c);
				if (a != b && b <= i && a <= j)
					rhs = rhs +
					      zproduct().basis_product(i - b, j - a).scaled(c);
			}
			EXPECT_TRUE(lhs == rhs) << i << "," << j;
		}
}

TEST(Product, ForgetIsMultiplicative)
{
	auto ring = zring();
	for (int i = 1; i <= 3; ++i)
		for (int j = i; i + j <= 6; ++j)
			EXPECT_TRUE(ring.equal(
			    forget(zproduct().basis_product(i, j), zcache()),
			    zcache().at(i) * zcache().at(j)))
			    << i << "," << j;
}

TEST(Product, DepthExhaustionThrows)
{
	EXPECT_THROW(zproduct().basis_product(4, 4), std::out_of_range);
}

TEST(KunnethScale, Trivia)
{
	auto ring = zring();
	auto e = ZElem::basis(ring, 2);
	EXPECT_TRUE(kunneth_scale(ring.one(), e) == e);
	EXPECT_TRUE(kunneth_scale(ring.zero(), e).is_zero());
	auto p1 = zcache().at(1);
	ZElem want(ring);
	want.set_coeff(2, p1);
	EXPECT_TRUE(kunneth_scale(p1, e) == want);
}

TEST(BottTower, OpaqueTags)
{
	BottTowerClass a{2}, b{2}, c{3};
	EXPECT_TRUE(a == b);
	EXPECT_FALSE(a == c);
	EXPECT_EQ(a.str(), "[P_2, M_2]");
}

} // namespace
