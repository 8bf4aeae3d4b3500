#include "fgl/mishchenko.hpp"

#include <gtest/gtest.h>

using namespace fgl;

namespace {

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

TEST(Mishchenko, PZeroIsOne)
{
	LazardRing<Rat> ring(pres6());
	EXPECT_TRUE(ring.equal(mish6().rational.p[0], ring.one()));
}

TEST(Mishchenko, POneIsMinusA11)
{
	LazardRing<Rat> ring(pres6());
	auto want = ring.neg(ring.generator_class(1, 1));
	EXPECT_TRUE(ring.equal(mish6().rational.p[1], want));
}

TEST(Mishchenko, IntegralThroughDepthSix)
{
	for (int n = 0; n <= 6; ++n)
		EXPECT_TRUE(mish6().integral(n)) << "p_" << n;
	auto zcache = mish6().integral_cache();
	LazardRing<Rat> qring(pres6());
	for (int n = 0; n <= 6; ++n) {
		EXPECT_TRUE(zcache.p[n].is_homogeneous(n));
		EXPECT_TRUE(qring.equal(to_rational(zcache.p[n]), mish6().rational.p[n]));
	}
}

TEST(Mishchenko, CertificatesReduceToTheClasses)
{
	for (int n = 0; n <= 6; ++n) {
		ASSERT_TRUE(mish6().integral(n));
		auto cert = *mish6().certificates[n];
		EXPECT_TRUE(to_rational(reduce<Int>(pres6(), cert)) == mish6().rational.p[n]);
	}
}

// Independent oracle: log'(t) = 1 / (dF/dy)(t, 0), so log(t) is the
// termwise integral of the reciprocal of 1 + sum_i a_i1 t^i.
TEST(Mishchenko, AgreesWithIntegralFormula)
{
	auto pres = pres6();
	LazardRing<Rat> ring(pres);
	int cap = 7;
	using Ser = TruncatedSeries<LazardRing<Rat>>;
	Ser denom = Ser::constant(ring, {"t"}, {cap}, ring.one());
	for (int i = 1; i <= 6; ++i) {
		Ser term(ring, {"t"}, {cap});
		term.set_coeff({i}, ring.generator_class(1, i));
		denom = denom + term;
	}
	// reciprocal by degreewise solve
	Ser recip = Ser::constant(ring, {"t"}, {cap}, ring.one());
	for (int k = 1; k <= cap; ++k) {
		auto c = (denom * recip).coeff({k});
		recip.set_coeff({k}, ring.neg(c));
	}
	EXPECT_TRUE((denom * recip) == Ser::constant(ring, {"t"}, {cap}, ring.one()));
	// m_k = coeff of t^k in recip, divided by k+1
	auto table = universal_fgl_table_q(pres);
	auto c = solve_logarithm(table, 6);
	for (int k = 1; k <= 6; ++k)
		EXPECT_TRUE(ring.equal(c[k + 1], ring.div_int(recip.coeff({k}), k + 1)))
		    << "m_" << k;
}

TEST(Mishchenko, AdditiveCacheIsDeltaSequence)
{
	RatRing qring;
	FglTable<RatRing> table(qring, 2);
	auto qcache = mishchenko_for_table(table, 8);
	auto zcache = integral_cache_of(qcache);
	EXPECT_EQ(zcache.p[0], 1);
	for (int n = 1; n <= 8; ++n)
		EXPECT_EQ(zcache.p[n], 0) << "p_" << n;
}

TEST(Mishchenko, MultiplicativeCacheIsGeometric)
{
	UniPolyRing<Rat> qring;
	FglTable<UniPolyRing<Rat>> table(qring, 2);
	table.set(1, 1, qring.neg(qring.variable()));
	auto cache = integral_cache_of(mishchenko_for_table(table, 8));
	UniPolyRing<Int> zring;
	for (int n = 0; n <= 8; ++n)
		EXPECT_TRUE(zring.equal(cache.p[n], zring.variable(n))) << "p_" << n;
}

TEST(Mishchenko, SpecializedCacheMatchesDirectSolve)
{
	// certificate route and direct logarithm route agree
	auto add_cert = mish6().specialized(additive_morphism(pres6()));
	RatRing qring;
	FglTable<RatRing> table(qring, 2);
	auto add_direct = integral_cache_of(mishchenko_for_table(table, 6));
	for (int n = 0; n <= 6; ++n)
		EXPECT_EQ(add_cert.p[n], add_direct.p[n]);

	auto mul_cert = mish6().specialized(multiplicative_morphism(pres6()));
	UniPolyRing<Int> zring;
	for (int n = 0; n <= 6; ++n)
		EXPECT_TRUE(zring.equal(mul_cert.p[n], zring.variable(n)));
}

TEST(Mishchenko, DepthBeyondTruncationRejected)
{
	EXPECT_THROW(universal_mishchenko(pres6(), 7), std::invalid_argument);
}

TEST(Mishchenko, CacheAtChecksDepth)
{
	auto cache = mish6().integral_cache();
	EXPECT_THROW(cache.at(7), std::out_of_range);
	EXPECT_THROW(cache.at(-1), std::out_of_range);
}

} // namespace
