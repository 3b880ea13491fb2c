#include <cmath>

#include <gtest/gtest.h>

#include "hypergeo/bounds.hpp"
#include "hypergeo/distribution.hpp"
#include "hypergeo/error.hpp"
#include "oracles.hpp"

using namespace hypergeo;

namespace {

Rational frac(long a, long b) { return Rational(mpz_class(a), mpz_class(b)); }

}  // namespace

TEST(Deviation, TFromKExamples) {
    const Params p(10, 5, 5);
    EXPECT_EQ(t_from_k(p, 3), frac(1, 10));
    EXPECT_EQ(t_from_k(Params(10, 4, 5), 2), Rational(0));
    EXPECT_EQ(t_from_k(p, 2), frac(-1, 10));
    EXPECT_THROW(t_from_k(Params(10, 5, 0), 0), DegenerateError);
    EXPECT_THROW(t_from_k_prime(Params(10, 5, 0), 0), DegenerateError);
    EXPECT_EQ(t_from_k_prime(p, 2), frac(1, 10));
}

TEST(Deviation, TailSpecHoldsThresholdIdentity) {
    for (unsigned N = 1; N <= 12; ++N) {
        for (unsigned M = 0; M <= N; ++M) {
            for (unsigned n = 1; n <= N; ++n) {
                const Params params(N, M, n);
                for (std::int64_t k = -1; k <= static_cast<std::int64_t>(n) + 1; ++k) {
                    const TailSpec up = TailSpec::upper(params, k);
                    ASSERT_EQ((up.p + up.t) * Rational(n), Rational(k));
                    ASSERT_EQ(threshold_from_t(params, up.t, TailSide::upper), k);
                    const TailSpec low = TailSpec::lower(params, k);
                    ASSERT_EQ((low.p - low.t) * Rational(n), Rational(k));
                    ASSERT_EQ(threshold_from_t(params, low.t, TailSide::lower), k);
                }
            }
        }
    }
}

TEST(Deviation, ThresholdFromRealT) {
    // p = 1/2, n = 5: (1/2 + 0.05) * 5 = 2.75 -> 3 upward, (1/2 - 0.05) * 5 = 2.25 -> 2 downward.
    const Params p(10, 5, 5);
    EXPECT_EQ(threshold_from_t(p, Rational::parse("0.05"), TailSide::upper), 3);
    EXPECT_EQ(threshold_from_t(p, Rational::parse("0.05"), TailSide::lower), 2);
}

TEST(Hoeffding, Examples) {
    const double reference = oracle::hoeffding_reference(oracle::BigFloat(1) / 2, oracle::BigFloat(1) / 10, 100);
    EXPECT_NEAR(reference, 0.13351367725131660, 1e-16);
    const BoundValue b = hoeffding_bound(frac(1, 2), frac(1, 10), 100);
    EXPECT_FALSE(b.vacuous);
    EXPECT_NEAR(b.value, reference, 1e-14);
    EXPECT_EQ(hoeffding_bound(frac(3, 7), Rational(0), 50).value, 1.0);
    EXPECT_DOUBLE_EQ(hoeffding_bound(frac(1, 2), frac(1, 2), 4).value, 0.0625);
}

TEST(Hoeffding, BoundaryConventions) {
    EXPECT_EQ(hoeffding_bound(Rational(0), frac(1, 10), 5).value, 0.0);
    EXPECT_EQ(hoeffding_bound(frac(1, 2), frac(3, 5), 5).value, 0.0);
    EXPECT_NEAR(hoeffding_bound(frac(1, 3), frac(2, 3), 3).value, 1.0 / 27.0, 1e-16);
    EXPECT_EQ(hoeffding_bound(Rational(1), Rational(0), 5).value, 1.0);
    EXPECT_EQ(hoeffding_bound(frac(1, 2), frac(3, 5), 0).value, 1.0);
    const BoundValue vac = hoeffding_bound(frac(1, 2), frac(-1, 10), 5);
    EXPECT_TRUE(vac.vacuous);
    EXPECT_EQ(vac.value, 1.0);
    EXPECT_THROW(hoeffding_bound(frac(3, 2), Rational(0), 5), DomainError);
}

TEST(Hoeffding, MatchesMultiprecisionOnInteriorGrid) {
    for (long pn = 1; pn < 20; ++pn) {
        for (long tn = 1; pn + tn < 20; ++tn) {
            for (unsigned long n : {1ul, 7ul, 100ul, 5000ul}) {
                const double reference =
                    oracle::hoeffding_reference(oracle::BigFloat(pn) / 20, oracle::BigFloat(tn) / 20, n);
                const double got = hoeffding_bound(frac(pn, 20), frac(tn, 20), n).value;
                if (reference > 1e-300) {
                    EXPECT_NEAR(got / reference, 1.0, 1e-11) << pn << "/20 " << tn << "/20 n=" << n;
                } else {
                    EXPECT_LT(got, 1e-290);
                }
            }
        }
    }
}

TEST(Relaxed, Examples) {
    EXPECT_NEAR(relaxed_bound(Rational::parse("0.1"), 100).value, 0.1353352832366127, 1e-15);
    EXPECT_EQ(relaxed_bound(Rational(0), 123).value, 1.0);
    EXPECT_NEAR(relaxed_bound(Rational::parse("0.2"), 50).value, 0.018315638888734179, 1e-16);
    EXPECT_TRUE(relaxed_bound(frac(-1, 3), 10).vacuous);
    // Far past the double underflow threshold the bound is exactly 0, never NaN.
    EXPECT_EQ(relaxed_bound(Rational(1), 1000000).value, 0.0);
}

TEST(DeviationBound, UpperExamples) {
    EXPECT_NEAR(upper_deviation_bound(Params(100, 50, 20), Rational::parse("0.1"), BoundForm::relaxed).value,
                0.67032004603563930, 1e-15);
    const Params small(10, 5, 5);
    const double relaxed = upper_deviation_bound(small, frac(1, 10), BoundForm::relaxed).value;
    EXPECT_NEAR(relaxed, 0.90483741803595957, 1e-15);
    EXPECT_LE(upper_tail(small, 3).to_double(), relaxed);
    EXPECT_EQ(upper_deviation_bound(small, Rational(0), BoundForm::hoeffding).value, 1.0);
    EXPECT_EQ(upper_deviation_bound(small, Rational(0), BoundForm::relaxed).value, 1.0);
}

TEST(DeviationBound, LowerExamples) {
    const Params small(10, 5, 5);
    const double relaxed = lower_deviation_bound(small, frac(1, 10), BoundForm::relaxed).value;
    EXPECT_NEAR(relaxed, 0.90483741803595957, 1e-15);
    EXPECT_LE(lower_tail(small, 2).to_double(), relaxed);
    EXPECT_EQ(lower_deviation_bound(small, Rational(0), BoundForm::hoeffding).value, 1.0);

    const Params skew(10, 3, 5);
    const Rational t = frac(1, 10);
    const double lower = lower_deviation_bound(skew, t, BoundForm::hoeffding).value;
    const double reference = oracle::hoeffding_reference(oracle::BigFloat(7) / 10, oracle::BigFloat(1) / 10, 5);
    EXPECT_NEAR(lower, reference, 1e-15);
}

TEST(DeviationBound, MirrorUsesFlippedUrn) {
    for (unsigned N = 1; N <= 15; ++N) {
        for (unsigned M = 0; M <= N; ++M) {
            for (unsigned n = 1; n <= N; ++n) {
                for (long tn = 0; tn <= 10; ++tn) {
                    const Rational t = frac(tn, 10);
                    for (BoundForm f : {BoundForm::hoeffding, BoundForm::relaxed}) {
                        ASSERT_EQ(lower_deviation_bound(Params(N, M, n), t, f).value,
                                  upper_deviation_bound(Params(N, N - M, n), t, f).value);
                    }
                }
            }
        }
    }
}

TEST(Bounds, DominanceOnDenseGrid) {
    for (unsigned long n : {1ul, 10ul, 1000ul}) {
        for (long pi = 0; pi <= 1000; ++pi) {
            const Rational p = frac(pi, 1000);
            for (long ti = 0; pi + ti <= 1000; ++ti) {
                const Rational t = frac(ti, 1000);
                ASSERT_LE(hoeffding_bound(p, t, n).value, relaxed_bound(t, n).value + 1e-12)
                    << "p=" << p.str() << " t=" << t.str() << " n=" << n;
            }
        }
    }
}

TEST(Bounds, NonIncreasingInT) {
    for (unsigned long n : {1ul, 25ul, 400ul}) {
        for (long pi = 0; pi <= 100; ++pi) {
            const Rational p = frac(pi, 100);
            double prev_h = 1.0, prev_r = 1.0;
            for (long ti = 0; ti <= 100; ++ti) {
                const Rational t = frac(ti, 100);
                const double h = hoeffding_bound(p, t, n).value;
                const double r = relaxed_bound(t, n).value;
                ASSERT_LE(h, prev_h + 1e-15);
                ASSERT_LE(r, prev_r);
                ASSERT_GE(h, 0.0);
                ASSERT_LE(h, 1.0);
                prev_h = h;
                prev_r = r;
            }
        }
    }
}

TEST(Bounds, SoundOnSmallUrns) {
    for (unsigned N = 1; N <= 20; ++N) {
        for (unsigned M = 0; M <= N; ++M) {
            for (unsigned n = 1; n <= N; ++n) {
                const Params params(N, M, n);
                for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
                    const Rational t = t_from_k(params, k);
                    if (t.sign() < 0) continue;
                    const double exact = upper_tail(params, k).to_double();
                    const double h = hoeffding_bound(params, t).value;
                    ASSERT_LE(exact, h + 1e-12);
                    ASSERT_LE(h, relaxed_bound(t, n).value + 1e-12);
                }
            }
        }
    }
}
