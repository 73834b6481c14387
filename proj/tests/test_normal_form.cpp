#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boson/normal_form.hpp"

using namespace boson;

namespace {
const MultiPoly L = MultiPoly::lambda();

NormalForm random_nf(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> e(0, 3);
    std::uniform_int_distribution<int> c(-3, 3);
    NormalForm f;
    for (int w = 0; w < 4; ++w)
        f.add_term(Word{e(rng), e(rng)}, MultiPoly(Rational(c(rng))));
    return f;
}
}  // namespace

TEST_CASE("commutator") {
    NormalForm a = NormalForm::annihilator(), ad = NormalForm::creator();
    NormalForm a_ad = nf_mul(a, ad);
    CHECK(a_ad.coeff(0, 0) == MultiPoly(1));
    CHECK(a_ad.coeff(1, 1) == MultiPoly(1));
    CHECK(a_ad.terms().size() == 2);

    NormalForm ad_a = nf_mul(ad, a);
    CHECK(ad_a == NormalForm::number_operator());

    CHECK(a_ad - ad_a == NormalForm::identity());
}

TEST_CASE("number operator squared") {
    NormalForm n = NormalForm::number_operator();
    NormalForm n2 = nf_mul(n, n);
    CHECK(n2.coeff(1, 1) == MultiPoly(1));
    CHECK(n2.coeff(2, 2) == MultiPoly(1));
    CHECK(n2.terms().size() == 2);
}

TEST_CASE("degenerate powers of N") {
    NormalForm n = NormalForm::number_operator();

    CHECK(nf_degenerate_power(n, 0, L) == NormalForm::identity());
    CHECK(nf_degenerate_power(n, 1, L) == n);

    NormalForm n2 = nf_degenerate_power(n, 2, L);
    CHECK(n2.coeff(1, 1) == MultiPoly(1) - L);
    CHECK(n2.coeff(2, 2) == MultiPoly(1));
    CHECK(n2.terms().size() == 2);

    NormalForm n3_classic = nf_degenerate_power(n, 3, MultiPoly(0));
    CHECK(n3_classic.coeff(1, 1) == MultiPoly(1));
    CHECK(n3_classic.coeff(2, 2) == MultiPoly(3));
    CHECK(n3_classic.coeff(3, 3) == MultiPoly(1));
}

TEST_CASE("normal ordering theorem k <= 12") {
    StirlingTable table(12);
    for (unsigned k = 0; k <= 12; ++k) CHECK(verify_normal_ordering_theorem(k, table));
}

TEST_CASE("number state eigenvalues") {
    NormalForm n2 = nf_degenerate_power(NormalForm::number_operator(), 2, L);
    CHECK(nf_apply_number_state(n2, 3) == MultiPoly(9) - MultiPoly(3) * L);

    CHECK(nf_apply_number_state(NormalForm::identity(), 5) == MultiPoly(1));

    for (unsigned k = 1; k <= 6; ++k) {
        NormalForm nk = nf_degenerate_power(NormalForm::number_operator(), k, L);
        CHECK(nf_apply_number_state(nk, 0).is_zero());
    }

    CHECK_THROWS_AS(nf_apply_number_state(NormalForm::creator(), 1), std::domain_error);
}

TEST_CASE("eigenvalue consistency with the falling factorial") {
    for (unsigned k = 0; k <= 10; ++k) {
        NormalForm nk = nf_degenerate_power(NormalForm::number_operator(), k, L);
        for (unsigned m = 0; m <= 10; ++m)
            CHECK(nf_apply_number_state(nk, m) ==
                  falling_factorial(k, MultiPoly(Rational(m)), L));
    }
}

TEST_CASE("ring laws on random normal forms") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        NormalForm f = random_nf(rng), g = random_nf(rng), h = random_nf(rng);
        CHECK(nf_mul(nf_mul(f, g), h) == nf_mul(f, nf_mul(g, h)));
        CHECK(nf_mul(f + g, h) == nf_mul(f, h) + nf_mul(g, h));
        CHECK(nf_mul(h, f + g) == nf_mul(h, f) + nf_mul(h, g));
    }
}

TEST_CASE("operator exponential identity, order by order") {
    // N e_L^{N-L}(t) = e_L^{N-L}(t) N = ad e_L^{N+1-L}(t) a, compared at each
    // t-coefficient: N (N-L)_{k,L} = (N-L)_{k,L} N = ad (N+1-L)_{k,L} a
    NormalForm n = NormalForm::number_operator();
    NormalForm n_minus = n - NormalForm::scalar(L);
    NormalForm n_plus = n + NormalForm::scalar(MultiPoly(1) - L);
    for (unsigned k = 0; k <= 6; ++k) {
        NormalForm mid = nf_degenerate_power(n_minus, k, L);
        NormalForm lhs = nf_mul(n, mid);
        NormalForm rhs = nf_mul(nf_mul(NormalForm::creator(),
                                       nf_degenerate_power(n_plus, k, L)),
                                NormalForm::annihilator());
        CHECK(lhs == nf_mul(mid, n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rendering") {
    NormalForm n2 = nf_degenerate_power(NormalForm::number_operator(), 2, L);
    CHECK(n2.to_string() == "ad^2 a^2 + (1 - L) ad a");
    CHECK(n2.to_expr_string() == "ad^2 * a^2 + (1 - lambda) * ad * a");

    NormalForm a_ad = nf_mul(NormalForm::annihilator(), NormalForm::creator());
    CHECK(a_ad.to_string() == "ad a + 1");

    CHECK(n2.to_json() ==
          "{\"terms\":[{\"i\":1,\"j\":1,\"coeff\":{\"terms\":["
          "{\"coeff\":\"1/1\",\"lambda\":0,\"x\":0},"
          "{\"coeff\":\"-1/1\",\"lambda\":1,\"x\":0}]}},"
          "{\"i\":2,\"j\":2,\"coeff\":{\"terms\":["
          "{\"coeff\":\"1/1\",\"lambda\":0,\"x\":0}]}}]}");
}
