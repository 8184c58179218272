#include "doctest.h"

#include "okc/model/proj.hpp"
#include "oracles/fgl_oracle.hpp"
#include "oracles/rng.hpp"

using namespace okc;

namespace {

SparsePoly kpoly(const MultiProj& p, const TermList& t) { return SparsePoly::from_terms(k_ring(p), t); }

KClass kx(const MultiProj& p, std::vector<int> e, long c = 1) { return KClass::monomial(p, e, c); }

MultiProj random_space(testing::Rng& rng, int max_factors, int max_dim) {
    std::vector<int> d(static_cast<std::size_t>(rng.uniform(1, max_factors)));
    for (auto& x : d) x = static_cast<int>(rng.uniform(0, max_dim));
    return MultiProj(d);
}

KClass random_k(testing::Rng& rng, const MultiProj& p, int terms) {
    KClass out(p);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e;
        for (int d : p.dims()) e.push_back(static_cast<int>(rng.uniform(0, d)));
        out = out + kx(p, e, rng.uniform(-5, 5));
    }
    return out;
}

BMClass random_bm(testing::Rng& rng, const MultiProj& p) {
    BMClass out(p);
    for (int t = 0; t < 3; ++t) out = out + BMClass::from_k(random_k(rng, p, 3), static_cast<int>(rng.uniform(-2, p.dim() + 2)));
    return out;
}

LineBundleSpec random_bundle(testing::Rng& rng, const MultiProj& p) {
    LineBundleSpec l;
    for (std::size_t i = 0; i < p.factors(); ++i) l.degrees.push_back(rng.uniform(-3, 3));
    return l;
}

}  // namespace

TEST_CASE("k_ring presentations") {
    MultiProj p2({2});
    auto r = k_ring(p2);
    REQUIRE(r->num_vars() == 1);
    CHECK(r->var(0).name == "x");
    CHECK(r->var(0).nil_index == 3);
    CHECK(kx(p2, {3}).is_zero());
    // P^0: x = 0, so the ring is Z.
    MultiProj pt({0});
    CHECK(kx(pt, {1}).is_zero());
    CHECK_FALSE(KClass::one(pt).is_zero());
    MultiProj p11({1, 1});
    auto r11 = k_ring(p11);
    CHECK(r11->var(0).name == "x1");
    CHECK(r11->var(1).nil_index == 2);
    CHECK((kx(p11, {1, 0}) * kx(p11, {1, 0})).is_zero());
    CHECK_FALSE((kx(p11, {1, 0}) * kx(p11, {0, 1})).is_zero());
    CHECK_THROWS_AS(MultiProj({}), std::invalid_argument);
    CHECK_THROWS_AS(MultiProj({2, -1}), std::invalid_argument);
    CHECK(MultiProj({2, 1}).str() == "P^2 x P^1");
}

TEST_CASE("class_of_bundle") {
    MultiProj p2({2}), p1({1});
    CHECK(class_of_bundle(p2, {{-1}}).str() == "1 - x");
    CHECK(class_of_bundle(p2, {{1}}).str() == "1 + x + x^2");
    CHECK(class_of_bundle(p1, {{2}}).str() == "1 + 2*x");
    CHECK(class_of_bundle(p2, {{0}}) == KClass::one(p2));
    CHECK_THROWS_AS(class_of_bundle(p2, {{1, 1}}), std::invalid_argument);
    // [O(a)][O(b)] = [O(a+b)] and negative binomial coefficients.
    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        MultiProj p = random_space(rng, 3, 4);
        auto a = random_bundle(rng, p), b = random_bundle(rng, p);
        LineBundleSpec ab{a.degrees};
        for (std::size_t i = 0; i < ab.degrees.size(); ++i) ab.degrees[i] += b.degrees[i];
        CHECK(class_of_bundle(p, a) * class_of_bundle(p, b) == class_of_bundle(p, ab));
    }
    MultiProj p4({4});
    for (long a = -4; a <= 4; ++a) {
        // (1 - x)^{-a} = sum_k binom(-a, k) (-x)^k
        TermList t;
        for (int k = 0; k <= 4; ++k) {
            BigInt c = oracle::gen_binom(-a, k);
            if (k % 2) c = -c;
            t.emplace_back(Monomial::var(0, k), c);
        }
        CHECK(class_of_bundle(p4, {{a}}).value() == kpoly(p4, t));
    }
}

TEST_CASE("class_of_linear_stratum") {
    MultiProj p2({2});
    CHECK(class_of_linear_stratum(p2, {1}).str() == "x");
    CHECK(class_of_linear_stratum(p2, {2}).str() == "x^2");
    CHECK(class_of_linear_stratum(p2, {0}) == KClass::one(p2));
    CHECK_THROWS_AS(class_of_linear_stratum(p2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(class_of_linear_stratum(p2, {-1}), std::invalid_argument);
    // Koszul: the hyperplane class is 1 - [O(-1)].
    CHECK(class_of_linear_stratum(p2, {1}) == KClass::one(p2) - class_of_bundle(p2, {{-1}}));
}

TEST_CASE("chern_operator examples") {
    MultiProj p2({2});
    auto fund = BMClass::fundamental(p2);
    CHECK(fund.str() == "beta^2");
    auto line = chern_operator(p2, {{1}}, fund);
    CHECK(line == BMClass::from_k(kx(p2, {1}), 1));
    CHECK(line.str() == "beta*x");
    CHECK(chern_operator(p2, {{0}}, fund).is_zero());
    auto point = chern_operator(p2, {{1}}, line);
    CHECK(point == BMClass::from_k(kx(p2, {2}), 0));
    CHECK(point.str() == "x^2");
    auto conic = BMClass::from_k(kx(p2, {1}, 2) - kx(p2, {2}), 1);
    CHECK(conic.str() == "beta*(2*x - x^2)");
    CHECK((conic + point.shifted(-1) - BMClass::fundamental(p2).shifted(-5)).str() ==
          "beta*(2*x - x^2) + beta^-1*x^2 - beta^-3");
    CHECK(BMClass(p2).str() == "0");
    CHECK((3 * point).str() == "3*x^2");
    auto terms = point.beta_terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms.begin()->first == 0);
    CHECK(terms.begin()->second.str() == "x^2");
}

TEST_CASE("chern operators: commutation, nilpotency, formal group law") {
    testing::Rng rng(11);
    int cases = 0;
    for (int trial = 0; trial < 150; ++trial) {
        MultiProj p = random_space(rng, 3, 3);
        auto alpha = random_bm(rng, p);
        auto l = random_bundle(rng, p), m = random_bundle(rng, p);
        LineBundleSpec lm{l.degrees};
        for (std::size_t i = 0; i < lm.degrees.size(); ++i) lm.degrees[i] += m.degrees[i];
        auto cl = [&](const BMClass& a) { return chern_operator(p, l, a); };
        auto cm = [&](const BMClass& a) { return chern_operator(p, m, a); };
        CHECK(cl(cm(alpha)) == cm(cl(alpha)));
        CHECK(chern_operator(p, lm, alpha) == cl(alpha) + cm(alpha) - cl(cm(alpha)).shifted(1));
        BMClass power = alpha;
        for (int k = 0; k <= p.dim(); ++k) power = cl(power);
        CHECK(power.is_zero());
        ++cases;
    }
    CHECK(cases == 150);
}

TEST_CASE("beta terms round trip") {
    testing::Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        MultiProj p = random_space(rng, 3, 3);
        auto a = random_bm(rng, p);
        CHECK(BMClass::from_beta_terms(p, a.beta_terms()) == a);
        for (const auto& [e, k] : a.beta_terms()) CHECK_FALSE(k.is_zero());
    }
}

TEST_CASE("filtration levels and connective groups") {
    MultiProj p2({2});
    CHECK(filtration_level(kx(p2, {2})) == 0);
    CHECK(filtration_level(kx(p2, {1}, 2) - kx(p2, {2})) == 1);
    CHECK(filtration_level(KClass::one(p2)) == 2);
    CHECK_THROWS_AS(filtration_level(KClass(p2)), std::domain_error);

    CHECK(connective_group(p2, 0) == std::vector<Monomial>{Monomial::var(0, 2)});
    CHECK(connective_group(p2, 2) == std::vector<Monomial>{Monomial{}, Monomial::var(0), Monomial::var(0, 2)});
    CHECK(connective_group(p2, -1).empty());

    // rank F_n counts exponent vectors with sum(d_i - c_i) <= n.
    MultiProj p({2, 1, 3});
    for (int n = -1; n <= p.dim() + 1; ++n) {
        std::size_t count = 0;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 3; ++c)
                    if ((2 - a) + (1 - b) + (3 - c) <= n) ++count;
        CHECK(connective_group(p, n).size() == count);
    }
    MultiProj pt({0});
    CHECK(connective_group(pt, -1).empty());
    CHECK(connective_group(pt, 0).size() == 1);
    CHECK(connective_group(pt, 3).size() == 1);
}

TEST_CASE("connective classes") {
    MultiProj p2({2});
    CHECK_NOTHROW(ConnectiveClass(1, kx(p2, {1}, 2) - kx(p2, {2})));
    CHECK_THROWS_AS(ConnectiveClass(0, kx(p2, {1})), std::domain_error);
    CHECK_THROWS_AS(ConnectiveClass(-1, kx(p2, {2})), std::domain_error);
    CHECK_NOTHROW(ConnectiveClass(-1, KClass(p2)));
    auto pt = ConnectiveClass(0, kx(p2, {2}));
    auto up = beta_inclusion(pt);
    CHECK(up.level() == 1);
    CHECK(up.value() == pt.value());
    CHECK(beta_inclusion(beta_inclusion(up)).level() == 3);
}

TEST_CASE("gr_map") {
    MultiProj p2({2});
    auto h = ChowClass::hyperplane(p2, 0);
    CHECK(gr_map(ConnectiveClass(1, kx(p2, {1}, 2) - kx(p2, {2}))) == 2 * h);
    CHECK(gr_map(ConnectiveClass(0, kx(p2, {2}))) == h * h);
    CHECK(gr_map(ConnectiveClass(2, KClass::one(p2))).str() == "1");
    // A class sitting one level higher than needed maps to zero.
    CHECK(gr_map(ConnectiveClass(2, kx(p2, {1}))).is_zero());
    MultiProj p12({1, 2});
    CHECK(gr_map(ConnectiveClass(2, KClass::one(p12) - class_of_bundle(p12, {{-2, -3}}))).str() == "2*h1 + 3*h2");
}

TEST_CASE("pullbacks and pushforwards") {
    MultiProj p2({2});
    LinearEmbedding line(p2, {1});
    CHECK(line.sub() == MultiProj({1}));
    CHECK(pullback_linear(line, kx(p2, {2})).is_zero());
    CHECK(pullback_linear(line, kx(p2, {1}, 2) - kx(p2, {2})).str() == "2*x");
    CHECK(pushforward_linear(line, KClass::one(MultiProj({1}))) == kx(p2, {1}));
    CHECK_THROWS_AS(LinearEmbedding(p2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(pushforward_linear(line, KClass::one(p2)), std::invalid_argument);

    Projection pr(MultiProj({2, 1}), {0});
    CHECK(pr.target() == p2);
    auto conic = kx(p2, {1}, 2) - kx(p2, {2});
    auto pulled = pullback_projection(pr, conic);
    CHECK(pulled.str() == "2*x1 - x1^2");
    CHECK(filtration_level(pulled) == 2);
    CHECK_THROWS_AS(Projection(MultiProj({2, 1}), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Projection(MultiProj({2, 1}), {2}), std::invalid_argument);
    // Projection onto a reordered factor set.
    Projection swap(MultiProj({1, 3}), {1, 0});
    CHECK(swap.target() == MultiProj({3, 1}));
    CHECK(pullback_projection(swap, kx(MultiProj({3, 1}), {2, 1})) == kx(MultiProj({1, 3}), {1, 2}));

    // Projection formula and functoriality on random inputs.
    testing::Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        MultiProj p = random_space(rng, 3, 4);
        std::vector<int> c;
        for (int d : p.dims()) c.push_back(static_cast<int>(rng.uniform(0, d)));
        LinearEmbedding e(p, c);
        auto kappa = random_k(rng, p, 4);
        auto lambda = random_k(rng, e.sub(), 4);
        CHECK(pushforward_linear(e, pullback_linear(e, kappa) * lambda) == kappa * pushforward_linear(e, lambda));
        auto mu = random_k(rng, p, 3);
        CHECK(pullback_linear(e, kappa * mu) == pullback_linear(e, kappa) * pullback_linear(e, mu));
        CHECK(pushforward_linear(e, KClass::one(e.sub())) == class_of_linear_stratum(p, c));
    }
}
