#include "doctest.h"

#include "okc/lazard/lazard.hpp"
#include "oracles/rng.hpp"

#include <chrono>

using namespace okc;

namespace {

// p(n) by the standard coin-change recurrence.
std::vector<long> partition_numbers(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p;
}

const LazardRing& lazard6() {
    static const LazardRing l = lazard_truncation(6);
    return l;
}

SparsePoly random_homogeneous(testing::Rng& rng, const LazardRing& l, int hdeg) {
    const auto& d = l.degrees().at(static_cast<std::size_t>(hdeg));
    SparsePoly x(l.free_ring());
    for (int k = 0; k < 3; ++k) {
        const auto& m = d.monomials[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d.monomials.size()) - 1))];
        x += SparsePoly::monomial(l.free_ring(), m, rng.uniform(-4, 4));
    }
    return l.normal_form(x);
}

}  // namespace

TEST_CASE("universal_fgl table") {
    auto f = universal_fgl(2);
    auto u = TruncSeries::variable(f.ring(), {"u", "v"}, 3, 0);
    auto v = TruncSeries::variable(f.ring(), {"u", "v"}, 3, 1);
    CHECK(formal_sum(f, u, v).str() == "u + v + a11*u*v + a12*u^2*v + a12*u*v^2");
    TruncSeries zero(f.ring(), {"u", "v"}, 3);
    CHECK(formal_sum(f, u, zero) == u);
    CHECK(f.coefficient(1, 2) == f.coefficient(2, 1));
    CHECK(f.coefficient(1, 2).str() == "a12");
    CHECK(f.ring()->var(static_cast<std::size_t>(f.ring()->index_of("a12"))).weight == -2);
    CHECK_THROWS_AS(universal_fgl(0), std::invalid_argument);
}

TEST_CASE("lazard ranks match partition numbers") {
    const auto& l = lazard6();
    auto p = partition_numbers(6);
    REQUIRE(l.degrees().size() == 7);
    for (int n = 0; n <= 6; ++n) {
        const auto& d = l.degrees()[static_cast<std::size_t>(n)];
        CAPTURE(n);
        CHECK(d.degree == -n);
        CHECK(d.homological() == n);
        CHECK(d.rank == static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
        CHECK(d.torsion.empty());
        CHECK(d.basis.size() == d.rank);
    }
    CHECK(l.degrees()[1].basis.size() == 1);
    CHECK(l.degrees()[1].basis[0].str() == "a11");
    CHECK(l.degrees()[1].relation_rows == 0);
    CHECK(l.degrees()[2].monomial_basis);
    // Degree -3 has the single relation 3*a13 = 2*a22 - 2*a11*a12, so no
    // three monomials span it over Z.
    CHECK_FALSE(l.degrees()[3].monomial_basis);
}

TEST_CASE("small truncations") {
    auto l1 = lazard_truncation(1);
    CHECK(l1.degrees().size() == 2);
    CHECK(l1.degrees()[0].rank == 1);
    CHECK(l1.degrees()[1].rank == 1);
    auto l3 = lazard_truncation(3);
    std::vector<std::size_t> ranks;
    for (const auto& d : l3.degrees()) ranks.push_back(d.rank);
    CHECK(ranks == std::vector<std::size_t>{1, 1, 2, 3});
    CHECK_THROWS_AS(lazard_truncation(0), std::invalid_argument);
}

TEST_CASE("normal forms in the quotient") {
    const auto& l = lazard6();
    // The universal law over the quotient is associative through degree N+1.
    CHECK(verify_associativity(l.universal_law()).pass());
    // ...while over the free ring it is not.
    CHECK_FALSE(verify_associativity(universal_fgl(3)).pass());
    // Every relation generator vanishes in the quotient.
    for (const auto& g : l.relation_generators()) CHECK(l.normal_form(g).is_zero());
    // Normal forms are canonical, and coordinates on the basis rebuild them.
    testing::Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(0, 6));
        auto x = random_homogeneous(rng, l, n);
        CHECK(x.reduce() == x);
        auto coords = l.coordinates(x, n);
        SparsePoly rebuilt(l.free_ring());
        const auto& d = l.degrees()[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < d.rank; ++k) rebuilt += d.basis[k] * coords[k];
        CHECK(l.normal_form(rebuilt) == x);
        // Adding any relation multiple leaves the normal form unchanged.
        const auto& g = l.relation_generators()[static_cast<std::size_t>(rng.uniform(0, 2))];
        CHECK(l.normal_form(rebuilt + g * rng.uniform(-5, 5)) == x);
    }
    // Basis coordinates of the basis are the identity.
    for (const auto& d : l.degrees())
        for (std::size_t k = 0; k < d.rank; ++k) {
            auto c = l.coordinates(d.basis[k], d.homological());
            for (std::size_t a = 0; a < d.rank; ++a) CHECK(c[a] == (a == k ? 1 : 0));
        }
    // Degrees below -N vanish.
    CHECK((l.generator(1, 1).pow(7)).is_zero());
}

TEST_CASE("classifying maps") {
    const auto& l = lazard6();
    auto mult = fgl_multiplicative(6);
    auto phi_ck = classifying_map(mult, l);
    auto beta = SparsePoly::variable(mult.ring(), "beta");
    CHECK(phi_ck.image(1, 1) == -beta);
    for (int i = 1; i <= 6; ++i)
        for (int j = i; i + j <= 7; ++j)
            if (i + j > 2) CHECK(phi_ck.image(i, j).is_zero());

    auto add = fgl_additive(6);
    auto phi_add = classifying_map(add, l);
    for (int i = 1; i <= 6; ++i)
        for (int j = i; i + j <= 7; ++j) CHECK(phi_add.image(i, j).is_zero());

    // Composing the universal law with phi_CK gives u + v - beta*u*v.
    auto uni = universal_fgl(6);
    for (const auto& [ij, c] : uni.coefficients()) CHECK(apply_map(phi_ck, c) == mult.coefficient(ij.first, ij.second));
    CHECK(apply_map(phi_ck, multi_sum(uni, {1, 1})) == multi_sum(mult, {1, 1}));

    CHECK(apply_map(phi_ck, l.generator(1, 1) * l.generator(1, 1)) == beta * beta);
    auto one = SparsePoly::constant(l.ring(), 1);
    CHECK(apply_map(phi_add, one) == SparsePoly::constant(add.ring(), 1));
    CHECK(apply_map(phi_add, l.generator(1, 2) * l.generator(1, 1)).is_zero());
}

TEST_CASE("classifying map errors") {
    auto l = lazard_truncation(3);
    Ring zb = beta_coefficient_ring();
    auto beta = SparsePoly::variable(zb, "beta");
    // Non-associative target: a12 = beta^2 alone.
    auto bad = FormalGroupLaw::from_upper(zb, 3, {{{1, 1}, -beta}, {{1, 2}, beta * beta}});
    CHECK_THROWS_AS(classifying_map(bad, l), std::domain_error);
    // Grading mismatch: a11 must land in degree -1.
    auto wrong = FormalGroupLaw::from_upper(zb, 3, {{{1, 1}, beta * beta}});
    CHECK_THROWS_AS(classifying_map(wrong, l), std::invalid_argument);
    CHECK_THROWS_AS(classifying_map(fgl_multiplicative(2), l), std::invalid_argument);
}

TEST_CASE("classifying maps are unique among grading-compatible assignments") {
    auto l = lazard_truncation(4);
    auto mult = fgl_multiplicative(4);
    auto phi = classifying_map(mult, l);
    auto uni = universal_fgl(4);
    auto beta = SparsePoly::variable(mult.ring(), "beta");
    // Perturb one generator image (keeping degrees): the induced law no
    // longer matches the target's coefficients.
    for (const auto& [ij, c] : uni.coefficients()) {
        if (ij.first > ij.second) continue;
        auto images = std::map<std::pair<int, int>, SparsePoly>{};
        for (const auto& [kl, d] : uni.coefficients())
            if (kl.first <= kl.second) images.emplace(kl, phi.image(kl.first, kl.second));
        images.at(ij) += beta.pow(static_cast<unsigned>(ij.first + ij.second - 1));
        bool rejected = false;
        try {
            auto alt = ring_map_from_images(l, mult.ring(), images);
            rejected = !(apply_map(alt, c) == mult.coefficient(ij.first, ij.second));
        } catch (const std::domain_error&) {
            rejected = true;
        }
        CHECK(rejected);
    }
}

TEST_CASE("classifying map is multiplicative") {
    const auto& l = lazard6();
    auto phi = classifying_map(fgl_multiplicative(6), l);
    // A second associative target: the law of the degree-(-1) generator
    // scaled, u + v + 3*t*u*v over Z[t].
    Ring zt = make_ring({{"t", -1, std::nullopt, false}});
    auto scaled = FormalGroupLaw::from_upper(zt, 6, {{{1, 1}, 3 * SparsePoly::variable(zt, "t")}});
    auto psi = classifying_map(scaled, l);
    testing::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int a = static_cast<int>(rng.uniform(0, 6));
        int b = static_cast<int>(rng.uniform(0, 6 - a));
        auto x = random_homogeneous(rng, l, a), y = random_homogeneous(rng, l, b);
        CHECK(apply_map(phi, x * y) == apply_map(phi, x) * apply_map(phi, y));
        CHECK(apply_map(psi, x * y) == apply_map(psi, x) * apply_map(psi, y));
        CHECK(apply_map(phi, x + y) == apply_map(phi, x) + apply_map(phi, y));
    }
}
