#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "sforge/fusion_ring.hpp"

using namespace sforge;
using namespace sforge::testing;

TEST_CASE("golden-section ring satisfies all axioms") {
    auto ring = make_fib();
    auto report = validate_ring(ring);
    CHECK(report.ok());
}

TEST_CASE("constructor rejects malformed shapes") {
    CHECK_THROWS_AS(FusionRing({}, 0, {}, {}), ShapeError);
    CHECK_THROWS_AS(FusionRing({"1", "x"}, 0, {0, 1}, {1, 0, 0, 1}), ShapeError);
    CHECK_THROWS_AS(FusionRing({"1", "x"}, 2, {0, 1},
                               {1, 0, 0, 1, 0, 1, 1, 1}),
                    ShapeError);
    CHECK_THROWS_AS(FusionRing({"1", "x"}, 0, {0, 5},
                               {1, 0, 0, 1, 0, 1, 1, 1}),
                    ShapeError);
    CHECK_THROWS_AS(FusionRing({"1", "x"}, 0, {0, 1},
                               {1, 0, 0, 1, 0, 1, 1, -1}),
                    ShapeError);
    CHECK_THROWS_AS(FusionRing({"1", "1"}, 0, {0, 1},
                               {1, 0, 0, 1, 0, 1, 1, 1}),
                    ShapeError);
}

TEST_CASE("bumping the top coefficient to 2 still gives a ring") {
    /* x*x = 1 + 2x is Z[x]/(x^2-2x-1); associativity genuinely holds. */
    auto ring = make_x2_2x1();
    auto report = validate_ring(ring);
    CHECK(report.ok());
    CHECK(std::abs(fpdim_basis(ring, 1) - (1.0 + std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("corrupted cyclic table reports an associativity violation") {
    /* Z/3 table with N[1][1][2] = 2 and N[2][2][1] = 2: unit and duality
       stay intact but (x1*x1)*x2 != x1*(x1*x2). */
    std::vector<std::int64_t> n(27, 0);
    auto set = [&](int i, int j, int k, std::int64_t v) {
        n[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v;
    };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1);
    set(1, 0, 1, 1); set(1, 1, 2, 2); set(1, 2, 0, 1);
    set(2, 0, 2, 1); set(2, 1, 0, 1); set(2, 2, 1, 2);
    FusionRing ring({"e", "x1", "x2"}, 0, {0, 2, 1}, std::move(n));
    auto report = validate_ring(ring);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.axiom != "associativity") continue;
        found = true;
        REQUIRE(v.where.size() == 4);
        CHECK(v.where[0] == 1);
        CHECK(v.where[1] == 1);
        CHECK(v.where[2] == 2);
        CHECK(v.where[3] == 1);
        CHECK(v.detail.find("lhs=4") != std::string::npos);
        CHECK(v.detail.find("rhs=1") != std::string::npos);
        break;
    }
    CHECK(found);
}

TEST_CASE("broken duality involution is reported") {
    auto ring = make_fib();
    FusionRing bad(ring.labels(), ring.unit(), {1, 0}, ring.n_flat());
    auto report = validate_ring(bad);
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.axiom == "duality") found = true;
    CHECK(found);
}

TEST_CASE("multiplication is bilinear and matches the table") {
    auto ring = make_fib();
    auto phi = ring.basis_element(1);
    auto prod = multiply(ring, phi, phi);
    CHECK(prod.coeffs == std::vector<std::int64_t>{1, 1});
    CHECK(format_element(ring, prod) == "1 + Phi");

    RingElement two_phi{{0, 2}};
    auto prod2 = multiply(ring, two_phi, phi);
    CHECK(prod2.coeffs == std::vector<std::int64_t>{2, 2});

    auto z = multiply(ring, ring.zero(), phi);
    CHECK(z.is_zero());
    CHECK(format_element(ring, z) == "0");
}

TEST_CASE("duals distribute over basis elements") {
    auto ring = group_ring(make_z3());
    auto g = ring.basis_element(1);
    auto d = dual_element(ring, g);
    CHECK(d.coeffs == std::vector<std::int64_t>{0, 0, 1});
    RingElement mix{{1, 2, 0}};
    auto dm = dual_element(ring, mix);
    CHECK(dm.coeffs == std::vector<std::int64_t>{1, 0, 2});
}

TEST_CASE("basis dimensions match the known closed forms") {
    auto fib = make_fib();
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(fpdim_basis(fib, 0) - 1.0) < 1e-12);
    CHECK(std::abs(fpdim_basis(fib, 1) - golden) < 1e-9);

    auto ising = make_ising();
    CHECK(std::abs(fpdim_basis(ising, 1) - 1.0) < 1e-12);
    CHECK(std::abs(fpdim_basis(ising, 2) - std::sqrt(2.0)) < 1e-9);

    auto z3 = group_ring(make_z3());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(fpdim_basis(z3, i) - 1.0) < 1e-12);
}

TEST_CASE("dimension extends linearly to arbitrary elements") {
    auto fib = make_fib();
    RingElement e{{3, 2}};
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(fpdim(fib, e) - (3.0 + 2.0 * golden)) < 1e-9);
    CHECK(fpdim(fib, fib.zero()) == 0.0);
}

TEST_CASE("dimension is multiplicative on products of basis elements") {
    std::mt19937 rng(20260815);
    for (const auto& ring : {make_fib(), make_ising(), group_ring(make_z2z2()), make_x2_2x1()}) {
        for (int trial = 0; trial < 20; ++trial) {
            int i = static_cast<int>(rng() % static_cast<unsigned>(ring.rank()));
            int j = static_cast<int>(rng() % static_cast<unsigned>(ring.rank()));
            auto prod = multiply(ring, ring.basis_element(i), ring.basis_element(j));
            double lhs = fpdim_basis(ring, i) * fpdim_basis(ring, j);
            double rhs = fpdim(ring, prod);
            CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("dimension of the dual equals the dimension of the object") {
    for (const auto& ring : {make_fib(), make_ising(), group_ring(make_z3())}) {
        for (int i = 0; i < ring.rank(); ++i)
            CHECK(std::abs(fpdim_basis(ring, i) - fpdim_basis(ring, ring.dual(i))) < 1e-9);
    }
}

TEST_CASE("validation outcome is stable under basis relabeling") {
    /* Swap the two non-unit elements of the sqrt(2) ring and permute the
       table accordingly; the relabeled ring must still validate. */
    auto ring = make_ising();
    std::vector<int> inv = {0, 2, 1};  /* self-inverse swap of 1 and 2 */
    std::vector<std::string> labels(3);
    std::vector<int> dual(3);
    std::vector<std::int64_t> n(27);
    for (int i = 0; i < 3; ++i) {
        auto ni = static_cast<std::size_t>(inv[static_cast<std::size_t>(i)]);
        labels[ni] = ring.label(i);
        dual[ni] = inv[static_cast<std::size_t>(ring.dual(i))];
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                n[static_cast<std::size_t>((inv[static_cast<std::size_t>(i)] * 3 +
                                            inv[static_cast<std::size_t>(j)]) * 3 +
                                           inv[static_cast<std::size_t>(k)])] =
                    ring.n(i, j, k);
    FusionRing relabeled(labels, inv[0], dual, std::move(n));
    CHECK(validate_ring(relabeled).ok());
    CHECK(std::abs(fpdim_basis(relabeled, inv[2]) - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("spectral radius handles permutation-like matrices") {
    /* Cyclic shift: all eigenvalues on the unit circle, radius 1.  Power
       iteration alone need not converge here; the bracketing fallback must
       kick in. */
    IntMatrix shift(3, 3);
    shift.at(0, 1) = 1;
    shift.at(1, 2) = 1;
    shift.at(2, 0) = 1;
    CHECK(std::abs(spectral_radius(shift) - 1.0) < 1e-9);

    IntMatrix zero(2, 2);
    CHECK(std::abs(spectral_radius(zero)) < 1e-12);

    IntMatrix kron(2, 2);
    kron.at(0, 1) = 2;
    kron.at(1, 0) = 2;
    CHECK(std::abs(spectral_radius(kron) - 2.0) < 1e-9);
}
