#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sforge/equivariant.hpp"
#include "sforge/finite_group.hpp"
#include "sforge/fusion_ring.hpp"
#include "sforge/species.hpp"

namespace sforge::testing {

inline std::filesystem::path data_dir() {
    return SFORGE_DATA_DIR;
}

inline FusionRing make_trivial_ring() {
    return FusionRing({"1"}, 0, {0}, {1});
}

/* x * x = 1 + x */
inline FusionRing make_fib() {
    return FusionRing({"1", "Phi"}, 0, {0, 1},
                      {1, 0, 0, 1,
                       0, 1, 1, 1});
}

/* x * x = 1 + 2x, the quotient ring Z[x]/(x^2 - 2x - 1) */
inline FusionRing make_x2_2x1() {
    return FusionRing({"1", "x"}, 0, {0, 1},
                      {1, 0, 0, 1,
                       0, 1, 1, 2});
}

inline FiniteGroup make_z2() {
    return FiniteGroup({"e", "s"}, 0, {{0, 1}, {1, 0}});
}

inline FiniteGroup make_z3() {
    return FiniteGroup({"e", "g", "g2"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

inline FiniteGroup make_z4() {
    return FiniteGroup({"e", "g", "g2", "g3"}, 0,
                       {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
}

inline FiniteGroup make_z2z2() {
    return FiniteGroup({"e", "a", "b", "ab"}, 0,
                       {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

/* Symmetric group on three letters; elements as permutation words. */
inline FiniteGroup make_s3() {
    /* 0:e 1:(12) 2:(13) 3:(23) 4:(123) 5:(132) */
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
        for (int p = 0; p < 6; ++p)
            if (perms[static_cast<std::size_t>(p)] == c) return p;
        return -1;
    };
    std::vector<std::vector<int>> mult(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = compose(a, b);
    return FiniteGroup({"e", "s12", "s13", "s23", "r123", "r132"}, 0, std::move(mult));
}

/* Rank-3 ring with a self-dual object of dimension sqrt(2). */
inline FusionRing make_ising() {
    /* basis 1, g, m: g*g = 1, g*m = m*g = m, m*m = 1 + g */
    std::vector<std::int64_t> n(27, 0);
    auto set = [&](int i, int j, int k) { n[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = 1; };
    set(0, 0, 0); set(0, 1, 1); set(0, 2, 2);
    set(1, 0, 1); set(1, 1, 0); set(1, 2, 2);
    set(2, 0, 2); set(2, 1, 2); set(2, 2, 0); set(2, 2, 1);
    return FusionRing({"1", "g", "m"}, 0, {0, 1, 2}, std::move(n));
}

inline Species make_fib_quiver() {
    Species s;
    s.ring = make_fib();
    s.vertices = {{"1", {{1, 0}}, {}}, {"2", {{1, 0}}, {}}};
    s.arrows = {{0, 1, {{0, 1}}}};
    return s;
}

inline EquivariantQuiver make_d4z2() {
    EquivariantQuiver eq{make_z2(),
                         {{"0", "1", "2", "3"}, {{0, 2}, {1, 2}, {2, 3}}},
                         {{0, 1, 2, 3}, {1, 0, 2, 3}},
                         {{0, 1, 2}, {1, 0, 2}}};
    return eq;
}

inline EquivariantQuiver make_a3_swap() {
    EquivariantQuiver eq{make_z2(),
                         {{"0", "1", "2"}, {{0, 2}, {1, 2}}},
                         {{0, 1, 2}, {1, 0, 2}},
                         {{0, 1}, {1, 0}}};
    return eq;
}

}
