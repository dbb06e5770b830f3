#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sforge/int_matrix.hpp"
#include "sforge/species.hpp"

using namespace sforge;
using namespace sforge::testing;

namespace {

Species make_two_path() {
    /* 0 -> 1 -> 2 over the order-two group ring, middle vertex carrying the
       full group algebra */
    Species s;
    s.ring = group_ring(make_z2());
    s.vertices = {{"1", {{1, 0}}, {}},
                  {"2", {{1, 1}}, {}},
                  {"3", {{1, 1}}, {}}};
    s.arrows = {{0, 1, {{1, 1}}}, {1, 2, {{1, 1}}}};
    return s;
}

Species make_cycle() {
    Species s;
    s.ring = make_trivial_ring();
    s.vertices = {{"a", {{1}}, {}}, {"b", {{1}}, {}}};
    s.arrows = {{0, 1, {{1}}}, {1, 0, {{1}}}};
    return s;
}

}

TEST_CASE("quiver detection requires unit classes everywhere") {
    auto q = make_fib_quiver();
    CHECK(is_quiver(q));
    auto rep = validate_species(q);
    CHECK(rep.report.ok());
    CHECK(rep.is_quiver);

    auto s = make_two_path();
    CHECK_FALSE(is_quiver(s));
    auto rep2 = validate_species(s);
    CHECK(rep2.report.ok());
    CHECK_FALSE(rep2.is_quiver);
}

TEST_CASE("validation pinpoints bad vertex and arrow data") {
    auto s = make_fib_quiver();
    s.vertices[1].algebra_class = {{0, 0}};
    auto rep = validate_species(s);
    CHECK_FALSE(rep.report.ok());
    CHECK(rep.report.violations[0].axiom == "vertex_class");

    auto t = make_fib_quiver();
    t.vertices[0].algebra_class = {{0, 1}};  /* unit multiplicity 0 */
    CHECK_FALSE(validate_species(t).report.ok());

    auto u = make_fib_quiver();
    u.arrows.push_back({0, 1, {{1, 0}}});  /* duplicate ordered pair */
    auto repu = validate_species(u);
    CHECK_FALSE(repu.report.ok());
    CHECK(repu.report.violations[0].axiom == "arrows");

    auto w = make_fib_quiver();
    w.arrows[0].cls = {{0, 0}};
    auto repw = validate_species(w);
    CHECK_FALSE(repw.report.ok());
    CHECK(repw.report.violations[0].axiom == "arrow_class");

    auto x = make_fib_quiver();
    x.arrows[0].to = 9;
    auto repx = validate_species(x);
    CHECK_FALSE(repx.report.ok());
    CHECK(repx.report.violations[0].axiom == "shape");
}

TEST_CASE("ring defects surface with a ring prefix") {
    auto s = make_fib_quiver();
    s.ring = FusionRing(s.ring.labels(), s.ring.unit(), {1, 0}, s.ring.n_flat());
    auto rep = validate_species(s);
    CHECK_FALSE(rep.report.ok());
    bool prefixed = false;
    for (const auto& v : rep.report.violations)
        if (v.axiom.rfind("ring:", 0) == 0) prefixed = true;
    CHECK(prefixed);
}

TEST_CASE("acyclicity check returns a closed witness walk") {
    CHECK(is_acyclic(make_fib_quiver()).acyclic);

    auto cyc = make_cycle();
    auto res = is_acyclic(cyc);
    REQUIRE_FALSE(res.acyclic);
    REQUIRE(res.cycle.size() >= 3);
    CHECK(res.cycle.front() == res.cycle.back());
    for (std::size_t t = 0; t + 1 < res.cycle.size(); ++t) {
        bool arrow_exists = false;
        for (const auto& a : cyc.arrows)
            if (a.from == res.cycle[t] && a.to == res.cycle[t + 1]) arrow_exists = true;
        CHECK(arrow_exists);
    }
}

TEST_CASE("path counts agree with adjacency matrix powers") {
    auto s = make_two_path();
    const int n = static_cast<int>(s.vertices.size());
    IntMatrix adj(n, n);
    for (const auto& a : s.arrows) adj.at(a.from, a.to) = 1;
    IntMatrix power = IntMatrix::identity(n);
    for (int k = 0; k <= 4; ++k) {
        long long expected = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) expected += power.at(i, j);
        CHECK(path_count(s, k) == expected);
        power = power * adj;
    }
}

TEST_CASE("graded pieces of a quiver carry exact classes") {
    auto q = make_fib_quiver();
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

    auto d0 = graded_component(q, 0);
    REQUIRE(d0.entries.size() == 2);
    CHECK(d0.entries[0].vertices == std::vector<int>{0});
    REQUIRE(d0.entries[0].cls.has_value());
    CHECK(d0.entries[0].cls->coeffs == std::vector<std::int64_t>{1, 0});
    CHECK(std::abs(d0.entries[0].fpdim - 1.0) < 1e-9);

    auto d1 = graded_component(q, 1);
    REQUIRE(d1.entries.size() == 1);
    CHECK(d1.entries[0].vertices == std::vector<int>{0, 1});
    REQUIRE(d1.entries[0].cls.has_value());
    CHECK(d1.entries[0].cls->coeffs == std::vector<std::int64_t>{0, 1});
    CHECK(std::abs(d1.entries[0].fpdim - golden) < 1e-9);

    CHECK(graded_component(q, 2).entries.empty());
    CHECK_THROWS_AS(graded_component(q, -1), DataError);
}

TEST_CASE("interior algebras divide out of longer paths") {
    auto s = make_two_path();
    auto d2 = graded_component(s, 2);
    REQUIRE(d2.entries.size() == 1);
    CHECK(d2.entries[0].vertices == std::vector<int>{0, 1, 2});
    CHECK_FALSE(d2.entries[0].cls.has_value());
    /* arrows contribute 2*2, the middle group algebra divides out 2 */
    CHECK(std::abs(d2.entries[0].fpdim - 2.0) < 1e-9);
}

TEST_CASE("path guard stops explosive degrees") {
    auto s = make_two_path();
    CHECK_THROWS_AS(graded_component(s, 1, 1), GuardError);
    CHECK_NOTHROW(graded_component(s, 1, 0));  /* guard off */
}

TEST_CASE("total class sums the graded pieces") {
    auto q = make_fib_quiver();
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    auto total = total_class(q);
    REQUIRE(total.cls.has_value());
    CHECK(total.cls->coeffs == std::vector<std::int64_t>{2, 1});
    CHECK(std::abs(total.fpdim - (2.0 + golden)) < 1e-9);

    CHECK_THROWS_AS(total_class(make_cycle()), DataError);
}

TEST_CASE("total dimension is additive over connected components") {
    /* two disjoint arrows */
    Species s;
    s.ring = make_trivial_ring();
    s.vertices = {{"a", {{1}}, {}}, {"b", {{1}}, {}}, {"c", {{1}}, {}}, {"d", {{1}}, {}}};
    s.arrows = {{0, 1, {{1}}}, {2, 3, {{2}}}};
    auto comps = connected_components(s);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices.size() == 2);
    CHECK(comps[1].vertices.size() == 2);
    for (const auto& c : comps) CHECK(validate_species(c).report.ok());

    double sum = 0.0;
    for (const auto& c : comps) sum += total_class(c).fpdim;
    CHECK(std::abs(sum - total_class(s).fpdim) < 1e-9);
}

TEST_CASE("hereditary verdict tracks acyclicity") {
    auto ok = hereditary_report(make_fib_quiver());
    CHECK(ok.acyclic);
    CHECK(ok.verdict.rfind("hereditary", 0) == 0);

    auto bad = hereditary_report(make_cycle());
    CHECK_FALSE(bad.acyclic);
    CHECK(bad.verdict.rfind("not hereditary", 0) == 0);
    CHECK_FALSE(bad.cycle.empty());
}

TEST_CASE("underlying graph sorts arrows and renders as dot") {
    Species s = make_two_path();
    std::swap(s.arrows[0], s.arrows[1]);
    auto g = underlying_graph(s);
    CHECK(g.vertices == std::vector<std::string>{"1", "2", "3"});
    CHECK(g.arrows == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    auto dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\";") != std::string::npos);
    CHECK(dot.find("\"2\" -> \"3\";") != std::string::npos);
}

TEST_CASE("empty degrees above the longest path characterize acyclicity") {
    auto s = make_two_path();
    const auto n = static_cast<int>(s.vertices.size());
    CHECK(is_acyclic(s).acyclic);
    CHECK(graded_component(s, n + 1).entries.empty());

    auto cyc = make_cycle();
    CHECK_FALSE(is_acyclic(cyc).acyclic);
    CHECK_FALSE(graded_component(cyc, static_cast<int>(cyc.vertices.size()) + 1).entries.empty());
}
