#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sforge/cli.hpp"
#include "sforge/json_io.hpp"
#include "sforge/unfold.hpp"

using namespace sforge;
using namespace sforge::testing;

namespace {

std::string fixture(const std::string& name) {
    return (data_dir() / name).string();
}

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult res;
    res.code = run_cli(args, out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

}

TEST_CASE("documents survive a serialization round trip") {
    auto fib = make_fib();
    CHECK(ring_from_json(ring_to_json(fib)) == fib);

    auto z3 = make_z3();
    CHECK(group_from_json(group_to_json(z3)) == z3);

    auto mod = regular_module(make_ising());
    CHECK(module_from_json(module_to_json(mod)) == mod);

    auto sp = make_fib_quiver();
    sp.vertices[0].tag = "subgroup:1;twist:none";
    CHECK(species_from_json(species_to_json(sp)) == sp);

    auto eq = make_d4z2();
    CHECK(equivariant_from_json(equivariant_to_json(eq)) == eq);

    OrdinaryQuiver q{{"a", "b"}, {{0, 1, 2}}};
    auto j = quiver_to_json(q);
    CHECK(quiver_from_json(j) == q);
}

TEST_CASE("bundled documents load and match the builders") {
    CHECK(load_ring(fixture("fib_ring.json")) == make_fib());
    CHECK(load_group(fixture("z2_group.json")) == make_z2());
    CHECK(load_group(fixture("z3_group.json")) == make_z3());
    CHECK(load_group(fixture("z2z2_group.json")) == make_z2z2());
    CHECK(load_equivariant(fixture("d4z2.json")) == make_d4z2());
    CHECK(load_equivariant(fixture("a3_swap.json")) == make_a3_swap());

    /* ring given as a relative path resolves against the document directory */
    auto quiver_species = load_species(fixture("fib_quiver.json"));
    CHECK(quiver_species.ring == make_fib());
    CHECK(is_quiver(quiver_species));

    auto tagged = load_species(fixture("coset_line.json"));
    REQUIRE(tagged.vertices.size() == 3);
    CHECK(tagged.vertices[0].tag == std::string("subgroup:k0;twist:none"));
    CHECK(tagged.vertices[1].tag == std::string("subgroup:k0,k1;twist:none"));
}

TEST_CASE("kind mismatches and unknown kinds are rejected") {
    CHECK_THROWS_AS(load_ring(fixture("z2_group.json")), DataError);
    CHECK_THROWS_AS(load_group(fixture("fib_ring.json")), DataError);
    CHECK_THROWS_AS(document_from_json(json{{"kind", "mystery"}}), DataError);
    CHECK_THROWS_AS(document_from_json(json::array()), DataError);
    CHECK_THROWS_AS(load_document("no_such_file.json"), DataError);
}

TEST_CASE("significant-digit rounding is stable") {
    CHECK(round_sig(0.0) == 0.0);
    CHECK(round_sig(1.0) == 1.0);
    const double x = 1.6180339887498949;
    const double once = round_sig(x);
    CHECK(once == round_sig(once));
    CHECK(std::abs(once - x) < 1e-11);
}

TEST_CASE("cli validates documents of every kind") {
    auto res = cli({"--format", "json", "validate", fixture("fib_ring.json")});
    CHECK(res.code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("kind") == "fusion_ring");
    CHECK(j.at("valid") == true);
    CHECK(j.at("violations").empty());

    auto sres = cli({"--format", "json", "validate", fixture("fib_species.json")});
    CHECK(sres.code == 0);
    auto sj = json::parse(sres.out);
    CHECK(sj.at("kind") == "species");
    CHECK(sj.at("is_quiver") == false);
}

TEST_CASE("cli reports ring arithmetic") {
    auto res = cli({"--format", "json", "multiply", fixture("fib_ring.json"), "[0,1]", "[0,1]"});
    REQUIRE(res.code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("product") == json::array({1, 1}));
    CHECK(j.at("formatted") == "1 + Phi");

    auto fres = cli({"--format", "json", "fpdim", fixture("fib_ring.json"), "[0,1]"});
    REQUIRE(fres.code == 0);
    auto fj = json::parse(fres.out);
    CHECK(std::abs(fj.at("fpdim").get<double>() - 1.6180339887) < 1e-9);
}

TEST_CASE("cli rejects malformed elements and usage errors") {
    CHECK(cli({"fpdim", fixture("fib_ring.json"), "[0,1,2]"}).code == 1);
    CHECK(cli({"fpdim", fixture("fib_ring.json"), "nonsense"}).code == 1);
    CHECK(cli({}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"fpdim"}).code == 2);
    CHECK(cli({"validate", "missing_file.json"}).code == 1);
}

TEST_CASE("cli text and json modes carry the same data") {
    auto text = cli({"fpdim", fixture("fib_ring.json"), "[0,1]"});
    auto as_json = cli({"--format", "json", "fpdim", fixture("fib_ring.json"), "[0,1]"});
    REQUIRE(text.code == 0);
    REQUIRE(as_json.code == 0);
    auto j = json::parse(as_json.out);
    for (const auto& [key, value] : j.items()) {
        CHECK(text.out.find(key) != std::string::npos);
        if (value.is_string())
            CHECK(text.out.find(value.get<std::string>()) != std::string::npos);
        if (value.is_number())
            CHECK(text.out.find(value.dump()) != std::string::npos);
    }
}

TEST_CASE("cli module commands expose classes and enumeration") {
    auto res = cli({"--format", "json", "zplus", "enumerate", fixture("fib_ring.json"),
                    "--max-rank", "2", "--max-entry", "2"});
    REQUIRE(res.code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("count") == 1);
    CHECK(j.at("modules").size() == 1);
    CHECK(j.contains("notes"));

    /* guard violations are data failures, not usage failures */
    CHECK(cli({"zplus", "enumerate", fixture("fib_ring.json"), "--max-rank", "9"}).code == 1);

    auto reg = cli({"--format", "json", "zplus", "regular", fixture("fib_ring.json")});
    REQUIRE(reg.code == 0);
    auto rj = json::parse(reg.out);
    CHECK(rj.at("module").at("labels") == json::array({"1", "Phi"}));
}

TEST_CASE("cli species commands run end to end") {
    auto res = cli({"--format", "json", "species", "graded", fixture("fib_quiver.json"), "1"});
    REQUIRE(res.code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("count") == 1);
    CHECK(j.at("entries")[0].at("class") == json::array({0, 1}));

    auto tot = cli({"--format", "json", "species", "total", fixture("fib_quiver.json")});
    REQUIRE(tot.code == 0);
    auto tj = json::parse(tot.out);
    CHECK(tj.at("class") == json::array({2, 1}));

    auto her = cli({"--format", "json", "species", "hereditary", fixture("fib_quiver.json")});
    REQUIRE(her.code == 0);
    CHECK(json::parse(her.out).at("acyclic") == true);
}

TEST_CASE("cli equivariant and unfold commands agree with the library") {
    auto orb = cli({"--format", "json", "equivariant", "orbits", fixture("d4z2.json")});
    REQUIRE(orb.code == 0);
    CHECK(json::parse(orb.out).at("representatives") == json::array({0, 2, 3}));

    auto graph = cli({"--format", "json", "equivariant", "graph", fixture("d4z2.json")});
    REQUIRE(graph.code == 0);
    auto gj = json::parse(graph.out);
    CHECK(gj.at("certificate").at("pass") == true);
    CHECK(gj.at("certificate").at("pairs_checked") == 16);

    auto rt = cli({"--format", "json", "unfold", "roundtrip", fixture("d4z2.json")});
    REQUIRE(rt.code == 0);
    auto rj = json::parse(rt.out);
    CHECK(rj.at("isomorphic") == true);
    CHECK(rj.at("rebuilt").at("vertices").size() == 4);

    auto pu = cli({"--format", "json", "unfold", "pointed", fixture("coset_line.json")});
    REQUIRE(pu.code == 0);
    auto pj = json::parse(pu.out);
    CHECK(pj.at("quiver").at("vertices") ==
          json::array({"(1,k0)", "(1,k1)", "(2,k0)", "(3,k0)"}));

    /* twisted vertex algebras cannot be unfolded */
    CHECK(cli({"unfold", "pointed", fixture("coset_line_twisted.json")}).code == 1);
}

TEST_CASE("cli writes dot files on request") {
    const auto path = std::filesystem::temp_directory_path() / "sforge_cli_test.dot";
    std::filesystem::remove(path);
    auto res = cli({"--format", "json", "species", "graph", fixture("fib_quiver.json"),
                    "--dot", path.string()});
    REQUIRE(res.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("digraph") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli pointed data lists subgroup cocycle counts") {
    auto res = cli({"--format", "json", "pointed-data", fixture("z2z2_group.json")});
    REQUIRE(res.code == 0);
    auto j = json::parse(res.out);
    REQUIRE(j.at("subgroups").size() == 5);
    CHECK(j.at("subgroups")[4].at("h2_order") == 2);
    CHECK(j.at("subgroups")[4].at("invariant_factors") == json::array({2, 2}));
}

TEST_CASE("cli json output is byte-stable across runs") {
    const std::vector<std::vector<std::string>> commands = {
        {"--format", "json", "validate", fixture("fib_ring.json")},
        {"--format", "json", "unfold", "roundtrip", fixture("d4z2.json")},
        {"--format", "json", "species", "total", fixture("fib_quiver.json")},
    };
    for (const auto& c : commands) {
        auto first = cli(c);
        auto second = cli(c);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}
