#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crystal/error.hpp"
#include "crystal/fayers.hpp"
#include "crystal/graph.hpp"
#include "crystal/isomorphism.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace crystal;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected crystal::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("small graphs") {
  auto mono = generate_graph(CrystalModel::monomials(3), 0);
  CHECK(mono.vertices == std::vector<std::string>{"Y(0,0)"});
  CHECK(mono.edges.empty());
  CHECK_FALSE(mono.arm);

  const auto h3 = ArmSequence::horizontal(3);
  auto part = generate_graph(CrystalModel::partitions(h3), 2);
  CHECK(part.vertices == std::vector<std::string>{"[]", "[1]", "[2]", "[1,1]"});
  // Expected edges by evaluating f directly.
  std::vector<Edge> expected;
  for (std::size_t v = 0; v < 2; ++v) {
    for (int c = 0; c < 3; ++c) {
      if (auto next = apply_f(Partition::parse(part.vertices[v]), Residue(c, 3), h3)) {
        expected.push_back({static_cast<int>(v), *part.find(next->to_string()), c});
      }
    }
  }
  CHECK(part.edges == expected);
  CHECK(part.edges == std::vector<Edge>{{0, 1, 0}, {1, 2, 1}, {1, 3, 2}});
  CHECK(part.arm == "horizontal");
}

TEST_CASE("graph invariants") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<CrystalModel> models{CrystalModel::monomials(n),
                                     CrystalModel::partitions(ArmSequence::horizontal(n)),
                                     CrystalModel::partitions(ArmSequence::random(n, 30, 5))};
    for (const auto& model : models) {
      auto g = generate_graph(model, 8);
      CHECK(structural_violations(g).empty());
      CHECK(duality_violations(g, model).empty());
      CHECK(g == generate_graph(model, 8));
      // e applied to any vertex stays inside the graph.
      for (const auto& label : g.vertices) {
        for (int c = 0; c < n; ++c) {
          if (auto up = model.apply_e(label, c)) REQUIRE(g.find(*up));
        }
      }
      if (model.kind() == ModelKind::monomial) {
        for (const auto& label : g.vertices) {
          REQUIRE(weight(Monomial::parse(label, n)).level() == 1);
        }
      }
    }
  }
}

TEST_CASE("comparison") {
  const auto h4 = ArmSequence::horizontal(4);
  auto part = generate_graph(CrystalModel::partitions(h4), 8);
  auto mono = generate_graph(CrystalModel::monomials(4), 8);
  auto result = compare_graphs(part, mono, psi_label_map(4));
  REQUIRE(result.isomorphic());
  for (std::size_t v = 0; v < part.vertices.size(); ++v) {
    CHECK(psi(Partition::parse(part.vertices[v]), 4).to_string() ==
          mono.vertices[static_cast<std::size_t>(result.bijection[v])]);
  }

  auto a = generate_graph(CrystalModel::partitions(ArmSequence::random(3, 30, 1)), 8);
  auto b = generate_graph(CrystalModel::partitions(ArmSequence::random(3, 30, 2)), 8);
  CHECK(compare_graphs(a, b).isomorphic());

  auto broken = part;
  const Edge removed = broken.edges[5];
  broken.edges.erase(broken.edges.begin() + 5);
  auto mismatch = compare_graphs(part, broken);
  REQUIRE_FALSE(mismatch.isomorphic());
  CHECK(mismatch.divergence->first_vertex == removed.src);
  CHECK(mismatch.divergence->color == removed.color);

  auto doubled = part;
  doubled.edges.push_back({removed.src, 0, removed.color});
  CHECK_FALSE(structural_violations(doubled).empty());
  CHECK_FALSE(compare_graphs(part, doubled).isomorphic());

  // Same structure, wrong labels.
  auto relabelled = mono;
  relabelled.vertices[3] = "Y(1,1)";
  CHECK_FALSE(compare_graphs(part, relabelled, psi_label_map(4)).isomorphic());

  CHECK(code_of([&] { compare_graphs(part, generate_graph(CrystalModel::monomials(4), 7)); }) ==
        Errc::depth_mismatch);
  CHECK(code_of([&] { compare_graphs(part, generate_graph(CrystalModel::monomials(3), 8)); }) ==
        Errc::rank_mismatch);
}

TEST_CASE("graph sizes match regular partition counts") {
  for (int n = 3; n <= 5; ++n) {
    const int depth = 9;
    auto g = generate_graph(CrystalModel::monomials(n), depth);
    auto counts = count_regular(ArmSequence::horizontal(n), depth);
    long long total = 0;
    for (auto c : counts) total += c;
    CHECK(static_cast<long long>(g.vertices.size()) == total);
  }
}

TEST_CASE("counting") {
  CHECK(count_regular(ArmSequence::horizontal(3), 5) ==
        std::vector<long long>{1, 1, 2, 2, 4, 5});
  CHECK(count_regular(ArmSequence::horizontal(7), 0) == std::vector<long long>{1});
  for (int n = 3; n <= 4; ++n) {
    const auto reference = count_regular(ArmSequence::horizontal(n), 10);
    for (int m = 0; m <= 10; ++m) {
      REQUIRE(reference[static_cast<std::size_t>(m)] == oracle::count_n_regular(m, n));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      REQUIRE(count_regular(ArmSequence::random(n, 20, seed), 10) == reference);
    }
  }
  auto short_table = ArmSequence::from_values(3, {1});
  CHECK(code_of([&] { count_regular(short_table, 8); }) == Errc::horizon_exceeds_table);
}

TEST_CASE("export") {
  auto mono = generate_graph(CrystalModel::monomials(3), 0);
  CHECK(export_dot(mono) == "digraph crystal {\n  v0 [label=\"Y(0,0)\"];\n}\n");

  auto part = generate_graph(CrystalModel::partitions(ArmSequence::horizontal(3)), 2);
  const auto dot = export_dot(part);
  CHECK(dot ==
        "digraph crystal {\n"
        "  v0 [label=\"[]\"];\n"
        "  v1 [label=\"[1]\"];\n"
        "  v2 [label=\"[2]\"];\n"
        "  v3 [label=\"[1,1]\"];\n"
        "  v0 -> v1 [label=\"0\"];\n"
        "  v1 -> v2 [label=\"1\"];\n"
        "  v1 -> v3 [label=\"2\"];\n"
        "}\n");

  const auto json = export_json(part);
  CHECK(json.find("\"model\": \"partition\"") != std::string::npos);
  CHECK(json.find("\"arm\": \"horizontal\"") != std::string::npos);
  CHECK(parse_graph_json(json) == part);
  CHECK(export_json(parse_graph_json(json)) == json);
  CHECK(parse_graph_json(export_json(mono)) == mono);
  CHECK(export_json(mono).find("\"arm\": null") != std::string::npos);
  CHECK(code_of([] { parse_graph_json("{\"model\":\"tree\"}"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_graph_json("not json"); }) == Errc::syntax_error);
}

TEST_CASE("json round-trip on random graphs") {
  gen::Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 3, 5);
    const int depth = gen::uniform(rng, 0, 6);
    auto model = trial % 2 ? CrystalModel::monomials(n)
                           : CrystalModel::partitions(ArmSequence::random(n, 20, rng()));
    auto g = generate_graph(model, depth);
    REQUIRE(parse_graph_json(export_json(g)) == g);
  }
}
