#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "crystal/arm_sequence.hpp"
#include "crystal/error.hpp"
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

TEST_CASE("horizontal values") {
  CHECK(ArmSequence::horizontal(3).at(3) == 4);
  CHECK(ArmSequence::horizontal(4).at(2) == 3);
  CHECK(ArmSequence::horizontal(3).at(1) == 1);
  for (int n = 3; n <= 8; ++n) {
    auto arm = ArmSequence::horizontal(n);
    for (int t = 1; t <= 200; ++t) REQUIRE(arm.at(t) == oracle::horizontal_arm(n, t));
  }
  CHECK(code_of([] { ArmSequence::horizontal(2); }) == Errc::rank_too_small);
}

TEST_CASE("horizontal satisfies both axioms") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(validate_arm(ArmSequence::horizontal(n), 200).empty());
  }
  CHECK(validate_arm(ArmSequence::horizontal(5), 100).empty());
}

TEST_CASE("table construction validates") {
  auto ok = ArmSequence::from_values(4, {1, 3, 5, 7});
  CHECK(ok.at(4) == 7);
  CHECK(ok.horizon() == 4);
  CHECK(code_of([&] { ok.at(5); }) == Errc::horizon_exceeds_table);

  try {
    ArmSequence::from_values(3, {3});
    FAIL("expected axiom (i) violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::axiom_i_violation);
    CHECK(std::string(e.what()).find("t=1") != std::string::npos);
  }
  try {
    ArmSequence::from_values(3, {1, 4});
    FAIL("expected axiom (ii) violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::axiom_ii_violation);
    CHECK(std::string(e.what()).find("t=1 u=1") != std::string::npos);
  }
  CHECK(code_of([] { ArmSequence::from_values(3, {}); }) == Errc::empty_table);
}

TEST_CASE("validator reports every violation") {
  auto raw = ArmSequence::unchecked(3, {1, 2, 5});
  CHECK(validate_arm(raw, 3) ==
        std::vector<ArmViolation>{{ArmViolation::Axiom::additivity, 1, 2}});
  // Horizon 1 leaves only axiom (i) at t=1.
  CHECK(validate_arm(ArmSequence::unchecked(3, {7, 0}), 1) ==
        std::vector<ArmViolation>{{ArmViolation::Axiom::bounds, 1, 0}});
  CHECK(validate_arm(ArmSequence::unchecked(3, {1, 9}), 1).empty());
  CHECK(code_of([&] { validate_arm(raw, 4); }) == Errc::horizon_exceeds_table);
}

TEST_CASE("random sequences") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = ArmSequence::random(4, 1, seed);
    CHECK(a.at(1) >= 0);
    CHECK(a.at(1) <= 3);
  }
  auto a = ArmSequence::random(3, 50, 7);
  auto b = ArmSequence::random(3, 50, 7);
  for (int t = 1; t <= 50; ++t) REQUIRE(a.at(t) == b.at(t));
  CHECK(validate_arm(a, 50).empty());
  CHECK(a.descriptor() == "random:7:50");

  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto r = ArmSequence::random(n, 60, seed);
      REQUIRE(validate_arm(r, 60).empty());
      for (int t = 1; t < 60; ++t) {
        REQUIRE(r.at(t + 1) >= r.at(t) + r.at(1));
        REQUIRE(r.at(t + 1) <= r.at(t) + r.at(1) + 1);
      }
    }
  }
}

TEST_CASE("arm specifications") {
  CHECK(parse_arm_spec("horizontal", 4).is_horizontal());
  auto r = parse_arm_spec("random:9:20", 3);
  CHECK(r.horizon() == 20);
  CHECK(r.at(20) == ArmSequence::random(3, 20, 9).at(20));
  CHECK(code_of([] { parse_arm_spec("random:9", 3); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_arm_spec("vertical", 3); }) == Errc::syntax_error);

  auto path = std::filesystem::temp_directory_path() / "crystal_arm_test.txt";
  {
    std::ofstream out(path);
    out << "1 3\n5\t7\n";
  }
  auto file = parse_arm_spec("file:" + path.string(), 4);
  CHECK(file.at(3) == 5);
  CHECK(file.descriptor() == "file:" + path.string());
  {
    std::ofstream out(path);
    out << "1 x\n";
  }
  CHECK(code_of([&] { load_arm_file(path, 4); }) == Errc::syntax_error);
  std::filesystem::remove(path);
  CHECK(code_of([&] { load_arm_file(path, 4); }) == Errc::io_error);
}

TEST_CASE("illegal boxes and regularity") {
  const auto h4 = ArmSequence::horizontal(4);
  const auto h3 = ArmSequence::horizontal(3);
  const Partition illegal_example({7, 6, 5, 5, 5, 3, 3, 1});
  CHECK(is_illegal_box(illegal_example, {3, 2}, h4));
  CHECK_FALSE(is_illegal_box(Partition({1}), {1, 1}, h3));
  CHECK(is_illegal_box(Partition({2, 1}), {1, 1}, h3));
  CHECK_FALSE(is_regular(illegal_example, h4));
  CHECK(is_regular(Partition({11, 7, 4, 2, 1, 1, 1, 1, 1, 1}), h4));
  CHECK(is_regular(Partition{}, h3));
  CHECK(code_of([&] { is_illegal_box(illegal_example, {9, 1}, h4); }) == Errc::box_outside);

  auto boxes = illegal_boxes(illegal_example, h4);
  REQUIRE_FALSE(boxes.empty());
  bool found = false;
  for (const auto& b : boxes) {
    if (b.box == BoxCoord{3, 2}) {
      found = true;
      CHECK(b.hook == 8);
      CHECK(b.arm == 3);
      CHECK(b.t == 2);
    }
  }
  CHECK(found);

  // Short tables fail rather than extrapolate.
  auto short_table = ArmSequence::from_values(3, {1});
  CHECK(code_of([&] { is_regular(Partition({4, 3, 1}), short_table); }) ==
        Errc::horizon_exceeds_table);
}

TEST_CASE("regularity matches the cell-by-cell oracle") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<ArmSequence> arms{ArmSequence::horizontal(n)};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      arms.push_back(ArmSequence::random(n, 20, seed));
    }
    for (const auto& arm : arms) {
      for (int m = 0; m <= 12; ++m) {
        for (const auto& parts : oracle::partitions(m)) {
          const Partition lambda{parts};
          const bool expected =
              oracle::regular(parts, n, [&](int t) { return arm.at(t); });
          REQUIRE(is_regular(lambda, arm) == expected);
        }
      }
    }
  }
}
