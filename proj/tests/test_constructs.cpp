#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sqs/constructs.hpp"
#include "sqs/groups.hpp"

using namespace sqs;

namespace {

bool digits_sum_zero_mod3(const std::vector<Point>& s) {
  std::uint32_t a = s[0], b = s[1], c = s[2];
  for (; a || b || c; a /= 3, b /= 3, c /= 3) {
    if ((a % 3 + b % 3 + c % 3) % 3) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("constructs") {
  TEST_CASE("boolean SQS equals the brute-force plane list") {
    for (std::uint32_t d = 3; d <= 5; ++d) {
      std::vector<Block> planes;
      for (const auto& s : oracle::all_subsets(1u << d, 4)) {
        if ((s[0] ^ s[1] ^ s[2] ^ s[3]) == 0) planes.push_back(s);
      }
      CHECK(boolean_sqs(d) == Design(1u << d, 4, planes));
    }
    CHECK(boolean_sqs(6).block_count() == 10416);
    CHECK_THROWS_AS(boolean_sqs(2), std::invalid_argument);
    CHECK_THROWS_AS(boolean_sqs(7), std::invalid_argument);
  }

  TEST_CASE("AG(d,3) lines equal the brute-force list") {
    for (std::uint32_t d = 1; d <= 3; ++d) {
      const auto n = static_cast<std::size_t>(oracle::ipow(3, d));
      std::vector<Block> lines;
      for (const auto& s : oracle::all_subsets(n, 3)) {
        if (digits_sum_zero_mod3(s)) lines.push_back(s);
      }
      CHECK(ag3_lines(d) == Design(n, 3, lines));
    }
  }

  TEST_CASE("PGL construction") {
    CHECK(pgl_sqs(1).block_count() == 1);
    const std::uint64_t expected[] = {0, 1, 30, 819, 22140};
    for (std::uint32_t d = 2; d <= 3; ++d) {
      auto s = pgl_sqs(d);
      CHECK(s.block_count() == expected[d]);
      CHECK(verify_sqs(s));
      CHECK(preserves_design(pgl2(static_cast<std::uint32_t>(oracle::ipow(3, d))), s));
      CHECK(s.index_of(std::vector<Point>{0, 1, 2, 3}).has_value());
    }
    CHECK_THROWS_AS(pgl_sqs(5), std::invalid_argument);
  }

  TEST_CASE("Netto SQS and triple systems") {
    for (std::uint32_t q : {7u, 19u, 31u, 43u}) {
      CAPTURE(q);
      auto s = netto_sqs(q);
      CHECK(s.v() == q + 1);
      CHECK(s.block_count() == block_count(q + 1));
      CHECK(verify_sqs(s));
      CHECK(is_flag_transitive(s, psl2(q)));
      auto t = netto_triples(q);
      CHECK(t.block_count() == static_cast<std::uint64_t>(q) * (q - 1) / 6);
      CHECK(verify_sts(t));
      CHECK(preserves_design(netto_group(q), t));
    }
    CHECK_THROWS_AS(netto_sqs(13), std::invalid_argument);
    CHECK_THROWS_AS(netto_triples(9), std::invalid_argument);
  }

  TEST_CASE("orbit design") {
    auto d = orbit_design(agl(3, 2), std::vector<Point>{0, 1, 2, 3});
    CHECK(d == boolean_sqs(3));
  }

  TEST_CASE("construction names") {
    for (const char* name : {"boolean:3", "pgl:2", "netto:19", "netto3:7", "ag3lines:2"}) {
      CHECK(parse_construction(name).to_string() == name);
    }
    CHECK(construct(parse_construction("netto:7")) == netto_sqs(7));
    CHECK_THROWS_AS(parse_construction("boolean"), std::invalid_argument);
    CHECK_THROWS_AS(parse_construction("steiner:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_construction("boolean:x"), std::invalid_argument);
  }
}
