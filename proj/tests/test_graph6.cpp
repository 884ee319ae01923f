#include <gtest/gtest.h>

#include <random>

#include "gmsrg/error.hpp"
#include "gmsrg/graph6.hpp"
#include "gmsrg/srg.hpp"

using namespace gmsrg;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

Graph cycle(std::size_t v) {
  Edges e;
  for (std::size_t i = 0; i < v; ++i) e.push_back({i, (i + 1) % v});
  return Graph::from_edges(v, e);
}

}  // namespace

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(graph6::encode(cycle(5)), "Dhc");
  EXPECT_EQ(graph6::encode(Graph::from_edges(4, Edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), "C~");
  EXPECT_EQ(graph6::encode(Graph::from_edges(1, {})), "@");
  EXPECT_EQ(graph6::encode(Graph::from_edges(0, {})), "?");
  Edges petersen;
  for (std::size_t i = 0; i < 5; ++i) {
    petersen.push_back({i, (i + 1) % 5});
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
  }
  EXPECT_EQ(graph6::encode(Graph::from_edges(10, petersen)), "IheA@GUAo");
}

TEST(Graph6, LongSizePrefix) {
  const Graph g = build_gamma(canonical_form(7, QuadricKind::hyperbolic));
  const std::string s = graph6::encode(g);
  // 120 > 62 vertices: '~' then three 6-bit groups of 120.
  ASSERT_GE(s.size(), 4u);
  EXPECT_EQ(s.substr(0, 4), std::string({'~', char(63 + 0), char(63 + 1), char(63 + 56)}));
  EXPECT_EQ(s.size(), 4u + (120u * 119u / 2u + 5u) / 6u);
}

TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(41);
  for (std::size_t v : {2u, 3u, 7u, 12u, 63u, 64u, 100u}) {
    std::bernoulli_distribution coin(0.4);
    Edges e;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (coin(rng)) e.push_back({i, j});
      }
    }
    const Graph g = Graph::from_edges(v, e);
    EXPECT_EQ(graph6::decode(graph6::encode(g)), g) << v;
  }
}

TEST(Graph6, LabelsSidecarRoundTrip) {
  const Graph g = build_gamma(canonical_form(5, QuadricKind::elliptic));
  const Graph back = graph6::decode_with_labels(graph6::encode(g) + "\n", graph6::encode_labels(g));
  EXPECT_EQ(back, g);
}

TEST(Graph6, MalformedInput) {
  auto code = [](std::string_view s) {
    try {
      graph6::decode(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_request;
  };
  EXPECT_EQ(code(""), Errc::parse_error);
  EXPECT_EQ(code("Dh"), Errc::parse_error);     // truncated
  EXPECT_EQ(code("Dhcc"), Errc::parse_error);   // too long
  EXPECT_EQ(code("Dhd"), Errc::parse_error);    // padding bit set
  EXPECT_EQ(code(std::string("D\x01") + "c"), Errc::parse_error);
  EXPECT_THROW(graph6::decode_with_labels("Dhc", "0 1\n1 2\n"), Error);
}
