#include <gtest/gtest.h>

#include "domhad/error.hpp"
#include "domhad/generators.hpp"
#include "domhad/graph_io.hpp"
#include "oracles.hpp"

using namespace domhad;

TEST(Graph6, DecodesK2) {
  auto g = parse_graph6("A_");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph6, DecodesEdgelessPair) {
  auto g = parse_graph6("A?");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(Graph6, DecodesC5) {
  auto g = parse_graph6("Dhc");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(g, oracle::decode_graph6("Dhc"));
}

TEST(Graph6, Encodes) {
  EXPECT_EQ(emit_graph6(gen::complete(2)), "A_");
  EXPECT_EQ(emit_graph6(gen::cycle(5)), "Dhc");
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6("?").order(), 0);
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), gen::cycle(5));
  EXPECT_EQ(parse_graph6("Dhc  \r\n"), gen::cycle(5));
}

TEST(Graph6, LongFormHeaderRoundTrip) {
  auto g = gen::random_gnp(100, 0.1, 3);
  auto text = emit_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RejectsMalformed) {
  try {
    parse_graph6("D");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::kTruncated);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("Dhc!"), ParseError);
  EXPECT_THROW(parse_graph6("Dhcc"), ParseError);
  try {
    parse_graph6("D\x01" "c");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(Graph6, PaddingBitsMustBeZero) {
  // "A_" has one data bit; "A`" sets a padding bit.
  EXPECT_THROW(parse_graph6("A`"), ParseError);
}

TEST(Graph6, CapacityCap) {
  auto text = emit_graph6(Graph(20));
  EXPECT_THROW(parse_graph6(text, 10), ParseError);
}

TEST(Graph6, RoundTripAgainstIndependentDecoder) {
  for (const auto& line : oracle::small_graph_corpus(8)) {
    auto g = parse_graph6(line);
    ASSERT_EQ(g, oracle::decode_graph6(line)) << line;
    ASSERT_EQ(emit_graph6(g), line);
  }
}

TEST(EdgeList, RoundTrip) {
  auto g = gen::petersen();
  auto text = emit_edge_list(g);
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(detect_format(text), GraphFormat::kEdgeList);
}

TEST(EdgeList, CommentsAndErrors) {
  EXPECT_EQ(parse_edge_list("# c5\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), gen::cycle(5));
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), Error);
  EXPECT_THROW(parse_edge_list("x"), ParseError);
}

TEST(Format, Detection) {
  EXPECT_EQ(detect_format("Dhc"), GraphFormat::kGraph6);
  EXPECT_EQ(detect_format(">>graph6<<A_"), GraphFormat::kGraph6);
  EXPECT_EQ(detect_format("2 1\n0 1\n"), GraphFormat::kEdgeList);
  EXPECT_EQ(parse_graph("Dhc"), gen::cycle(5));
}

TEST(Dot, ListsVerticesAndEdges) {
  auto dot = emit_dot(gen::complete(2));
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}
