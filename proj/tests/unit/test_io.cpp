#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"
#include "commbench/io.hpp"
#include "fixtures.hpp"

using namespace commbench;
using namespace fixtures;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "commbench_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(EdgeFile, TriangleLines) {
  std::ostringstream out;
  write_edge_list(out, triangle());
  EXPECT_EQ(out.str(), "1\t2\n1\t3\n2\t3\n");
}

TEST(EdgeFile, ReversedPairAcceptedAndNormalized) {
  std::istringstream in("2\t1\n");
  auto list = read_edge_list(in);
  EXPECT_EQ(list.node_count, 2);
  Graph g = build_graph(list.node_count, list.edges);
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "1\t2\n");
}

TEST(EdgeFile, WhitespaceCommentsAndBlankLines) {
  std::istringstream in("# header\n\n1 2\r\n  2\t3  \n# trailing\n");
  auto list = read_edge_list(in);
  EXPECT_EQ(list.node_count, 3);
  EXPECT_EQ(list.edges.size(), 2u);
}

TEST(EdgeFile, ErrorsCarryLineNumbers) {
  auto parse = [](const std::string& text) {
    return message_of([&] {
      std::istringstream in(text);
      read_edge_list(in, "g.txt");
    });
  };
  EXPECT_NE(parse("1\t2\n1\tx\n").find("g.txt:2"), std::string::npos);
  EXPECT_NE(parse("1\t2\t3\n").find("g.txt:1"), std::string::npos);
  EXPECT_NE(parse("0\t1\n").find("g.txt:1"), std::string::npos);
  EXPECT_NE(parse("3\t3\n").find("self-loop"), std::string::npos);
  const auto dup = parse("1\t2\n2\t3\n2\t1\n");
  EXPECT_NE(dup.find("g.txt:3"), std::string::npos);
  EXPECT_NE(dup.find("duplicate"), std::string::npos);
}

TEST(CommunityFile, Format) {
  std::ostringstream out;
  write_communities(out, Partition(std::vector<std::int32_t>{4, 4, 2}));
  EXPECT_EQ(out.str(), "1\t1\n2\t1\n3\t2\n");
}

TEST(CommunityFile, ReadErrors) {
  auto parse = [](const std::string& text) {
    return message_of([&] {
      std::istringstream in(text);
      read_communities(in, "c.txt");
    });
  };
  EXPECT_NE(parse("1\t1\n1\t2\n").find("c.txt:2"), std::string::npos);
  EXPECT_NE(parse("1\t1\n3\t1\n").find("2"), std::string::npos);
  EXPECT_NE(parse("1\n").find("c.txt:1"), std::string::npos);
}

TEST(CommunityFile, AnyOrderAndSparseLabels) {
  std::istringstream in("3 9\n1 7\n2 9\n");
  auto p = read_communities(in);
  EXPECT_EQ(p, Partition(std::vector<std::int32_t>{0, 1, 1}));
}

TEST(Files, RoundTripNsc) {
  NSCConfig cfg{std::vector<NodeId>(5, 2000), 10.0, 0.5, 5};
  auto net = generate_nsc(cfg);
  auto edges = scratch("nsc_edges.txt");
  auto comms = scratch("nsc_comms.txt");
  save_network(edges, net.graph, comms, &net.ground_truth);
  auto loaded = load_network(edges, comms);
  EXPECT_EQ(loaded.graph, net.graph);
  ASSERT_TRUE(loaded.communities);
  EXPECT_EQ(*loaded.communities, net.ground_truth);
  EXPECT_EQ(load_partition(comms), net.ground_truth);
}

TEST(Files, IsolatedTrailingNodesSurviveViaCommunityFile) {
  Graph g = make(4, {{0, 1}});
  Partition p(std::vector<std::int32_t>{0, 0, 1, 2});
  auto edges = scratch("iso_edges.txt");
  auto comms = scratch("iso_comms.txt");
  save_network(edges, g, comms, &p);
  auto loaded = load_network(edges, comms);
  EXPECT_EQ(loaded.graph.node_count(), 4);
  EXPECT_EQ(loaded.graph, g);
}

TEST(Files, MissingFile) {
  EXPECT_THROW(load_network(scratch("does_not_exist.txt")), DataError);
}
