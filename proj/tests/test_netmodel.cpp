#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "itdn/generators.hpp"
#include "itdn/netmodel.hpp"

using namespace itdn;
using itdn::testing::k22;
using itdn::testing::matching;
using itdn::testing::star_bi;

namespace {
std::string fixture(const std::string& name) {
  return std::string(ITDN_FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_SUITE("netmodel") {
  TEST_CASE("minimal operating network validates") {
    const auto net = star_bi(1, 1, {{0, 0}});
    CHECK(validate(net).empty());
  }

  TEST_CASE("broken mirror is reported") {
    NetworkBuilder b;
    b.n_a = 1;
    b.n_b = 1;
    b.edges_ab = {{0, 0}};
    b.edges_ba = EdgeList{};
    const auto net = b.build();
    const auto violations = validate(net);
    REQUIRE(violations.size() == 2);  // mirror violation + a0 unsupported
    CHECK(violations[0].find("mirror") != std::string::npos);
  }

  TEST_CASE("unsupported node is reported") {
    // 2x2 where b1 has no incoming edge
    const auto net = star_bi(2, 2, {{0, 0}, {1, 0}});
    const auto violations = validate(net);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "b1 has no incoming interdependency edge");
  }

  TEST_CASE("degree counts incoming edges") {
    const auto net = k22();
    for (int i = 0; i < 2; ++i) {
      CHECK(degree(net, {Side::A, i}) == 2);
      CHECK(degree(net, {Side::B, i}) == 2);
    }
    const auto m = matching(3);
    CHECK(degree(m, {Side::A, 1}) == 1);
    CHECK(degree(m, {Side::B, 2}) == 1);
    CHECK_THROWS_AS(degree(m, {Side::B, 3}), std::out_of_range);
  }

  TEST_CASE("bidirectional degrees agree across directions") {
    const auto net = generators::gen_type1(20, 3, 7);
    for (int i = 0; i < net.n_a(); ++i)
      CHECK(net.supporters_of_a(i).size() == net.dependents_of_a(i).size());
    for (int j = 0; j < net.n_b(); ++j)
      CHECK(net.supporters_of_b(j).size() == net.dependents_of_b(j).size());
  }

  TEST_CASE("worst-case instance B-degrees") {
    const auto net = generators::gen_greedy_worst_case(2, 2);
    CHECK(net.n_a() == 6);
    CHECK(net.n_b() == 4);
    for (int j = 0; j < net.n_b(); ++j) CHECK(degree(net, {Side::B, j}) == 2);
  }

  TEST_CASE("save/load round-trip") {
    const auto net = k22();
    const auto path = std::filesystem::temp_directory_path() / "itdn_roundtrip.itdn";
    save_network(net, path.string());
    CHECK(load_network(path.string()) == net);
    std::filesystem::remove(path);
  }

  TEST_CASE("round-trip across generated instances") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const int n = 4 + static_cast<int>(seed % 13) * 2;
      const auto net = generators::gen_type1(n, 1 + seed % 4, seed);
      CHECK(parse_network(serialize_network(net)) == net);
      const auto net2 = generators::gen_type2(n, 2, 4, seed);
      CHECK(parse_network(serialize_network(net2)) == net2);
      const auto net3 = generators::gen_regular(n, 2 + static_cast<int>(seed % 2), seed);
      CHECK(parse_network(serialize_network(net3)) == net3);
    }
  }

  TEST_CASE("edge index out of range is a parse error") {
    const std::string text = "ITDN v1 2 2 BI STAR\nAB\n0 0\n1 2\n";
    CHECK_THROWS_AS(parse_network(text), ParseError);
  }

  TEST_CASE("BA block rejected in bidirectional files") {
    const std::string text = "ITDN v1 1 1 BI STAR\nAB\n0 0\nBA\n0 0\n";
    CHECK_THROWS_AS(parse_network(text), ParseError);
  }

  TEST_CASE("comments and blank lines are ignored") {
    const std::string text = "# header\nITDN v1 2 2 BI STAR\n\nAB # block\n0 0\n\n1 1\n";
    const auto net = parse_network(text);
    CHECK(net == matching(2));
  }

  TEST_CASE("tree fixture loads and validates") {
    const auto net = load_network(fixture("tree_example.itdn"));
    CHECK(net.topology() == IntraTopology::General);
    CHECK(net.directionality() == Directionality::Bidirectional);
    CHECK(validate(net).empty());
    // parents hang off the sources, children off parents
    CHECK(net.intra(Side::A).sources == std::vector<int>{4});
    CHECK(net.intra(Side::B).sources == std::vector<int>{3});
    const auto& adj_a = net.intra_adjacency(Side::A);
    CHECK(adj_a[4].size() == 3);  // three A parents
    CHECK(adj_a[1].size() == 2);  // A2 carries the A21 child
  }

  TEST_CASE("cascade fixture validates") {
    const auto net = load_network(fixture("cascade_example.itdn"));
    CHECK(net.directionality() == Directionality::Unidirectional);
    CHECK(validate(net).empty());
  }

  TEST_CASE("builder rejects malformed input") {
    NetworkBuilder b;
    b.n_a = 0;
    b.n_b = 1;
    CHECK_THROWS_AS(b.build(), std::invalid_argument);
    b.n_a = 1;
    b.edges_ab = {{0, 5}};
    CHECK_THROWS_AS(b.build(), std::invalid_argument);
  }
}
