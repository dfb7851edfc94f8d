#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itdn/bits.hpp"

namespace itdn {

enum class Side { A, B };
enum class Directionality { Bidirectional, Unidirectional };
enum class IntraTopology { Star, General };

inline Side other_side(Side s) { return s == Side::A ? Side::B : Side::A; }

struct NodeRef {
  Side side = Side::A;
  int index = 0;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

// Interdependency edges are ordered (from, to) index pairs; an edge (a, b) in
// the AB set means A-node a supports B-node b.
using EdgeList = std::vector<std::pair<int, int>>;

// Undirected intra-network topology with designated source nodes. Only used
// in General mode; Star mode hangs every node off an implicit source that is
// not part of the index space.
struct IntraGraph {
  std::vector<int> sources;
  EdgeList edges;
  friend bool operator==(const IntraGraph&, const IntraGraph&) = default;
};

class InterdependentNetwork;

// Networks are immutable once built; all mutation happens here. build()
// canonicalizes edge lists (sorted, deduplicated) and throws
// std::invalid_argument on structurally malformed input (out-of-range
// indices, self-referencing sources, non-positive node counts). Semantic
// violations (missing support, broken mirror) are left for validate().
struct NetworkBuilder {
  int n_a = 0;
  int n_b = 0;
  Directionality directionality = Directionality::Bidirectional;
  IntraTopology topology = IntraTopology::Star;
  EdgeList edges_ab;
  // When bidirectional and unset, defaults to the mirror of edges_ab.
  std::optional<EdgeList> edges_ba;
  IntraGraph intra_a;
  IntraGraph intra_b;

  InterdependentNetwork build() const;
};

class InterdependentNetwork {
 public:
  InterdependentNetwork() = default;  // empty placeholder; real instances come from the builder

  int n_a() const { return n_a_; }
  int n_b() const { return n_b_; }
  int node_count(Side s) const { return s == Side::A ? n_a_ : n_b_; }
  Directionality directionality() const { return dir_; }
  IntraTopology topology() const { return topo_; }
  const EdgeList& edges_ab() const { return edges_ab_; }
  const EdgeList& edges_ba() const { return edges_ba_; }
  const IntraGraph& intra(Side s) const { return s == Side::A ? intra_a_ : intra_b_; }

  // Incoming interdependency support: A-nodes listed per B-node and vice versa.
  const std::vector<int>& supporters_of_b(int b) const { return sup_b_[b]; }
  const std::vector<int>& supporters_of_a(int a) const { return sup_a_[a]; }
  // Outgoing direction: nodes on the other side that depend on this one.
  const std::vector<int>& dependents_of_a(int a) const { return dep_a_[a]; }
  const std::vector<int>& dependents_of_b(int b) const { return dep_b_[b]; }

  const std::vector<std::vector<int>>& intra_adjacency(Side s) const {
    return s == Side::A ? intra_adj_a_ : intra_adj_b_;
  }
  bool is_source(Side s, int i) const {
    return topo_ == IntraTopology::General && (s == Side::A ? src_a_ : src_b_).test(i);
  }
  int non_source_count(Side s) const {
    if (topo_ == IntraTopology::Star) return node_count(s);
    return node_count(s) - static_cast<int>(intra(s).sources.size());
  }

  friend bool operator==(const InterdependentNetwork& x, const InterdependentNetwork& y) {
    return x.n_a_ == y.n_a_ && x.n_b_ == y.n_b_ && x.dir_ == y.dir_ && x.topo_ == y.topo_ &&
           x.edges_ab_ == y.edges_ab_ && x.edges_ba_ == y.edges_ba_ && x.intra_a_ == y.intra_a_ &&
           x.intra_b_ == y.intra_b_;
  }

 private:
  friend struct NetworkBuilder;

  int n_a_ = 0, n_b_ = 0;
  Directionality dir_ = Directionality::Bidirectional;
  IntraTopology topo_ = IntraTopology::Star;
  EdgeList edges_ab_, edges_ba_;
  IntraGraph intra_a_, intra_b_;
  std::vector<std::vector<int>> sup_a_, sup_b_, dep_a_, dep_b_;
  std::vector<std::vector<int>> intra_adj_a_, intra_adj_b_;
  Bitset src_a_, src_b_;
};

// Violation descriptions, empty iff the network is an initially-operating
// interdependent network under the model rules.
std::vector<std::string> validate(const InterdependentNetwork& net);

// Count of incoming interdependency edges. Throws std::out_of_range on an
// invalid node reference.
int degree(const InterdependentNetwork& net, NodeRef node);

// Per-B-node masks over A of the supporting nodes (and the transpose).
std::vector<Bitset> b_support_masks(const InterdependentNetwork& net);
std::vector<Bitset> a_support_masks(const InterdependentNetwork& net);

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
  int line;
};

// Line-oriented text format, see README. parse/serialize are the in-memory
// halves of load/save.
InterdependentNetwork parse_network(const std::string& text);
std::string serialize_network(const InterdependentNetwork& net);
InterdependentNetwork load_network(const std::string& path);
void save_network(const InterdependentNetwork& net, const std::string& path);

}  // namespace itdn
