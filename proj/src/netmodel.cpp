#include "itdn/netmodel.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace itdn {

namespace {

void canonicalize(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void check_edge_range(const EdgeList& edges, int n_from, int n_to, const char* name) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_from || v < 0 || v >= n_to)
      throw std::invalid_argument(std::string(name) + " edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
  }
}

EdgeList mirrored(const EdgeList& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.emplace_back(v, u);
  canonicalize(out);
  return out;
}

}  // namespace

InterdependentNetwork NetworkBuilder::build() const {
  if (n_a <= 0 || n_b <= 0) throw std::invalid_argument("node counts must be positive");

  InterdependentNetwork net;
  net.n_a_ = n_a;
  net.n_b_ = n_b;
  net.dir_ = directionality;
  net.topo_ = topology;

  net.edges_ab_ = edges_ab;
  canonicalize(net.edges_ab_);
  check_edge_range(net.edges_ab_, n_a, n_b, "AB");

  if (edges_ba.has_value()) {
    net.edges_ba_ = *edges_ba;
    canonicalize(net.edges_ba_);
  } else if (directionality == Directionality::Bidirectional) {
    net.edges_ba_ = mirrored(net.edges_ab_);
  }
  check_edge_range(net.edges_ba_, n_b, n_a, "BA");

  if (topology == IntraTopology::General) {
    net.intra_a_ = intra_a;
    net.intra_b_ = intra_b;
    for (auto* ig : {&net.intra_a_, &net.intra_b_}) {
      for (auto& [u, v] : ig->edges)
        if (u > v) std::swap(u, v);  // undirected, stored (min, max)
      canonicalize(ig->edges);
      std::sort(ig->sources.begin(), ig->sources.end());
      ig->sources.erase(std::unique(ig->sources.begin(), ig->sources.end()), ig->sources.end());
    }
    check_edge_range(net.intra_a_.edges, n_a, n_a, "INTRA_A");
    check_edge_range(net.intra_b_.edges, n_b, n_b, "INTRA_B");
    for (int s : net.intra_a_.sources)
      if (s < 0 || s >= n_a) throw std::invalid_argument("SRC_A index out of range");
    for (int s : net.intra_b_.sources)
      if (s < 0 || s >= n_b) throw std::invalid_argument("SRC_B index out of range");
  } else if (!intra_a.sources.empty() || !intra_a.edges.empty() || !intra_b.sources.empty() ||
             !intra_b.edges.empty()) {
    throw std::invalid_argument("intra graphs are only meaningful in General topology");
  }

  net.sup_b_.assign(n_b, {});
  net.dep_a_.assign(n_a, {});
  for (const auto& [a, b] : net.edges_ab_) {
    net.sup_b_[b].push_back(a);
    net.dep_a_[a].push_back(b);
  }
  net.sup_a_.assign(n_a, {});
  net.dep_b_.assign(n_b, {});
  for (const auto& [b, a] : net.edges_ba_) {
    net.sup_a_[a].push_back(b);
    net.dep_b_[b].push_back(a);
  }

  net.intra_adj_a_.assign(n_a, {});
  net.intra_adj_b_.assign(n_b, {});
  net.src_a_ = Bitset(n_a);
  net.src_b_ = Bitset(n_b);
  if (topology == IntraTopology::General) {
    for (const auto& [u, v] : net.intra_a_.edges) {
      net.intra_adj_a_[u].push_back(v);
      net.intra_adj_a_[v].push_back(u);
    }
    for (const auto& [u, v] : net.intra_b_.edges) {
      net.intra_adj_b_[u].push_back(v);
      net.intra_adj_b_[v].push_back(u);
    }
    for (int s : net.intra_a_.sources) net.src_a_.set(s);
    for (int s : net.intra_b_.sources) net.src_b_.set(s);
  }
  return net;
}

namespace {

std::string node_name(Side s, int i) {
  return (s == Side::A ? "a" : "b") + std::to_string(i);
}

// Nodes intra-connected to some source; sources themselves included.
Bitset source_reachable(const InterdependentNetwork& net, Side side) {
  const int n = net.node_count(side);
  Bitset seen(n);
  std::queue<int> q;
  for (int s : net.intra(side).sources) {
    seen.set(s);
    q.push(s);
  }
  const auto& adj = net.intra_adjacency(side);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen.test(v)) {
        seen.set(v);
        q.push(v);
      }
  }
  return seen;
}

}  // namespace

std::vector<std::string> validate(const InterdependentNetwork& net) {
  std::vector<std::string> out;

  if (net.directionality() == Directionality::Bidirectional) {
    EdgeList expect;
    expect.reserve(net.edges_ab().size());
    for (const auto& [a, b] : net.edges_ab()) expect.emplace_back(b, a);
    std::sort(expect.begin(), expect.end());
    if (expect != net.edges_ba())
      out.push_back("bidirectional network: BA edge set is not the mirror of AB");
  }

  for (Side side : {Side::A, Side::B}) {
    const int n = net.node_count(side);
    for (int i = 0; i < n; ++i) {
      if (net.is_source(side, i)) continue;
      const auto& sup = side == Side::A ? net.supporters_of_a(i) : net.supporters_of_b(i);
      if (sup.empty())
        out.push_back(node_name(side, i) + " has no incoming interdependency edge");
    }
  }

  if (net.topology() == IntraTopology::General) {
    for (Side side : {Side::A, Side::B}) {
      if (net.intra(side).sources.empty()) {
        out.push_back(std::string("network ") + (side == Side::A ? "A" : "B") + " has no source");
        continue;
      }
      Bitset reach = source_reachable(net, side);
      for (int i = 0; i < net.node_count(side); ++i)
        if (!reach.test(i)) out.push_back(node_name(side, i) + " is not connected to a source");
    }
  }
  return out;
}

int degree(const InterdependentNetwork& net, NodeRef node) {
  if (node.index < 0 || node.index >= net.node_count(node.side))
    throw std::out_of_range("node index out of range");
  return node.side == Side::A ? static_cast<int>(net.supporters_of_a(node.index).size())
                              : static_cast<int>(net.supporters_of_b(node.index).size());
}

std::vector<Bitset> b_support_masks(const InterdependentNetwork& net) {
  std::vector<Bitset> masks(net.n_b(), Bitset(net.n_a()));
  for (const auto& [a, b] : net.edges_ab()) masks[b].set(a);
  return masks;
}

std::vector<Bitset> a_support_masks(const InterdependentNetwork& net) {
  std::vector<Bitset> masks(net.n_a(), Bitset(net.n_b()));
  for (const auto& [b, a] : net.edges_ba()) masks[a].set(b);
  return masks;
}

// ---------------------------------------------------------------------------
// Serialization.
//
//   ITDN v1 <n_a> <n_b> <BI|UNI> <STAR|GEN>
//   SRC_A / SRC_B      one index per line           (GEN only)
//   INTRA_A / INTRA_B  undirected "u v" per line    (GEN only)
//   AB                 "a b" per line
//   BA                 "b a" per line               (omitted when BI)
//
// '#' starts a comment; blank lines are ignored; indices are 0-based.

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> content;  // (line number, stripped text)
};

Lines strip(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    out.content.emplace_back(no, line.substr(begin, end - begin + 1));
  }
  return out;
}

bool is_block_keyword(const std::string& s) {
  return s == "SRC_A" || s == "SRC_B" || s == "INTRA_A" || s == "INTRA_B" || s == "AB" || s == "BA";
}

std::vector<long> parse_ints(const std::string& s, int line_no) {
  std::istringstream in(s);
  std::vector<long> vals;
  long v;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) throw ParseError(line_no, "expected integers, got '" + s + "'");
  return vals;
}

}  // namespace

InterdependentNetwork parse_network(const std::string& text) {
  const Lines lines = strip(text);
  if (lines.content.empty()) throw ParseError(1, "empty network file");

  auto [hline, header] = lines.content.front();
  std::istringstream hs(header);
  std::string magic, version, dir_s, topo_s;
  long na = 0, nb = 0;
  if (!(hs >> magic >> version >> na >> nb >> dir_s >> topo_s) || magic != "ITDN" || version != "v1")
    throw ParseError(hline, "expected header 'ITDN v1 <n_a> <n_b> <BI|UNI> <STAR|GEN>'");
  if (na <= 0 || nb <= 0) throw ParseError(hline, "node counts must be positive");

  NetworkBuilder builder;
  builder.n_a = static_cast<int>(na);
  builder.n_b = static_cast<int>(nb);
  if (dir_s == "BI")
    builder.directionality = Directionality::Bidirectional;
  else if (dir_s == "UNI")
    builder.directionality = Directionality::Unidirectional;
  else
    throw ParseError(hline, "directionality must be BI or UNI");
  if (topo_s == "STAR")
    builder.topology = IntraTopology::Star;
  else if (topo_s == "GEN")
    builder.topology = IntraTopology::General;
  else
    throw ParseError(hline, "topology must be STAR or GEN");

  EdgeList ba;
  bool saw_ab = false, saw_ba = false;
  std::string block;
  int block_line = hline;
  std::vector<std::string> seen_blocks;

  auto check_index = [](long v, long n, int line_no, const char* what) {
    if (v < 0 || v >= n)
      throw ParseError(line_no, std::string(what) + " index " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };

  for (std::size_t li = 1; li < lines.content.size(); ++li) {
    const auto& [no, s] = lines.content[li];
    if (is_block_keyword(s)) {
      if (std::find(seen_blocks.begin(), seen_blocks.end(), s) != seen_blocks.end())
        throw ParseError(no, "duplicate block " + s);
      if ((s == "SRC_A" || s == "SRC_B" || s == "INTRA_A" || s == "INTRA_B") &&
          builder.topology == IntraTopology::Star)
        throw ParseError(no, s + " block not allowed in STAR topology");
      if (s == "BA" && builder.directionality == Directionality::Bidirectional)
        throw ParseError(no, "BA block not allowed in a BI network (mirrored from AB)");
      seen_blocks.push_back(s);
      block = s;
      block_line = no;
      continue;
    }
    if (block.empty()) throw ParseError(no, "content before any block: '" + s + "'");
    const auto vals = parse_ints(s, no);
    if (block == "SRC_A" || block == "SRC_B") {
      auto& dst = block == "SRC_A" ? builder.intra_a.sources : builder.intra_b.sources;
      const long n = block == "SRC_A" ? na : nb;
      for (long v : vals) dst.push_back(check_index(v, n, no, "source"));
    } else {
      if (vals.size() != 2) throw ParseError(no, "expected a pair 'u v'");
      if (block == "INTRA_A")
        builder.intra_a.edges.emplace_back(check_index(vals[0], na, no, "intra-A"),
                                           check_index(vals[1], na, no, "intra-A"));
      else if (block == "INTRA_B")
        builder.intra_b.edges.emplace_back(check_index(vals[0], nb, no, "intra-B"),
                                           check_index(vals[1], nb, no, "intra-B"));
      else if (block == "AB") {
        saw_ab = true;
        builder.edges_ab.emplace_back(check_index(vals[0], na, no, "A"),
                                      check_index(vals[1], nb, no, "B"));
      } else {  // BA
        saw_ba = true;
        ba.emplace_back(check_index(vals[0], nb, no, "B"), check_index(vals[1], na, no, "A"));
      }
    }
  }

  if (std::find(seen_blocks.begin(), seen_blocks.end(), "AB") == seen_blocks.end())
    throw ParseError(block_line, "missing AB block");
  (void)saw_ab;
  if (builder.directionality == Directionality::Unidirectional || saw_ba)
    builder.edges_ba = std::move(ba);
  if (builder.topology == IntraTopology::General) {
    for (const char* req : {"SRC_A", "SRC_B"})
      if (std::find(seen_blocks.begin(), seen_blocks.end(), req) == seen_blocks.end())
        throw ParseError(block_line, std::string("missing ") + req + " block in GEN topology");
  }

  try {
    return builder.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(block_line, e.what());
  }
}

std::string serialize_network(const InterdependentNetwork& net) {
  std::ostringstream out;
  const bool bi = net.directionality() == Directionality::Bidirectional;
  const bool gen = net.topology() == IntraTopology::General;
  out << "ITDN v1 " << net.n_a() << ' ' << net.n_b() << ' ' << (bi ? "BI" : "UNI") << ' '
      << (gen ? "GEN" : "STAR") << '\n';
  if (gen) {
    out << "SRC_A\n";
    for (int s : net.intra(Side::A).sources) out << s << '\n';
    out << "SRC_B\n";
    for (int s : net.intra(Side::B).sources) out << s << '\n';
    out << "INTRA_A\n";
    for (const auto& [u, v] : net.intra(Side::A).edges) out << u << ' ' << v << '\n';
    out << "INTRA_B\n";
    for (const auto& [u, v] : net.intra(Side::B).edges) out << u << ' ' << v << '\n';
  }
  out << "AB\n";
  for (const auto& [a, b] : net.edges_ab()) out << a << ' ' << b << '\n';
  if (!bi) {
    out << "BA\n";
    for (const auto& [b, a] : net.edges_ba()) out << b << ' ' << a << '\n';
  }
  return out.str();
}

InterdependentNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

void save_network(const InterdependentNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_network(net);
}

}  // namespace itdn
