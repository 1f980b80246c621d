#include "crystal/graph.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "crystal/error.hpp"
#include "crystal/fayers.hpp"
#include "crystal/isomorphism.hpp"

namespace crystal {

const char* to_string(ModelKind kind) {
  return kind == ModelKind::partition ? "partition" : "monomial";
}

CrystalModel CrystalModel::partitions(ArmSequence arm) {
  return CrystalModel(PartitionSide{std::move(arm)});
}

CrystalModel CrystalModel::monomials(int n) {
  return monomials(Monomial::Y(n, 0, 0));
}

CrystalModel CrystalModel::monomials(Monomial root) {
  return CrystalModel(MonomialSide{std::move(root)});
}

ModelKind CrystalModel::kind() const noexcept {
  return std::holds_alternative<PartitionSide>(impl_) ? ModelKind::partition
                                                      : ModelKind::monomial;
}

int CrystalModel::rank() const noexcept {
  if (auto* p = std::get_if<PartitionSide>(&impl_)) return p->arm.rank();
  return std::get<MonomialSide>(impl_).root.rank();
}

std::optional<std::string> CrystalModel::arm_descriptor() const {
  if (auto* p = std::get_if<PartitionSide>(&impl_)) return p->arm.descriptor();
  return std::nullopt;
}

std::string CrystalModel::root_label() const {
  if (std::holds_alternative<PartitionSide>(impl_)) return Partition{}.to_string();
  return std::get<MonomialSide>(impl_).root.to_string();
}

std::optional<std::string> CrystalModel::apply_f(const std::string& label,
                                                 int color) const {
  const Residue i(color, rank());
  if (auto* p = std::get_if<PartitionSide>(&impl_)) {
    auto out = crystal::apply_f(Partition::parse(label), i, p->arm);
    if (!out) return std::nullopt;
    return out->to_string();
  }
  auto out = crystal::apply_f(Monomial::parse(label, rank()), i);
  if (!out) return std::nullopt;
  return out->to_string();
}

std::optional<std::string> CrystalModel::apply_e(const std::string& label,
                                                 int color) const {
  const Residue i(color, rank());
  if (auto* p = std::get_if<PartitionSide>(&impl_)) {
    auto out = crystal::apply_e(Partition::parse(label), i, p->arm);
    if (!out) return std::nullopt;
    return out->to_string();
  }
  auto out = crystal::apply_e(Monomial::parse(label, rank()), i);
  if (!out) return std::nullopt;
  return out->to_string();
}

std::optional<int> CrystalGraph::target(int vertex, int color) const {
  for (const Edge& e : edges) {
    if (e.src == vertex && e.color == color) return e.dst;
  }
  return std::nullopt;
}

std::optional<int> CrystalGraph::find(const std::string& label) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v] == label) return static_cast<int>(v);
  }
  return std::nullopt;
}

CrystalGraph generate_graph(const CrystalModel& model, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  CrystalGraph graph;
  graph.model = model.kind();
  graph.n = model.rank();
  graph.arm = model.arm_descriptor();
  graph.depth = depth;
  graph.root = 0;

  std::unordered_map<std::string, int> ids;
  std::vector<int> level;
  auto intern = [&](const std::string& label, int at) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<int>(graph.vertices.size()));
    if (inserted) {
      graph.vertices.push_back(label);
      level.push_back(at);
    }
    return it->second;
  };

  intern(model.root_label(), 0);
  // Vertices are appended in discovery order, so a plain index sweep is BFS.
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (level[v] >= depth) continue;
    const std::string label = graph.vertices[v];
    for (int color = 0; color < graph.n; ++color) {
      if (auto child = model.apply_f(label, color)) {
        int dst = intern(*child, level[v] + 1);
        graph.edges.push_back({static_cast<int>(v), dst, color});
      }
    }
  }
  return graph;
}

namespace {

/// out[v][c] and in[v][c], -1 when absent; -2 marks a duplicate.
struct Adjacency {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  explicit Adjacency(const CrystalGraph& g)
      : out(g.vertices.size(), std::vector<int>(static_cast<std::size_t>(g.n), -1)),
        in(g.vertices.size(), std::vector<int>(static_cast<std::size_t>(g.n), -1)) {
    for (const Edge& e : g.edges) {
      if (e.src < 0 || e.dst < 0 || e.color < 0 || e.color >= g.n ||
          e.src >= static_cast<int>(g.vertices.size()) ||
          e.dst >= static_cast<int>(g.vertices.size())) {
        continue;
      }
      auto& o = out[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.color)];
      o = o == -1 ? e.dst : -2;
      auto& i = in[static_cast<std::size_t>(e.dst)][static_cast<std::size_t>(e.color)];
      i = i == -1 ? e.src : -2;
    }
  }
};

}  // namespace

Comparison compare_graphs(const CrystalGraph& first, const CrystalGraph& second,
                          const LabelMap& map) {
  if (first.n != second.n) {
    throw Error(Errc::rank_mismatch, "graphs have ranks " +
                                         std::to_string(first.n) + " and " +
                                         std::to_string(second.n));
  }
  if (first.depth != second.depth) {
    throw Error(Errc::depth_mismatch, "graphs have depths " +
                                          std::to_string(first.depth) +
                                          " and " +
                                          std::to_string(second.depth));
  }

  Comparison result;
  if (first.vertices.empty() || second.vertices.empty()) {
    result.divergence = Divergence{0, 0, std::nullopt, "empty graph"};
    return result;
  }

  const Adjacency a(first);
  const Adjacency b(second);
  std::vector<int> forward(first.vertices.size(), -1);
  std::vector<int> backward(second.vertices.size(), -1);

  auto labels_agree = [&](int u, int v) {
    if (!map) return true;
    return map(first.vertices[static_cast<std::size_t>(u)]) ==
           second.vertices[static_cast<std::size_t>(v)];
  };
  auto diverge = [&](int u, int v, std::optional<int> color, std::string why) {
    result.divergence = Divergence{u, v, color, std::move(why)};
    return result;
  };

  if (!labels_agree(first.root, second.root)) {
    return diverge(first.root, second.root, std::nullopt, "root labels differ");
  }
  forward[static_cast<std::size_t>(first.root)] = second.root;
  backward[static_cast<std::size_t>(second.root)] = first.root;

  std::deque<std::pair<int, int>> queue{{first.root, second.root}};
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (int c = 0; c < first.n; ++c) {
      const int tu = a.out[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
      const int tv = b.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (tu == -2 || tv == -2) {
        return diverge(u, v, c, "duplicate outgoing edge");
      }
      if ((tu == -1) != (tv == -1)) {
        return diverge(u, v, c,
                       tu == -1 ? "edge only in second graph"
                                : "edge only in first graph");
      }
      if (tu == -1) continue;
      auto& fu = forward[static_cast<std::size_t>(tu)];
      auto& bv = backward[static_cast<std::size_t>(tv)];
      if (fu == -1 && bv == -1) {
        if (!labels_agree(tu, tv)) {
          return diverge(tu, tv, c, "mapped labels differ");
        }
        fu = tv;
        bv = tu;
        queue.emplace_back(tu, tv);
      } else if (fu != tv || bv != tu) {
        return diverge(u, v, c, "edge targets are matched inconsistently");
      }
    }
  }

  for (std::size_t u = 0; u < forward.size(); ++u) {
    if (forward[u] == -1) {
      return diverge(static_cast<int>(u), -1, std::nullopt,
                     "vertex of first graph not reached");
    }
  }
  for (std::size_t v = 0; v < backward.size(); ++v) {
    if (backward[v] == -1) {
      return diverge(-1, static_cast<int>(v), std::nullopt,
                     "vertex of second graph not reached");
    }
  }
  result.bijection = std::move(forward);
  return result;
}

LabelMap psi_label_map(int n) {
  return [n](const std::string& label) {
    return psi(Partition::parse(label), n).to_string();
  };
}

std::vector<std::string> structural_violations(const CrystalGraph& graph) {
  std::vector<std::string> out;
  const int count = static_cast<int>(graph.vertices.size());
  for (const Edge& e : graph.edges) {
    if (e.color < 0 || e.color >= graph.n || e.src < 0 || e.src >= count ||
        e.dst < 0 || e.dst >= count) {
      out.push_back("edge " + std::to_string(e.src) + "->" +
                    std::to_string(e.dst) + " out of range");
    }
  }
  const Adjacency adj(graph);
  for (int v = 0; v < count; ++v) {
    bool has_incoming = false;
    for (int c = 0; c < graph.n; ++c) {
      const int o = adj.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      const int i = adj.in[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (o == -2) out.push_back("vertex " + std::to_string(v) +
                                 " has two outgoing edges of color " +
                                 std::to_string(c));
      if (i == -2) out.push_back("vertex " + std::to_string(v) +
                                 " has two incoming edges of color " +
                                 std::to_string(c));
      if (i != -1) has_incoming = true;
    }
    if (v == graph.root && has_incoming) {
      out.push_back("root has an incoming edge");
    } else if (v != graph.root && !has_incoming) {
      out.push_back("vertex " + std::to_string(v) + " has no incoming edge");
    }
  }
  return out;
}

std::vector<std::string> duality_violations(const CrystalGraph& graph,
                                            const CrystalModel& model) {
  std::vector<std::string> out;
  for (const Edge& e : graph.edges) {
    const auto& src = graph.vertices.at(static_cast<std::size_t>(e.src));
    const auto& dst = graph.vertices.at(static_cast<std::size_t>(e.dst));
    auto back = model.apply_e(dst, e.color);
    if (!back || *back != src) {
      out.push_back("e_" + std::to_string(e.color) + "(" + dst + ") = " +
                    back.value_or("0") + ", expected " + src);
    }
  }
  return out;
}

std::vector<long long> count_regular(const ArmSequence& arm, int max_size) {
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  std::vector<long long> counts;
  for (int m = 0; m <= max_size; ++m) {
    long long count = 0;
    for (const auto& lambda : partitions_of(m)) {
      if (is_regular(lambda, arm)) ++count;
    }
    counts.push_back(count);
  }
  return counts;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const CrystalGraph& graph) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << dot_escape(graph.vertices[v])
        << "\"];\n";
  }
  for (const Edge& e : graph.edges) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.color
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CrystalGraph& graph) {
  nlohmann::ordered_json j;
  j["model"] = to_string(graph.model);
  j["n"] = graph.n;
  j["arm"] = graph.arm ? nlohmann::ordered_json(*graph.arm) : nullptr;
  j["depth"] = graph.depth;
  j["root"] = graph.root;
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    vertices.push_back({{"id", v}, {"label", graph.vertices[v]}});
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : graph.edges) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"color", e.color}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string export_text(const CrystalGraph& graph) {
  std::ostringstream out;
  out << "model " << to_string(graph.model) << " n " << graph.n << " arm "
      << graph.arm.value_or("-") << " depth " << graph.depth << "\n";
  out << graph.vertices.size() << " vertices, " << graph.edges.size()
      << " edges\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    out << "v" << v << " " << graph.vertices[v] << "\n";
  }
  for (const Edge& e : graph.edges) {
    out << "v" << e.src << " -" << e.color << "-> v" << e.dst << "\n";
  }
  return out.str();
}

CrystalGraph parse_graph_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CrystalGraph g;
    const auto model = j.at("model").get<std::string>();
    if (model == "partition") {
      g.model = ModelKind::partition;
    } else if (model == "monomial") {
      g.model = ModelKind::monomial;
    } else {
      throw Error(Errc::syntax_error, "unknown model '" + model + "'");
    }
    g.n = j.at("n").get<int>();
    if (!j.at("arm").is_null()) g.arm = j.at("arm").get<std::string>();
    g.depth = j.at("depth").get<int>();
    g.root = j.at("root").get<int>();
    for (const auto& v : j.at("vertices")) {
      if (v.at("id").get<std::size_t>() != g.vertices.size()) {
        throw Error(Errc::syntax_error, "vertex ids must be 0, 1, 2, ...");
      }
      g.vertices.push_back(v.at("label").get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
      g.edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(),
                         e.at("color").get<int>()});
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::syntax_error, std::string("bad graph JSON: ") + e.what());
  }
}

}  // namespace crystal
