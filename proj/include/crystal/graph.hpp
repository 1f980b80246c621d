#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crystal/arm_sequence.hpp"
#include "crystal/monomial.hpp"
#include "crystal/partition.hpp"

namespace crystal {

enum class ModelKind { partition, monomial };

const char* to_string(ModelKind kind);

/// What a crystal graph is built from: partitions under an arm sequence, or
/// monomials grown from a root (Y_{0,0} unless given).
class CrystalModel {
 public:
  static CrystalModel partitions(ArmSequence arm);
  static CrystalModel monomials(int n);
  static CrystalModel monomials(Monomial root);

  ModelKind kind() const noexcept;
  int rank() const noexcept;
  /// Descriptor of the arm sequence for the partition model.
  std::optional<std::string> arm_descriptor() const;

  std::string root_label() const;
  /// f_i / e_i on a canonical vertex label; nullopt for the null result.
  std::optional<std::string> apply_f(const std::string& label, int color) const;
  std::optional<std::string> apply_e(const std::string& label, int color) const;

 private:
  struct PartitionSide {
    ArmSequence arm;
  };
  struct MonomialSide {
    Monomial root;
  };
  explicit CrystalModel(std::variant<PartitionSide, MonomialSide> impl)
      : impl_(std::move(impl)) {}

  std::variant<PartitionSide, MonomialSide> impl_;
};

struct Edge {
  int src;
  int dst;
  int color;

  bool operator==(const Edge&) const = default;
};

/// A rooted, residue-colored digraph. Vertex ids follow BFS order with
/// children explored by ascending color; the root is vertex 0.
struct CrystalGraph {
  ModelKind model = ModelKind::partition;
  int n = 3;
  std::optional<std::string> arm;
  int depth = 0;
  int root = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  bool operator==(const CrystalGraph&) const = default;

  /// Outgoing edge of a color, if present.
  std::optional<int> target(int vertex, int color) const;
  std::optional<int> find(const std::string& label) const;
};

/// Everything reachable from the root by at most `depth` f operators, with
/// every f edge among those vertices.
CrystalGraph generate_graph(const CrystalModel& model, int depth);

/// Vertex label morphism used by compare_graphs, e.g. psi.
using LabelMap = std::function<std::string(const std::string&)>;

/// First point where two graphs disagree during the synchronized walk.
struct Divergence {
  int first_vertex;
  int second_vertex;
  std::optional<int> color;
  std::string reason;
};

struct Comparison {
  /// bijection[v] is the vertex of the second graph matched to v.
  std::vector<int> bijection;
  std::optional<Divergence> divergence;

  bool isomorphic() const noexcept { return !divergence; }
};

/// Synchronized BFS from both roots along equal colors. Throws
/// Errc::rank_mismatch or Errc::depth_mismatch.
Comparison compare_graphs(const CrystalGraph& first, const CrystalGraph& second,
                          const LabelMap& map = {});

/// Label map sending a partition label to psi of it, in rank n.
LabelMap psi_label_map(int n);

/// Violations of: at most one in- and out-edge per color, every non-root
/// vertex has an incoming edge, the root has none, edge colors in range.
std::vector<std::string> structural_violations(const CrystalGraph& graph);

/// Edges u -> v of color i for which e_i(v) != u under the model.
std::vector<std::string> duality_violations(const CrystalGraph& graph,
                                            const CrystalModel& model);

/// counts[m] = number of A-regular partitions of m, for 0 <= m <= max_size.
std::vector<long long> count_regular(const ArmSequence& arm, int max_size);

std::string export_dot(const CrystalGraph& graph);
std::string export_json(const CrystalGraph& graph);
std::string export_text(const CrystalGraph& graph);
/// Inverse of export_json. Throws Errc::syntax_error on schema mismatch.
CrystalGraph parse_graph_json(const std::string& text);

}  // namespace crystal
