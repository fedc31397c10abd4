#pragma once

#include <optional>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/instance.hpp"

namespace locunc {

struct EvalResult {
  double value = 0;
  // vertices not touched by F keep index 0
  Scenario witness;
};

struct TreeDecomposition {
  enum class Kind { Leaf, Introduce, Forget, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    std::vector<VertexId> bag;  // ascending
    VertexId vertex = -1;       // introduced or forgotten vertex
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;

  int width() const;
};

EvalResult eval_c_bruteforce(const Instance& inst, const EdgeSubset& F, const Caps& caps = {});

// F must be a forest (NotATree otherwise); each component is rooted at its
// smallest vertex, or at `root` for the component containing it
EvalResult eval_c_tree(const Instance& inst, const EdgeSubset& F, std::optional<VertexId> root = std::nullopt);

// nice decomposition of (all vertices of g, all edges of g), via min-degree elimination
TreeDecomposition build_nice_decomposition(const Graph& g);
// nice decomposition of the subgraph formed by F and the vertices it touches
TreeDecomposition build_nice_decomposition(const Graph& g, const EdgeSubset& F);

// throws InvalidDecomposition describing the first violated property
void validate_nice_decomposition(const TreeDecomposition& td, const Graph& g, const EdgeSubset& F);

EvalResult eval_c_treewidth(const Instance& inst, const EdgeSubset& F, const TreeDecomposition& td,
                            const Caps& caps = {});

enum class EvalMethod { Empty, Tree, Treewidth, BruteForce };
EvalResult eval_c(const Instance& inst, const EdgeSubset& F, const Caps& caps = {}, EvalMethod* used = nullptr);

}  // namespace locunc
