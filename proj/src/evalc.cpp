#include "locunc/evalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "locunc/errors.hpp"

namespace locunc {

namespace {

using Kind = TreeDecomposition::Kind;

EvalResult finish(const Instance& inst, const EdgeSubset& F, Scenario witness) {
  EvalResult r;
  r.value = cost(inst, witness, F);
  r.witness = std::move(witness);
  return r;
}

Scenario zero_scenario(const Instance& inst) { return Scenario{std::vector<int>(inst.n(), 0)}; }

std::vector<std::vector<VertexId>> f_adjacency(const Graph& g, const EdgeSubset& F) {
  std::vector<std::vector<VertexId>> adj(g.n());
  for (EdgeId e : F) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  return adj;
}

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool is_forest(const Graph& g, const EdgeSubset& F) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  for (EdgeId e : F) {
    const int a = find_root(p, g.edge(e).u), b = find_root(p, g.edge(e).v);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

class NiceBuilder {
 public:
  explicit NiceBuilder(TreeDecomposition& td) : td_(td) {}

  int leaf() { return add({Kind::Leaf, {}, -1, {}}); }

  int introduce(int child, VertexId v) {
    auto bag = td_.nodes[child].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return add({Kind::Introduce, std::move(bag), v, {child}});
  }

  int forget(int child, VertexId v) {
    auto bag = td_.nodes[child].bag;
    bag.erase(std::find(bag.begin(), bag.end(), v));
    return add({Kind::Forget, std::move(bag), v, {child}});
  }

  int join(int a, int b) { return add({Kind::Join, td_.nodes[a].bag, -1, {a, b}}); }

  // turn the chain ending at `node` into one whose top bag equals `target`
  int reshape(int node, const std::vector<VertexId>& target) {
    const auto bag = td_.nodes[node].bag;
    for (VertexId v : bag)
      if (!std::binary_search(target.begin(), target.end(), v)) node = forget(node, v);
    for (VertexId v : target)
      if (!std::binary_search(bag.begin(), bag.end(), v)) node = introduce(node, v);
    return node;
  }

 private:
  int add(TreeDecomposition::Node n) {
    td_.nodes.push_back(std::move(n));
    return static_cast<int>(td_.nodes.size()) - 1;
  }
  TreeDecomposition& td_;
};

TreeDecomposition build_nice(int n, const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
  std::vector<std::set<VertexId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 0);
  for (VertexId v : vertices) alive[v] = 1;
  std::vector<int> position(n, -1);
  std::vector<VertexId> order;
  std::vector<std::vector<VertexId>> bags(n);
  for (size_t step = 0; step < vertices.size(); ++step) {
    VertexId best = -1;
    for (VertexId v : vertices)
      if (alive[v] && (best < 0 || adj[v].size() < adj[best].size())) best = v;
    auto& bag = bags[best];
    bag.assign(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    for (VertexId a : adj[best]) {
      adj[a].erase(best);
      for (VertexId b : adj[best])
        if (a != b) adj[a].insert(b);
    }
    adj[best].clear();
    alive[best] = 0;
    position[best] = static_cast<int>(order.size());
    order.push_back(best);
  }
  // parent of v's node: the neighbour in its bag eliminated first after v
  std::vector<std::vector<VertexId>> kids(n);
  std::vector<VertexId> roots;
  for (VertexId v : order) {
    VertexId parent = -1;
    for (VertexId a : bags[v])
      if (a != v && (parent < 0 || position[a] < position[parent])) parent = a;
    if (parent < 0) roots.push_back(v);
    else kids[parent].push_back(v);
  }

  TreeDecomposition td;
  NiceBuilder nb(td);
  std::function<int(VertexId)> make = [&](VertexId v) -> int {
    int acc = -1;
    for (VertexId c : kids[v]) {
      const int sub = nb.reshape(make(c), bags[v]);
      acc = acc < 0 ? sub : nb.join(acc, sub);
    }
    if (acc < 0) acc = nb.reshape(nb.leaf(), bags[v]);
    return acc;
  };
  int top = -1;
  for (VertexId r : roots) {
    const int sub = nb.reshape(make(r), {});
    top = top < 0 ? sub : nb.join(top, sub);
  }
  if (top < 0) top = nb.leaf();
  td.root = top;
  return td;
}

}  // namespace

int TreeDecomposition::width() const {
  size_t w = 0;
  for (const auto& n : nodes) w = std::max(w, n.bag.size());
  return static_cast<int>(w) - 1;
}

EvalResult eval_c_bruteforce(const Instance& inst, const EdgeSubset& F, const Caps& caps) {
  const Graph& g = inst.graph();
  const auto V = touched_vertices(g, F);
  long long count = 1;
  for (VertexId v : V) {
    count *= static_cast<long long>(inst.uset(v).size());
    if (count > caps.evalc_scenarios)
      throw CapExceeded("brute force limited to " + std::to_string(caps.evalc_scenarios) + " scenarios");
  }
  Scenario u = zero_scenario(inst);
  Scenario best = u;
  double best_value = -1;
  while (true) {
    const double c = cost(inst, u, F);
    if (c > best_value) {
      best_value = c;
      best = u;
    }
    int k = static_cast<int>(V.size()) - 1;
    while (k >= 0 && u.choice[V[k]] + 1 == static_cast<int>(inst.uset(V[k]).size())) u.choice[V[k--]] = 0;
    if (k < 0) break;
    ++u.choice[V[k]];
  }
  return finish(inst, F, std::move(best));
}

EvalResult eval_c_tree(const Instance& inst, const EdgeSubset& F, std::optional<VertexId> root) {
  const Graph& g = inst.graph();
  if (!is_forest(g, F)) throw NotATree("edge set contains a cycle");
  const auto adj = f_adjacency(g, F);
  const int n = g.n();
  std::vector<int> parent(n, -2);
  std::vector<std::vector<double>> opt(n);
  // arg[c][l]: best location of child c when its parent sits at location l
  std::vector<std::vector<int>> arg(n);
  Scenario w = zero_scenario(inst);

  std::vector<VertexId> starts;
  if (root && *root >= 0 && *root < n && !adj[*root].empty()) starts.push_back(*root);
  for (VertexId v = 0; v < n; ++v)
    if (!adj[v].empty()) starts.push_back(v);

  for (VertexId r : starts) {
    if (parent[r] != -2) continue;
    std::vector<VertexId> order{r};
    parent[r] = -1;
    for (size_t k = 0; k < order.size(); ++k)
      for (VertexId x : adj[order[k]])
        if (parent[x] == -2) {
          parent[x] = order[k];
          order.push_back(x);
        }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      const int sv = static_cast<int>(inst.uset(v).size());
      opt[v].assign(sv, 0.0);
      for (VertexId c : adj[v]) {
        if (c == parent[v]) continue;
        const int sc = static_cast<int>(inst.uset(c).size());
        arg[c].assign(sv, 0);
        for (int l = 0; l < sv; ++l) {
          double best = -1;
          for (int lc = 0; lc < sc; ++lc) {
            const double val = inst.d(v, l, c, lc) + opt[c][lc];
            if (val > best) {
              best = val;
              arg[c][l] = lc;
            }
          }
          opt[v][l] += best;
        }
      }
    }
    int lr = 0;
    for (int l = 1; l < static_cast<int>(opt[r].size()); ++l)
      if (opt[r][l] > opt[r][lr]) lr = l;
    w.choice[r] = lr;
    for (size_t k = 1; k < order.size(); ++k) w.choice[order[k]] = arg[order[k]][w.choice[parent[order[k]]]];
  }
  return finish(inst, F, std::move(w));
}

TreeDecomposition build_nice_decomposition(const Graph& g) {
  std::vector<VertexId> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  return build_nice(g.n(), all, g.edges());
}

TreeDecomposition build_nice_decomposition(const Graph& g, const EdgeSubset& F) {
  std::vector<Edge> edges;
  for (EdgeId e : F) edges.push_back(g.edge(e));
  return build_nice(g.n(), touched_vertices(g, F), edges);
}

void validate_nice_decomposition(const TreeDecomposition& td, const Graph& g, const EdgeSubset& F) {
  auto fail = [](const std::string& m) { throw InvalidDecomposition(m); };
  const int N = static_cast<int>(td.nodes.size());
  if (td.root < 0 || td.root >= N) fail("root out of range");
  std::vector<int> parent(N, -1);
  for (int x = 0; x < N; ++x)
    for (int c : td.nodes[x].children) {
      if (c < 0 || c >= N || c == td.root || parent[c] >= 0) fail("node structure is not a tree");
      parent[c] = x;
    }
  std::vector<int> stack{td.root};
  int reached = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : td.nodes[x].children) stack.push_back(c);
  }
  if (reached != N) fail("nodes unreachable from the root");
  if (!td.nodes[td.root].bag.empty()) fail("root bag is not empty");

  for (int x = 0; x < N; ++x) {
    const auto& nd = td.nodes[x];
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end()) ||
        std::adjacent_find(nd.bag.begin(), nd.bag.end()) != nd.bag.end())
      fail("bag not sorted or has repeats");
    switch (nd.kind) {
      case Kind::Leaf:
        if (!nd.children.empty() || !nd.bag.empty()) fail("leaf must have no children and an empty bag");
        break;
      case Kind::Introduce:
      case Kind::Forget: {
        if (nd.children.size() != 1) fail("introduce/forget needs exactly one child");
        auto with = nd.kind == Kind::Introduce ? nd.bag : td.nodes[nd.children[0]].bag;
        auto without = nd.kind == Kind::Introduce ? td.nodes[nd.children[0]].bag : nd.bag;
        if (std::binary_search(without.begin(), without.end(), nd.vertex)) fail("vertex already present");
        without.insert(std::upper_bound(without.begin(), without.end(), nd.vertex), nd.vertex);
        if (without != with) fail("bags differ by more than the named vertex");
        break;
      }
      case Kind::Join:
        if (nd.children.size() != 2) fail("join needs two children");
        for (int c : nd.children)
          if (td.nodes[c].bag != nd.bag) fail("join children must share the bag");
        break;
    }
  }

  std::vector<char> touched(g.n(), 0);
  for (VertexId v : touched_vertices(g, F)) touched[v] = 1;
  std::vector<int> tops(g.n(), 0), present(g.n(), 0);
  for (int x = 0; x < N; ++x)
    for (VertexId v : td.nodes[x].bag) {
      if (v < 0 || v >= g.n() || !touched[v]) fail("bag holds a vertex outside the subgraph");
      ++present[v];
      const auto& pb = parent[x] >= 0 ? td.nodes[parent[x]].bag : std::vector<VertexId>{};
      if (!std::binary_search(pb.begin(), pb.end(), v)) ++tops[v];
    }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (touched[v] && !present[v]) fail("vertex " + std::to_string(v) + " not covered");
    if (present[v] && tops[v] != 1) fail("bags holding vertex " + std::to_string(v) + " are not connected");
  }
  for (EdgeId e : F) {
    const auto [a, b] = g.edge(e);
    bool ok = false;
    for (const auto& nd : td.nodes)
      if (std::binary_search(nd.bag.begin(), nd.bag.end(), a) && std::binary_search(nd.bag.begin(), nd.bag.end(), b)) {
        ok = true;
        break;
      }
    if (!ok) fail("edge {" + std::to_string(a) + "," + std::to_string(b) + "} not covered");
  }
}

EvalResult eval_c_treewidth(const Instance& inst, const EdgeSubset& F, const TreeDecomposition& td, const Caps& caps) {
  validate_nice_decomposition(td, inst.graph(), F);
  const auto adj = f_adjacency(inst.graph(), F);
  const int N = static_cast<int>(td.nodes.size());

  auto radix = [&](VertexId v) { return static_cast<long long>(inst.uset(v).size()); };
  auto table_size = [&](const std::vector<VertexId>& bag) {
    long long s = 1;
    for (VertexId v : bag) {
      s *= radix(v);
      if (s > caps.evalc_table) throw CapExceeded("treewidth DP table too large");
    }
    return s;
  };
  auto decode = [&](const std::vector<VertexId>& bag, long long idx, std::vector<int>& digit) {
    digit.resize(bag.size());
    for (size_t k = 0; k < bag.size(); ++k) {
      digit[k] = static_cast<int>(idx % radix(bag[k]));
      idx /= radix(bag[k]);
    }
  };
  // index in `bag` of an assignment given on a superset bag through (vertex -> digit)
  auto encode = [&](const std::vector<VertexId>& bag, const std::vector<int>& loc) {
    long long idx = 0, stride = 1;
    for (VertexId v : bag) {
      idx += loc[v] * stride;
      stride *= radix(v);
    }
    return idx;
  };
  auto inner_edges = [&](const std::vector<VertexId>& bag, const std::vector<int>& loc) {
    double s = 0;
    for (VertexId a : bag)
      for (VertexId b : adj[a])
        if (a < b && std::binary_search(bag.begin(), bag.end(), b)) s += inst.d(a, loc[a], b, loc[b]);
    return s;
  };

  std::vector<std::vector<double>> table(N);
  std::vector<std::vector<int>> argbest(N);
  std::vector<int> loc(inst.n(), 0), digit;

  std::vector<int> order;
  std::vector<int> stack{td.root};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int c : td.nodes[x].children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    const auto& nd = td.nodes[x];
    const long long size = table_size(nd.bag);
    auto& T = table[x];
    T.assign(size, 0.0);
    if (nd.kind == Kind::Forget) argbest[x].assign(size, 0);
    for (long long idx = 0; idx < size; ++idx) {
      decode(nd.bag, idx, digit);
      for (size_t k = 0; k < nd.bag.size(); ++k) loc[nd.bag[k]] = digit[k];
      switch (nd.kind) {
        case Kind::Leaf:
          break;
        case Kind::Introduce: {
          const int c = nd.children[0];
          double add = 0;
          for (VertexId b : adj[nd.vertex])
            if (std::binary_search(nd.bag.begin(), nd.bag.end(), b)) add += inst.d(nd.vertex, loc[nd.vertex], b, loc[b]);
          T[idx] = table[c][encode(td.nodes[c].bag, loc)] + add;
          break;
        }
        case Kind::Forget: {
          const int c = nd.children[0];
          double best = -1;
          for (int l = 0; l < radix(nd.vertex); ++l) {
            loc[nd.vertex] = l;
            const double val = table[c][encode(td.nodes[c].bag, loc)];
            if (val > best) {
              best = val;
              argbest[x][idx] = l;
            }
          }
          T[idx] = best;
          break;
        }
        case Kind::Join:
          T[idx] = table[nd.children[0]][idx] + table[nd.children[1]][idx] - inner_edges(nd.bag, loc);
          break;
      }
    }
  }

  Scenario w = zero_scenario(inst);
  std::fill(loc.begin(), loc.end(), 0);
  for (int x : order) {
    const auto& nd = td.nodes[x];
    if (nd.kind == Kind::Forget) loc[nd.vertex] = argbest[x][encode(nd.bag, loc)];
  }
  for (VertexId v : touched_vertices(inst.graph(), F)) w.choice[v] = loc[v];
  return finish(inst, F, std::move(w));
}

EvalResult eval_c(const Instance& inst, const EdgeSubset& F, const Caps& caps, EvalMethod* used) {
  auto mark = [&](EvalMethod m) {
    if (used) *used = m;
  };
  if (F.empty()) {
    mark(EvalMethod::Empty);
    return {0.0, zero_scenario(inst)};
  }
  if (is_forest(inst.graph(), F)) {
    mark(EvalMethod::Tree);
    return eval_c_tree(inst, F);
  }
  const auto td = build_nice_decomposition(inst.graph(), F);
  if (td.width() <= caps.evalc_treewidth) {
    try {
      auto r = eval_c_treewidth(inst, F, td, caps);
      mark(EvalMethod::Treewidth);
      return r;
    } catch (const CapExceeded&) {
    }
  }
  mark(EvalMethod::BruteForce);
  return eval_c_bruteforce(inst, F, caps);
}

}  // namespace locunc
