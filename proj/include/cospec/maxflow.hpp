#pragma once

// Integer max-flow by shortest augmenting paths (Edmonds-Karp). Used only on
// unit-capacity or near-unit-capacity networks derived from a graph.

#include <limits>
#include <queue>
#include <vector>

namespace cospec::detail {

class FlowNetwork {
 public:
  struct Arc {
    int to;
    int rev;  // index of the paired reverse arc in arcs_[to]
    int cap;
    int flow;
  };

  explicit FlowNetwork(int nodes) : arcs_(nodes) {}

  int nodes() const noexcept { return static_cast<int>(arcs_.size()); }

  /// Directed arc u -> v with capacity `cap`; the reverse arc has capacity
  /// `back_cap` (pass cap again for an undirected edge).
  void add_arc(int u, int v, int cap, int back_cap = 0) {
    arcs_[u].push_back({v, static_cast<int>(arcs_[v].size()), cap, 0});
    arcs_[v].push_back({u, static_cast<int>(arcs_[u].size()) - 1, back_cap, 0});
  }

  /// Augments from s to t until no augmenting path remains or the flow value
  /// reaches `limit`. Returns the flow value.
  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
    int value = 0;
    std::vector<int> parent_node(nodes());
    std::vector<int> parent_arc(nodes());
    while (value < limit) {
      std::fill(parent_node.begin(), parent_node.end(), -1);
      parent_node[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent_node[t] == -1) {
        int u = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
          const auto& a = arcs_[u][i];
          if (a.cap - a.flow > 0 && parent_node[a.to] == -1) {
            parent_node[a.to] = u;
            parent_arc[a.to] = i;
            q.push(a.to);
          }
        }
      }
      if (parent_node[t] == -1) break;
      int push = limit - value;
      for (int v = t; v != s; v = parent_node[v]) {
        const auto& a = arcs_[parent_node[v]][parent_arc[v]];
        push = std::min(push, a.cap - a.flow);
      }
      for (int v = t; v != s; v = parent_node[v]) {
        auto& a = arcs_[parent_node[v]][parent_arc[v]];
        a.flow += push;
        arcs_[v][a.rev].flow -= push;
      }
      value += push;
    }
    return value;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(nodes(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& a : arcs_[u])
        if (a.cap - a.flow > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

  std::vector<Arc>& out(int u) { return arcs_[u]; }
  const std::vector<Arc>& out(int u) const { return arcs_[u]; }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace cospec::detail
