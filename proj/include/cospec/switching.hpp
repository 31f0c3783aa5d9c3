#pragma once

// Godsil-McKay switching.
//
// A plan partitions the vertices into classes X_1..X_m and a remainder Y.
// It is valid when
//   (i)  for all i, j every vertex of X_i has the same number of neighbors
//        in X_j, and
//   (ii) every y in Y is adjacent to none, exactly half, or all of each X_i.
// Switching complements the adjacency between y and X_i wherever y sees
// exactly half of X_i. The result has the same adjacency spectrum.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cospec/graph.hpp"

namespace cospec {

struct SwitchingPlan {
  int n = 0;
  std::vector<std::vector<Vertex>> classes;  // X_1..X_m

  /// Y: every vertex not in a class, ascending.
  std::vector<Vertex> rest() const {
    std::vector<bool> in_class(n, false);
    for (const auto& c : classes)
      for (Vertex v : c)
        if (v >= 0 && v < n) in_class[v] = true;
    std::vector<Vertex> y;
    for (Vertex v = 0; v < n; ++v)
      if (!in_class[v]) y.push_back(v);
    return y;
  }

  bool operator==(const SwitchingPlan&) const = default;
};

inline void to_json(nlohmann::json& j, const SwitchingPlan& p) {
  j = nlohmann::json{{"classes", p.classes}, {"n", p.n}};
}

inline void from_json(const nlohmann::json& j, SwitchingPlan& p) {
  j.at("classes").get_to(p.classes);
  j.at("n").get_to(p.n);
}

enum class Condition { class_regularity, rest_adjacency };

struct Violation {
  Condition condition;
  int class_index;   // i (0-based)
  int other_index;   // j for condition (i), -1 for condition (ii)
  Vertex vertex;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

inline nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations)
    v.push_back({{"condition", x.condition == Condition::class_regularity ? "i" : "ii"},
                 {"class", x.class_index},
                 {"other_class", x.other_index},
                 {"vertex", x.vertex},
                 {"detail", x.detail}});
  return {{"valid", r.valid}, {"violations", v}};
}

/// Thrown by switch_graph for plans that fail validation.
class InvalidPlan : public std::runtime_error {
 public:
  explicit InvalidPlan(ValidationReport report)
      : std::runtime_error("switching plan violates the Godsil-McKay conditions (" +
                           std::to_string(report.violations.size()) + " violations)"),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

namespace detail {

inline int neighbors_in(const Graph& g, Vertex v, const std::vector<Vertex>& cls) {
  int c = 0;
  for (Vertex w : cls) c += g.adjacent(v, w);
  return c;
}

/// Throws std::invalid_argument unless the plan's classes are disjoint,
/// nonempty, in range, and sized for g.
inline void check_partition(const Graph& g, const SwitchingPlan& plan) {
  if (plan.n != g.order())
    throw std::invalid_argument("plan is for order " + std::to_string(plan.n) +
                                ", graph has order " + std::to_string(g.order()));
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < plan.classes.size(); ++i) {
    if (plan.classes[i].empty())
      throw std::invalid_argument("class " + std::to_string(i) + " is empty");
    for (Vertex v : plan.classes[i]) {
      if (v < 0 || v >= g.order())
        throw std::invalid_argument("plan vertex " + std::to_string(v) + " out of range");
      if (seen[v])
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two classes");
      seen[v] = true;
    }
  }
}

}  // namespace detail

inline ValidationReport validate_plan(const Graph& g, const SwitchingPlan& plan) {
  detail::check_partition(g, plan);
  ValidationReport report;
  const int m = static_cast<int>(plan.classes.size());

  for (int i = 0; i < m; ++i) {
    const auto& xi = plan.classes[i];
    for (int j = 0; j < m; ++j) {
      const auto& xj = plan.classes[j];
      const int reference = detail::neighbors_in(g, xi.front(), xj);
      for (std::size_t a = 1; a < xi.size(); ++a) {
        const int c = detail::neighbors_in(g, xi[a], xj);
        if (c != reference)
          report.violations.push_back(
              {Condition::class_regularity, i, j, xi[a],
               "vertex " + std::to_string(xi[a]) + " has " + std::to_string(c) +
                   " neighbors in class " + std::to_string(j) + ", vertex " +
                   std::to_string(xi.front()) + " has " + std::to_string(reference)});
      }
    }
  }

  for (Vertex y : plan.rest()) {
    for (int i = 0; i < m; ++i) {
      const auto& xi = plan.classes[i];
      const int size = static_cast<int>(xi.size());
      const int c = detail::neighbors_in(g, y, xi);
      const bool half = size % 2 == 0 && 2 * c == size;
      if (c != 0 && c != size && !half)
        report.violations.push_back({Condition::rest_adjacency, i, -1, y,
                                     "vertex " + std::to_string(y) + " has " + std::to_string(c) +
                                         " of " + std::to_string(size) + " neighbors in class " +
                                         std::to_string(i)});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

/// Applies the switching. Throws InvalidPlan if the plan fails validation.
inline Graph switch_graph(const Graph& g, const SwitchingPlan& plan) {
  auto report = validate_plan(g, plan);
  if (!report.valid) throw InvalidPlan(std::move(report));
  GraphBuilder b(g);
  for (Vertex y : plan.rest()) {
    for (const auto& xi : plan.classes) {
      if (2 * detail::neighbors_in(g, y, xi) != static_cast<int>(xi.size())) continue;
      for (Vertex x : xi) b.set_edge(y, x, !g.adjacent(y, x));
    }
  }
  return std::move(b).build();
}

}  // namespace cospec
