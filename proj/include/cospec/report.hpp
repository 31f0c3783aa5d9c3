#pragma once

// Verification reports: run the claimed checks on a family instance or an
// arbitrary graph and compare computed values to the stated ones.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cospec/connectivity.hpp"
#include "cospec/families.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/spectra.hpp"
#include "cospec/switching.hpp"

namespace cospec {

enum class Check { cospectral, kappa, kappa_prime, whitney, fiedler, linegraph };

inline const std::vector<std::pair<std::string, Check>>& check_names() {
  static const std::vector<std::pair<std::string, Check>> names = {
      {"cospectral", Check::cospectral}, {"kappa", Check::kappa},
      {"kappa_prime", Check::kappa_prime}, {"whitney", Check::whitney},
      {"fiedler", Check::fiedler},         {"linegraph", Check::linegraph}};
  return names;
}

/// "all" or a comma-separated list of check names.
inline std::set<Check> parse_checks(const std::string& text) {
  std::set<Check> out;
  if (text == "all") {
    for (const auto& [name, c] : check_names()) out.insert(c);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (const auto& [name, c] : check_names())
      if (name == item) {
        out.insert(c);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown check '" + item + "'");
  }
  if (out.empty()) throw std::invalid_argument("no checks selected");
  return out;
}

/// Family names accepted on the command line.
inline FamilyInstance make_instance(const std::string& family, int k) {
  if (family == "vertex") return vertex_pair(k);
  if (family == "edge") return edge_pair(k);
  if (family == "edge-variant4") return edge_pair_variant4();
  if (family == "line-of-edge") return line_graph_family(edge_pair(k));
  if (family == "line-of-edge-variant4") return line_graph_family(edge_pair_variant4());
  throw std::invalid_argument("unknown family '" + family + "'");
}

/// Whether `k` is in the family's parameter range.
inline bool family_accepts(const std::string& family, int k) {
  if (family == "vertex") return k >= 2;
  if (family == "edge" || family == "line-of-edge") return k >= 6 && k % 2 == 0;
  if (family == "edge-variant4" || family == "line-of-edge-variant4") return k == 4;
  throw std::invalid_argument("unknown family '" + family + "'");
}

enum class Verdict { pass, fail, info };

inline std::string verdict_name(Verdict v) {
  return v == Verdict::pass ? "PASS" : v == Verdict::fail ? "FAIL" : "INFO";
}

struct CheckRow {
  std::string check;
  std::string subject;   // "gamma", "gamma_prime", or "pair"
  std::string expected;  // "UNSTATED" when nothing is claimed
  std::string computed;
  Verdict verdict = Verdict::info;
  double seconds = 0;
};

struct VerificationReport {
  std::string family;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRow> rows;
  nlohmann::json computed = nlohmann::json::object();

  bool passed() const {
    for (const auto& r : rows)
      if (r.verdict == Verdict::fail) return false;
    return true;
  }
};

namespace detail {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

inline nlohmann::json witness_json(const std::optional<std::vector<Vertex>>& w) {
  return w ? nlohmann::json(*w) : nlohmann::json(nullptr);
}

inline nlohmann::json witness_json(const std::optional<std::vector<Edge>>& w) {
  if (!w) return nullptr;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : *w) out.push_back({e.u, e.v});
  return out;
}

/// Lazily computed invariants of one graph.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const VertexConnectivity& kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  const EdgeConnectivity& kappa_prime() {
    if (!kappa_prime_) kappa_prime_ = edge_connectivity(g_);
    return *kappa_prime_;
  }
  const IntPolynomial& adjacency_poly() {
    if (!adj_) adj_ = char_poly_adjacency(g_);
    return *adj_;
  }
  const IntPolynomial& laplacian_poly() {
    if (!lap_) lap_ = char_poly_laplacian(g_);
    return *lap_;
  }

 private:
  const Graph& g_;
  std::optional<VertexConnectivity> kappa_;
  std::optional<EdgeConnectivity> kappa_prime_;
  std::optional<IntPolynomial> adj_;
  std::optional<IntPolynomial> lap_;
};

inline CheckRow compare_row(std::string check, std::string subject, const std::optional<int>& expected,
                            int computed, double seconds) {
  CheckRow r{std::move(check), std::move(subject), expected ? std::to_string(*expected) : "UNSTATED",
             std::to_string(computed), Verdict::info, seconds};
  if (expected) r.verdict = *expected == computed ? Verdict::pass : Verdict::fail;
  return r;
}

inline CheckRow bool_row(std::string check, std::string subject, bool ok, double seconds,
                         std::string computed = "") {
  return {std::move(check), std::move(subject), "true",
          computed.empty() ? (ok ? "true" : "false") : std::move(computed),
          ok ? Verdict::pass : Verdict::fail, seconds};
}

}  // namespace detail

/// Runs the selected checks. Order and degree are always checked, and so
/// is the switching plan when the instance has one. `seed` drives the
/// randomized Menger spot checks that accompany kappa.
inline VerificationReport verify_instance(const FamilyInstance& fi, const std::set<Check>& checks,
                                          std::uint64_t seed) {
  using detail::bool_row;
  using detail::compare_row;
  VerificationReport rep{family_tag(fi), fi.k, seed, {}, nlohmann::json::object()};
  detail::Stopwatch sw;
  const std::pair<const char*, const Graph*> graphs[] = {{"gamma", &fi.gamma},
                                                         {"gamma_prime", &fi.gamma_prime}};
  detail::GraphFacts facts[] = {detail::GraphFacts(fi.gamma), detail::GraphFacts(fi.gamma_prime)};
  const std::optional<int> expected_kappa[] = {fi.expected.kappa_gamma, fi.expected.kappa_gamma_prime};
  const std::optional<int> expected_kappa_prime[] = {fi.expected.kappa_prime_gamma,
                                                     fi.expected.kappa_prime_gamma_prime};

  for (int i = 0; i < 2; ++i) {
    const auto& [name, g] = graphs[i];
    sw.lap();
    rep.rows.push_back(compare_row("order", name, fi.expected.order, g->order(), sw.lap()));
    auto d = g->regular_degree();
    CheckRow deg{"degree", name, std::to_string(fi.expected.degree),
                 d ? std::to_string(*d)
                   : "irregular " + std::to_string(g->min_degree()) + ".." +
                         std::to_string(g->max_degree()),
                 d == fi.expected.degree ? Verdict::pass : Verdict::fail, sw.lap()};
    rep.rows.push_back(deg);
    rep.computed[name]["order"] = g->order();
    rep.computed[name]["min_degree"] = g->min_degree();
    rep.computed[name]["max_degree"] = g->max_degree();
    rep.computed[name]["graph6"] = encode_graph6(*g);
  }

  if (fi.plan) {
    sw.lap();
    auto vr = validate_plan(fi.gamma, *fi.plan);
    rep.rows.push_back(bool_row("plan_valid", "gamma", vr.valid, sw.lap()));
    bool same = vr.valid && switch_graph(fi.gamma, *fi.plan) == fi.gamma_prime;
    rep.rows.push_back(bool_row("switch_reproduces", "pair", same, sw.lap()));
  }

  if (checks.count(Check::cospectral)) {
    for (int i = 0; i < 2; ++i) {
      sw.lap();
      rep.computed[graphs[i].first]["adjacency_digest"] = facts[i].adjacency_poly().digest();
      rep.computed[graphs[i].first]["laplacian_digest"] = facts[i].laplacian_poly().digest();
      rep.rows.push_back({"charpoly_digest", graphs[i].first, "-",
                          facts[i].adjacency_poly().digest(), Verdict::info, sw.lap()});
    }
    bool adj = facts[0].adjacency_poly() == facts[1].adjacency_poly();
    rep.rows.push_back(bool_row("cospectral_adjacency", "pair", adj, sw.lap()));
    bool lap = facts[0].laplacian_poly() == facts[1].laplacian_poly();
    rep.rows.push_back(bool_row("cospectral_laplacian", "pair", lap, sw.lap()));
  }

  if (checks.count(Check::kappa)) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 2; ++i) {
      const auto& [name, g] = graphs[i];
      sw.lap();
      const auto& kr = facts[i].kappa();
      rep.rows.push_back(compare_row("kappa", name, expected_kappa[i], kr.value, sw.lap()));
      rep.computed[name]["kappa"] = kr.value;
      rep.computed[name]["kappa_witness"] = detail::witness_json(kr.witness);
      if (kr.witness) {
        bool ok = static_cast<int>(kr.witness->size()) == kr.value &&
                  verify_disconnecting_set(*g, std::span<const Vertex>(*kr.witness));
        rep.rows.push_back(bool_row("kappa_witness", name, ok, sw.lap(), detail::join(*kr.witness)));
      }
      // Menger spot checks on random nonadjacent pairs.
      int checked = 0, good = 0;
      std::uniform_int_distribution<int> pick(0, std::max(0, g->order() - 1));
      for (int attempt = 0; attempt < 200 && checked < 5 && g->order() >= 2; ++attempt) {
        Vertex s = pick(rng), t = pick(rng);
        if (s == t || g->adjacent(s, t)) continue;
        auto ps = max_vertex_disjoint_paths(*g, s, t);
        ++checked;
        if (verify_path_system(*g, ps) && ps.size() >= kr.value &&
            ps.size() == local_vertex_connectivity(*g, s, t).value)
          ++good;
      }
      if (checked > 0)
        rep.rows.push_back(bool_row("menger_paths", name, good == checked, sw.lap(),
                                    std::to_string(good) + "/" + std::to_string(checked) + " pairs"));
    }
  }

  if (checks.count(Check::kappa_prime)) {
    for (int i = 0; i < 2; ++i) {
      const auto& [name, g] = graphs[i];
      sw.lap();
      const auto& kr = facts[i].kappa_prime();
      rep.rows.push_back(compare_row("kappa_prime", name, expected_kappa_prime[i], kr.value, sw.lap()));
      rep.computed[name]["kappa_prime"] = kr.value;
      rep.computed[name]["kappa_prime_witness"] = detail::witness_json(kr.witness);
      if (kr.witness) {
        bool ok = static_cast<int>(kr.witness->size()) == kr.value &&
                  verify_disconnecting_set(*g, std::span<const Edge>(*kr.witness));
        rep.rows.push_back(bool_row("kappa_prime_witness", name, ok, sw.lap(),
                                    std::to_string(kr.witness->size()) + " edges"));
      }
    }
  }

  if (checks.count(Check::whitney)) {
    for (int i = 0; i < 2; ++i) {
      const auto& [name, g] = graphs[i];
      sw.lap();
      int a = facts[i].kappa().value, b = facts[i].kappa_prime().value, c = g->min_degree();
      rep.rows.push_back(bool_row("whitney", name, a <= b && b <= c, sw.lap(),
                                  std::to_string(a) + "<=" + std::to_string(b) + "<=" +
                                      std::to_string(c)));
    }
  }

  if (checks.count(Check::fiedler)) {
    const auto tol = default_fiedler_tolerance();
    for (int i = 0; i < 2; ++i) {
      const auto& [name, g] = graphs[i];
      sw.lap();
      if (g->order() < 2) continue;
      auto iv = second_smallest_laplacian_eigenvalue(*g, tol);
      int kappa = facts[i].kappa().value;
      bool ok = iv.hi <= BigRational(kappa) + tol;
      std::ostringstream os;
      os << std::setprecision(8) << "mu2 in [" << static_cast<double>(iv.lo) << ","
         << static_cast<double>(iv.hi) << "] <= " << kappa;
      rep.rows.push_back(bool_row("fiedler", name, ok, sw.lap(), os.str()));
      rep.computed[name]["mu2_interval"] = {iv.lo.str(), iv.hi.str()};
    }
  }

  if (checks.count(Check::linegraph)) {
    if (fi.kind == FamilyKind::line_of) {
      rep.rows.push_back({"linegraph", "pair", "-", "not applied to line-graph families",
                          Verdict::info, 0});
    } else {
      sw.lap();
      auto lg = line_graph(fi.gamma);
      auto lgp = line_graph(fi.gamma_prime);
      rep.rows.push_back(bool_row("line_cospectral", "pair",
                                  char_poly_adjacency(lg) == char_poly_adjacency(lgp), sw.lap()));
      // The identity kappa(L(G)) = kappa'(G) is claimed for the edge families
      // only; elsewhere a mismatch is recorded as a counterexample.
      const bool stated = fi.kind == FamilyKind::edge || fi.kind == FamilyKind::edge_variant4;
      const Graph* lines[] = {&lg, &lgp};
      for (int i = 0; i < 2; ++i) {
        sw.lap();
        int kl = vertex_connectivity(*lines[i]).value;
        int kp = facts[i].kappa_prime().value;
        auto row = compare_row("line_kappa_eq_kappa_prime", graphs[i].first, kp, kl, sw.lap());
        if (!stated) {
          row.expected = "UNSTATED";
          row.verdict = Verdict::info;
          if (kl != kp) row.computed += " (counterexample: kappa' = " + std::to_string(kp) + ")";
        }
        rep.rows.push_back(row);
        rep.computed[graphs[i].first]["line_graph_kappa"] = kl;
      }
    }
  }
  return rep;
}

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"check", r.check},
                    {"graph", r.subject},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"verdict", verdict_name(r.verdict)},
                    {"seconds", r.seconds}});
  return {{"family", rep.family}, {"k", rep.k},          {"seed", rep.seed},
          {"verdict", rep.passed() ? "PASS" : "FAIL"}, {"rows", rows}, {"computed", rep.computed}};
}

/// Aligned text table; failing rows are marked with "<<".
inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows,
                                const std::vector<bool>& highlight = {}) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells, bool mark) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : "";
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cell;
    }
    if (mark) os << "  <<";
    os << "\n";
  };
  line(header, false);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule, false);
  for (std::size_t i = 0; i < rows.size(); ++i) line(rows[i], i < highlight.size() && highlight[i]);
  return os.str();
}

inline std::string to_table(const VerificationReport& rep) {
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> marks;
  for (const auto& r : rep.rows) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds;
    rows.push_back({r.check, r.subject, r.expected, r.computed, verdict_name(r.verdict), t.str()});
    marks.push_back(r.verdict == Verdict::fail);
  }
  std::ostringstream os;
  os << rep.family << " k=" << rep.k << " seed=" << rep.seed << "\n";
  os << render_table({"CHECK", "GRAPH", "EXPECTED", "COMPUTED", "VERDICT", "SECONDS"}, rows, marks);
  os << "overall: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Family tables

struct FamilyTableRow {
  int k = 0;
  int order = 0;
  int degree = -1;  // -1 when irregular
  std::pair<int, int> kappa;
  std::pair<int, int> kappa_prime;
  bool cospectral = false;
  double seconds = 0;
};

inline FamilyTableRow family_table_row(const FamilyInstance& fi) {
  detail::Stopwatch sw;
  FamilyTableRow row;
  row.k = fi.k;
  row.order = fi.gamma.order();
  row.degree = fi.gamma.regular_degree().value_or(-1);
  row.kappa = {vertex_connectivity(fi.gamma).value, vertex_connectivity(fi.gamma_prime).value};
  row.kappa_prime = {edge_connectivity(fi.gamma).value, edge_connectivity(fi.gamma_prime).value};
  row.cospectral = cospectral(fi.gamma, fi.gamma_prime, MatrixKind::adjacency);
  row.seconds = sw.lap();
  return row;
}

inline std::string render_family_table(const std::string& family,
                                       const std::vector<FamilyTableRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds;
    cells.push_back({std::to_string(r.k), std::to_string(r.order),
                     r.degree < 0 ? "irregular" : std::to_string(r.degree),
                     std::to_string(r.kappa.first) + "/" + std::to_string(r.kappa.second),
                     std::to_string(r.kappa_prime.first) + "/" + std::to_string(r.kappa_prime.second),
                     r.cospectral ? "yes" : "no", t.str()});
  }
  return family + "\n" +
         render_table({"k", "order", "degree", "kappa", "kappa'", "cospectral", "seconds"}, cells);
}

// ---------------------------------------------------------------------------
// Arbitrary graphs

struct GraphAnalysis {
  int order = 0;
  std::optional<int> regular_degree;
  int min_degree = 0;
  int max_degree = 0;
  int components = 0;
  std::string adjacency_digest;
  VertexConnectivity kappa;
  EdgeConnectivity kappa_prime;
  bool bipartite_by_spectrum = false;
  bool bipartite_by_coloring = false;

  bool consistent() const { return bipartite_by_spectrum == bipartite_by_coloring; }
};

inline GraphAnalysis analyze_graph(const Graph& g) {
  GraphAnalysis a;
  a.order = g.order();
  a.regular_degree = g.regular_degree();
  a.min_degree = g.min_degree();
  a.max_degree = g.max_degree();
  a.components = components(g).count;
  auto p = char_poly_adjacency(g);
  a.adjacency_digest = p.digest();
  a.kappa = vertex_connectivity(g);
  a.kappa_prime = edge_connectivity(g);
  a.bipartite_by_spectrum = spectrum_symmetric(p);
  a.bipartite_by_coloring = two_coloring(g).has_value();
  return a;
}

inline nlohmann::json to_json(const GraphAnalysis& a) {
  return {{"order", a.order},
          {"regular_degree", a.regular_degree ? nlohmann::json(*a.regular_degree) : nlohmann::json(nullptr)},
          {"min_degree", a.min_degree},
          {"max_degree", a.max_degree},
          {"components", a.components},
          {"adjacency_digest", a.adjacency_digest},
          {"kappa", a.kappa.value},
          {"kappa_witness", detail::witness_json(a.kappa.witness)},
          {"kappa_prime", a.kappa_prime.value},
          {"kappa_prime_witness", detail::witness_json(a.kappa_prime.witness)},
          {"bipartite_by_spectrum", a.bipartite_by_spectrum},
          {"bipartite_by_coloring", a.bipartite_by_coloring}};
}

}  // namespace cospec
