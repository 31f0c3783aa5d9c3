#pragma once

// Partitioned 0/1 matrices and their assembly into graphs.
//
// The constructions are written as block matrices built from J (all ones),
// O (zeros), I (identity) and C (cycle adjacency). BinaryMatrix gives the
// small algebra needed to write those blocks down directly; BlockSpec lays
// them out on a grid of vertex classes and from_blocks turns the grid into
// a Graph after checking symmetry and the zero diagonal.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  static BinaryMatrix zeros(int rows, int cols) { return {rows, cols}; }

  static BinaryMatrix ones(int rows, int cols) {
    BinaryMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), 1);
    return m;
  }

  static BinaryMatrix identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Adjacency matrix of the n-cycle 0-1-...-(n-1)-0.
  static BinaryMatrix cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle block needs size >= 3");
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m.set(i, (i + 1) % n, true);
      m.set((i + 1) % n, i, true);
    }
    return m;
  }

  static BinaryMatrix adjacency(const Graph& g) {
    BinaryMatrix m(g.order(), g.order());
    for (const auto& e : g.edges()) {
      m.set(e.u, e.v, true);
      m.set(e.v, e.u, true);
    }
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool at(int r, int c) const { return data_[index(r, c)] != 0; }
  void set(int r, int c, bool value) { data_[index(r, c)] = value ? 1 : 0; }

  /// J - M.
  BinaryMatrix complement() const {
    BinaryMatrix m = *this;
    for (auto& x : m.data_) x ^= 1;
    return m;
  }

  BinaryMatrix transpose() const {
    BinaryMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    return m;
  }

  /// Entrywise difference; requires other <= *this entrywise (e.g. J - I).
  BinaryMatrix minus(const BinaryMatrix& other) const {
    same_shape(other);
    BinaryMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (other.data_[i] && !data_[i])
        throw std::invalid_argument("0/1 difference would produce a negative entry");
      m.data_[i] = data_[i] & ~other.data_[i] & 1;
    }
    return m;
  }

  /// Rows [r0, r1) and columns [c0, c1).
  BinaryMatrix slice(int r0, int r1, int c0, int c1) const {
    BinaryMatrix m(r1 - r0, c1 - c0);
    for (int r = r0; r < r1; ++r)
      for (int c = c0; c < c1; ++c) m.set(r - r0, c - c0, at(r, c));
    return m;
  }

  int row_sum(int r) const {
    int s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c);
    return s;
  }

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  void same_shape(const BinaryMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Horizontal concatenation; all parts must have the same row count.
inline BinaryMatrix hstack(std::initializer_list<BinaryMatrix> parts) {
  int rows = parts.size() ? parts.begin()->rows() : 0;
  int cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row counts differ");
    cols += p.cols();
  }
  BinaryMatrix m(rows, cols);
  int c0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < p.cols(); ++c) m.set(r, c0 + c, p.at(r, c));
    c0 += p.cols();
  }
  return m;
}

/// Vertical concatenation; all parts must have the same column count.
inline BinaryMatrix vstack(std::initializer_list<BinaryMatrix> parts) {
  int cols = parts.size() ? parts.begin()->cols() : 0;
  int rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column counts differ");
    rows += p.rows();
  }
  BinaryMatrix m(rows, cols);
  int r0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < cols; ++c) m.set(r0 + r, c, p.at(r, c));
    r0 += p.rows();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Block layouts

enum class CellKind {
  zero,
  all_ones,
  identity,
  all_ones_minus_identity,
  cycle,
  all_ones_minus_cycle,
  explicit_pattern,
};

struct Cell {
  CellKind kind = CellKind::zero;
  BinaryMatrix pattern;  // only for explicit_pattern

  static Cell zero() { return {CellKind::zero, {}}; }
  static Cell ones() { return {CellKind::all_ones, {}}; }
  static Cell identity() { return {CellKind::identity, {}}; }
  static Cell clique() { return {CellKind::all_ones_minus_identity, {}}; }
  static Cell cycle() { return {CellKind::cycle, {}}; }
  static Cell cycle_complement() { return {CellKind::all_ones_minus_cycle, {}}; }
  static Cell of(BinaryMatrix m) { return {CellKind::explicit_pattern, std::move(m)}; }
};

struct BlockSpec {
  std::vector<int> row_classes;
  std::vector<int> col_classes;
  std::vector<std::vector<Cell>> cells;  // cells[row class][col class]
};

struct BlockGraph {
  Graph graph;
  std::vector<int> class_offsets;  // start index of each class, plus the total order
};

namespace detail {

inline BinaryMatrix realize_cell(const Cell& cell, int rows, int cols, int ri, int ci) {
  auto where = [&] { return " in cell (" + std::to_string(ri) + "," + std::to_string(ci) + ")"; };
  auto need_square = [&] {
    if (rows != cols) throw std::invalid_argument("square cell required" + where());
  };
  switch (cell.kind) {
    case CellKind::zero:
      return BinaryMatrix::zeros(rows, cols);
    case CellKind::all_ones:
      return BinaryMatrix::ones(rows, cols);
    case CellKind::identity:
      need_square();
      return BinaryMatrix::identity(rows);
    case CellKind::all_ones_minus_identity:
      need_square();
      return BinaryMatrix::identity(rows).complement();
    case CellKind::cycle:
      need_square();
      if (rows < 3) throw std::invalid_argument("cycle cell needs size >= 3" + where());
      return BinaryMatrix::cycle(rows);
    case CellKind::all_ones_minus_cycle:
      need_square();
      if (rows < 3) throw std::invalid_argument("cycle cell needs size >= 3" + where());
      return BinaryMatrix::cycle(rows).complement();
    case CellKind::explicit_pattern:
      if (cell.pattern.rows() != rows || cell.pattern.cols() != cols)
        throw std::invalid_argument("explicit pattern has shape " +
                                    std::to_string(cell.pattern.rows()) + "x" +
                                    std::to_string(cell.pattern.cols()) + ", expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols) + where());
      return cell.pattern;
  }
  throw std::logic_error("unknown cell kind");
}

}  // namespace detail

/// Assembles the full matrix described by `spec`, failing on the first
/// asymmetric entry or nonzero diagonal entry.
inline BinaryMatrix assemble(const BlockSpec& spec) {
  if (spec.cells.size() != spec.row_classes.size())
    throw std::invalid_argument("block spec: row class count does not match cell rows");
  int rows = 0, cols = 0;
  for (int s : spec.row_classes) rows += s;
  for (int s : spec.col_classes) cols += s;
  BinaryMatrix m(rows, cols);
  int r0 = 0;
  for (std::size_t ri = 0; ri < spec.row_classes.size(); ++ri) {
    if (spec.cells[ri].size() != spec.col_classes.size())
      throw std::invalid_argument("block spec: row " + std::to_string(ri) +
                                  " has the wrong number of cells");
    int c0 = 0;
    for (std::size_t ci = 0; ci < spec.col_classes.size(); ++ci) {
      auto block = detail::realize_cell(spec.cells[ri][ci], spec.row_classes[ri],
                                        spec.col_classes[ci], static_cast<int>(ri),
                                        static_cast<int>(ci));
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) m.set(r0 + r, c0 + c, block.at(r, c));
      c0 += spec.col_classes[ci];
    }
    r0 += spec.row_classes[ri];
  }
  return m;
}

/// Graph with the given adjacency matrix.
inline Graph graph_from_matrix(const BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("adjacency matrix must be square, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
  GraphBuilder b(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    if (m.at(r, r))
      throw std::invalid_argument("nonzero diagonal at (" + std::to_string(r) + "," +
                                  std::to_string(r) + ")");
    for (int c = r + 1; c < m.cols(); ++c) {
      if (m.at(r, c) != m.at(c, r))
        throw std::invalid_argument("asymmetric entry at (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
      if (m.at(r, c)) b.add_edge(r, c);
    }
  }
  return std::move(b).build();
}

inline BlockGraph from_blocks(const BlockSpec& spec) {
  BlockGraph out{graph_from_matrix(assemble(spec)), {}};
  int offset = 0;
  for (int s : spec.row_classes) {
    out.class_offsets.push_back(offset);
    offset += s;
  }
  out.class_offsets.push_back(offset);
  return out;
}

}  // namespace cospec
