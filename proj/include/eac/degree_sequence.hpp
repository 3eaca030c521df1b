#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eac {

using Vertex = std::uint32_t;

enum class DegreeClass { valid_simple, valid_multigraph_only, invalid };

std::string to_string(DegreeClass value);

/// Erdős–Gallai: some simple graph realises `degrees`. Expects an even sum.
bool erdos_gallai(std::span<const int> degrees);

/// invalid: odd sum or a degree below 1; valid_multigraph_only: even sum but
/// not graphical; valid_simple otherwise.
DegreeClass validate_degree_sequence(std::span<const int> degrees);

/// Target degrees d_0..d_{n-1}, kept in input order (vertex i has degree d_i).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws InvalidInput when the sequence is `invalid`.
  explicit DegreeSequence(std::vector<int> degrees);

  std::span<const int> degrees() const noexcept { return degrees_; }
  int operator[](std::size_t vertex) const { return degrees_[vertex]; }
  std::size_t n() const noexcept { return degrees_.size(); }
  std::size_t m() const noexcept { return edges_; }
  int max_degree() const noexcept { return max_degree_; }
  DegreeClass classification() const noexcept { return class_; }
  bool graphical() const noexcept { return class_ == DegreeClass::valid_simple; }
  std::vector<int> sorted() const;

  /// d-regular sequence on n vertices.
  static DegreeSequence regular(std::size_t n, int d);

 private:
  std::vector<int> degrees_;
  std::size_t edges_ = 0;
  int max_degree_ = 0;
  DegreeClass class_ = DegreeClass::valid_simple;
};

}  // namespace eac
