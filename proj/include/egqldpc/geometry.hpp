#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "egqldpc/field.hpp"

namespace egqldpc {

// Version tag of the point and line orderings below. Every exported matrix
// uses these orderings for its row and column indices.
inline constexpr int kOrderingVersion = 1;

struct Point {
  std::vector<FieldElement> coords;
  // sum code(coords[i]) * q^(m-1-i); the origin is 0.
  std::uint32_t index = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// A line in canonical form. The direction is stored as the index of the
// normalized direction vector (first nonzero coordinate equal to 1); base is
// the smallest point index on the line; points are ascending.
struct Line {
  std::uint32_t class_id = 0;
  std::uint32_t direction = 0;
  std::uint32_t base = 0;
  std::vector<std::uint32_t> points;

  bool contains(std::uint32_t point) const;
  friend bool operator==(const Line&, const Line&) = default;
};

struct ParallelClass {
  std::uint32_t class_id = 0;
  std::uint32_t direction = 0;
  std::vector<Line> lines;  // ordered by base index
};

struct GeometryStats {
  std::uint64_t n_points = 0;
  std::uint64_t n_lines = 0;
  std::uint64_t n_classes = 0;
  std::uint64_t lines_per_point = 0;
  std::uint64_t points_per_line = 0;
  std::uint64_t parallels_per_line = 0;

  friend bool operator==(const GeometryStats&, const GeometryStats&) = default;
};

// Closed-form counts for EG(m,q).
GeometryStats expected_stats(std::uint32_t m, std::uint32_t q);

// The m-dimensional Euclidean geometry EG(m,q). Lines are ordered by
// (class_id, base); classes by ascending direction index.
class Geometry {
 public:
  Geometry(std::uint32_t m, Field field);

  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  const Field& field() const noexcept { return field_; }
  std::uint32_t num_points() const noexcept { return num_points_; }
  std::uint32_t num_classes() const noexcept { return static_cast<std::uint32_t>(directions_.size()); }

  std::span<const FieldElement> coords(std::uint32_t index) const;
  Point point(std::uint32_t index) const;
  std::uint32_t index_of(std::span<const FieldElement> coords) const;

  // Normalized direction vectors as point indices, ascending. Position in this
  // list is the class id.
  std::span<const std::uint32_t> directions() const noexcept { return directions_; }

  std::vector<Point> points() const;
  std::vector<Line> lines() const;

  // Visits every line in canonical order without materializing the full list.
  void for_each_line(const std::function<void(const Line&)>& visit) const;
  void for_each_line_in_class(std::uint32_t class_id,
                              const std::function<void(const Line&)>& visit) const;

  Line line_through(std::uint32_t a, std::uint32_t b) const;
  std::vector<Line> lines_through(std::uint32_t point) const;
  std::vector<ParallelClass> parallel_classes() const;
  ParallelClass parallel_class(std::uint32_t class_id) const;

  // Canonical form of the line through `point` along any nonzero `direction`
  // (both given as point indices; direction need not be normalized).
  Line canonical_line(std::uint32_t point, std::uint32_t direction) const;

  // Counts measured by enumeration.
  GeometryStats stats() const;

 private:
  std::uint32_t normalize_direction(std::uint32_t direction) const;
  std::uint32_t class_of(std::uint32_t normalized) const;
  // Index of point + c * direction.
  std::uint32_t translate(std::uint32_t point, FieldElement c, std::uint32_t direction) const;

  std::uint32_t m_;
  Field field_;
  std::uint32_t num_points_;
  std::vector<FieldElement> coords_;  // num_points_ * m_
  std::vector<std::uint32_t> weights_;  // q^(m-1-i)
  std::vector<std::uint32_t> directions_;
  // Raw q x q tables for the enumeration hot path.
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

}  // namespace egqldpc
