#include "egqldpc/geometry.hpp"

#include <algorithm>
#include <string>

#include "egqldpc/error.hpp"

namespace egqldpc {
namespace {

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 24;

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool Line::contains(std::uint32_t point) const {
  return std::binary_search(points.begin(), points.end(), point);
}

GeometryStats expected_stats(std::uint32_t m, std::uint32_t q) {
  const std::uint64_t qm = ipow(q, m);
  const std::uint64_t qm1 = ipow(q, m - 1);
  const std::uint64_t directions = (qm - 1) / (q - 1);
  return {qm, qm1 * directions, directions, directions, q, qm1 - 1};
}

Geometry::Geometry(std::uint32_t m, Field field) : m_(m), field_(std::move(field)) {
  if (m < 2) throw Error(ErrorCode::InvalidGeometry, "dimension m must be >= 2");
  const std::uint64_t n = ipow(field_.q(), m);
  if (n > kMaxPoints) {
    throw Error(ErrorCode::UnsupportedGeometry,
                "EG(" + std::to_string(m) + "," + std::to_string(field_.q()) + ") has too many points");
  }
  num_points_ = static_cast<std::uint32_t>(n);
  const std::uint32_t q = field_.q();

  weights_.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) weights_[i] = static_cast<std::uint32_t>(ipow(q, m - 1 - i));

  coords_.resize(std::size_t{num_points_} * m);
  for (std::uint32_t idx = 0; idx < num_points_; ++idx) {
    std::uint32_t rest = idx;
    for (std::uint32_t i = m; i-- > 0;) {
      coords_[std::size_t{idx} * m + i] = FieldElement{rest % q};
      rest /= q;
    }
  }

  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      add_[std::size_t{a} * q + b] = field_.add({a}, {b}).code;
      mul_[std::size_t{a} * q + b] = field_.mul({a}, {b}).code;
    }
  }

  for (std::uint32_t idx = 1; idx < num_points_; ++idx) {
    for (const auto c : coords(idx)) {
      if (c.code == 0) continue;
      if (c.code == 1) directions_.push_back(idx);
      break;
    }
  }
}

std::span<const FieldElement> Geometry::coords(std::uint32_t index) const {
  if (index >= num_points_) {
    throw Error(ErrorCode::InvalidGeometry, "point index " + std::to_string(index) + " out of range");
  }
  return {coords_.data() + std::size_t{index} * m_, m_};
}

Point Geometry::point(std::uint32_t index) const {
  const auto c = coords(index);
  return {{c.begin(), c.end()}, index};
}

std::uint32_t Geometry::index_of(std::span<const FieldElement> c) const {
  if (c.size() != m_) throw Error(ErrorCode::InvalidGeometry, "coordinate vector has wrong length");
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (!field_.contains(c[i])) {
      throw Error(ErrorCode::ElementOutOfRange, "coordinate outside the field");
    }
    idx += c[i].code * weights_[i];
  }
  return idx;
}

std::vector<Point> Geometry::points() const {
  std::vector<Point> out;
  out.reserve(num_points_);
  for (std::uint32_t i = 0; i < num_points_; ++i) out.push_back(point(i));
  return out;
}

std::uint32_t Geometry::translate(std::uint32_t point, FieldElement c, std::uint32_t direction) const {
  const FieldElement* p = coords_.data() + std::size_t{point} * m_;
  const FieldElement* d = coords_.data() + std::size_t{direction} * m_;
  const std::size_t q = field_.q();
  const std::uint32_t* scaled = mul_.data() + c.code * q;
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    idx += add_[p[i].code * q + scaled[d[i].code]] * weights_[i];
  }
  return idx;
}

std::uint32_t Geometry::normalize_direction(std::uint32_t direction) const {
  if (direction == 0 || direction >= num_points_) {
    throw Error(ErrorCode::InvalidGeometry, "direction must be a nonzero vector");
  }
  const auto d = coords(direction);
  const auto lead = std::find_if(d.begin(), d.end(), [](FieldElement e) { return e.code != 0; });
  const FieldElement scale = field_.inv(*lead);
  std::vector<FieldElement> normalized(m_);
  for (std::uint32_t i = 0; i < m_; ++i) normalized[i] = field_.mul(scale, d[i]);
  return index_of(normalized);
}

std::uint32_t Geometry::class_of(std::uint32_t normalized) const {
  const auto it = std::lower_bound(directions_.begin(), directions_.end(), normalized);
  return static_cast<std::uint32_t>(it - directions_.begin());
}

Line Geometry::canonical_line(std::uint32_t point, std::uint32_t direction) const {
  if (point >= num_points_) {
    throw Error(ErrorCode::InvalidGeometry, "point index " + std::to_string(point) + " out of range");
  }
  Line line;
  line.direction = normalize_direction(direction);
  line.class_id = class_of(line.direction);
  line.points.reserve(q());
  for (std::uint32_t c = 0; c < q(); ++c) line.points.push_back(translate(point, FieldElement{c}, line.direction));
  std::sort(line.points.begin(), line.points.end());
  line.base = line.points.front();
  return line;
}

void Geometry::for_each_line_in_class(std::uint32_t class_id,
                                      const std::function<void(const Line&)>& visit) const {
  if (class_id >= directions_.size()) {
    throw Error(ErrorCode::InvalidClassIndex, "class " + std::to_string(class_id) + " out of range");
  }
  const std::uint32_t dir = directions_[class_id];
  std::vector<char> seen(num_points_, 0);
  Line line;
  line.class_id = class_id;
  line.direction = dir;
  for (std::uint32_t p = 0; p < num_points_; ++p) {
    if (seen[p]) continue;
    line.points.clear();
    for (std::uint32_t c = 0; c < q(); ++c) {
      const std::uint32_t x = translate(p, FieldElement{c}, dir);
      seen[x] = 1;
      line.points.push_back(x);
    }
    std::sort(line.points.begin(), line.points.end());
    // Scanning ascending, the first unseen point is the minimum of its line.
    line.base = p;
    visit(line);
  }
}

void Geometry::for_each_line(const std::function<void(const Line&)>& visit) const {
  for (std::uint32_t k = 0; k < num_classes(); ++k) for_each_line_in_class(k, visit);
}

std::vector<Line> Geometry::lines() const {
  std::vector<Line> out;
  out.reserve(expected_stats(m_, q()).n_lines);
  for_each_line([&](const Line& l) { out.push_back(l); });
  return out;
}

Line Geometry::line_through(std::uint32_t a, std::uint32_t b) const {
  if (a == b) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  const auto ca = coords(a);
  const auto cb = coords(b);
  std::vector<FieldElement> diff(m_);
  for (std::uint32_t i = 0; i < m_; ++i) diff[i] = field_.sub(cb[i], ca[i]);
  return canonical_line(a, index_of(diff));
}

std::vector<Line> Geometry::lines_through(std::uint32_t point) const {
  std::vector<Line> out;
  out.reserve(directions_.size());
  for (const auto dir : directions_) out.push_back(canonical_line(point, dir));
  return out;
}

ParallelClass Geometry::parallel_class(std::uint32_t class_id) const {
  ParallelClass pc;
  pc.class_id = class_id;
  for_each_line_in_class(class_id, [&](const Line& l) { pc.lines.push_back(l); });
  pc.direction = directions_[class_id];
  return pc;
}

std::vector<ParallelClass> Geometry::parallel_classes() const {
  std::vector<ParallelClass> out;
  out.reserve(directions_.size());
  for (std::uint32_t k = 0; k < num_classes(); ++k) out.push_back(parallel_class(k));
  return out;
}

GeometryStats Geometry::stats() const {
  // A non-uniform count is reported as 0 so it can never match a closed form.
  auto uniform = [](std::uint64_t lo, std::uint64_t hi) { return lo == hi ? lo : 0; };
  GeometryStats s;
  s.n_points = num_points_;
  s.n_classes = directions_.size();
  std::vector<std::uint64_t> incidences(num_points_, 0);
  std::uint64_t min_points = ~std::uint64_t{0}, max_points = 0;
  std::uint64_t min_class = ~std::uint64_t{0}, max_class = 0;
  for (std::uint32_t k = 0; k < num_classes(); ++k) {
    std::uint64_t in_class = 0;
    for_each_line_in_class(k, [&](const Line& l) {
      ++in_class;
      min_points = std::min<std::uint64_t>(min_points, l.points.size());
      max_points = std::max<std::uint64_t>(max_points, l.points.size());
      for (const auto p : l.points) ++incidences[p];
    });
    s.n_lines += in_class;
    min_class = std::min(min_class, in_class);
    max_class = std::max(max_class, in_class);
  }
  const auto [lo, hi] = std::minmax_element(incidences.begin(), incidences.end());
  s.points_per_line = uniform(min_points, max_points);
  s.parallels_per_line = uniform(min_class, max_class) - (min_class == max_class ? 1 : 0);
  s.lines_per_point = uniform(*lo, *hi);
  return s;
}

}  // namespace egqldpc
