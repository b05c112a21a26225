#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "arclab/gf.hpp"
#include "arclab/point_set.hpp"

namespace arclab {

enum class PlaneKind { affine, projective };

std::string_view to_string(PlaneKind kind) noexcept;
PlaneKind parse_plane_kind(std::string_view text);

// Homogeneous coordinates, normalized so the first nonzero entry is 1. Affine
// point (x, y) is stored as (1, x, y).
struct Point {
    std::uint32_t id = 0;
    std::array<FieldElement, 3> coords{};

    FieldElement x() const noexcept { return coords[1]; }
    FieldElement y() const noexcept { return coords[2]; }
};

struct Line {
    std::uint32_t id = 0;
    PointSet incidence;
    std::vector<std::uint32_t> points;  // ascending
};

// Incidence structure of AG(2,q) or PG(2,q).
//
// Point ids: (1, y, z) -> y*q + z, then (0, 1, z) -> q^2 + z, then (0, 0, 1) ->
// q^2 + q. Affine (x, y) therefore has the same id in both models. Lines [a:b:c]
// (points with aX + bY + cZ = 0) use the same enumeration; the affine model
// drops the line at infinity [1:0:0] and shifts the remaining ids down by one.
class PlaneModel {
public:
    static constexpr std::uint32_t kMaxOrder = 128;

    PlaneModel(FieldSpec field, PlaneKind kind);

    const FieldSpec& field() const noexcept { return field_; }
    PlaneKind kind() const noexcept { return kind_; }
    std::uint32_t q() const noexcept { return field_.q(); }
    std::size_t num_points() const noexcept { return points_.size(); }
    std::size_t num_lines() const noexcept { return lines_.size(); }
    std::uint32_t points_per_line() const noexcept { return kind_ == PlaneKind::affine ? q() : q() + 1; }

    const Point& point(std::uint32_t id) const;
    std::span<const Point> points() const noexcept { return points_; }
    std::uint32_t affine_point_id(FieldElement x, FieldElement y) const;
    // Normalizes; rejects the zero vector and, in the affine model, points at infinity.
    std::uint32_t point_id(std::array<FieldElement, 3> homogeneous) const;

    const Line& line(std::uint32_t id) const;
    std::span<const Line> lines() const noexcept { return lines_; }
    std::span<const std::uint32_t> lines_through(std::uint32_t point) const;

    std::uint32_t line_id_through(std::uint32_t a, std::uint32_t b) const;
    const Line& line_through(std::uint32_t a, std::uint32_t b) const { return lines_[line_id_through(a, b)]; }

    // Zero 3x3 determinant of homogeneous coordinates; repeated points count as collinear.
    bool collinear(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

    PointSet empty_set() const { return PointSet(num_points()); }
    PointSet full_set() const { return PointSet::full(num_points()); }
    // {(x, x^2)} in the affine model; the conic {(1, x, x^2)} plus (0, 0, 1) in the projective one.
    PointSet parabola() const;

private:
    std::uint32_t normalized_id(std::array<FieldElement, 3> v) const;
    std::vector<std::uint32_t> projective_points_on(std::array<FieldElement, 3> line) const;

    FieldSpec field_;
    PlaneKind kind_;
    std::vector<Point> points_;
    std::vector<Line> lines_;
    std::vector<std::uint32_t> point_lines_;  // num_points * (q + 1), ascending per point
};

// The projective plane over the same field; affine point ids carry over unchanged.
PlaneModel projective_closure(const PlaneModel& affine);
PointSet embed_in_projective(const PlaneModel& affine, const PointSet& points, const PlaneModel& projective);

// A random collineation of the plane from the seeded stream: x -> Mx + b with M
// invertible (affine), or x -> Mx with M in GL(3,q) (projective). Returns the
// image id of every point id.
std::vector<std::uint32_t> random_collineation(const PlaneModel& model, std::uint64_t seed);
PointSet relabel(const PointSet& points, std::span<const std::uint32_t> image);

}  // namespace arclab
