#include "arclab/plane.hpp"

#include <algorithm>
#include <string>

#include "arclab/error.hpp"
#include "arclab/random.hpp"

namespace arclab {

std::string_view to_string(PlaneKind kind) noexcept
{
    return kind == PlaneKind::affine ? "affine" : "projective";
}

PlaneKind parse_plane_kind(std::string_view text)
{
    if (text == "affine") {
        return PlaneKind::affine;
    }
    if (text == "projective") {
        return PlaneKind::projective;
    }
    throw PreconditionError("unknown plane kind '" + std::string(text) + "'");
}

PlaneModel::PlaneModel(FieldSpec field, PlaneKind kind) : field_(std::move(field)), kind_(kind)
{
    const std::uint32_t q = field_.q();
    if (q > kMaxOrder) {
        throw PreconditionError("plane order " + std::to_string(q) + " exceeds the cap of " +
                                std::to_string(kMaxOrder));
    }
    const std::uint32_t total = q * q + q + 1;
    const std::uint32_t n = kind_ == PlaneKind::affine ? q * q : total;

    points_.reserve(n);
    for (std::uint32_t id = 0; id < n; ++id) {
        Point pt;
        pt.id = id;
        if (id < q * q) {
            pt.coords = {field_.one(), FieldElement{id / q}, FieldElement{id % q}};
        } else if (id < q * q + q) {
            pt.coords = {field_.zero(), field_.one(), FieldElement{id - q * q}};
        } else {
            pt.coords = {field_.zero(), field_.zero(), field_.one()};
        }
        points_.push_back(pt);
    }

    const std::uint32_t first_line = kind_ == PlaneKind::affine ? 1 : 0;
    lines_.reserve(total - first_line);
    for (std::uint32_t pid = first_line; pid < total; ++pid) {
        std::array<FieldElement, 3> abc;
        if (pid < q * q) {
            abc = {field_.one(), FieldElement{pid / q}, FieldElement{pid % q}};
        } else if (pid < q * q + q) {
            abc = {field_.zero(), field_.one(), FieldElement{pid - q * q}};
        } else {
            abc = {field_.zero(), field_.zero(), field_.one()};
        }
        Line line;
        line.id = pid - first_line;
        line.points = projective_points_on(abc);
        if (kind_ == PlaneKind::affine) {
            std::erase_if(line.points, [&](std::uint32_t id) { return id >= q * q; });
        }
        line.incidence = PointSet::from_ids(n, line.points);
        lines_.push_back(std::move(line));
    }

    const std::uint32_t per_point = q + 1;
    point_lines_.assign(static_cast<std::size_t>(n) * per_point, 0);
    std::vector<std::uint32_t> fill(n, 0);
    for (const Line& line : lines_) {
        for (const std::uint32_t id : line.points) {
            point_lines_[static_cast<std::size_t>(id) * per_point + fill[id]++] = line.id;
        }
    }
}

std::vector<std::uint32_t> PlaneModel::projective_points_on(std::array<FieldElement, 3> abc) const
{
    const std::uint32_t q = field_.q();
    const auto [a, b, c] = abc;
    std::vector<std::uint32_t> out;
    out.reserve(q + 1);
    // (1, y, z): a + b y + c z = 0
    if (c != field_.zero()) {
        const FieldElement c_inv = field_.inv(c);
        for (std::uint32_t y = 0; y < q; ++y) {
            const FieldElement z = field_.neg(field_.mul(field_.add(a, field_.mul(b, FieldElement{y})), c_inv));
            out.push_back(y * q + z.index);
        }
    } else if (b != field_.zero()) {
        const FieldElement y = field_.neg(field_.div(a, b));
        for (std::uint32_t z = 0; z < q; ++z) {
            out.push_back(y.index * q + z);
        }
    }
    // (0, 1, z): b + c z = 0
    if (c != field_.zero()) {
        out.push_back(q * q + field_.neg(field_.div(b, c)).index);
    } else if (b == field_.zero()) {
        for (std::uint32_t z = 0; z < q; ++z) {
            out.push_back(q * q + z);
        }
    }
    // (0, 0, 1)
    if (c == field_.zero()) {
        out.push_back(q * q + q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Point& PlaneModel::point(std::uint32_t id) const
{
    if (id >= points_.size()) {
        throw PreconditionError("point id " + std::to_string(id) + " out of range");
    }
    return points_[id];
}

std::uint32_t PlaneModel::affine_point_id(FieldElement x, FieldElement y) const
{
    if (x.index >= q() || y.index >= q()) {
        throw PreconditionError("affine coordinate out of range");
    }
    return x.index * q() + y.index;
}

std::uint32_t PlaneModel::normalized_id(std::array<FieldElement, 3> v) const
{
    const std::uint32_t q = field_.q();
    std::size_t lead = 0;
    while (lead < 3 && v[lead] == field_.zero()) {
        ++lead;
    }
    if (lead == 3) {
        throw PreconditionError("zero vector has no projective point");
    }
    if (v[lead] != field_.one()) {
        const FieldElement s = field_.inv(v[lead]);
        for (auto& e : v) {
            e = field_.mul(e, s);
        }
    }
    if (lead == 0) {
        return v[1].index * q + v[2].index;
    }
    if (lead == 1) {
        return q * q + v[2].index;
    }
    return q * q + q;
}

std::uint32_t PlaneModel::point_id(std::array<FieldElement, 3> homogeneous) const
{
    for (const auto e : homogeneous) {
        if (e.index >= q()) {
            throw PreconditionError("coordinate out of range");
        }
    }
    const std::uint32_t id = normalized_id(homogeneous);
    if (id >= points_.size()) {
        throw PreconditionError("point at infinity is not in the affine plane");
    }
    return id;
}

const Line& PlaneModel::line(std::uint32_t id) const
{
    if (id >= lines_.size()) {
        throw PreconditionError("line id " + std::to_string(id) + " out of range");
    }
    return lines_[id];
}

std::span<const std::uint32_t> PlaneModel::lines_through(std::uint32_t point) const
{
    if (point >= points_.size()) {
        throw PreconditionError("point id " + std::to_string(point) + " out of range");
    }
    const std::size_t per_point = q() + 1;
    return {point_lines_.data() + point * per_point, per_point};
}

std::uint32_t PlaneModel::line_id_through(std::uint32_t a, std::uint32_t b) const
{
    if (a == b) {
        throw PreconditionError("line_through needs two distinct points");
    }
    const auto& u = point(a).coords;
    const auto& v = point(b).coords;
    const FieldSpec& f = field_;
    const std::array<FieldElement, 3> cross = {
        f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
        f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
        f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0])),
    };
    const std::uint32_t pid = normalized_id(cross);
    return kind_ == PlaneKind::affine ? pid - 1 : pid;
}

bool PlaneModel::collinear(std::uint32_t a, std::uint32_t b, std::uint32_t c) const
{
    const auto& u = point(a).coords;
    const auto& v = point(b).coords;
    const auto& w = point(c).coords;
    const FieldSpec& f = field_;
    const FieldElement m0 = f.sub(f.mul(v[1], w[2]), f.mul(v[2], w[1]));
    const FieldElement m1 = f.sub(f.mul(v[0], w[2]), f.mul(v[2], w[0]));
    const FieldElement m2 = f.sub(f.mul(v[0], w[1]), f.mul(v[1], w[0]));
    const FieldElement det = f.add(f.sub(f.mul(u[0], m0), f.mul(u[1], m1)), f.mul(u[2], m2));
    return det == f.zero();
}

PointSet PlaneModel::parabola() const
{
    PointSet out = empty_set();
    for (std::uint32_t x = 0; x < q(); ++x) {
        const FieldElement fx{x};
        out.insert(affine_point_id(fx, field_.mul(fx, fx)));
    }
    if (kind_ == PlaneKind::projective) {
        out.insert(q() * q() + q());
    }
    return out;
}

PlaneModel projective_closure(const PlaneModel& affine)
{
    return PlaneModel(affine.field(), PlaneKind::projective);
}

PointSet embed_in_projective(const PlaneModel& affine, const PointSet& points, const PlaneModel& projective)
{
    if (affine.kind() != PlaneKind::affine || projective.kind() != PlaneKind::projective ||
        affine.q() != projective.q()) {
        throw PreconditionError("embed_in_projective needs an affine model and its projective closure");
    }
    if (points.universe() != affine.num_points()) {
        throw PreconditionError("point set does not belong to the affine model");
    }
    const auto ids = points.ids();
    return PointSet::from_ids(projective.num_points(), ids);
}

namespace {

FieldElement random_element(StreamRng& rng, const FieldSpec& f)
{
    return FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
}

}  // namespace

std::vector<std::uint32_t> random_collineation(const PlaneModel& model, std::uint64_t seed)
{
    const FieldSpec& f = model.field();
    StreamRng rng(seed, 0x636f6c6cULL);
    std::array<std::array<FieldElement, 3>, 3> m{};
    if (model.kind() == PlaneKind::affine) {
        // [[1,0,0],[b0,m00,m01],[b1,m10,m11]] acting on (1, x, y)
        for (;;) {
            m[1][1] = random_element(rng, f);
            m[1][2] = random_element(rng, f);
            m[2][1] = random_element(rng, f);
            m[2][2] = random_element(rng, f);
            if (f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])) != f.zero()) {
                break;
            }
        }
        m[0] = {f.one(), f.zero(), f.zero()};
        m[1][0] = random_element(rng, f);
        m[2][0] = random_element(rng, f);
    } else {
        for (;;) {
            for (auto& row : m) {
                for (auto& e : row) {
                    e = random_element(rng, f);
                }
            }
            const FieldElement m0 = f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1]));
            const FieldElement m1 = f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0]));
            const FieldElement m2 = f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0]));
            const FieldElement det =
                f.add(f.sub(f.mul(m[0][0], m0), f.mul(m[0][1], m1)), f.mul(m[0][2], m2));
            if (det != f.zero()) {
                break;
            }
        }
    }
    std::vector<std::uint32_t> image(model.num_points());
    for (const Point& pt : model.points()) {
        std::array<FieldElement, 3> out{};
        for (std::size_t i = 0; i < 3; ++i) {
            FieldElement acc = f.zero();
            for (std::size_t j = 0; j < 3; ++j) {
                acc = f.add(acc, f.mul(m[i][j], pt.coords[j]));
            }
            out[i] = acc;
        }
        image[pt.id] = model.point_id(out);
    }
    return image;
}

PointSet relabel(const PointSet& points, std::span<const std::uint32_t> image)
{
    if (image.size() != points.universe()) {
        throw PreconditionError("relabeling size does not match the point set universe");
    }
    PointSet out(points.universe());
    points.for_each([&](std::uint32_t id) { out.insert(image[id]); });
    return out;
}

}  // namespace arclab
