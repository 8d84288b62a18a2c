#ifndef FINMEAS_GRID_HPP
#define FINMEAS_GRID_HPP

// Uniform grid discretizations of planar regions: the probability measure
// on the k x k cell centers of the region's bounding box that lie in the
// region, each weighted 1/m exactly.

#include <array>
#include <utility>
#include <vector>

#include "finmeas/measure.hpp"

namespace finmeas {

struct PlanePoint {
    Rat x;
    Rat y;
};

struct Region {
    enum class Kind { UnitSquare, Triangle, Box };

    Kind kind = Kind::UnitSquare;
    std::array<PlanePoint, 3> vertices{}; // triangle
    PlanePoint lo{};                      // box
    PlanePoint hi{};

    static Region unit_square() { return Region{}; }

    static Region triangle(PlanePoint a, PlanePoint b, PlanePoint c) {
        Region r;
        r.kind = Kind::Triangle;
        r.vertices = {std::move(a), std::move(b), std::move(c)};
        return r;
    }

    static Region box(PlanePoint low, PlanePoint high) {
        if (low.x > high.x || low.y > high.y) {
            throw InvalidArgument("box corners must satisfy lo <= hi componentwise");
        }
        Region r;
        r.kind = Kind::Box;
        r.lo = std::move(low);
        r.hi = std::move(high);
        return r;
    }
};

namespace detail {

inline Rat cross(const PlanePoint& origin, const PlanePoint& a, const PlanePoint& b) {
    Rat lhs = (a.x - origin.x) * (b.y - origin.y);
    Rat rhs = (a.y - origin.y) * (b.x - origin.x);
    return lhs - rhs;
}

// Inclusive membership, orientation-independent: the three edge cross
// products may not take both strict signs.
inline bool in_triangle(const std::array<PlanePoint, 3>& v, const PlanePoint& p) {
    const Rat d1 = cross(v[0], v[1], p);
    const Rat d2 = cross(v[1], v[2], p);
    const Rat d3 = cross(v[2], v[0], p);
    const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

} // namespace detail

inline SignedMeasure grid_uniform(const Region& region, long long resolution) {
    if (resolution < 1) throw InvalidArgument("grid resolution must be at least 1");
    PlanePoint lo{Rat(0), Rat(0)};
    PlanePoint hi{Rat(1), Rat(1)};
    if (region.kind == Region::Kind::Box) {
        lo = region.lo;
        hi = region.hi;
    } else if (region.kind == Region::Kind::Triangle) {
        lo = region.vertices[0];
        hi = region.vertices[0];
        for (const PlanePoint& v : region.vertices) {
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
        }
    }
    const Rat k2 = Rat(2 * resolution);
    const Rat step_x = (hi.x - lo.x) / k2;
    const Rat step_y = (hi.y - lo.y) / k2;
    std::vector<Point> centers;
    for (long long i = 0; i < resolution; ++i) {
        Rat cx = lo.x + Rat(2 * i + 1) * step_x;
        for (long long j = 0; j < resolution; ++j) {
            Rat cy = lo.y + Rat(2 * j + 1) * step_y;
            if (region.kind == Region::Kind::Triangle &&
                !detail::in_triangle(region.vertices, PlanePoint{cx, cy})) {
                continue;
            }
            centers.push_back(Point::vector({cx, std::move(cy)}));
        }
    }
    if (centers.empty()) throw EmptyRegion("no grid cell center lies inside the region");
    const Rat weight = make_rational(Int(1), Int(centers.size()));
    std::vector<SignedMeasure::Atom> atoms;
    atoms.reserve(centers.size());
    for (Point& c : centers) atoms.emplace_back(std::move(c), weight);
    return SignedMeasure::from_atoms(Space::rational_vector(2), std::move(atoms));
}

} // namespace finmeas

#endif // FINMEAS_GRID_HPP
