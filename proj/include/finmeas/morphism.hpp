#ifndef FINMEAS_MORPHISM_HPP
#define FINMEAS_MORPHISM_HPP

// Bounded measurable maps. A morphism carries its point map together with
// a bound transformer witnessing bornologicity: for every basis set B of
// the domain, f(B) must land inside bound_transformer(B).
//
// make_morphism spot-checks that witness (deterministic boundary points
// plus a fixed seeded sample per basis set); the named combinators below
// construct their transformers from known bounds and skip the check.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finmeas/generate.hpp"
#include "finmeas/measure.hpp"

namespace finmeas {

struct Morphism {
    Space domain;
    Space codomain;
    std::function<Point(const Point&)> map;
    std::function<BoundedSet(const BoundedSet&)> bound_transformer;
    std::string name;

    Point operator()(const Point& p) const { return map(p); }
};

namespace detail {

// Extreme points of a basis set: interval/box endpoints and corners, all
// labels of a finite carrier, the zero measure and the gamma-weighted
// Diracs at extreme base points of a measure class.
inline std::vector<Point> boundary_points(const BoundedSet& bounds) {
    std::vector<Point> out;
    if (std::holds_alternative<AllOfSpace>(bounds.descriptor())) {
        if (bounds.space().kind() == CarrierKind::Subspace) {
            return boundary_points(bounds.space().region());
        }
        for (const std::string& l : bounds.space().labels()) out.push_back(Point::label(l));
        return out;
    }
    if (const auto* iv = std::get_if<IntegerInterval>(&bounds.descriptor())) {
        out.push_back(Point::integer(-iv->radius));
        out.push_back(Point::integer(0));
        out.push_back(Point::integer(iv->radius));
        return out;
    }
    if (const auto* box = std::get_if<VectorBox>(&bounds.descriptor())) {
        const int d = bounds.space().dimension();
        out.push_back(Point::vector(std::vector<Rat>(static_cast<std::size_t>(d), Rat(0))));
        if (d <= 4) {
            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                std::vector<Rat> corner;
                corner.reserve(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i) {
                    corner.push_back((mask >> i) & 1u ? Rat(box->radius) : Rat(-box->radius));
                }
                out.push_back(Point::vector(std::move(corner)));
            }
        } else {
            for (int i = 0; i < d; ++i) {
                for (int sign : {-1, 1}) {
                    std::vector<Rat> axis(static_cast<std::size_t>(d), Rat(0));
                    axis[static_cast<std::size_t>(i)] = Rat(sign) * box->radius;
                    out.push_back(Point::vector(std::move(axis)));
                }
            }
        }
        return out;
    }
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        const Space& base = mc->support->space();
        out.push_back(Point::measure(SignedMeasure::zero(base)));
        for (const Point& b : boundary_points(*mc->support)) {
            out.push_back(Point::measure(scale(mc->max_total_variation, dirac(base, b))));
        }
        return out;
    }
    const auto& ex = std::get<ExplicitSet>(bounds.descriptor());
    const std::size_t cap = 64;
    for (std::size_t i = 0; i < ex.points.size() && i < cap; ++i) out.push_back(ex.points[i]);
    return out;
}

} // namespace detail

// Spot check of the declared bound transformer. Deterministic: a fixed
// seed drives the sampled points, so a violation reproduces exactly.
inline void verify_bornological(const Morphism& f, std::size_t samples_per_set = 256) {
    Rng rng(0x626f726eULL);
    for (const BoundedSet& basis : basis_sample(f.domain)) {
        const BoundedSet image = f.bound_transformer(basis);
        if (image.space() != f.codomain) {
            throw KindMismatch("bound transformer of " + f.name + " lands on " +
                               to_string(image.space()) + ", not " + to_string(f.codomain));
        }
        const auto check = [&](const Point& x) {
            const Point y = f.map(x);
            if (!f.codomain.contains(y)) {
                throw KindMismatch("morphism " + f.name + " maps " + to_string(x) +
                                   " outside " + to_string(f.codomain));
            }
            if (!is_bounded_member(image, y)) {
                throw BornologicityViolation(to_string(x),
                                             f.name + " sends it to " + to_string(y) +
                                                 ", outside " + to_string(image) +
                                                 " (claimed image of " + to_string(basis) + ")");
            }
        };
        for (const Point& x : detail::boundary_points(basis)) check(x);
        for (std::size_t i = 0; i < samples_per_set; ++i) check(sample_point_in(rng, basis));
    }
}

inline Morphism make_morphism(std::string name, Space domain, Space codomain,
                              std::function<Point(const Point&)> map,
                              std::function<BoundedSet(const BoundedSet&)> bound_transformer) {
    Morphism f{std::move(domain), std::move(codomain), std::move(map),
               std::move(bound_transformer), std::move(name)};
    verify_bornological(f);
    return f;
}

inline Morphism identity(Space space) {
    return Morphism{space, space,
                    [](const Point& p) { return p; },
                    [](const BoundedSet& b) { return b; },
                    "id"};
}

inline Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (inner.codomain != outer.domain) {
        throw KindMismatch("cannot compose " + outer.name + " after " + inner.name);
    }
    return Morphism{inner.domain, outer.codomain,
                    [o = outer.map, i = inner.map](const Point& p) { return o(i(p)); },
                    [o = outer.bound_transformer, i = inner.bound_transformer](const BoundedSet& b) {
                        return o(i(b));
                    },
                    outer.name + " o " + inner.name};
}

// Subspace -> parent; bounded sets of the subspace are the whole region or
// explicit families, both of which are bounded sets of the parent.
inline Morphism inclusion(const BoundedSet& region) {
    Space sub = Space::subspace(region);
    Space parent = region.space();
    return Morphism{std::move(sub), parent,
                    [](const Point& p) { return p; },
                    [region, parent](const BoundedSet& b) {
                        if (const auto* ex = std::get_if<ExplicitSet>(&b.descriptor())) {
                            return BoundedSet::explicit_set(parent, ex->points);
                        }
                        return region;
                    },
                    "incl"};
}

// Indicator of a finite subset, as a map into the rational line.
inline Morphism characteristic_morphism(const Space& space, std::vector<Point> subset) {
    const BoundedSet set = BoundedSet::explicit_set(space, std::move(subset));
    Space line = Space::rational_line();
    std::vector<Point> range{real_point(Rat(0)), real_point(Rat(1))};
    BoundedSet image = BoundedSet::explicit_set(line, std::move(range));
    return Morphism{space, std::move(line),
                    [set](const Point& p) {
                        return real_point(is_bounded_member(set, p) ? Rat(1) : Rat(0));
                    },
                    [image](const BoundedSet&) { return image; },
                    "chi"};
}

// Largest total variation reachable inside a bounded set of measures.
inline Rat measure_tv_bound(const BoundedSet& bounds) {
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        return mc->max_total_variation;
    }
    if (const auto* ex = std::get_if<ExplicitSet>(&bounds.descriptor())) {
        Rat best = 0;
        for (const Point& p : ex->points) best = std::max(best, total_variation(p.as_measure()));
        return best;
    }
    throw InvalidArgument("no total variation bound for " + to_string(bounds));
}

// mu |-> mu(E) for a fixed finite E; |mu(E)| <= ||mu||, so a class with
// variation bound gamma lands in [-gamma, gamma].
inline Morphism evaluation_morphism(const Space& space, std::vector<Point> subset) {
    const BoundedSet set = BoundedSet::explicit_set(space, std::move(subset));
    Space domain = Space::measure_space(space);
    Space line = Space::rational_line();
    std::vector<Point> pts = std::get<ExplicitSet>(set.descriptor()).points;
    return Morphism{std::move(domain), line,
                    [pts](const Point& p) { return real_point(p.as_measure().eval(pts)); },
                    [line](const BoundedSet& b) {
                        return BoundedSet::vector_box(line, measure_tv_bound(b));
                    },
                    "ev"};
}

inline Morphism coordinate_projection(const Space& space, int index) {
    if (space.kind() != CarrierKind::RationalVector) {
        throw KindMismatch("projection needs a rational vector space");
    }
    if (index < 0 || index >= space.dimension()) throw InvalidArgument("projection index out of range");
    Space line = Space::rational_line();
    return Morphism{space, line,
                    [index](const Point& p) { return real_point(p.as_vector()[static_cast<std::size_t>(index)]); },
                    [line](const BoundedSet& b) {
                        return BoundedSet::vector_box(line, sup_abs_bound(b));
                    },
                    "proj:" + std::to_string(index)};
}

inline Morphism affine(const Rat& a, const Rat& b) {
    Space line = Space::rational_line();
    return Morphism{line, line,
                    [a, b](const Point& p) {
                        Rat y = a * as_rational(p) + b;
                        return real_point(std::move(y));
                    },
                    [a, b, line](const BoundedSet& bounds) {
                        Rat r = rat_abs(a) * sup_abs_bound(bounds) + rat_abs(b);
                        return BoundedSet::vector_box(line, std::move(r));
                    },
                    "affine:" + to_string(a) + ":" + to_string(b)};
}

inline Morphism mod_k(long long k) {
    if (k < 1) throw InvalidArgument("modulus must be positive");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (long long r = 0; r < k; ++r) labels.push_back(std::to_string(r));
    Space codomain = Space::finite_labeled(std::move(labels));
    BoundedSet image = BoundedSet::all_of(codomain);
    return Morphism{Space::integer_line(), codomain,
                    [k](const Point& p) {
                        const long long r = ((p.as_integer() % k) + k) % k;
                        return Point::label(std::to_string(r));
                    },
                    [image](const BoundedSet&) { return image; },
                    "mod:" + std::to_string(k)};
}

inline Morphism embed_integers() {
    Space line = Space::rational_line();
    return Morphism{Space::integer_line(), line,
                    [](const Point& p) { return real_point(Rat(p.as_integer())); },
                    [line](const BoundedSet& b) {
                        return BoundedSet::vector_box(line, sup_abs_bound(b));
                    },
                    "embed"};
}

// x |-> a f(x) + b g(x) for real-valued f, g on a common domain.
inline Morphism linear_combination_morphism(const Rat& a, const Morphism& f,
                                            const Rat& b, const Morphism& g) {
    Space line = Space::rational_line();
    if (f.domain != g.domain) throw KindMismatch("linear combination needs a common domain");
    if (f.codomain != line || g.codomain != line) {
        throw KindMismatch("linear combination needs real-valued morphisms");
    }
    return Morphism{f.domain, line,
                    [a, b, fm = f.map, gm = g.map](const Point& p) {
                        Rat y = a * as_rational(fm(p)) + b * as_rational(gm(p));
                        return real_point(std::move(y));
                    },
                    [a, b, fb = f.bound_transformer, gb = g.bound_transformer, line](const BoundedSet& bounds) {
                        Rat r = rat_abs(a) * sup_abs_bound(fb(bounds)) + rat_abs(b) * sup_abs_bound(gb(bounds));
                        return BoundedSet::vector_box(line, std::move(r));
                    },
                    to_string(a) + "*" + f.name + " + " + to_string(b) + "*" + g.name};
}

// Finite lookup table with a default value. The image is the explicit set
// of listed values, so no bornologicity check is needed.
inline Morphism tabulated_morphism(std::string name, Space domain, Space codomain,
                                   std::vector<std::pair<Point, Point>> table,
                                   Point default_value) {
    std::vector<Point> values{default_value};
    for (const auto& [key, value] : table) {
        if (!domain.contains(key)) {
            throw KindMismatch("table key " + to_string(key) + " does not belong to " + to_string(domain));
        }
        values.push_back(value);
    }
    BoundedSet image = BoundedSet::explicit_set(codomain, std::move(values));
    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return compare_points(a.first, b.first) < 0; });
    return Morphism{std::move(domain), std::move(codomain),
                    [table = std::move(table), dflt = std::move(default_value)](const Point& p) {
                        const auto it = std::lower_bound(
                            table.begin(), table.end(), p,
                            [](const auto& entry, const Point& q) { return compare_points(entry.first, q) < 0; });
                        if (it != table.end() && compare_points(it->first, p) == 0) return it->second;
                        return dflt;
                    },
                    [image](const BoundedSet&) { return image; },
                    std::move(name)};
}

// Random finite-table endomorphism; the tabulated image is explicit, so
// bornologicity holds by construction.
inline Morphism gen_tabulated_endomorphism(Rng& rng, const Space& space) {
    std::vector<std::pair<Point, Point>> table;
    const long long entries = rng.range(1, 3);
    for (long long i = 0; i < entries; ++i) {
        table.emplace_back(gen_point(rng, space), gen_point(rng, space));
    }
    return tabulated_morphism("tab", space, space, std::move(table), gen_point(rng, space));
}

// Image measure: (f_* mu)(F) = mu(f^{-1} F). Colliding images merge.
inline SignedMeasure pushforward(const Morphism& f, const SignedMeasure& mu) {
    if (mu.space() != f.domain) {
        throw KindMismatch("measure on " + to_string(mu.space()) + " cannot be pushed along " + f.name);
    }
    std::vector<SignedMeasure::Atom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) atoms.emplace_back(f.map(a.first), a.second);
    return SignedMeasure::from_atoms(f.codomain, std::move(atoms));
}

// Exact integral of a real-valued morphism: sum of weight * f(atom).
inline Rat integrate_real(const Morphism& f, const SignedMeasure& mu) {
    if (f.codomain != Space::rational_line()) {
        throw KindMismatch("integrand " + f.name + " is not real-valued");
    }
    if (mu.space() != f.domain) {
        throw KindMismatch("measure on " + to_string(mu.space()) + " cannot integrate " + f.name);
    }
    Rat sum = 0;
    for (const auto& a : mu.atoms()) {
        Rat v = as_rational(f.map(a.first)) * a.second;
        sum += v;
    }
    return sum;
}

struct SimplePiece {
    std::vector<Point> set; // sorted
    Rat level;
};

// Finite-level-set function; value 0 off the listed pieces.
struct SimpleFunction {
    Space domain;
    std::vector<SimplePiece> pieces;

    Rat value_at(const Point& p) const {
        for (const SimplePiece& piece : pieces) {
            if (std::binary_search(piece.set.begin(), piece.set.end(), p, PointLess{})) {
                return piece.level;
            }
        }
        return 0;
    }

    Rat integrate(const SignedMeasure& mu) const {
        if (mu.space() != domain) throw KindMismatch("simple function on a different space");
        Rat sum = 0;
        for (const SimplePiece& piece : pieces) {
            Rat term = piece.level * mu.eval(piece.set);
            sum += term;
        }
        return sum;
    }
};

// |v| rounded down to a multiple of 2^-resolution and clipped at
// resolution, sign restored: the usual dyadic staircase.
inline Rat dyadic_clip(const Rat& value, unsigned resolution) {
    const bool negative = value < 0;
    Rat magnitude = rat_abs(value);
    const Int denom_scale = Int(1) << resolution;
    Rat scaled = magnitude * Rat(denom_scale);
    Int floored = numerator(scaled) / denominator(scaled);
    Rat level = make_rational(std::move(floored), denom_scale);
    if (level > resolution) level = Rat(resolution);
    return negative ? Rat(-level) : level;
}

// Dyadic approximation of a real-valued morphism over a finite sample set.
// Off-sample points get value 0; pieces group points by approximated level.
inline SimpleFunction simple_approximation(const Morphism& f, const std::vector<Point>& sample_set,
                                           unsigned resolution) {
    if (f.codomain != Space::rational_line()) {
        throw KindMismatch("can only approximate real-valued morphisms");
    }
    std::vector<Point> pts = sample_set;
    std::sort(pts.begin(), pts.end(), PointLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::map<Rat, std::vector<Point>> groups;
    for (const Point& p : pts) {
        Rat level = dyadic_clip(as_rational(f.map(p)), resolution);
        if (level != 0) groups[level].push_back(p);
    }
    SimpleFunction phi{f.domain, {}};
    phi.pieces.reserve(groups.size());
    for (auto& [level, set] : groups) {
        phi.pieces.push_back(SimplePiece{std::move(set), level});
    }
    return phi;
}

struct ProductSpace {
    Space space;
    std::vector<Morphism> projections;
};

// Product of rational vector spaces, realized as the concatenated vector
// space together with slice projections.
inline ProductSpace product_space(const std::vector<Space>& factors) {
    if (factors.empty()) throw InvalidArgument("product of no factors");
    int total = 0;
    for (const Space& s : factors) {
        if (s.kind() != CarrierKind::RationalVector) {
            throw KindMismatch("product spaces are supported for rational vector factors");
        }
        total += s.dimension();
    }
    Space prod = Space::rational_vector(total);
    std::vector<Morphism> projections;
    int offset = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const Space& factor = factors[j];
        const int lo = offset;
        const int d = factor.dimension();
        projections.push_back(Morphism{
            prod, factor,
            [lo, d](const Point& p) {
                const auto& v = p.as_vector();
                std::vector<Rat> comps(v.begin() + lo, v.begin() + lo + d);
                return Point::vector(std::move(comps));
            },
            [factor](const BoundedSet& b) {
                return BoundedSet::vector_box(factor, sup_abs_bound(b));
            },
            "factor:" + std::to_string(j)});
        offset += d;
    }
    return ProductSpace{std::move(prod), std::move(projections)};
}

} // namespace finmeas

#endif // FINMEAS_MORPHISM_HPP
