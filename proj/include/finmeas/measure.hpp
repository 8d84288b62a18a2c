#ifndef FINMEAS_MEASURE_HPP
#define FINMEAS_MEASURE_HPP

// Measurable bornological spaces and finitely supported signed measures.
//
// Carriers are descriptor-based (finite label sets, the integer line,
// rational vectors, and measure spaces over those); every representable
// subset is measurable, so integrals reduce to finite sums and all law
// checks are exact rational identities.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "finmeas/errors.hpp"
#include "finmeas/rational.hpp"

namespace finmeas {

class SignedMeasure;
class Space;
class BoundedSet;

enum class PointKind { Integer, Label, Vector, Measure };
enum class CarrierKind { FiniteLabeled, IntegerLine, RationalVector, MeasureSpace, Subspace };

// A point of some carrier. Measure-points make MX itself a carrier, so a
// point may hold a whole (immutable, shared) signed measure.
class Point {
public:
    static Point integer(long long value) { return Point(Rep(value)); }
    static Point label(std::string name) { return Point(Rep(std::move(name))); }
    static Point vector(std::vector<Rat> components) { return Point(Rep(std::move(components))); }
    static Point measure(SignedMeasure mu);

    PointKind kind() const { return static_cast<PointKind>(rep_.index()); }

    long long as_integer() const {
        if (kind() != PointKind::Integer) throw KindMismatch("point is not an integer");
        return std::get<long long>(rep_);
    }
    const std::string& as_label() const {
        if (kind() != PointKind::Label) throw KindMismatch("point is not a label");
        return std::get<std::string>(rep_);
    }
    const std::vector<Rat>& as_vector() const {
        if (kind() != PointKind::Vector) throw KindMismatch("point is not a rational vector");
        return std::get<std::vector<Rat>>(rep_);
    }
    const SignedMeasure& as_measure() const;

private:
    using Rep = std::variant<long long, std::string, std::vector<Rat>, std::shared_ptr<const SignedMeasure>>;
    explicit Point(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

// Canonical strict total order on points of a common carrier (kinds are
// tie-broken by kind index so the order is total on mixed samples too).
int compare_points(const Point& a, const Point& b);

inline bool operator==(const Point& a, const Point& b) { return compare_points(a, b) == 0; }
inline bool operator!=(const Point& a, const Point& b) { return compare_points(a, b) != 0; }

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return compare_points(a, b) < 0; }
};

// Points of the rational line Q = Q^1.
inline Point real_point(Rat value) {
    return Point::vector({std::move(value)});
}

inline const Rat& as_rational(const Point& p) {
    const std::vector<Rat>& v = p.as_vector();
    if (v.size() != 1) throw KindMismatch("point is not a scalar");
    return v.front();
}

// Space descriptor: carrier kind plus the bornology basis implied by it.
// Immutable and cheaply copyable.
class Space {
public:
    static Space finite_labeled(std::vector<std::string> labels);
    static Space integer_line();
    static Space rational_vector(int dimension);
    static Space rational_line() { return rational_vector(1); }
    static Space measure_space(Space base);
    static Space subspace(BoundedSet region);

    CarrierKind kind() const { return impl_->kind; }

    const std::vector<std::string>& labels() const {
        require(CarrierKind::FiniteLabeled, "labels");
        return impl_->labels;
    }
    int dimension() const {
        require(CarrierKind::RationalVector, "dimension");
        return impl_->dimension;
    }
    const Space& base() const {
        require(CarrierKind::MeasureSpace, "base");
        return *impl_->inner;
    }
    const BoundedSet& region() const;
    const Space& parent() const;

    // Kind-correct membership (for subspaces, membership in the region).
    bool contains(const Point& p) const;

    friend bool operator==(const Space& a, const Space& b);

private:
    struct Impl {
        CarrierKind kind;
        std::vector<std::string> labels;
        int dimension = 0;
        std::shared_ptr<const Space> inner;
        std::shared_ptr<const BoundedSet> region;
    };
    explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void require(CarrierKind k, const char* what) const {
        if (impl_->kind != k) throw KindMismatch(std::string("space has no ") + what);
    }
    std::shared_ptr<const Impl> impl_;
};

inline bool operator!=(const Space& a, const Space& b) { return !(a == b); }

// Bornology-basis descriptors. AllOfSpace is the single basis set of
// carriers that are bounded as a whole (finite label sets, subspaces of a
// bounded region). ExplicitSet makes any finite point set a bounded set.
struct AllOfSpace {};
struct IntegerInterval {
    long long radius = 0; // [-radius, radius]
};
struct VectorBox {
    Rat radius; // [-radius, radius]^dim
};
struct MeasureClass {
    std::shared_ptr<const BoundedSet> support; // bounded set of the base space
    Rat max_total_variation;                   // gamma > 0
};
struct ExplicitSet {
    std::vector<Point> points; // sorted, deduplicated
};

using BoundDescriptor = std::variant<AllOfSpace, IntegerInterval, VectorBox, MeasureClass, ExplicitSet>;

class BoundedSet {
public:
    static BoundedSet all_of(Space space);
    static BoundedSet integer_interval(Space space, long long radius);
    static BoundedSet vector_box(Space space, Rat radius);
    static BoundedSet measure_class(BoundedSet base_support, Rat gamma);
    static BoundedSet explicit_set(Space space, std::vector<Point> points);

    const Space& space() const { return space_; }
    const BoundDescriptor& descriptor() const { return desc_; }

private:
    BoundedSet(Space s, BoundDescriptor d) : space_(std::move(s)), desc_(std::move(d)) {}
    Space space_;
    BoundDescriptor desc_;
};

bool operator==(const BoundedSet& a, const BoundedSet& b);
inline bool operator!=(const BoundedSet& a, const BoundedSet& b) { return !(a == b); }

// Finitely supported signed measure in canonical form: atoms strictly
// increasing in the point order, no zero weights.
class SignedMeasure {
public:
    using Atom = std::pair<Point, Rat>;

    static SignedMeasure zero(Space space) { return SignedMeasure(std::move(space), {}); }
    static SignedMeasure from_atoms(Space space, std::vector<Atom> atoms);

    const Space& space() const { return space_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }

    std::vector<Point> support() const {
        std::vector<Point> pts;
        pts.reserve(atoms_.size());
        for (const Atom& a : atoms_) pts.push_back(a.first);
        return pts;
    }

    // mu(E) for a finite point set E.
    Rat eval(std::vector<Point> finite_set) const;

private:
    SignedMeasure(Space space, std::vector<Atom> atoms)
        : space_(std::move(space)), atoms_(std::move(atoms)) {}
    Space space_;
    std::vector<Atom> atoms_;
};

int compare_measures(const SignedMeasure& a, const SignedMeasure& b);

inline bool operator==(const SignedMeasure& a, const SignedMeasure& b) {
    return a.space() == b.space() && compare_measures(a, b) == 0;
}
inline bool operator!=(const SignedMeasure& a, const SignedMeasure& b) { return !(a == b); }

SignedMeasure add(const SignedMeasure& a, const SignedMeasure& b);
SignedMeasure scale(const Rat& factor, const SignedMeasure& mu);
Rat total_variation(const SignedMeasure& mu);
SignedMeasure dirac(const Space& space, const Point& x);

inline SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b) { return add(a, b); }
inline SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b) { return add(a, scale(Rat(-1), b)); }
inline SignedMeasure operator*(const Rat& factor, const SignedMeasure& mu) { return scale(factor, mu); }

// mu = positive_part - negative_part, with the canonical Hahn split
// P = {weight > 0}, N = {weight < 0}. Both parts carry positive weights.
struct JordanDecomposition {
    SignedMeasure positive_part;
    SignedMeasure negative_part;
    std::vector<Point> hahn_positive;
    std::vector<Point> hahn_negative;
};

JordanDecomposition jordan_hahn(const SignedMeasure& mu);

// Restriction to a bounded set the measure is supported by; the result
// lives on the subspace carrier. extend_measure is the two-sided inverse.
SignedMeasure restrict_measure(const SignedMeasure& mu, const BoundedSet& region);
SignedMeasure extend_measure(const SignedMeasure& restricted);

bool is_bounded_member(const BoundedSet& bounds, const Point& p);

// Upper bound in the basis for a pair of bounded sets (directedness).
BoundedSet join_bounds(const BoundedSet& a, const BoundedSet& b);

// Basis element covering a finite point family.
BoundedSet basis_cover(const Space& space, const std::vector<Point>& points);

// The class M(B, X, gamma) with B the explicit union support of the atom
// measures of a measure of measures and gamma their largest total variation.
BoundedSet supporting_class(const SignedMeasure& measure_of_measures);

// Largest |coordinate| reachable inside a bounded set of a numeric carrier.
Rat sup_abs_bound(const BoundedSet& bounds);

// A small increasing family of basis sets, for property checks and
// morphism spot checks.
std::vector<BoundedSet> basis_sample(const Space& space, std::size_t scales = 4);

std::string to_string(const Point& p);
std::string to_string(const SignedMeasure& mu);
std::string to_string(const Space& space);
std::string to_string(const BoundedSet& bounds);

// ---------------------------------------------------------------------------
// inline definitions
// ---------------------------------------------------------------------------

inline Point Point::measure(SignedMeasure mu) {
    return Point(Rep(std::make_shared<const SignedMeasure>(std::move(mu))));
}

inline const SignedMeasure& Point::as_measure() const {
    if (kind() != PointKind::Measure) throw KindMismatch("point is not a measure");
    return *std::get<std::shared_ptr<const SignedMeasure>>(rep_);
}

inline int compare_measures(const SignedMeasure& a, const SignedMeasure& b) {
    const auto& xs = a.atoms();
    const auto& ys = b.atoms();
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compare_points(xs[i].first, ys[i].first);
        if (c != 0) return c;
        if (xs[i].second != ys[i].second) return xs[i].second < ys[i].second ? -1 : 1;
    }
    if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
    return 0;
}

inline int compare_points(const Point& a, const Point& b) {
    if (a.kind() != b.kind()) {
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    }
    switch (a.kind()) {
    case PointKind::Integer: {
        const long long x = a.as_integer();
        const long long y = b.as_integer();
        return x < y ? -1 : x > y ? 1 : 0;
    }
    case PointKind::Label: {
        const int c = a.as_label().compare(b.as_label());
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case PointKind::Vector: {
        const auto& xs = a.as_vector();
        const auto& ys = b.as_vector();
        const std::size_t n = std::min(xs.size(), ys.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (xs[i] != ys[i]) return xs[i] < ys[i] ? -1 : 1;
        }
        if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
        return 0;
    }
    case PointKind::Measure:
        return compare_measures(a.as_measure(), b.as_measure());
    }
    return 0;
}

inline Space Space::finite_labeled(std::vector<std::string> labels) {
    if (labels.empty()) throw InvalidArgument("finite labeled space needs at least one label");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::FiniteLabeled;
    impl->labels = std::move(labels);
    return Space(std::move(impl));
}

inline Space Space::integer_line() {
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::IntegerLine;
    return Space(std::move(impl));
}

inline Space Space::rational_vector(int dimension) {
    if (dimension < 1) throw InvalidArgument("vector space dimension must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::RationalVector;
    impl->dimension = dimension;
    return Space(std::move(impl));
}

inline Space Space::measure_space(Space base) {
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::MeasureSpace;
    impl->inner = std::make_shared<const Space>(std::move(base));
    return Space(std::move(impl));
}

inline Space Space::subspace(BoundedSet region) {
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::Subspace;
    impl->region = std::make_shared<const BoundedSet>(std::move(region));
    return Space(std::move(impl));
}

inline const BoundedSet& Space::region() const {
    require(CarrierKind::Subspace, "region");
    return *impl_->region;
}

inline const Space& Space::parent() const {
    return region().space();
}

inline bool Space::contains(const Point& p) const {
    switch (kind()) {
    case CarrierKind::FiniteLabeled:
        return p.kind() == PointKind::Label &&
               std::binary_search(impl_->labels.begin(), impl_->labels.end(), p.as_label());
    case CarrierKind::IntegerLine:
        return p.kind() == PointKind::Integer;
    case CarrierKind::RationalVector:
        return p.kind() == PointKind::Vector &&
               p.as_vector().size() == static_cast<std::size_t>(impl_->dimension);
    case CarrierKind::MeasureSpace:
        return p.kind() == PointKind::Measure && p.as_measure().space() == base();
    case CarrierKind::Subspace:
        return parent().contains(p) && is_bounded_member(region(), p);
    }
    return false;
}

inline bool operator==(const Space& a, const Space& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case CarrierKind::FiniteLabeled:
        return a.labels() == b.labels();
    case CarrierKind::IntegerLine:
        return true;
    case CarrierKind::RationalVector:
        return a.dimension() == b.dimension();
    case CarrierKind::MeasureSpace:
        return a.base() == b.base();
    case CarrierKind::Subspace:
        return a.region() == b.region();
    }
    return false;
}

inline BoundedSet BoundedSet::all_of(Space space) {
    if (space.kind() != CarrierKind::FiniteLabeled && space.kind() != CarrierKind::Subspace) {
        throw InvalidArgument("the whole carrier is bounded only for finite labeled spaces and subspaces");
    }
    return BoundedSet(std::move(space), AllOfSpace{});
}

inline BoundedSet BoundedSet::integer_interval(Space space, long long radius) {
    if (space.kind() != CarrierKind::IntegerLine) throw KindMismatch("integer interval needs the integer line");
    if (radius < 0) throw InvalidArgument("interval radius must be nonnegative");
    return BoundedSet(std::move(space), IntegerInterval{radius});
}

inline BoundedSet BoundedSet::vector_box(Space space, Rat radius) {
    if (space.kind() != CarrierKind::RationalVector) throw KindMismatch("box needs a rational vector space");
    if (radius < 0) throw InvalidArgument("box radius must be nonnegative");
    return BoundedSet(std::move(space), VectorBox{std::move(radius)});
}

inline BoundedSet BoundedSet::measure_class(BoundedSet base_support, Rat gamma) {
    if (gamma <= 0) throw InvalidArgument("total variation bound must be positive");
    Space space = Space::measure_space(base_support.space());
    MeasureClass d{std::make_shared<const BoundedSet>(std::move(base_support)), std::move(gamma)};
    return BoundedSet(std::move(space), std::move(d));
}

inline BoundedSet BoundedSet::explicit_set(Space space, std::vector<Point> points) {
    for (const Point& p : points) {
        if (!space.contains(p)) {
            throw KindMismatch("point " + to_string(p) + " does not belong to " + to_string(space));
        }
    }
    std::sort(points.begin(), points.end(), PointLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return BoundedSet(std::move(space), ExplicitSet{std::move(points)});
}

inline bool operator==(const BoundedSet& a, const BoundedSet& b) {
    if (a.space() != b.space()) return false;
    if (a.descriptor().index() != b.descriptor().index()) return false;
    if (std::holds_alternative<AllOfSpace>(a.descriptor())) return true;
    if (const auto* ia = std::get_if<IntegerInterval>(&a.descriptor())) {
        return ia->radius == std::get<IntegerInterval>(b.descriptor()).radius;
    }
    if (const auto* va = std::get_if<VectorBox>(&a.descriptor())) {
        return va->radius == std::get<VectorBox>(b.descriptor()).radius;
    }
    if (const auto* ma = std::get_if<MeasureClass>(&a.descriptor())) {
        const auto& mb = std::get<MeasureClass>(b.descriptor());
        return ma->max_total_variation == mb.max_total_variation && *ma->support == *mb.support;
    }
    const auto& ea = std::get<ExplicitSet>(a.descriptor());
    const auto& eb = std::get<ExplicitSet>(b.descriptor());
    return ea.points == eb.points;
}

inline SignedMeasure SignedMeasure::from_atoms(Space space, std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
        if (!space.contains(a.first)) {
            throw KindMismatch("atom " + to_string(a.first) + " does not belong to " + to_string(space));
        }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return compare_points(a.first, b.first) < 0; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (Atom& a : atoms) {
        if (!merged.empty() && compare_points(merged.back().first, a.first) == 0) {
            merged.back().second += a.second;
            if (merged.back().second == 0) merged.pop_back();
        } else if (a.second != 0) {
            merged.push_back(std::move(a));
        }
    }
    return SignedMeasure(std::move(space), std::move(merged));
}

inline Rat SignedMeasure::eval(std::vector<Point> finite_set) const {
    std::sort(finite_set.begin(), finite_set.end(), PointLess{});
    finite_set.erase(std::unique(finite_set.begin(), finite_set.end()), finite_set.end());
    Rat sum = 0;
    for (const Atom& a : atoms_) {
        if (std::binary_search(finite_set.begin(), finite_set.end(), a.first, PointLess{})) {
            sum += a.second;
        }
    }
    return sum;
}

inline SignedMeasure add(const SignedMeasure& a, const SignedMeasure& b) {
    if (a.space() != b.space()) throw KindMismatch("cannot add measures on different spaces");
    std::vector<SignedMeasure::Atom> combined = a.atoms();
    combined.insert(combined.end(), b.atoms().begin(), b.atoms().end());
    return SignedMeasure::from_atoms(a.space(), std::move(combined));
}

inline SignedMeasure scale(const Rat& factor, const SignedMeasure& mu) {
    if (factor == 0) return SignedMeasure::zero(mu.space());
    std::vector<SignedMeasure::Atom> atoms = mu.atoms();
    for (auto& a : atoms) a.second *= factor;
    return SignedMeasure::from_atoms(mu.space(), std::move(atoms));
}

inline Rat total_variation(const SignedMeasure& mu) {
    Rat sum = 0;
    for (const auto& a : mu.atoms()) sum += rat_abs(a.second);
    return sum;
}

inline SignedMeasure dirac(const Space& space, const Point& x) {
    return SignedMeasure::from_atoms(space, {{x, Rat(1)}});
}

// Exact recognition: nonnegative weights and total mass exactly 1.
inline bool is_probability(const SignedMeasure& mu) {
    Rat mass = 0;
    for (const auto& a : mu.atoms()) {
        if (a.second < 0) return false;
        mass += a.second;
    }
    return mass == 1;
}

inline JordanDecomposition jordan_hahn(const SignedMeasure& mu) {
    std::vector<SignedMeasure::Atom> pos;
    std::vector<SignedMeasure::Atom> neg;
    std::vector<Point> hahn_pos;
    std::vector<Point> hahn_neg;
    for (const auto& a : mu.atoms()) {
        if (a.second > 0) {
            pos.push_back(a);
            hahn_pos.push_back(a.first);
        } else {
            neg.emplace_back(a.first, Rat(-a.second));
            hahn_neg.push_back(a.first);
        }
    }
    return JordanDecomposition{SignedMeasure::from_atoms(mu.space(), std::move(pos)),
                               SignedMeasure::from_atoms(mu.space(), std::move(neg)),
                               std::move(hahn_pos), std::move(hahn_neg)};
}

inline SignedMeasure restrict_measure(const SignedMeasure& mu, const BoundedSet& region) {
    if (region.space() != mu.space()) throw KindMismatch("restriction set lives on a different space");
    for (const auto& a : mu.atoms()) {
        if (!is_bounded_member(region, a.first)) throw SupportViolation(to_string(a.first));
    }
    return SignedMeasure::from_atoms(Space::subspace(region), mu.atoms());
}

inline SignedMeasure extend_measure(const SignedMeasure& restricted) {
    if (restricted.space().kind() != CarrierKind::Subspace) {
        throw KindMismatch("extend_measure needs a measure on a subspace");
    }
    return SignedMeasure::from_atoms(restricted.space().parent(), restricted.atoms());
}

inline bool is_bounded_member(const BoundedSet& bounds, const Point& p) {
    if (!bounds.space().contains(p)) {
        throw KindMismatch("point " + to_string(p) + " does not belong to " + to_string(bounds.space()));
    }
    if (std::holds_alternative<AllOfSpace>(bounds.descriptor())) {
        return true;
    }
    if (const auto* iv = std::get_if<IntegerInterval>(&bounds.descriptor())) {
        const long long n = p.as_integer();
        return -iv->radius <= n && n <= iv->radius;
    }
    if (const auto* box = std::get_if<VectorBox>(&bounds.descriptor())) {
        for (const Rat& c : p.as_vector()) {
            if (rat_abs(c) > box->radius) return false;
        }
        return true;
    }
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        const SignedMeasure& mu = p.as_measure();
        if (total_variation(mu) > mc->max_total_variation) return false;
        for (const auto& a : mu.atoms()) {
            if (!is_bounded_member(*mc->support, a.first)) return false;
        }
        return true;
    }
    const auto& ex = std::get<ExplicitSet>(bounds.descriptor());
    return std::binary_search(ex.points.begin(), ex.points.end(), p, PointLess{});
}

inline BoundedSet basis_cover(const Space& space, const std::vector<Point>& points) {
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled:
    case CarrierKind::Subspace:
        return BoundedSet::all_of(space);
    case CarrierKind::IntegerLine: {
        long long radius = 0;
        for (const Point& p : points) {
            const long long n = p.as_integer();
            radius = std::max(radius, n < 0 ? -n : n);
        }
        return BoundedSet::integer_interval(space, radius);
    }
    case CarrierKind::RationalVector: {
        Rat radius = 0;
        for (const Point& p : points) {
            for (const Rat& c : p.as_vector()) radius = std::max(radius, rat_abs(c));
        }
        return BoundedSet::vector_box(space, std::move(radius));
    }
    case CarrierKind::MeasureSpace: {
        std::vector<Point> inner;
        Rat gamma = 1;
        for (const Point& p : points) {
            const SignedMeasure& mu = p.as_measure();
            for (const auto& a : mu.atoms()) inner.push_back(a.first);
            gamma = std::max(gamma, total_variation(mu));
        }
        return BoundedSet::measure_class(basis_cover(space.base(), inner), std::move(gamma));
    }
    }
    throw InvalidArgument("unsupported carrier kind");
}

inline BoundedSet supporting_class(const SignedMeasure& measure_of_measures) {
    if (measure_of_measures.space().kind() != CarrierKind::MeasureSpace) {
        throw KindMismatch("supporting_class needs a measure on a measure space");
    }
    const Space& base = measure_of_measures.space().base();
    std::vector<Point> union_support;
    Rat gamma = 0;
    for (const auto& atom : measure_of_measures.atoms()) {
        const SignedMeasure& mu = atom.first.as_measure();
        for (const auto& a : mu.atoms()) union_support.push_back(a.first);
        gamma = std::max(gamma, total_variation(mu));
    }
    if (gamma == 0) gamma = 1;
    return BoundedSet::measure_class(BoundedSet::explicit_set(base, std::move(union_support)),
                                     std::move(gamma));
}

inline BoundedSet join_bounds(const BoundedSet& a, const BoundedSet& b) {
    if (a.space() != b.space()) throw KindMismatch("cannot join bounded sets of different spaces");
    const auto normalize = [](const BoundedSet& s) {
        if (const auto* ex = std::get_if<ExplicitSet>(&s.descriptor())) {
            return basis_cover(s.space(), ex->points);
        }
        return s;
    };
    const BoundedSet na = normalize(a);
    const BoundedSet nb = normalize(b);
    if (std::holds_alternative<AllOfSpace>(na.descriptor())) return na;
    if (const auto* ia = std::get_if<IntegerInterval>(&na.descriptor())) {
        const auto& ib = std::get<IntegerInterval>(nb.descriptor());
        return BoundedSet::integer_interval(na.space(), std::max(ia->radius, ib.radius));
    }
    if (const auto* va = std::get_if<VectorBox>(&na.descriptor())) {
        const auto& vb = std::get<VectorBox>(nb.descriptor());
        return BoundedSet::vector_box(na.space(), std::max(va->radius, vb.radius));
    }
    const auto& ma = std::get<MeasureClass>(na.descriptor());
    const auto& mb = std::get<MeasureClass>(nb.descriptor());
    return BoundedSet::measure_class(join_bounds(*ma.support, *mb.support),
                                     std::max(ma.max_total_variation, mb.max_total_variation));
}

inline Rat sup_abs_bound(const BoundedSet& bounds) {
    if (std::holds_alternative<AllOfSpace>(bounds.descriptor())) {
        if (bounds.space().kind() == CarrierKind::Subspace) {
            return sup_abs_bound(bounds.space().region());
        }
        throw InvalidArgument("no numeric bound for " + to_string(bounds));
    }
    if (const auto* iv = std::get_if<IntegerInterval>(&bounds.descriptor())) {
        return Rat(iv->radius);
    }
    if (const auto* box = std::get_if<VectorBox>(&bounds.descriptor())) {
        return box->radius;
    }
    if (const auto* ex = std::get_if<ExplicitSet>(&bounds.descriptor())) {
        Rat bound = 0;
        for (const Point& p : ex->points) {
            if (p.kind() == PointKind::Integer) {
                const long long n = p.as_integer();
                bound = std::max(bound, Rat(n < 0 ? -n : n));
            } else {
                for (const Rat& c : p.as_vector()) bound = std::max(bound, rat_abs(c));
            }
        }
        return bound;
    }
    throw InvalidArgument("no numeric bound for " + to_string(bounds));
}

inline std::vector<BoundedSet> basis_sample(const Space& space, std::size_t scales) {
    std::vector<BoundedSet> out;
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled:
    case CarrierKind::Subspace:
        out.push_back(BoundedSet::all_of(space));
        break;
    case CarrierKind::IntegerLine: {
        long long radius = 1;
        for (std::size_t i = 0; i < scales; ++i, radius *= 2) {
            out.push_back(BoundedSet::integer_interval(space, radius));
        }
        break;
    }
    case CarrierKind::RationalVector: {
        Rat radius = 1;
        for (std::size_t i = 0; i < scales; ++i, radius *= 2) {
            out.push_back(BoundedSet::vector_box(space, radius));
        }
        break;
    }
    case CarrierKind::MeasureSpace: {
        const std::size_t inner_scales = scales > 1 ? 2 : 1;
        for (const BoundedSet& b : basis_sample(space.base(), inner_scales)) {
            out.push_back(BoundedSet::measure_class(b, Rat(1)));
            out.push_back(BoundedSet::measure_class(b, Rat(4)));
        }
        break;
    }
    }
    return out;
}

inline std::string to_string(const Point& p) {
    switch (p.kind()) {
    case PointKind::Integer:
        return std::to_string(p.as_integer());
    case PointKind::Label:
        return p.as_label();
    case PointKind::Vector: {
        std::string out = "(";
        const auto& v = p.as_vector();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ", ";
            out += to_string(v[i]);
        }
        return out + ")";
    }
    case PointKind::Measure:
        return to_string(p.as_measure());
    }
    return "";
}

inline std::string to_string(const SignedMeasure& mu) {
    std::string out = "{";
    for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(mu.atoms()[i].first) + ": " + to_string(mu.atoms()[i].second);
    }
    return out + "}";
}

inline std::string to_string(const Space& space) {
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled: {
        std::string out = "Labels{";
        for (std::size_t i = 0; i < space.labels().size(); ++i) {
            if (i > 0) out += ", ";
            out += space.labels()[i];
        }
        return out + "}";
    }
    case CarrierKind::IntegerLine:
        return "Z";
    case CarrierKind::RationalVector:
        return "Q^" + std::to_string(space.dimension());
    case CarrierKind::MeasureSpace:
        return "M(" + to_string(space.base()) + ")";
    case CarrierKind::Subspace:
        return to_string(space.parent()) + " | " + to_string(space.region());
    }
    return "";
}

inline std::string to_string(const BoundedSet& bounds) {
    if (std::holds_alternative<AllOfSpace>(bounds.descriptor())) {
        return "all of " + to_string(bounds.space());
    }
    if (const auto* iv = std::get_if<IntegerInterval>(&bounds.descriptor())) {
        return "[-" + std::to_string(iv->radius) + ", " + std::to_string(iv->radius) + "]";
    }
    if (const auto* box = std::get_if<VectorBox>(&bounds.descriptor())) {
        const std::string r = to_string(box->radius);
        return "[-" + r + ", " + r + "]^" + std::to_string(bounds.space().dimension());
    }
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        return "M(" + to_string(*mc->support) + ", " + to_string(mc->max_total_variation) + ")";
    }
    const auto& ex = std::get<ExplicitSet>(bounds.descriptor());
    std::string out = "{";
    for (std::size_t i = 0; i < ex.points.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(ex.points[i]);
    }
    return out + "}";
}

} // namespace finmeas

#endif // FINMEAS_MEASURE_HPP
