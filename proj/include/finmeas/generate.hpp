#ifndef FINMEAS_GENERATE_HPP
#define FINMEAS_GENERATE_HPP

// Seeded, platform-independent generation of points, measures and finite
// sets for the property suites. Same seed, same stream, everywhere.

#include <cstdint>
#include <vector>

#include "finmeas/measure.hpp"

namespace finmeas {

// splitmix64; std:: distributions are not reproducible across standard
// libraries, so all randomness goes through this.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive; modulo bias is irrelevant at these sizes
    long long range(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    bool flip() { return (next() & 1) != 0; }
};

// Decorrelated per-case stream.
inline Rng fork_rng(std::uint64_t master_seed, std::uint64_t case_index) {
    Rng mixer(master_seed ^ (case_index * 0xd1b54a32d192ed03ULL + 0x9e3779b97f4a7c15ULL));
    return Rng(mixer.next());
}

// Weights are p/q with |p| <= 8, 1 <= q <= 8.
inline Rat gen_rational(Rng& rng) {
    return make_rational(Int(rng.range(-8, 8)), Int(rng.range(1, 8)));
}

inline Rat gen_nonzero_rational(Rng& rng) {
    for (;;) {
        Rat q = gen_rational(rng);
        if (q != 0) return q;
    }
}

SignedMeasure gen_measure(Rng& rng, const Space& space);
Point sample_point_in(Rng& rng, const BoundedSet& bounds);

inline Point gen_point(Rng& rng, const Space& space) {
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled: {
        const auto& labels = space.labels();
        return Point::label(labels[static_cast<std::size_t>(rng.range(0, static_cast<long long>(labels.size()) - 1))]);
    }
    case CarrierKind::IntegerLine:
        return Point::integer(rng.range(-8, 8));
    case CarrierKind::RationalVector: {
        std::vector<Rat> comps;
        comps.reserve(static_cast<std::size_t>(space.dimension()));
        for (int i = 0; i < space.dimension(); ++i) comps.push_back(gen_rational(rng));
        return Point::vector(std::move(comps));
    }
    case CarrierKind::MeasureSpace:
        return Point::measure(gen_measure(rng, space.base()));
    case CarrierKind::Subspace:
        return sample_point_in(rng, space.region());
    }
    throw InvalidArgument("unsupported carrier kind");
}

// Up to four atoms; zero measures occur (atom count 0 or cancelling merges).
inline SignedMeasure gen_measure(Rng& rng, const Space& space) {
    const long long n = rng.range(0, 4);
    std::vector<SignedMeasure::Atom> atoms;
    for (long long i = 0; i < n; ++i) {
        atoms.emplace_back(gen_point(rng, space), gen_nonzero_rational(rng));
    }
    return SignedMeasure::from_atoms(space, std::move(atoms));
}

// Measure supported by `support` with total variation at most max_tv.
inline SignedMeasure gen_measure_in(Rng& rng, const BoundedSet& support, const Rat& max_tv) {
    if (max_tv <= 0) throw InvalidArgument("total variation budget must be positive");
    const long long n = rng.range(0, 4);
    std::vector<SignedMeasure::Atom> atoms;
    for (long long i = 0; i < n; ++i) {
        atoms.emplace_back(sample_point_in(rng, support), gen_nonzero_rational(rng));
    }
    SignedMeasure mu = SignedMeasure::from_atoms(support.space(), std::move(atoms));
    const Rat tv = total_variation(mu);
    if (tv > max_tv) {
        Rat shrink = max_tv / tv;
        shrink *= make_rational(Int(rng.range(1, 8)), Int(8));
        mu = scale(shrink, mu);
    }
    return mu;
}

inline Point sample_point_in(Rng& rng, const BoundedSet& bounds) {
    if (std::holds_alternative<AllOfSpace>(bounds.descriptor())) {
        if (bounds.space().kind() == CarrierKind::Subspace) {
            return sample_point_in(rng, bounds.space().region());
        }
        return gen_point(rng, bounds.space());
    }
    if (const auto* iv = std::get_if<IntegerInterval>(&bounds.descriptor())) {
        return Point::integer(rng.range(-iv->radius, iv->radius));
    }
    if (const auto* box = std::get_if<VectorBox>(&bounds.descriptor())) {
        std::vector<Rat> comps;
        comps.reserve(static_cast<std::size_t>(bounds.space().dimension()));
        for (int i = 0; i < bounds.space().dimension(); ++i) {
            Rat c = box->radius * make_rational(Int(rng.range(-8, 8)), Int(8));
            comps.push_back(std::move(c));
        }
        return Point::vector(std::move(comps));
    }
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        return Point::measure(gen_measure_in(rng, *mc->support, mc->max_total_variation));
    }
    const auto& ex = std::get<ExplicitSet>(bounds.descriptor());
    if (ex.points.empty()) throw InvalidArgument("cannot sample from an empty set");
    return ex.points[static_cast<std::size_t>(rng.range(0, static_cast<long long>(ex.points.size()) - 1))];
}

// Probability measure (nonnegative weights, mass exactly 1) supported by
// `support`; needs max_tv >= 1 to fit the class.
inline SignedMeasure gen_probability_in(Rng& rng, const BoundedSet& support) {
    const long long n = rng.range(1, 4);
    std::vector<SignedMeasure::Atom> atoms;
    for (long long i = 0; i < n; ++i) {
        atoms.emplace_back(sample_point_in(rng, support),
                           make_rational(Int(rng.range(1, 8)), Int(rng.range(1, 8))));
    }
    SignedMeasure mu = SignedMeasure::from_atoms(support.space(), std::move(atoms));
    const Rat mass = mu.eval(mu.support());
    return scale(Rat(1) / mass, mu);
}

inline SignedMeasure gen_probability(Rng& rng, const Space& space) {
    const long long n = rng.range(1, 4);
    std::vector<SignedMeasure::Atom> atoms;
    for (long long i = 0; i < n; ++i) {
        atoms.emplace_back(gen_point(rng, space),
                           make_rational(Int(rng.range(1, 8)), Int(rng.range(1, 8))));
    }
    SignedMeasure mu = SignedMeasure::from_atoms(space, std::move(atoms));
    const Rat mass = mu.eval(mu.support());
    return scale(Rat(1) / mass, mu);
}

// Random subset of a point family (each element kept with probability 1/2).
inline std::vector<Point> gen_subset(Rng& rng, const std::vector<Point>& family) {
    std::vector<Point> out;
    for (const Point& p : family) {
        if (rng.flip()) out.push_back(p);
    }
    return out;
}

} // namespace finmeas

#endif // FINMEAS_GENERATE_HPP
