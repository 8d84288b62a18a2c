#ifndef FINMEAS_MONAD_HPP
#define FINMEAS_MONAD_HPP

// The measure monad: unit delta (Dirac), multiplication kappa (weighted
// superposition of the atom measures), the functor action on morphisms,
// and the embedding of formal linear combinations. A weighted sum of the
// atom measures evaluates every finite set the same way as integrating
// its evaluation map, which is the identity the test oracles recompute.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "finmeas/generate.hpp"
#include "finmeas/law_report.hpp"
#include "finmeas/measure.hpp"
#include "finmeas/morphism.hpp"

namespace finmeas {

// kappa(MM) = sum_j W_j * mu_j over the atoms (mu_j, W_j) of MM. Works at
// any nesting level: the base may itself be a measure space.
inline SignedMeasure kappa(const SignedMeasure& measure_of_measures) {
    if (measure_of_measures.space().kind() != CarrierKind::MeasureSpace) {
        throw KindMismatch("kappa needs a measure on a measure space");
    }
    const Space& base = measure_of_measures.space().base();
    SignedMeasure out = SignedMeasure::zero(base);
    for (const auto& atom : measure_of_measures.atoms()) {
        out = add(out, scale(atom.second, atom.first.as_measure()));
    }
    return out;
}

// Functor action on measures, i.e. the pushforward.
inline SignedMeasure map_measure(const Morphism& f, const SignedMeasure& mu) {
    return pushforward(f, mu);
}

// Support bound of a bounded set of measures, as a bounded set of the base.
inline BoundedSet measure_support_bound(const BoundedSet& bounds) {
    if (const auto* mc = std::get_if<MeasureClass>(&bounds.descriptor())) {
        return *mc->support;
    }
    if (const auto* ex = std::get_if<ExplicitSet>(&bounds.descriptor())) {
        const Space& base = bounds.space().base();
        std::vector<Point> support;
        for (const Point& p : ex->points) {
            for (const auto& a : p.as_measure().atoms()) support.push_back(a.first);
        }
        return BoundedSet::explicit_set(base, std::move(support));
    }
    throw InvalidArgument("no support bound for " + to_string(bounds));
}

// x |-> delta_x; a Dirac at a point of B has variation 1 and support in B.
inline Morphism dirac_morphism(const Space& space) {
    Space mx = Space::measure_space(space);
    return Morphism{space, std::move(mx),
                    [space](const Point& p) { return Point::measure(dirac(space, p)); },
                    [](const BoundedSet& b) { return BoundedSet::measure_class(b, Rat(1)); },
                    "delta"};
}

// kappa as a morphism M(M(X)) -> M(X); a class with inner support B, inner
// variation gamma and outer variation delta lands in M(B, gamma * delta).
inline Morphism kappa_morphism(const Space& space) {
    Space mx = Space::measure_space(space);
    Space mmx = Space::measure_space(mx);
    return Morphism{std::move(mmx), mx,
                    [](const Point& p) { return Point::measure(kappa(p.as_measure())); },
                    [mx](const BoundedSet& b) {
                        if (const auto* mc = std::get_if<MeasureClass>(&b.descriptor())) {
                            Rat gamma = measure_tv_bound(*mc->support);
                            BoundedSet base_support = measure_support_bound(*mc->support);
                            Rat product = gamma * mc->max_total_variation;
                            return BoundedSet::measure_class(std::move(base_support), std::move(product));
                        }
                        const auto& ex = std::get<ExplicitSet>(b.descriptor());
                        std::vector<Point> images;
                        images.reserve(ex.points.size());
                        for (const Point& p : ex.points) {
                            images.push_back(Point::measure(kappa(p.as_measure())));
                        }
                        return BoundedSet::explicit_set(mx, std::move(images));
                    },
                    "kappa"};
}

// Functor action as a morphism M(X) -> M(Y); pushforward is a contraction,
// so a class M(B, gamma) lands in M(f(B), gamma).
inline Morphism measure_space_morphism(const Morphism& f) {
    Space mx = Space::measure_space(f.domain);
    Space my = Space::measure_space(f.codomain);
    return Morphism{std::move(mx), my,
                    [f](const Point& p) { return Point::measure(pushforward(f, p.as_measure())); },
                    [f, my](const BoundedSet& b) {
                        if (const auto* mc = std::get_if<MeasureClass>(&b.descriptor())) {
                            return BoundedSet::measure_class(f.bound_transformer(*mc->support),
                                                             mc->max_total_variation);
                        }
                        const auto& ex = std::get<ExplicitSet>(b.descriptor());
                        std::vector<Point> images;
                        images.reserve(ex.points.size());
                        for (const Point& p : ex.points) {
                            images.push_back(Point::measure(pushforward(f, p.as_measure())));
                        }
                        return BoundedSet::explicit_set(my, std::move(images));
                    },
                    "M(" + f.name + ")"};
}

// Integration of a real-valued morphism as a morphism M(X) -> Q; over
// M(B, gamma) the integral is bounded by sup|f on B| * gamma.
inline Morphism lift_real(const Morphism& f) {
    if (f.codomain != Space::rational_line()) {
        throw KindMismatch("lift needs a real-valued morphism");
    }
    Space mx = Space::measure_space(f.domain);
    Space line = f.codomain;
    return Morphism{std::move(mx), line,
                    [f](const Point& p) { return real_point(integrate_real(f, p.as_measure())); },
                    [f, line](const BoundedSet& b) {
                        if (const auto* mc = std::get_if<MeasureClass>(&b.descriptor())) {
                            Rat r = sup_abs_bound(f.bound_transformer(*mc->support)) * mc->max_total_variation;
                            return BoundedSet::vector_box(line, std::move(r));
                        }
                        const auto& ex = std::get<ExplicitSet>(b.descriptor());
                        Rat r = 0;
                        for (const Point& p : ex.points) {
                            r = std::max(r, rat_abs(integrate_real(f, p.as_measure())));
                        }
                        return BoundedSet::vector_box(line, std::move(r));
                    },
                    f.name + "#"};
}

// Formal linear combination over a space (an element of the free vector
// space), kept in the same canonical form as a measure's atom list.
struct FormalLinComb {
    Space space;
    std::vector<std::pair<Point, Rat>> terms; // sorted by point, nonzero

    static FormalLinComb make(Space space, std::vector<std::pair<Point, Rat>> terms) {
        for (const auto& t : terms) {
            if (!space.contains(t.first)) {
                throw KindMismatch("term " + to_string(t.first) + " does not belong to " + to_string(space));
            }
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return compare_points(a.first, b.first) < 0; });
        std::vector<std::pair<Point, Rat>> merged;
        for (auto& t : terms) {
            if (!merged.empty() && compare_points(merged.back().first, t.first) == 0) {
                merged.back().second += t.second;
                if (merged.back().second == 0) merged.pop_back();
            } else if (t.second != 0) {
                merged.push_back(std::move(t));
            }
        }
        return FormalLinComb{std::move(space), std::move(merged)};
    }
};

inline bool operator==(const FormalLinComb& a, const FormalLinComb& b) {
    if (a.space != b.space || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first || a.terms[i].second != b.terms[i].second) return false;
    }
    return true;
}

// Formal combination of formal combinations over a common base.
struct NestedLinComb {
    Space base;
    std::vector<std::pair<FormalLinComb, Rat>> terms;
};

inline FormalLinComb unit_formal(const Space& space, const Point& x) {
    return FormalLinComb::make(space, {{x, Rat(1)}});
}

// sum_i a_i (sum_j b_ij x_ij) |-> sum_ij (a_i b_ij) x_ij
inline FormalLinComb flatten_formal(const NestedLinComb& nested) {
    std::vector<std::pair<Point, Rat>> terms;
    for (const auto& [inner, a] : nested.terms) {
        for (const auto& [x, b] : inner.terms) {
            Rat w = a * b;
            terms.emplace_back(x, std::move(w));
        }
    }
    return FormalLinComb::make(nested.base, std::move(terms));
}

// sum a_i x_i |-> sum a_i delta_{x_i}
inline SignedMeasure delta_embed(const FormalLinComb& lin) {
    return SignedMeasure::from_atoms(lin.space, lin.terms);
}

// Embeds each inner combination, then the outer one, landing in M(M(X)).
inline SignedMeasure delta_embed_nested(const NestedLinComb& nested) {
    Space mx = Space::measure_space(nested.base);
    std::vector<SignedMeasure::Atom> atoms;
    atoms.reserve(nested.terms.size());
    for (const auto& [inner, a] : nested.terms) {
        atoms.emplace_back(Point::measure(delta_embed(inner)), a);
    }
    return SignedMeasure::from_atoms(std::move(mx), std::move(atoms));
}

inline FormalLinComb gen_formal(Rng& rng, const Space& space) {
    const long long n = rng.range(0, 4);
    std::vector<std::pair<Point, Rat>> terms;
    for (long long i = 0; i < n; ++i) {
        terms.emplace_back(gen_point(rng, space), gen_nonzero_rational(rng));
    }
    return FormalLinComb::make(space, std::move(terms));
}

inline NestedLinComb gen_nested(Rng& rng, const Space& base) {
    const long long n = rng.range(0, 4);
    NestedLinComb nested{base, {}};
    for (long long i = 0; i < n; ++i) {
        nested.terms.emplace_back(gen_formal(rng, base), gen_nonzero_rational(rng));
    }
    return nested;
}

// Replaceable multiplication, so the law suite can be pointed at a broken
// kappa and must then fail.
using KappaFn = std::function<SignedMeasure(const SignedMeasure&)>;

inline LawReport check_monad_laws(const Space& base, std::uint64_t seed, std::uint64_t cases,
                                  KappaFn kappa_fn = {}) {
    if (!kappa_fn) kappa_fn = [](const SignedMeasure& m) { return kappa(m); };
    LawReport report;
    report.suite = "monad laws on " + to_string(base);
    report.seed = seed;
    report.cases = cases;
    const Space mx = Space::measure_space(base);
    const Space mmx = Space::measure_space(mx);
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);
        const SignedMeasure mu = gen_measure(rng, base);

        // kappa(delta_{MX}(mu)) = mu
        report.check_equal("kappa.left_unit", i, to_string(mu),
                           kappa_fn(dirac(mx, Point::measure(mu))), mu);

        // kappa(M(delta_X)(mu)) = mu
        report.check_equal("kappa.right_unit", i, to_string(mu),
                           kappa_fn(pushforward(dirac_morphism(base), mu)), mu);

        // kappa . kappa_{MX} = kappa . M(kappa_X) on M(M(M(X)))
        const SignedMeasure mmm = gen_measure(rng, mmx);
        std::vector<SignedMeasure::Atom> mapped;
        mapped.reserve(mmm.atoms().size());
        for (const auto& atom : mmm.atoms()) {
            mapped.emplace_back(Point::measure(kappa_fn(atom.first.as_measure())), atom.second);
        }
        report.check_equal("kappa.assoc", i, to_string(mmm),
                           kappa_fn(kappa_fn(mmm)),
                           kappa_fn(SignedMeasure::from_atoms(mx, std::move(mapped))));

        // M(f) . kappa = kappa . M(M(f)) for a random endomorphism f
        const Morphism f = gen_tabulated_endomorphism(rng, base);
        const SignedMeasure mm = gen_measure(rng, mx);
        std::vector<SignedMeasure::Atom> inner_mapped;
        inner_mapped.reserve(mm.atoms().size());
        for (const auto& atom : mm.atoms()) {
            inner_mapped.emplace_back(Point::measure(pushforward(f, atom.first.as_measure())), atom.second);
        }
        report.check_equal("kappa.naturality", i, to_string(mm),
                           pushforward(f, kappa_fn(mm)),
                           kappa_fn(SignedMeasure::from_atoms(mx, std::move(inner_mapped))));
    }
    return report;
}

// The embedding of formal combinations commutes with the units and the
// multiplications of the two structures.
inline LawReport check_delta_embedding(const Space& base, std::uint64_t seed, std::uint64_t cases) {
    LawReport report;
    report.suite = "formal combination embedding into measures on " + to_string(base);
    report.seed = seed;
    report.cases = cases;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);

        const Point x = gen_point(rng, base);
        report.check_equal("delta_embed.unit", i, to_string(x),
                           delta_embed(unit_formal(base, x)), dirac(base, x));

        const NestedLinComb nested = gen_nested(rng, base);
        report.check_equal("delta_embed.mult", i, to_string(delta_embed_nested(nested)),
                           delta_embed(flatten_formal(nested)),
                           kappa(delta_embed_nested(nested)));
    }
    return report;
}

} // namespace finmeas

#endif // FINMEAS_MONAD_HPP
