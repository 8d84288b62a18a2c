#ifndef FINMEAS_ALGEBRA_HPP
#define FINMEAS_ALGEBRA_HPP

// Algebras for the measure monad: a carrier together with a structure map
// c : M(X) -> X satisfying c(delta_x) = x and c . M(c) = c . kappa.
// Every algebra induces vector operations (x + y = c(delta_x + delta_y),
// a * x = c(a delta_x)), integration of X-valued maps, and barycentres of
// probability measures.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finmeas/monad.hpp"

namespace finmeas {

struct Algebra {
    std::string name;
    Space carrier;
    Morphism structure; // M(carrier) -> carrier

    Point apply(const SignedMeasure& mu) const {
        if (mu.space() != carrier) {
            throw KindMismatch("measure on " + to_string(mu.space()) + " is not a " + name +
                               " algebra argument");
        }
        return structure.map(Point::measure(mu));
    }
};

// Q with c(mu) = integral of the identity.
inline Algebra real_algebra() {
    Space line = Space::rational_line();
    return Algebra{"real", line, lift_real(identity(line))};
}

// Q^n with the componentwise weighted sum.
inline Algebra vector_algebra(int dimension) {
    Space carrier = Space::rational_vector(dimension);
    Space mx = Space::measure_space(carrier);
    Morphism structure{
        mx, carrier,
        [dimension](const Point& p) {
            std::vector<Rat> acc(static_cast<std::size_t>(dimension), Rat(0));
            for (const auto& atom : p.as_measure().atoms()) {
                const auto& v = atom.first.as_vector();
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    Rat term = atom.second * v[i];
                    acc[i] += term;
                }
            }
            return Point::vector(std::move(acc));
        },
        [carrier](const BoundedSet& b) {
            if (const auto* mc = std::get_if<MeasureClass>(&b.descriptor())) {
                Rat r = sup_abs_bound(*mc->support) * mc->max_total_variation;
                return BoundedSet::vector_box(carrier, std::move(r));
            }
            const auto& ex = std::get<ExplicitSet>(b.descriptor());
            Rat r = 0;
            for (const Point& p : ex.points) {
                for (const auto& atom : p.as_measure().atoms()) {
                    Rat tv = total_variation(p.as_measure());
                    for (const Rat& c : atom.first.as_vector()) {
                        r = std::max(r, rat_abs(c) * tv);
                    }
                }
            }
            return BoundedSet::vector_box(carrier, std::move(r));
        },
        "vecsum"};
    return Algebra{"vector", std::move(carrier), std::move(structure)};
}

// M(X) with c = kappa: the free algebra on X.
inline Algebra free_algebra(const Space& base) {
    return Algebra{"free", Space::measure_space(base), kappa_morphism(base)};
}

// Integral of an X-valued morphism: Omega_mu(f) = c(M(f)(mu)).
inline Point integrate(const Algebra& algebra, const Morphism& f, const SignedMeasure& mu) {
    if (f.codomain != algebra.carrier) {
        throw KindMismatch("integrand " + f.name + " does not land in the " + algebra.name + " carrier");
    }
    return algebra.apply(pushforward(f, mu));
}

// f-sharp = c . M(f), the algebra-valued lift of f.
inline Morphism algebra_lift(const Algebra& algebra, const Morphism& f) {
    if (f.codomain != algebra.carrier) {
        throw KindMismatch("cannot lift " + f.name + " into the " + algebra.name + " algebra");
    }
    return compose(algebra.structure, measure_space_morphism(f));
}

inline Point derived_zero(const Algebra& algebra) {
    return algebra.apply(SignedMeasure::zero(algebra.carrier));
}

inline Point derived_add(const Algebra& algebra, const Point& x, const Point& y) {
    return algebra.apply(dirac(algebra.carrier, x) + dirac(algebra.carrier, y));
}

inline Point derived_smul(const Algebra& algebra, const Rat& a, const Point& x) {
    return algebra.apply(scale(a, dirac(algebra.carrier, x)));
}

// x |-> (a * f(x)) + (b * g(x)) computed with the derived operations.
// The bound transformer is available on numeric carriers.
inline Morphism derived_combination(const Algebra& algebra, const Rat& a, const Morphism& f,
                                    const Rat& b, const Morphism& g) {
    if (f.domain != g.domain) throw KindMismatch("derived combination needs a common domain");
    if (f.codomain != algebra.carrier || g.codomain != algebra.carrier) {
        throw KindMismatch("derived combination needs " + algebra.name + "-valued morphisms");
    }
    const Space carrier = algebra.carrier;
    std::function<BoundedSet(const BoundedSet&)> bound;
    if (carrier.kind() == CarrierKind::RationalVector) {
        bound = [a, b, fb = f.bound_transformer, gb = g.bound_transformer, carrier](const BoundedSet& s) {
            Rat r = rat_abs(a) * sup_abs_bound(fb(s)) + rat_abs(b) * sup_abs_bound(gb(s));
            return BoundedSet::vector_box(carrier, std::move(r));
        };
    } else {
        bound = [](const BoundedSet& s) -> BoundedSet {
            throw InvalidArgument("no bound transformer for a derived combination over " + to_string(s));
        };
    }
    return Morphism{f.domain, carrier,
                    [algebra, a, b, fm = f.map, gm = g.map](const Point& p) {
                        return derived_add(algebra, derived_smul(algebra, a, fm(p)),
                                           derived_smul(algebra, b, gm(p)));
                    },
                    std::move(bound),
                    to_string(a) + "(*)" + f.name + " (+) " + to_string(b) + "(*)" + g.name};
}

inline Point barycenter(const Algebra& algebra, const SignedMeasure& mu) {
    if (!is_probability(mu)) {
        throw NotAProbabilityMeasure("barycenter needs nonnegative weights of total mass 1, got " +
                                     to_string(mu));
    }
    return algebra.apply(mu);
}

// The two algebra laws, plus a one-off check that the structure map's
// bound transformer survives its spot check. kappa_fn is replaceable so a
// broken multiplication is detectable here too.
inline LawReport check_algebra_laws(const Algebra& algebra, std::uint64_t seed, std::uint64_t cases,
                                    KappaFn kappa_fn = {}) {
    if (!kappa_fn) kappa_fn = [](const SignedMeasure& m) { return kappa(m); };
    LawReport report;
    report.suite = "algebra laws for " + algebra.name + " on " + to_string(algebra.carrier);
    report.seed = seed;
    report.cases = cases;
    try {
        verify_bornological(algebra.structure);
        ++report.checks;
    } catch (const Error& e) {
        ++report.checks;
        report.failures.push_back(LawFailure{"algebra.bounded_structure", 0, e.what(), "bounded", "unbounded"});
    }
    const Space mx = Space::measure_space(algebra.carrier);
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);

        const Point x = gen_point(rng, algebra.carrier);
        report.check_equal("algebra.unit", i, to_string(x),
                           algebra.apply(dirac(algebra.carrier, x)), x);

        // c(M(c)(MM)) = c(kappa(MM)) on M(M(carrier))
        const SignedMeasure mm = gen_measure(rng, mx);
        std::vector<SignedMeasure::Atom> collapsed;
        collapsed.reserve(mm.atoms().size());
        for (const auto& atom : mm.atoms()) {
            collapsed.emplace_back(algebra.apply(atom.first.as_measure()), atom.second);
        }
        report.check_equal("algebra.mult", i, to_string(mm),
                           algebra.apply(SignedMeasure::from_atoms(algebra.carrier, std::move(collapsed))),
                           algebra.apply(kappa_fn(mm)));
    }
    return report;
}

// phi is a homomorphism iff it commutes with the structure maps; the
// integral form phi(Omega_mu(f)) = Omega_mu(phi . f) is checked as well.
inline LawReport check_homomorphism(const Algebra& from, const Algebra& to, const Morphism& phi,
                                    std::uint64_t seed, std::uint64_t cases) {
    if (phi.domain != from.carrier || phi.codomain != to.carrier) {
        throw KindMismatch("map " + phi.name + " does not connect the carriers");
    }
    LawReport report;
    report.suite = "homomorphism check for " + phi.name;
    report.seed = seed;
    report.cases = cases;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);

        const SignedMeasure mu = gen_measure(rng, from.carrier);
        report.check_equal("hom.structure", i, to_string(mu),
                           phi.map(from.apply(mu)), to.apply(pushforward(phi, mu)));

        const Morphism f = gen_tabulated_endomorphism(rng, from.carrier);
        const SignedMeasure nu = gen_measure(rng, from.carrier);
        report.check_equal("hom.integral", i, to_string(nu),
                           phi.map(integrate(from, f, nu)),
                           integrate(to, compose(phi, f), nu));
    }
    return report;
}

// Barycentres of probability measures stay inside the componentwise
// bounding box of the support (numeric carriers).
inline LawReport check_convexity(const Algebra& algebra, std::uint64_t seed, std::uint64_t cases) {
    if (algebra.carrier.kind() != CarrierKind::RationalVector) {
        throw KindMismatch("convexity check needs a rational vector carrier");
    }
    LawReport report;
    report.suite = "convexity of " + algebra.name + " barycentres";
    report.seed = seed;
    report.cases = cases;
    const std::size_t d = static_cast<std::size_t>(algebra.carrier.dimension());
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);
        const SignedMeasure mu = gen_probability(rng, algebra.carrier);
        const Point bary = barycenter(algebra, mu);
        const auto& b = bary.as_vector();
        for (std::size_t k = 0; k < d; ++k) {
            Rat lo = mu.atoms().front().first.as_vector()[k];
            Rat hi = lo;
            for (const auto& atom : mu.atoms()) {
                const Rat& c = atom.first.as_vector()[k];
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            report.check_true("convexity.box", i, to_string(mu), lo <= b[k] && b[k] <= hi,
                              to_string(b[k]), "[" + to_string(lo) + ", " + to_string(hi) + "]");
        }
    }
    return report;
}

} // namespace finmeas

#endif // FINMEAS_ALGEBRA_HPP
