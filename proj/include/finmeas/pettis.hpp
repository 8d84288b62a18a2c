#ifndef FINMEAS_PETTIS_HPP
#define FINMEAS_PETTIS_HPP

// Weak-style vector integration on Q^n: a candidate integral is accepted
// when phi(x) = integral of phi . f for the supplied linear functionals.
// The coordinatewise construction always satisfies the identity, and the
// standard projections separate points, so it is the unique such vector.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finmeas/algebra.hpp"
#include "finmeas/generate.hpp"
#include "finmeas/law_report.hpp"
#include "finmeas/monad.hpp"
#include "finmeas/morphism.hpp"

namespace finmeas {

// phi(x) = sum_i coefficients[i] * x_i on Q^n.
struct Functional {
    std::vector<Rat> coefficients;

    int dimension() const { return static_cast<int>(coefficients.size()); }

    Rat apply(const Point& v) const {
        const auto& x = v.as_vector();
        if (x.size() != coefficients.size()) {
            throw KindMismatch("functional of dimension " + std::to_string(coefficients.size()) +
                               " applied to a vector of dimension " + std::to_string(x.size()));
        }
        Rat sum = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rat term = coefficients[i] * x[i];
            sum += term;
        }
        return sum;
    }

    Morphism as_morphism() const {
        const Space domain = Space::rational_vector(dimension());
        Space line = Space::rational_line();
        Rat norm = 0;
        for (const Rat& c : coefficients) norm += rat_abs(c);
        return Morphism{domain, line,
                        [*this](const Point& p) { return real_point(apply(p)); },
                        [norm, line](const BoundedSet& b) {
                            Rat r = norm * sup_abs_bound(b);
                            return BoundedSet::vector_box(line, std::move(r));
                        },
                        "phi"};
    }
};

inline std::string to_string(const Functional& phi) {
    std::string out = "phi[";
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(phi.coefficients[i]);
    }
    return out + "]";
}

inline std::vector<Functional> standard_basis_functionals(int dimension) {
    std::vector<Functional> family;
    family.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(dimension), Rat(0));
        coeffs[static_cast<std::size_t>(i)] = 1;
        family.push_back(Functional{std::move(coeffs)});
    }
    return family;
}

inline Functional gen_functional(Rng& rng, int dimension) {
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) coeffs.push_back(gen_rational(rng));
    return Functional{std::move(coeffs)};
}

// Rank of the coefficient matrix over Q (exact Gaussian elimination); the
// family separates points of Q^n iff the rank is n.
inline int functional_rank(const std::vector<Functional>& family, int dimension) {
    std::vector<std::vector<Rat>> rows;
    for (const Functional& phi : family) {
        if (phi.dimension() != dimension) {
            throw KindMismatch("functional dimension does not match the space");
        }
        rows.push_back(phi.coefficients);
    }
    int rank = 0;
    const std::size_t d = static_cast<std::size_t>(dimension);
    for (std::size_t col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const std::vector<Rat>& lead = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / lead[col];
            for (std::size_t c = col; c < d; ++c) {
                Rat t = factor * lead[c];
                rows[r][c] -= t;
            }
        }
        ++rank;
    }
    return rank;
}

inline bool separates_points(const std::vector<Functional>& family, int dimension) {
    return functional_rank(family, dimension) == dimension;
}

// Coordinatewise integral: the i-th coordinate is the integral of the i-th
// component of f. Deliberately routed through scalar integration of the
// projections, not through vector summation.
inline Point pettis_integral(int dimension, const Morphism& f, const SignedMeasure& mu) {
    const Space codomain = Space::rational_vector(dimension);
    if (f.codomain != codomain) {
        throw KindMismatch("integrand " + f.name + " does not land in " + to_string(codomain));
    }
    if (f.domain != mu.space()) {
        throw KindMismatch("measure on " + to_string(mu.space()) + " cannot integrate " + f.name);
    }
    std::vector<Rat> coords;
    coords.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
        coords.push_back(integrate_real(compose(coordinate_projection(codomain, i), f), mu));
    }
    return Point::vector(std::move(coords));
}

// Checks phi(candidate) = integral of phi . f for every supplied phi. An
// empty or non-separating family is flagged: it cannot pin the candidate.
inline LawReport verify_pettis(const Point& candidate, const Morphism& f, const SignedMeasure& mu,
                               const std::vector<Functional>& functionals) {
    if (f.codomain.kind() != CarrierKind::RationalVector) {
        throw KindMismatch("weak integration needs a rational vector codomain");
    }
    const int n = f.codomain.dimension();
    LawReport report;
    report.suite = "weak integral identity for " + f.name;
    report.cases = 1;
    for (const Functional& phi : functionals) {
        report.check_equal("pettis.identity", 0, to_string(mu) + " ; " + to_string(phi),
                           phi.apply(candidate),
                           integrate_real(compose(phi.as_morphism(), f), mu));
    }
    if (functionals.empty()) {
        report.notes.push_back("empty functional family: vacuous pass, does not separate points");
    } else if (!separates_points(functionals, n)) {
        report.notes.push_back("functional family does not separate points of Q^" + std::to_string(n) +
                               "; a passing candidate need not be unique");
    }
    return report;
}

namespace detail {

inline Morphism gen_tabulated_into(Rng& rng, const Space& domain, const Space& codomain) {
    std::vector<std::pair<Point, Point>> table;
    const long long entries = rng.range(1, 4);
    for (long long i = 0; i < entries; ++i) {
        table.emplace_back(gen_point(rng, domain), gen_point(rng, codomain));
    }
    return tabulated_morphism("tab", domain, codomain, std::move(table), gen_point(rng, codomain));
}

} // namespace detail

// The structure map mu |-> coordinatewise integral of the identity.
inline Algebra pettis_algebra(int dimension) {
    Space carrier = Space::rational_vector(dimension);
    Space mx = Space::measure_space(carrier);
    Morphism structure{
        std::move(mx), carrier,
        [dimension, carrier](const Point& p) {
            return pettis_integral(dimension, identity(carrier), p.as_measure());
        },
        [dimension, carrier](const BoundedSet& b) {
            if (const auto* mc = std::get_if<MeasureClass>(&b.descriptor())) {
                Rat r = sup_abs_bound(*mc->support) * mc->max_total_variation;
                return BoundedSet::vector_box(carrier, std::move(r));
            }
            const auto& ex = std::get<ExplicitSet>(b.descriptor());
            Rat r = 0;
            for (const Point& p : ex.points) {
                const Point image = pettis_integral(dimension, identity(carrier), p.as_measure());
                for (const Rat& c : image.as_vector()) r = std::max(r, rat_abs(c));
            }
            return BoundedSet::vector_box(carrier, std::move(r));
        },
        "pettis"};
    return Algebra{"pettis", std::move(carrier), std::move(structure)};
}

// Constructive content of the equivalence between the four "enough weak
// integrals" conditions: the Jordan-split route, the restriction route and
// the pushforward route all produce vectors passing the defining identity
// against a separating family, and agree with the direct construction.
inline LawReport enough_pettis_equivalence_check(int dimension, std::uint64_t seed,
                                                 std::uint64_t cases) {
    if (cases < 1) throw InvalidArgument("need at least one case");
    LawReport report;
    report.suite = "weak-integral equivalence routes on Q^" + std::to_string(dimension);
    report.seed = seed;
    report.cases = cases;
    const Space X = Space::rational_vector(dimension);
    const Space T = Space::integer_line();
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = fork_rng(seed, i);

        std::vector<Functional> family = standard_basis_functionals(dimension);
        family.push_back(gen_functional(rng, dimension));
        family.push_back(gen_functional(rng, dimension));

        const Morphism f = detail::gen_tabulated_into(rng, T, X);
        const SignedMeasure mu = gen_measure(rng, T);

        const auto check_candidate = [&](const std::string& law, const Point& candidate,
                                         const Morphism& g, const SignedMeasure& m) {
            for (const Functional& phi : family) {
                report.check_equal(law, i, to_string(m) + " ; " + to_string(phi),
                                   phi.apply(candidate),
                                   integrate_real(compose(phi.as_morphism(), g), m));
            }
        };

        // nonnegative parts first, then their difference
        const JordanDecomposition jd = jordan_hahn(mu);
        const Point plus_point = pettis_integral(dimension, f, jd.positive_part);
        const Point minus_point = pettis_integral(dimension, f, jd.negative_part);
        const auto& plus = plus_point.as_vector();
        const auto& minus = minus_point.as_vector();
        std::vector<Rat> diff;
        diff.reserve(plus.size());
        for (std::size_t k = 0; k < plus.size(); ++k) {
            Rat d = plus[k] - minus[k];
            diff.push_back(std::move(d));
        }
        const Point via_jordan = Point::vector(std::move(diff));
        check_candidate("pettis.jordan_route", via_jordan, f, mu);
        report.check_equal("pettis.jordan_agreement", i, to_string(mu), via_jordan,
                           pettis_integral(dimension, f, mu));

        // restrict to a bounded support, integrate the inclusion
        const SignedMeasure nu = gen_measure(rng, X);
        const BoundedSet cover = basis_cover(X, nu.support());
        const SignedMeasure restricted = restrict_measure(nu, cover);
        const Point via_restriction = pettis_integral(dimension, inclusion(cover), restricted);
        check_candidate("pettis.restriction_route", via_restriction, identity(X), nu);

        // push the measure forward, integrate the identity
        const Point via_pushforward =
            pettis_integral(dimension, identity(X), pushforward(f, mu));
        check_candidate("pettis.pushforward_route", via_pushforward, f, mu);

        // sup-norm bound of the structure map over a variation class
        const BoundedSet box = BoundedSet::vector_box(X, Rat(rng.range(1, 8)));
        const Rat gamma = make_rational(Int(rng.range(1, 16)), Int(rng.range(1, 4)));
        const SignedMeasure bounded_mu = gen_measure_in(rng, box, gamma);
        const Point value = pettis_integral(dimension, identity(X), bounded_mu);
        Rat norm = 0;
        for (const Rat& c : value.as_vector()) norm = std::max(norm, rat_abs(c));
        Rat budget = gamma * sup_abs_bound(box);
        report.check_true("pettis.norm_bound", i, to_string(bounded_mu), norm <= budget,
                          to_string(norm), "<= " + to_string(budget));
    }
    return report;
}

} // namespace finmeas

#endif // FINMEAS_PETTIS_HPP
