#include <catch2/catch_amalgamated.hpp>

#include "finmeas/algebra.hpp"
#include "finmeas/generate.hpp"
#include "finmeas/pettis.hpp"
#include "oracles.hpp"

using namespace finmeas;

TEST_CASE("a two-atom weak integral computed by hand") {
    const Space line = Space::integer_line();
    const Morphism f = tabulated_morphism(
        "f", line, Space::rational_vector(2),
        {{Point::integer(1), Point::vector({Rat(1), Rat(0)})},
         {Point::integer(2), Point::vector({Rat(0), Rat(2)})}},
        Point::vector({Rat(0), Rat(0)}));
    const SignedMeasure uniform = SignedMeasure::from_atoms(
        line,
        {{Point::integer(1), make_rational(1, 2)}, {Point::integer(2), make_rational(1, 2)}});
    const Point x = pettis_integral(2, f, uniform);
    CHECK(x == Point::vector({make_rational(1, 2), Rat(1)}));
    // the defining identity holds for every functional we throw at it
    Rng rng{107};
    std::vector<Functional> family = standard_basis_functionals(2);
    for (int i = 0; i < 6; ++i) family.push_back(gen_functional(rng, 2));
    const LawReport report = verify_pettis(x, f, uniform, family);
    INFO(to_json(report).dump(2));
    CHECK(report.passed());
}

TEST_CASE("functionals pair exactly and reject wrong arity") {
    const Functional phi{{Rat(2), make_rational(-1, 2)}};
    CHECK(phi.apply(Point::vector({Rat(3), Rat(4)})) == Rat(4));
    CHECK_THROWS_AS(phi.apply(Point::vector({Rat(3)})), KindMismatch);
    CHECK(to_string(phi) == "phi[2, -1/2]");
}

TEST_CASE("rank computation finds separating families exactly") {
    CHECK(functional_rank(standard_basis_functionals(3), 3) == 3);
    CHECK(separates_points(standard_basis_functionals(3), 3));
    // two proportional functionals span one dimension
    const std::vector<Functional> degenerate{
        Functional{{Rat(1), Rat(2)}}, Functional{{Rat(2), Rat(4)}}};
    CHECK(functional_rank(degenerate, 2) == 1);
    CHECK_FALSE(separates_points(degenerate, 2));
    // rationally independent rows
    const std::vector<Functional> mixed{
        Functional{{make_rational(1, 2), Rat(1)}}, Functional{{Rat(1), make_rational(1, 3)}}};
    CHECK(functional_rank(mixed, 2) == 2);
    CHECK(separates_points({}, 1) == false);
}

TEST_CASE("pettis verification flags non-separating families in notes") {
    const Space line = Space::integer_line();
    const Morphism f = tabulated_morphism(
        "f", line, Space::rational_vector(2), {}, Point::vector({Rat(0), Rat(0)}));
    const SignedMeasure zero = SignedMeasure::zero(line);
    const Point origin = Point::vector({Rat(0), Rat(0)});
    const LawReport vacuous = verify_pettis(origin, f, zero, {});
    CHECK(vacuous.passed());
    REQUIRE(!vacuous.notes.empty());
    // a wrong candidate sneaks past a non-separating family: uniqueness is lost
    const std::vector<Functional> only_first{Functional{{Rat(1), Rat(0)}}};
    const Point wrong = Point::vector({Rat(0), Rat(99)});
    const LawReport sneaky = verify_pettis(wrong, f, zero, only_first);
    CHECK(sneaky.passed());
    CHECK(!sneaky.notes.empty());
    // with a separating family the wrong candidate is caught
    const LawReport caught = verify_pettis(wrong, f, zero, standard_basis_functionals(2));
    CHECK_FALSE(caught.passed());
}

TEST_CASE("the weak integral agrees with the vector structure map") {
    Rng rng{109};
    for (int dim = 1; dim <= 4; ++dim) {
        const Space qn = Space::rational_vector(dim);
        const Algebra vec = vector_algebra(dim);
        const Morphism id = identity(qn);
        for (int i = 0; i < 100; ++i) {
            const SignedMeasure mu = gen_measure(rng, qn);
            CHECK(pettis_integral(dim, id, mu) == vec.apply(mu));
        }
    }
}

TEST_CASE("weak integration is linear in the measure") {
    Rng rng{113};
    const Space line = Space::integer_line();
    const Space q2 = Space::rational_vector(2);
    const Algebra vec = vector_algebra(2);
    for (int i = 0; i < 100; ++i) {
        const Morphism f = detail::gen_tabulated_into(rng, line, q2);
        const SignedMeasure mu = gen_measure(rng, line);
        const SignedMeasure nu = gen_measure(rng, line);
        const Rat a = gen_rational(rng);
        const Point lhs = pettis_integral(2, f, a * mu + nu);
        const Point rhs = derived_add(
            vec, derived_smul(vec, a, pettis_integral(2, f, mu)), pettis_integral(2, f, nu));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("defining identity holds on random instances with random functionals") {
    Rng rng{127};
    for (int i = 0; i < 200; ++i) {
        const int dim = static_cast<int>(rng.range(1, 4));
        const Space line = Space::integer_line();
        const Space qn = Space::rational_vector(dim);
        const Morphism f = detail::gen_tabulated_into(rng, line, qn);
        const SignedMeasure mu = gen_measure(rng, line);
        const Point x = pettis_integral(dim, f, mu);
        std::vector<Functional> family = standard_basis_functionals(dim);
        for (int j = 0; j < 8; ++j) family.push_back(gen_functional(rng, dim));
        const LawReport report = verify_pettis(x, f, mu, family);
        INFO(to_json(report).dump(2));
        CHECK(report.passed());
    }
}

TEST_CASE("equivalence-route suites pass in low dimensions") {
    for (int dim = 1; dim <= 3; ++dim) {
        const LawReport report = enough_pettis_equivalence_check(dim, 1234, 120);
        INFO(to_json(report).dump(2));
        CHECK(report.passed());
        CHECK(report.failures.empty());
    }
}

TEST_CASE("the weak-integral algebra satisfies the algebra laws") {
    for (int dim = 1; dim <= 3; ++dim) {
        const LawReport report = check_algebra_laws(pettis_algebra(dim), 555, 120);
        INFO(to_json(report).dump(2));
        CHECK(report.passed());
    }
}

TEST_CASE("the weak-integral algebra equals the vector algebra pointwise") {
    Rng rng{131};
    const Algebra p = pettis_algebra(3);
    const Algebra v = vector_algebra(3);
    const Space q3 = Space::rational_vector(3);
    for (int i = 0; i < 150; ++i) {
        const SignedMeasure mu = gen_measure(rng, q3);
        CHECK(p.apply(mu) == v.apply(mu));
    }
}

TEST_CASE("integral arity errors are caught") {
    const Space line = Space::integer_line();
    const Morphism f = tabulated_morphism(
        "f", line, Space::rational_vector(2), {}, Point::vector({Rat(0), Rat(0)}));
    const SignedMeasure mu = dirac(line, Point::integer(0));
    CHECK_THROWS_AS(pettis_integral(3, f, mu), KindMismatch);
    CHECK_THROWS_AS(pettis_integral(2, embed_integers(), dirac(line, Point::integer(0))),
                    KindMismatch);
}

TEST_CASE("norm of the weak integral obeys the class bound") {
    Rng rng{137};
    const Space q2 = Space::rational_vector(2);
    for (int i = 0; i < 150; ++i) {
        const Rat radius = Rat(rng.range(1, 5));
        const Rat budget = Rat(rng.range(1, 4));
        const BoundedSet box = BoundedSet::vector_box(q2, radius);
        const SignedMeasure mu = gen_measure_in(rng, box, budget);
        const Point x = pettis_integral(2, identity(q2), mu);
        Rat sup_norm = 0;
        for (const Rat& c : x.as_vector()) {
            Rat a = rat_abs(c);
            if (a > sup_norm) sup_norm = a;
        }
        Rat cap = radius * budget;
        CHECK(sup_norm <= cap);
    }
}
