#include <catch2/catch_amalgamated.hpp>

#include "finmeas/generate.hpp"
#include "finmeas/monad.hpp"
#include "oracles.hpp"

using namespace finmeas;

TEST_CASE("flattening equals integrating evaluation maps") {
    Rng rng{43};
    for (const Space& base :
         {Space::integer_line(), Space::finite_labeled({"a", "b", "c"}), Space::rational_vector(2)}) {
        const Space mx = Space::measure_space(base);
        for (int i = 0; i < 150; ++i) {
            const SignedMeasure mm = gen_measure(rng, mx);
            const SignedMeasure flat = kappa(mm);
            CHECK(flat.space() == base);
            const auto inner = oracles::inner_support_union(mm);
            for (const auto& subset : oracles::all_subsets(inner)) {
                CHECK(flat.eval(subset) == oracles::brute_kappa_eval(mm, subset));
            }
        }
    }
}

TEST_CASE("flattening a dirac at a measure returns the measure") {
    Rng rng{47};
    const Space line = Space::integer_line();
    const Space mx = Space::measure_space(line);
    for (int i = 0; i < 100; ++i) {
        const SignedMeasure mu = gen_measure(rng, line);
        CHECK(kappa(dirac(mx, Point::measure(mu))) == mu);
    }
    CHECK_THROWS_AS(kappa(dirac(line, Point::integer(0))), KindMismatch);
}

TEST_CASE("flattening the dirac-embedded image returns the measure") {
    Rng rng{53};
    const Space line = Space::integer_line();
    for (int i = 0; i < 100; ++i) {
        const SignedMeasure mu = gen_measure(rng, line);
        const SignedMeasure mm = pushforward(dirac_morphism(line), mu);
        CHECK(kappa(mm) == mu);
    }
}

TEST_CASE("flattening works at deeper nesting levels") {
    const Space labels = Space::finite_labeled({"x", "y"});
    const Space mx = Space::measure_space(labels);
    const Space mmx = Space::measure_space(mx);
    const SignedMeasure inner1 =
        SignedMeasure::from_atoms(labels, {{Point::label("x"), Rat(1)}, {Point::label("y"), Rat(2)}});
    const SignedMeasure inner2 = SignedMeasure::from_atoms(labels, {{Point::label("y"), Rat(-4)}});
    const SignedMeasure mid1 = SignedMeasure::from_atoms(
        mx, {{Point::measure(inner1), make_rational(1, 2)}, {Point::measure(inner2), Rat(3)}});
    const SignedMeasure mid2 = SignedMeasure::from_atoms(mx, {{Point::measure(inner1), Rat(-1)}});
    const SignedMeasure mmm = SignedMeasure::from_atoms(
        mmx, {{Point::measure(mid1), Rat(2)}, {Point::measure(mid2), make_rational(1, 4)}});
    // flatten outermost first, then again; compare against hand expansion
    const SignedMeasure once = kappa(mmm);
    CHECK(once.space() == mx);
    const SignedMeasure twice = kappa(once);
    // 2*(1/2) + 1/4*(-1) = 3/4 on inner1;  2*3 = 6 on inner2
    const SignedMeasure expected_mid = SignedMeasure::from_atoms(
        mx, {{Point::measure(inner1), make_rational(3, 4)}, {Point::measure(inner2), Rat(6)}});
    CHECK(once == expected_mid);
    // x: 3/4;  y: 3/2 - 24
    const SignedMeasure expected = SignedMeasure::from_atoms(
        labels,
        {{Point::label("x"), make_rational(3, 4)}, {Point::label("y"), make_rational(-45, 2)}});
    CHECK(twice == expected);
}

TEST_CASE("monad law suites pass on all carrier kinds") {
    for (const Space& base :
         {Space::finite_labeled({"a", "b", "c", "d", "e", "f"}), Space::integer_line(),
          Space::rational_vector(2)}) {
        const LawReport report = check_monad_laws(base, 2024, 150);
        INFO(to_json(report).dump(2));
        CHECK(report.passed());
        CHECK(report.checks == 4 * 150);
    }
}

TEST_CASE("a flattener that drops a term fails the law suite") {
    const KappaFn broken = [](const SignedMeasure& mm) {
        SignedMeasure result = SignedMeasure::zero(mm.space().base());
        bool dropped = false;
        for (const auto& [point, weight] : mm.atoms()) {
            if (!dropped) {
                dropped = true;
                continue;
            }
            result = result + weight * point.as_measure();
        }
        return result;
    };
    const LawReport report = check_monad_laws(Space::integer_line(), 42, 1000, broken);
    CHECK_FALSE(report.passed());
    CHECK(report.failures.size() >= 1);
    // failures carry reproduction data
    REQUIRE(!report.failures.empty());
    CHECK(!report.failures[0].law.empty());
    CHECK(!report.failures[0].lhs.empty());
}

TEST_CASE("dirac embedding turns formal combinations into measures") {
    Rng rng{59};
    for (const Space& base : {Space::integer_line(), Space::finite_labeled({"p", "q"})}) {
        for (int i = 0; i < 100; ++i) {
            const FormalLinComb lin = gen_formal(rng, base);
            const SignedMeasure mu = delta_embed(lin);
            CHECK(mu.space() == base);
            // formal coefficient of x equals the measure of {x}
            for (const auto& [point, coeff] : lin.terms) {
                CHECK(mu.eval({point}) == coeff);
            }
        }
    }
}

TEST_CASE("delta embedding suites pass and respect both monad structures") {
    for (const Space& base :
         {Space::finite_labeled({"a", "b", "c", "d", "e", "f"}), Space::integer_line(),
          Space::rational_vector(2)}) {
        const LawReport report = check_delta_embedding(base, 77, 200);
        INFO(to_json(report).dump(2));
        CHECK(report.passed());
    }
}

TEST_CASE("formal combinations canonicalize like measures do") {
    const Space line = Space::integer_line();
    const FormalLinComb lin = FormalLinComb::make(
        line, {{Point::integer(2), Rat(1)},
               {Point::integer(1), Rat(3)},
               {Point::integer(2), Rat(-1)}});
    REQUIRE(lin.terms.size() == 1);
    CHECK(lin.terms[0].first == Point::integer(1));
    CHECK(lin.terms[0].second == Rat(3));
    const FormalLinComb flat = flatten_formal(NestedLinComb{
        line,
        {{FormalLinComb::make(line, {{Point::integer(0), Rat(2)}}), make_rational(1, 2)},
         {FormalLinComb::make(line, {{Point::integer(0), Rat(1)}, {Point::integer(4), Rat(1)}}),
          Rat(3)}}});
    // 0 gets 2*(1/2) + 1*3 = 4; 4 gets 3
    CHECK(delta_embed(flat) ==
          SignedMeasure::from_atoms(line, {{Point::integer(0), Rat(4)}, {Point::integer(4), Rat(3)}}));
}

TEST_CASE("naturality: flattening commutes with mapping on the inside") {
    Rng rng{61};
    const Space line = Space::integer_line();
    const Morphism f = mod_k(4);
    const Space mx = Space::measure_space(line);
    const Morphism mf = measure_space_morphism(f);
    for (int i = 0; i < 100; ++i) {
        const SignedMeasure mm = gen_measure(rng, mx);
        const SignedMeasure lhs = pushforward(f, kappa(mm));
        const SignedMeasure rhs = kappa(pushforward(mf, mm));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integrating a lifted map equals integrating after flattening") {
    Rng rng{67};
    const Space line = Space::integer_line();
    const Space mx = Space::measure_space(line);
    const Morphism f = compose(affine(Rat(3), make_rational(-1, 2)), embed_integers());
    const Morphism lifted = lift_real(f);
    for (int i = 0; i < 150; ++i) {
        const SignedMeasure mm = gen_measure(rng, mx);
        Rat via_lift = integrate_real(lifted, mm);
        Rat via_flatten = integrate_real(f, kappa(mm));
        CHECK(via_lift == via_flatten);
    }
}

TEST_CASE("flattening respects the declared measure-class bounds") {
    Rng rng{71};
    const Space line = Space::integer_line();
    for (int i = 0; i < 100; ++i) {
        const BoundedSet base_bound = BoundedSet::integer_interval(line, 5);
        const Rat gamma = Rat(rng.range(1, 4));
        const Rat delta = Rat(rng.range(1, 4));
        const BoundedSet inner = BoundedSet::measure_class(base_bound, gamma);
        // members of M(inner-class, delta): atoms are measures in the class
        const SignedMeasure mm = gen_measure_in(rng, inner, delta);
        const SignedMeasure flat = kappa(mm);
        Rat budget = gamma * delta;
        CHECK(total_variation(flat) <= budget);
        for (const Point& p : flat.support()) {
            CHECK(is_bounded_member(base_bound, p));
        }
    }
}
