#include <catch2/catch_amalgamated.hpp>

#include <w3kin/charge.hpp>

using namespace w3;

TEST_CASE("central charge polynomial and special values")
{
    REQUIRE(central_charge() == LaurentPoly{{-2, -24}, {0, 50}, {2, -24}});
    REQUIRE(central_charge().eval_at_bsq(rat(4, 5)) == rat(4, 5));
    REQUIRE(central_charge().eval_at_bsq(1) == 2);
    REQUIRE(central_charge().eval_at_bsq(rat(1, 2)) == -10);
}

TEST_CASE("beta is real only on the central band")
{
    REQUIRE(beta_at(1.0) == Catch::Approx(2.0 / std::sqrt(8.0)));
    REQUIRE_THROWS_AS(beta_at(0.5), std::domain_error);
    REQUIRE_THROWS_AS(beta_at(2.0), std::domain_error);
    REQUIRE_THROWS_AS(beta_at(-1.0), std::domain_error);
}

TEST_CASE("closed forms for the named fields")
{
    REQUIRE(h_of(fields::identity()).zero());
    REQUIRE(w_factor_of(fields::identity()).zero());

    REQUIRE(h_of(fields::sigma()) ==
            LaurentPoly{{-2, rat(-8, 9)}, {0, rat(17, 9)}, {2, rat(-8, 9)}});
    REQUIRE(w_factor_of(fields::sigma()) == LaurentPoly{{-1, rat(-2, 27)}, {1, rat(2, 27)}});

    REQUIRE(h_of(fields::sigma_prime()) ==
            LaurentPoly{{-2, rat(-2, 3)}, {0, rat(3, 2)}, {2, rat(-3, 4)}});
    REQUIRE(w_factor_of(fields::sigma_prime()) ==
            LaurentPoly{{-3, rat(8, 54)}, {-1, rat(-18, 54)}, {1, rat(9, 54)}});

    REQUIRE(h_of(fields::sigma_second()) == LaurentPoly{{0, -1}, {2, rat(4, 3)}});
    REQUIRE(w_factor_of(fields::sigma_second()) ==
            LaurentPoly{{-1, rat(-18, 27)}, {1, rat(54, 27)}, {3, rat(-40, 27)}});

    REQUIRE(h_of(fields::psi()) == LaurentPoly{{0, -2}, {2, rat(10, 3)}});
    REQUIRE(h_of(fields::psi_prime()) == LaurentPoly{{-2, rat(4, 3)}, {0, -1}});
    REQUIRE(h_of(fields::eps()) == LaurentPoly{{0, -2}, {2, 3}});
}

TEST_CASE("index form of h agrees with the split form")
{
    for (const KacCharge& c : {fields::identity(), fields::sigma(), fields::sigma_prime(),
                               fields::sigma_second(), fields::psi(), fields::psi_prime(),
                               fields::eps(), KacCharge{rat(5, 7), rat(-2, 3), rat(1, 4), 9}})
        REQUIRE(h_from_alpha(c) == h_of(c));
}

TEST_CASE("h and w under the star action and conjugation")
{
    KacCharge c{rat(5, 7), rat(-2, 3), rat(1, 4), 9};
    for (const auto& x : weyl_elements()) {
        REQUIRE(h_of(weyl_star(x, c)) == h_of(c));
        REQUIRE(w_factor_of(weyl_star(x, c)) == w_factor_of(c));
    }
    REQUIRE(h_of(conjugate(c)) == h_of(c));
    REQUIRE(w_factor_of(conjugate(c)) == Rational(-1) * w_factor_of(c));
    REQUIRE(conjugate(conjugate(c)) == c);

    /* 2Q - alpha lands on the conjugate orbit via the longest element */
    REQUIRE(weyl_star(weyl_elements()[5], reflect_2q(c)) == conjugate(c));
}

TEST_CASE("w factor is odd in b")
{
    REQUIRE(w_factor_of(fields::sigma()).odd());
    REQUIRE(w_factor_of(fields::sigma_prime()).odd());
    REQUIRE(w_factor_of(KacCharge{rat(5, 7), rat(-2, 3), rat(1, 4), 9}).odd());
    REQUIRE(h_of(fields::sigma()).even());
}

TEST_CASE("star orbit and canonical representative")
{
    auto orbit = star_orbit(fields::sigma());
    REQUIRE(orbit.size() == 6);
    for (const auto& im : orbit)
        REQUIRE(canonical_charge(im) == fields::sigma());
    /* sigma is its own representative */
    REQUIRE(canonical_charge(fields::sigma()) == fields::sigma());
}

TEST_CASE("classification of the named fields")
{
    REQUIRE(classify(fields::identity()) == FieldClass::completely_degenerate);
    REQUIRE(classify(fields::sigma()) == FieldClass::generic);
    REQUIRE(classify(fields::sigma_prime()) == FieldClass::semi_degenerate_level_one);
    REQUIRE(classify(fields::sigma_second()) == FieldClass::completely_degenerate);
    REQUIRE(classify(fields::psi()) == FieldClass::completely_degenerate);
    REQUIRE(classify(fields::eps()) == FieldClass::completely_degenerate);
}

TEST_CASE("degenerate labels are the indices shifted by one")
{
    auto lab = degenerate_labels(fields::identity());
    REQUIRE(lab);
    REQUIRE(lab->first == Weight{0, 0});
    REQUIRE(lab->second == Weight{0, 0});

    lab = degenerate_labels(fields::sigma_second());
    REQUIRE(lab);
    REQUIRE(lab->first == Weight{0, 0});
    REQUIRE(lab->second == Weight{1, 0});

    REQUIRE(!degenerate_labels(fields::sigma()));
    REQUIRE(!degenerate_labels(fields::sigma_prime()));
}

TEST_CASE("bracket rendering")
{
    REQUIRE(bracket_str(fields::identity()) == "[[1,1],[1,1]]");
    REQUIRE(bracket_str(fields::sigma()) == "[[2/3,1/3],[-1/3,1/3]]");
    REQUIRE(bracket_str(fields::sigma_prime()) == "[[1,1/2],[0,1/2]]");
}

TEST_CASE("generalized triality of the spin fields is one")
{
    REQUIRE(generalized_z3(fields::sigma()) == 1);
    REQUIRE(generalized_z3(fields::sigma_prime()) == 1);
    REQUIRE(generalized_z3(fields::sigma_second()) == 1);
    REQUIRE(generalized_z3(fields::identity()) == 0);
    REQUIRE(generalized_z3(fields::eps()) == 0);
}

TEST_CASE("momentum at a rational coupling")
{
    /* b^2 = p/p': alpha - Q evaluates to R - (p'/p) P componentwise */
    Weight v = charge_at(fields::sigma(), 4, 5);
    REQUIRE(v.a1 == rat(1, 3) - rat(5, 4) * rat(2, 3));
    REQUIRE(v.a2 == rat(1, 3) + rat(5, 4) * rat(1, 3));
    REQUIRE(equivalent_at(fields::sigma(), fields::sigma(), 4, 5));
    REQUIRE(!equivalent_at(fields::sigma(), fields::eps(), 4, 5));
}
