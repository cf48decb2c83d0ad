#include <catch2/catch_amalgamated.hpp>

#include <w3kin/irrep.hpp>

#include "support/char_oracle.hpp"

using namespace w3;

TEST_CASE("inner product matches the A2 Cartan matrix")
{
    REQUIRE(inner(E1, E1) == 2);
    REQUIRE(inner(E2, E2) == 2);
    REQUIRE(inner(E1, E2) == -1);
    REQUIRE(inner(RHO, RHO) == 2);
    /* fundamental weights are dual to the simple roots */
    REQUIRE(inner(Weight{1, 0}, E1) == 1);
    REQUIRE(inner(Weight{1, 0}, E2) == 0);
    REQUIRE(inner(Weight{0, 1}, E2) == 1);
}

TEST_CASE("Weyl group: six elements, closure, inverses, determinants")
{
    const auto& W = weyl_elements();
    REQUIRE(W.size() == 6);
    int plus = 0;
    for (const auto& x : W)
        plus += x.det == 1;
    REQUIRE(plus == 3);

    Weight probe{rat(7, 3), rat(-2, 5)}; // trivial stabilizer
    for (const auto& x : W) {
        REQUIRE(inner(x(probe), x(probe)) == inner(probe, probe));
        const auto& xi = weyl_inverse(x);
        REQUIRE(xi(x(probe)) == probe);
        for (const auto& y : W)
            REQUIRE(weyl_compose(x, y)(probe) == x(y(probe)));
    }

    /* conjugation is an outer automorphism, not a Weyl element */
    Weight cw = conjugate_weight(probe);
    for (const auto& x : W)
        REQUIRE(x(probe) != cw);
    REQUIRE(conjugate_weight(cw) == probe);
}

TEST_CASE("reflection through the second fundamental direction is the longest element")
{
    const WeylElement& w0 = weyl_elements()[5];
    REQUIRE(std::string_view(w0.label) == "s1s2s1");
    REQUIRE(w0(Weight{1, 0}) == Weight{0, -1});
    REQUIRE(w0(Weight{0, 1}) == Weight{-1, 0});
}

TEST_CASE("triality of weights")
{
    REQUIRE(z3_charge(Weight{0, 0}) == 0);
    REQUIRE(z3_charge(Weight{1, 0}) == 1);
    REQUIRE(z3_charge(Weight{0, 1}) == 2);
    REQUIRE(z3_charge(Weight{1, 1}) == 0);
    REQUIRE(z3_charge(Weight{2, 0}) == 2);
}

TEST_CASE("fundamental and adjoint weight systems")
{
    const Irrep& f = weight_system(1, 0);
    REQUIRE(f.dim == 3);
    REQUIRE(f.table.size() == 3);
    REQUIRE(multiplicity(f, {1, 0}) == 1);
    REQUIRE(multiplicity(f, {-1, 1}) == 1);
    REQUIRE(multiplicity(f, {0, -1}) == 1);

    const Irrep& adj = weight_system(1, 1);
    REQUIRE(adj.dim == 8);
    REQUIRE(multiplicity(adj, {0, 0}) == 2);
    for (const Weight& a : POSITIVE_ROOTS) {
        REQUIRE(multiplicity(adj, a) == 1);
        REQUIRE(multiplicity(adj, -a) == 1);
    }

    REQUIRE(multiplicity(weight_system(2, 2), {0, 0}) == 3);
    REQUIRE(weight_system(2, 2).dim == 27);
}

TEST_CASE("weight system rejects non-dominant input")
{
    REQUIRE_THROWS_AS(compute_weight_system(Weight{-1, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(compute_weight_system(Weight{rat(1, 2), 0}), std::invalid_argument);
}

TEST_CASE("multiplicities agree with the Kostant formula")
{
    for (long l1 = 0; l1 <= 6; ++l1)
        for (long l2 = 0; l1 + l2 <= 6; ++l2) {
            const Irrep& r = weight_system(l1, l2);
            for (const auto& [w, m] : r.table)
                REQUIRE(m == oracle::mult_oracle(r.highest, w));
            /* and the formula vanishes just outside the support */
            REQUIRE(oracle::mult_oracle(r.highest, r.highest + E1) == 0);
            REQUIRE(oracle::mult_oracle(r.highest, r.highest + RHO) == 0);
        }
}

TEST_CASE("tensor decomposition agrees with the Steinberg formula")
{
    for (long l1 = 0; l1 <= 4; ++l1)
        for (long l2 = 0; l1 + l2 <= 4; ++l2)
            for (long u1 = 0; u1 <= 4; ++u1)
                for (long u2 = 0; u1 + u2 <= 4; ++u2) {
                    Weight lam{l1, l2}, mu{u1, u2};
                    auto dec = tensor_decompose(lam, mu);
                    for (const auto& [nu, n] : dec)
                        REQUIRE(n == oracle::tensor_oracle(lam, mu, nu));
                    /* spot-check absences */
                    REQUIRE(tensor_multiplicity(lam, mu, lam + mu + E1) ==
                            oracle::tensor_oracle(lam, mu, lam + mu + E1));
                }
}

TEST_CASE("pinned decompositions")
{
    auto dec = tensor_decompose({1, 0}, {0, 1});
    REQUIRE(dec == std::map<Weight, long>{{{1, 1}, 1}, {{0, 0}, 1}});

    dec = tensor_decompose({1, 0}, {1, 0});
    REQUIRE(dec == std::map<Weight, long>{{{2, 0}, 1}, {{0, 1}, 1}});

    dec = tensor_decompose({1, 1}, {1, 1});
    REQUIRE(dec == std::map<Weight, long>{
                       {{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}});
}

TEST_CASE("adjoint square contains the adjoint twice, not once")
{
    /* a count of one here would be inconsistent with the Steinberg formula */
    REQUIRE(tensor_multiplicity({1, 1}, {1, 1}, {1, 1}) == 2);
    REQUIRE(oracle::tensor_oracle({1, 1}, {1, 1}, {1, 1}) == 2);
}

TEST_CASE("h-triple and zero-weight membership follow the triality")
{
    for (long l1 = 0; l1 <= 8; ++l1)
        for (long l2 = 0; l1 + l2 <= 8; ++l2) {
            const Irrep& r = weight_system(l1, l2);
            int q = z3_charge(r);
            REQUIRE(contains_hj_triple(r, +1) == (q == 1));
            REQUIRE(contains_hj_triple(r, -1) == (q == 2));
            REQUIRE(contains_zero(r) == (q == 0));
        }
}

TEST_CASE("tensor decomposition conserves dimension and triality")
{
    for (long l1 = 0; l1 <= 4; ++l1)
        for (long l2 = 0; l1 + l2 <= 4; ++l2)
            for (long u1 = 0; u1 <= 4; ++u1)
                for (long u2 = 0; u1 + u2 <= 4; ++u2) {
                    Weight lam{l1, l2}, mu{u1, u2};
                    long dim = 0;
                    for (const auto& [nu, n] : tensor_decompose(lam, mu)) {
                        dim += n * weyl_dim(to_long(nu.a1), to_long(nu.a2));
                        REQUIRE((z3_charge(nu) + 3 - (z3_charge(lam) + z3_charge(mu)) % 3) % 3 ==
                                0);
                    }
                    REQUIRE(dim == weight_system(lam).dim * weight_system(mu).dim);
                }
}
