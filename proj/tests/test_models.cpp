#include <catch2/catch_amalgamated.hpp>

#include <w3kin/models.hpp>

using namespace w3;

TEST_CASE("model parameters must be coprime and positive")
{
    REQUIRE_NOTHROW(RationalModel(4, 5));
    REQUIRE_THROWS_AS(RationalModel(4, 6), std::invalid_argument);
    REQUIRE_THROWS_AS(RationalModel(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(RationalModel(4, -5), std::invalid_argument);
    REQUIRE(RationalModel(4, 5).bsq() == rat(4, 5));
}

TEST_CASE("table membership")
{
    RationalModel m(4, 5);
    REQUIRE(in_table(KacCharge{1, 1, 1, 1}, m));
    REQUIRE(in_table(KacCharge{2, 1, 2, 2}, m));
    REQUIRE(!in_table(KacCharge{3, 1, 1, 1}, m));  // n1 + n2 = p
    REQUIRE(!in_table(KacCharge{1, 1, 4, 1}, m));  // m1 + m2 = p'
    REQUIRE(!in_table(KacCharge{0, 1, 1, 1}, m));  // indices start at 1
    REQUIRE(!in_table(fields::sigma(), m));        // fractional
}

TEST_CASE("triple rotation closes after three steps")
{
    RationalModel m(4, 5);
    KacCharge a{1, 1, 2, 1};
    KacCharge b = triple_rotate(a, m);
    REQUIRE(b == KacCharge{2, 1, 2, 2});
    KacCharge c = triple_rotate(b, m);
    REQUIRE(c == KacCharge{1, 2, 1, 2});
    REQUIRE(triple_rotate(c, m) == a);

    DegenerateField f = make_field(b, m); // any member selects the same triple
    REQUIRE(f.canonical == a);
    REQUIRE(make_field(c, m).canonical == a);
}

TEST_CASE("table sizes: one field below the minimal model, six at Potts")
{
    REQUIRE(kac_table(RationalModel(2, 3)).empty());
    REQUIRE(kac_table(RationalModel(3, 4)).size() == 1);
    REQUIRE(kac_table(RationalModel(4, 5)).size() == 6);
}

TEST_CASE("index shift with fractional multiples lands on the specialized triple")
{
    KacCharge s = index_shift(fields::sigma(), rat(1, 3), rat(1, 3), RationalModel(4, 5));
    REQUIRE(s == KacCharge{2, 1, 2, 2});
}

TEST_CASE("triality in the model follows the congruence class of (p, p')")
{
    /* p = 0 mod 3: first index difference */
    RationalModel m34(3, 4);
    REQUIRE(z3_charge_of(KacCharge{1, 1, 2, 1}, m34) == 0);
    /* p' = 0 mod 3: second index difference */
    RationalModel m56(5, 6);
    REQUIRE(z3_charge_of(KacCharge{1, 1, 2, 1}, m56) == 1);
    REQUIRE(z3_charge_of(KacCharge{1, 1, 1, 2}, m56) == -1);
    /* p + p' = 0 mod 3: sum of the differences */
    RationalModel m45(4, 5);
    REQUIRE(z3_charge_of(KacCharge{1, 1, 2, 1}, m45) == 1);
    REQUIRE(z3_charge_of(KacCharge{2, 1, 2, 2}, m45) == 1); // same triple, same q
    /* p - p' = 0 mod 3: difference of the differences */
    RationalModel m47(4, 7);
    REQUIRE(z3_charge_of(KacCharge{2, 1, 1, 2}, m47) == -1);
    REQUIRE(z3_charge_of(KacCharge{1, 1, 1, 1}, m47) == 0);
}

TEST_CASE("triality is constant on triples and the values are normalized")
{
    for (long p = 3; p <= 8; ++p)
        for (long pp = p + 1; pp <= 9; ++pp) {
            if (std::gcd(p, pp) != 1)
                continue;
            RationalModel m(p, pp);
            for (const auto& f : kac_table(m)) {
                int q = z3_charge_of(f, m);
                REQUIRE((q == -1 || q == 0 || q == 1));
                REQUIRE(z3_charge_of(f.alt1, m) == q);
                REQUIRE(z3_charge_of(f.alt2, m) == q);
            }
        }
}

TEST_CASE("three-state Potts content")
{
    RationalModel m(4, 5);
    auto content = potts_content();
    REQUIRE(content.size() == 6);

    auto expect = [&](const char* name, KacCharge c, int q, Rational h) {
        for (const auto& f : content)
            if (std::string_view(f.name) == name) {
                REQUIRE(f.field.canonical == c);
                REQUIRE(f.q == q);
                REQUIRE(f.h == h);
                REQUIRE(z3_charge_of(f.field, m) == q);
                REQUIRE(h_in_model(f.field.canonical, m) == h);
                return;
            }
        FAIL("missing field");
    };
    expect("1", KacCharge{1, 1, 1, 1}, 0, 0);
    expect("sigma", KacCharge{1, 1, 2, 1}, 1, rat(1, 15));
    expect("sigma*", KacCharge{1, 1, 1, 2}, -1, rat(1, 15));
    expect("psi", KacCharge{1, 1, 1, 3}, 1, rat(2, 3));
    expect("psi*", KacCharge{1, 1, 3, 1}, -1, rat(2, 3));
    expect("eps", KacCharge{1, 1, 2, 2}, 0, rat(2, 5));
}

TEST_CASE("h and w are constant on triples")
{
    for (long p = 3; p <= 7; ++p)
        for (long pp = p + 1; pp <= 8; ++pp) {
            if (std::gcd(p, pp) != 1)
                continue;
            RationalModel m(p, pp);
            for (const auto& f : kac_table(m)) {
                REQUIRE(h_in_model(f.alt1, m) == h_in_model(f.canonical, m));
                REQUIRE(h_in_model(f.alt2, m) == h_in_model(f.canonical, m));
                REQUIRE(w_b_in_model(f.alt1, m) == w_b_in_model(f.canonical, m));
                REQUIRE(w_b_in_model(f.alt2, m) == w_b_in_model(f.canonical, m));
            }
        }
}

TEST_CASE("triple members are genuinely star-equivalent at the model coupling")
{
    RationalModel m(4, 5);
    for (const auto& f : kac_table(m)) {
        REQUIRE(equivalent_at(f.alt1, f.canonical, m.p, m.pp));
        REQUIRE(equivalent_at(f.alt2, f.canonical, m.p, m.pp));
    }
}
