#include <catch2/catch_amalgamated.hpp>

#include <w3kin/charge.hpp>
#include <w3kin/io.hpp>

#include <json.hpp>

using namespace w3;

TEST_CASE("rational parsing round-trips")
{
    for (const char* s : {"0", "7", "-3", "2/3", "-5/7", "22/7"}) {
        Rational q = parse_rational(s);
        REQUIRE(to_string(q) == s);
    }
    REQUIRE(parse_rational("4/6") == rat(2, 3)); // reduced on input
    REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("twelve significant digits")
{
    REQUIRE(format_sig12(1.0 / 15) == "0.0666666666667");
    REQUIRE(format_sig12(2.0) == "2");
    REQUIRE(format_sig12(-1.0 / 3) == "-0.333333333333");
}

TEST_CASE("csv rendering, quoting, exact and numeric modes")
{
    OutputRecord rec;
    rec.columns = {"name", "h", "n"};
    rec.exact = true;
    rec.add_row({std::string("sigma"), rat(1, 15), 4L});
    rec.add_row({std::string("a,b\"c"), rat(-2, 1), 0L});
    REQUIRE(render_csv(rec) == "name,h,n\nsigma,1/15,4\n\"a,b\"\"c\",-2,0\n");

    OutputRecord dec;
    dec.columns = {"b", "h"};
    dec.exact = false;
    dec.add_row({1.0, 1.0 / 15});
    REQUIRE(render_csv(dec) == "b,h\n1,0.0666666666667\n");

    REQUIRE_THROWS_AS(rec.add_row({std::string("short row")}), std::logic_error);
}

TEST_CASE("json rendering matches csv value for value")
{
    OutputRecord rec;
    rec.columns = {"field", "q", "h"};
    rec.exact = true;
    rec.add_row({std::string("[[1,1],[1,1]]"), 0L, rat(0, 1)});
    rec.add_row({std::string("[[1,2],[1,1]]"), 1L, rat(1, 15)});

    auto parsed = nlohmann::json::parse(render_json(rec));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    REQUIRE(parsed[0]["field"] == "[[1,1],[1,1]]");
    REQUIRE(parsed[0]["q"] == 0);
    REQUIRE(parsed[0]["h"] == 0); // integral rationals stay numeric
    REQUIRE(parsed[1]["h"] == "1/15");

    /* decimal mode: the same digit string appears in both formats */
    OutputRecord dec;
    dec.columns = {"b", "h"};
    dec.exact = false;
    dec.add_row({0.9, h_of(fields::sigma()).eval(0.9)});
    std::string csv = render_csv(dec);
    std::string h_csv = csv.substr(csv.rfind(',') + 1);
    h_csv.pop_back(); // trailing newline
    REQUIRE(render_json(dec).find(h_csv) != std::string::npos);
    auto js = nlohmann::json::parse(render_json(dec));
    REQUIRE(js[0]["h"].get<double>() == std::stod(h_csv));
}

TEST_CASE("json strings are escaped")
{
    OutputRecord rec;
    rec.columns = {"s"};
    rec.exact = false;
    rec.add_row({std::string("a\"b\\c\n")});
    auto parsed = nlohmann::json::parse(render_json(rec));
    REQUIRE(parsed[0]["s"] == "a\"b\\c\n");
}

TEST_CASE("unknown format is rejected")
{
    OutputRecord rec;
    rec.columns = {"x"};
    rec.add_row({1L});
    REQUIRE_THROWS_AS(render(rec, "yaml"), std::invalid_argument);
    REQUIRE(render(rec, "csv") == render_csv(rec));
    REQUIRE(render(rec, "json") == render_json(rec));
}
