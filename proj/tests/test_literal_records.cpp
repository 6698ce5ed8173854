#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>
#include <string>

#include "cisd/literal.hpp"
#include "cisd/records.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace cisd;
using testsupport::uniform;

namespace {

std::size_t error_position(const std::string& text)
{
    try {
        (void)parse_multidegree(text);
    } catch (const LiteralError& e) {
        return e.position();
    }
    FAIL("accepted '" << text << "'");
    return 0;
}

} // namespace

TEST_CASE("literals")
{
    CHECK(parse_multidegree("1").to_literal() == "1");
    CHECK(parse_multidegree("1^5").k() == 5);
    CHECK(parse_multidegree("2,2").to_literal() == "2^2");
    CHECK(parse_multidegree("3^150,7^89").k() == 239);
    CHECK(parse_multidegree("3^150,7^89").canonical_runs() == std::vector<DegreeRun>{{7, 89}, {3, 150}});
    CHECK(parse_multidegree("2^3,2,1").to_literal() == "2^4");
    CHECK(parse_multidegree(fixtures::kFlagshipA) == parse_multidegree("25^130,15,9^65,7^89,3^150"));
    // multiplicity, not a power
    CHECK(parse_multidegree("2^10").total_degree() == 1024);
    CHECK(parse_multidegree("2^10").k() == 10);
}

TEST_CASE("literal errors carry positions")
{
    CHECK(error_position("") == 0);
    CHECK(error_position(" 3") == 0);
    CHECK(error_position("-3") == 0);
    CHECK(error_position("0") == 0);
    CHECK(error_position("3a") == 1);
    CHECK(error_position("3^") == 2);
    CHECK(error_position("3^0") == 2);
    CHECK(error_position("3,,2") == 2);
    CHECK(error_position("3,") == 2);
    CHECK(error_position("3^2^2") == 3);
    CHECK(error_position("5,99999999999999999999") == 2);
    CHECK(error_position("3^99999999999999999999") == 2);
    CHECK(error_position("{3,2}") == 0);
}

TEST_CASE("grammar totality under fuzzing")
{
    const std::regex grammar(R"(^[0-9]+(\^[0-9]+)?(,[0-9]+(\^[0-9]+)?)*$)");
    const std::regex zero_int(R"((^|[,^])0+($|[,^]))");
    const std::string alphabet = "0123456789^,,^^ -x";
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::string s;
        const auto len = uniform(0, 10);
        for (std::uint64_t i = 0; i < len; ++i)
            s += alphabet[uniform(0, alphabet.size() - 1)];
        const bool valid = std::regex_match(s, grammar) && !std::regex_search(s, zero_int);
        try {
            const auto m = parse_multidegree(s);
            CHECK_MESSAGE(valid, s);
            CHECK(parse_multidegree(m.to_literal()) == m);
            ++accepted;
        } catch (const LiteralError& e) {
            CHECK_MESSAGE(!valid, s);
            CHECK(e.position() <= s.size());
            ++rejected;
        }
    }
    CHECK(accepted > 100);
    CHECK(rejected > 100);
}

TEST_CASE("Sullivan data records round-trip")
{
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(uniform(1, 9));
        const auto m = Multidegree::canonicalize(testsupport::random_raw(6, 40));
        const auto sd = sullivan_data(n, m);
        const auto back = records::sullivan_data_from_json(
            records::json::parse(records::dump(records::sd_record(n, m, false)))["sullivan_data"]);
        CHECK(back == sd);
    }
    CHECK_THROWS_AS(records::sullivan_data_from_json(records::json{{"n", 4}}), std::invalid_argument);
    CHECK_THROWS_AS(records::sullivan_data_from_json(records::json::parse(
                        R"({"n": 4, "total_degree": "2", "pontryagin": ["1"], "euler": "3"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(records::sullivan_data_from_json(records::json::parse(
                        R"({"n": 2, "total_degree": "x", "pontryagin": ["1"], "euler": "3"})")),
                    std::invalid_argument);
}

TEST_CASE("re-comparing parsed records reproduces the verdict")
{
    const std::pair<const char*, const char*> pairs[] = {
        {fixtures::kFlagshipA, fixtures::kFlagshipB}, {"1", "2"}, {"3,2", "6"}, {fixtures::kOddSixA, fixtures::kOddSixB}};
    for (auto [a, b] : pairs) {
        const auto rec = records::json::parse(
            records::dump(records::classify_record(4, parse_multidegree(a), parse_multidegree(b))));
        const auto sa = records::sullivan_data_from_json(rec["sullivan_data"]["a"]);
        const auto sb = records::sullivan_data_from_json(rec["sullivan_data"]["b"]);
        CHECK(rec["verdict"]["sd_equal"].get<bool>() == (sa == sb));
        CHECK((rec["verdict"]["status"] == "Diffeomorphic") == (sa == sb));
    }
}

TEST_CASE("record shape")
{
    const auto rec = records::sd_record(4, parse_multidegree("1"), true);
    CHECK(rec["schema"] == 1);
    CHECK(rec["sullivan_data"]["pontryagin"] == records::json({"-5", "10"}));
    CHECK(rec["classical_pontryagin"] == records::json({"5", "10"}));
    CHECK(rec["sullivan_data"]["euler"] == "5");
    CHECK(rec["wu"]["v2"] == 1);
    CHECK(records::sd_record(4, parse_multidegree("2"), false)["wu"]["spin"] == true);
    CHECK_FALSE(records::sd_record(5, parse_multidegree("2"), false).contains("wu"));

    const auto text = records::dump(rec);
    CHECK(text.find("\"command\"") < text.find("\"multidegree\""));
    CHECK(text.find("\"multidegree\"") < text.find("\"schema\""));
    CHECK(text == records::dump(records::sd_record(4, parse_multidegree("1,1"), true)));

    const auto flagship = records::classify_record(4, parse_multidegree(fixtures::kFlagshipA),
                                                   parse_multidegree(fixtures::kFlagshipB));
    CHECK(flagship["verdict"]["summary"] == "Diffeomorphic (Theorem 1.2)");
    CHECK(flagship["verdict"]["conjecture"] == false);
    CHECK(flagship["sullivan_data"]["a"]["euler"].is_string());
    CHECK(flagship["sullivan_data"]["a"]["total_degree"].get<std::string>().size() > 300);

    const auto cp4 = records::rigidity_record(parse_multidegree("1"));
    CHECK(cp4["case_row"]["rigidity"] == "ConjecturedFlexible");
    CHECK(cp4["case_row"]["conjecture"] == true);
    CHECK(cp4["case_row"]["pairwise"]["conjecture"] == false);
    CHECK(records::rigidity_record(parse_multidegree("2,2"))["case_row"]["citation"] == "Remark rem:22");

    const auto t = records::table(rec);
    CHECK(t.find("sullivan_data.euler") != std::string::npos);
}
