#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnawords/errors.hpp"
#include "dnawords/io.hpp"

#include <filesystem>
#include <sstream>

using namespace dnawords;

namespace {

Code parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_code(in, "t.txt");
}

std::size_t error_line(const std::string &text)
{
    try {
        parse(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parse code files")
{
    const Code c = parse("# header\n\nACGT\nTTTT\n");
    CHECK(c.strings() == std::vector<std::string>{"ACGT", "TTTT"});
    CHECK(parse("01\n10").size() == 2);
    CHECK(error_line("ACGT\nAXGT\n") == 2);
    CHECK(error_line("0101\n011\n") == 2);
    CHECK(error_line("01\n# c\n01\n") == 3);
    CHECK(error_line(" 01\n") == 1);
    CHECK(error_line("01\nAT\n") == 2);
    CHECK(error_line("# only comments\n") != 0);
    try {
        parse("01\n0x\n");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).rfind("t.txt:2: ", 0) == 0);
    }
}

TEST_CASE("format and round trip")
{
    const Code c = Code::from_strings({"GATTACA", "CATTAGA"});
    const std::string text = format_code(c, {"made by a test"});
    CHECK(text == "# made by a test\nGATTACA\nCATTAGA\n");
    CHECK(parse(text) == c);

    const auto dir = std::filesystem::temp_directory_path() / "dnawords_test_io";
    std::filesystem::create_directories(dir);
    write_code(dir / "c.txt", c);
    CHECK(read_code(dir / "c.txt") == c);
    CHECK_THROWS_AS(read_code(dir / "missing.txt"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("energy tables")
{
    std::string flat = "[";
    for (int i = 0; i < 16; ++i)
        flat += std::to_string(i) + (i < 15 ? "," : "]");
    const EnergyTable a = parse_energy_table(flat);
    CHECK(a('A', 'A') == 0);
    CHECK(a('A', 'C') == 1);
    CHECK(a('C', 'A') == 4);
    CHECK(a('T', 'T') == 15);
    const EnergyTable b = parse_energy_table("{\"gamma\": " + flat + "}");
    CHECK(b.entries() == a.entries());
    const EnergyTable c = parse_energy_table(
        "[[0,1,2,3],[4,5,6,7],[8,9,10,11],[12,13,14,15]]");
    CHECK(c.entries() == a.entries());
    CHECK_THROWS_AS(parse_energy_table("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_energy_table("{"), ParseError);
    CHECK_THROWS_AS(parse_energy_table("[1.5,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16]"),
                    ParseError);
}
