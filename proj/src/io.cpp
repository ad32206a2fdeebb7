#include "dnawords/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dnawords {

ParseError::ParseError(const std::string &source, std::size_t line,
                       const std::string &what)
  : Error(source + ":" + std::to_string(line) + ": " + what), _line(line)
{
}

Code parse_code(std::istream &in, const std::string &source)
{
    std::vector<std::string> words;
    std::vector<std::size_t> lines;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        for (char c : line) {
            if (c != '0' && c != '1' && c != 'A' && c != 'C' && c != 'G' &&
                c != 'T')
                throw ParseError(source, number,
                                 std::string("unexpected character '") + c +
                                     "'");
        }
        if (!words.empty() && line.size() != words.front().size())
            throw ParseError(source, number,
                             "word length " + std::to_string(line.size()) +
                                 " differs from " +
                                 std::to_string(words.front().size()));
        words.push_back(line);
        lines.push_back(number);
    }
    if (words.empty())
        throw ParseError(source, number, "no words found");
    try {
        return Code::from_strings(words);
    } catch (const InvalidParameter &e) {
        // duplicate words: point at the second occurrence
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (words[i] == words[j])
                    throw ParseError(source, lines[i],
                                     "duplicate word " + words[i]);
        throw ParseError(source, number, e.what());
    } catch (const Error &e) {
        throw ParseError(source, number, e.what());
    }
}

Code read_code(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return parse_code(in, path.string());
}

std::string format_code(const Code &code,
                        const std::vector<std::string> &comments)
{
    std::string out;
    for (const auto &c : comments)
        out += "# " + c + "\n";
    for (const Word &w : code)
        out += w.str() + "\n";
    return out;
}

void write_code(const std::filesystem::path &path, const Code &code,
                const std::vector<std::string> &comments)
{
    write_text(path, format_code(code, comments));
}

EnergyTable parse_energy_table(const std::string &json_text,
                               const std::string &source)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        // byte offset -> line number
        const auto upto = std::min<std::size_t>(e.byte, json_text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(
                                  json_text.begin(),
                                  json_text.begin() +
                                      static_cast<std::ptrdiff_t>(upto),
                                  '\n'));
        throw ParseError(source, line, "invalid JSON");
    }
    if (doc.is_object()) {
        if (!doc.contains("gamma"))
            throw ParseError(source, 1, "energy table object lacks \"gamma\"");
        doc = doc["gamma"];
    }
    if (!doc.is_array())
        throw ParseError(source, 1, "energy table must be an array");
    // Accept a 4x4 nested array as well as the flat form.
    if (doc.size() == 4 && std::all_of(doc.begin(), doc.end(),
                                       [](const auto &r) { return r.is_array(); })) {
        nlohmann::json flat = nlohmann::json::array();
        for (const auto &r : doc)
            for (const auto &v : r)
                flat.push_back(v);
        doc = flat;
    }
    if (doc.size() != 16)
        throw ParseError(source, 1,
                         "energy table needs 16 entries, got " +
                             std::to_string(doc.size()));
    std::array<int, 16> e{};
    for (std::size_t i = 0; i < 16; ++i) {
        if (!doc[i].is_number_integer())
            throw ParseError(source, 1,
                             "energy entry " + std::to_string(i + 1) +
                                 " is not an integer");
        e[i] = doc[i].get<int>();
    }
    return EnergyTable(e);
}

EnergyTable read_energy_table(const std::filesystem::path &path)
{
    return parse_energy_table(read_text(path), path.string());
}

void write_text(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << text;
    if (!out)
        throw IoError("error while writing " + path.string());
}

std::string read_text(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace dnawords
