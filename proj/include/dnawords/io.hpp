// io.hpp -- code files and energy tables

#pragma once

#include "dnawords/constraints.hpp"
#include "dnawords/core.hpp"
#include "dnawords/errors.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dnawords {

/// Malformed input; the message is prefixed "source:line: ".
class ParseError : public Error
{
public:
    ParseError(const std::string &source, std::size_t line,
               const std::string &what);

    std::size_t line() const noexcept { return _line; }

private:
    std::size_t _line;
};

/// The file could not be opened, read or written.
class IoError : public Error
{
public:
    using Error::Error;
};

/// One word per line; blank lines and lines starting with '#' are
/// skipped. Surrounding whitespace is an error, as is any character
/// outside {0,1} or {A,C,G,T}.
Code parse_code(std::istream &in, const std::string &source = "<input>");
Code read_code(const std::filesystem::path &path);

/// Optional '#' comment lines, then one word per line, newline-terminated.
std::string format_code(const Code &code,
                        const std::vector<std::string> &comments = {});
void write_code(const std::filesystem::path &path, const Code &code,
                const std::vector<std::string> &comments = {});

/// JSON: either a flat array of 16 integers or {"gamma": [...]}, rows in
/// base order A, C, G, T.
EnergyTable parse_energy_table(const std::string &json_text,
                               const std::string &source = "<input>");
EnergyTable read_energy_table(const std::filesystem::path &path);

/// Write text atomically enough for our purposes (truncate and write).
void write_text(const std::filesystem::path &path, const std::string &text);
std::string read_text(const std::filesystem::path &path);

} // namespace dnawords
