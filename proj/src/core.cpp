#include "dnawords/core.hpp"

#include "dnawords/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace dnawords {

char Alphabet::complement(char c) const
{
    if (_kind == AlphabetKind::Binary) {
        switch (c) {
        case '0': return '1';
        case '1': return '0';
        }
    } else {
        switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        }
    }
    throw InvalidAlphabet(std::string("character '") + c +
                          "' is not in the " + std::string(name()) +
                          " alphabet");
}

Word::Word(Alphabet alphabet, std::string chars)
  : _alphabet(alphabet), _chars(std::move(chars))
{
    for (char c : _chars) {
        if (!_alphabet.contains(c))
            throw InvalidAlphabet(std::string("character '") + c +
                                  "' is not in the " +
                                  std::string(_alphabet.name()) + " alphabet");
    }
}

Word Word::parse(std::string_view text)
{
    const bool binary = std::all_of(text.begin(), text.end(), [](char c) {
        return c == '0' || c == '1';
    });
    return Word(binary ? Alphabet::binary() : Alphabet::dna(),
                std::string(text));
}

char Word::at(std::size_t position) const
{
    if (position < 1 || position > _chars.size())
        throw IndexError("position " + std::to_string(position) +
                         " outside word of length " +
                         std::to_string(_chars.size()));
    return _chars[position - 1];
}

Word reverse(const Word &w)
{
    return Word(w.alphabet(), std::string(w.str().rbegin(), w.str().rend()));
}

Word complement(const Word &w)
{
    std::string out = w.str();
    for (char &c : out)
        c = w.alphabet().complement(c);
    return Word(w.alphabet(), std::move(out));
}

Word reverse_complement(const Word &w) { return complement(reverse(w)); }

std::size_t hamming(const Word &x, const Word &y)
{
    if (x.length() != y.length())
        throw LengthMismatch("hamming: lengths " + std::to_string(x.length()) +
                             " and " + std::to_string(y.length()));
    if (x.alphabet() != y.alphabet())
        throw InvalidAlphabet("hamming: words over different alphabets");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.length(); ++i)
        d += x[i] != y[i];
    return d;
}

Word substring(const Word &w, std::size_t i, std::size_t j)
{
    if (i < 1 || i > j || j > w.length())
        throw IndexError("substring [" + std::to_string(i) + ", " +
                         std::to_string(j) + "] outside word of length " +
                         std::to_string(w.length()));
    return Word(w.alphabet(), w.str().substr(i - 1, j - i + 1));
}

std::size_t longest_run(const Word &w)
{
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
        run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

std::size_t gc_count(const Word &w)
{
    return static_cast<std::size_t>(std::count_if(
        w.str().begin(), w.str().end(),
        [](char c) { return c == 'G' || c == 'C'; }));
}

Code::Code(std::vector<Word> words) : _words(std::move(words))
{
    if (_words.empty())
        throw InvalidParameter("a code needs at least one word");
    const Alphabet alphabet = _words.front().alphabet();
    const std::size_t length = _words.front().length();
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < _words.size(); ++i) {
        const Word &w = _words[i];
        if (w.alphabet() != alphabet)
            throw InvalidAlphabet("word " + std::to_string(i + 1) +
                                  " uses a different alphabet");
        if (w.length() != length)
            throw LengthMismatch("word " + std::to_string(i + 1) +
                                 " has length " + std::to_string(w.length()) +
                                 ", expected " + std::to_string(length));
        if (!seen.insert(w.str()).second)
            throw InvalidParameter("duplicate word " + w.str() +
                                   " at index " + std::to_string(i + 1));
    }
}

Code Code::from_strings(const std::vector<std::string> &words)
{
    std::vector<Word> out;
    out.reserve(words.size());
    for (const auto &s : words)
        out.push_back(Word::parse(s));
    // A mix like {"01", "AT"} parses as binary + DNA; normalize to DNA so
    // the error (if any) names the offending character instead.
    const bool any_dna = std::any_of(out.begin(), out.end(), [](const Word &w) {
        return w.alphabet() == Alphabet::dna();
    });
    if (any_dna) {
        for (auto &w : out)
            w = Word(Alphabet::dna(), w.str());
    }
    return Code(std::move(out));
}

std::vector<std::string> Code::strings() const
{
    std::vector<std::string> out;
    out.reserve(_words.size());
    for (const auto &w : _words)
        out.push_back(w.str());
    return out;
}

} // namespace dnawords
