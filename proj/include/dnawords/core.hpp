// core.hpp -- alphabets, words, codes and elementary string operations
//
// Positions in every public contract are 1-based; storage is a plain
// std::string.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dnawords {

enum class AlphabetKind { Binary, Dna };

/// One of the two alphabets: {0,1} or {A,C,G,T}.
class Alphabet
{
public:
    constexpr explicit Alphabet(AlphabetKind kind) noexcept : _kind(kind) {}

    static constexpr Alphabet binary() noexcept
    {
        return Alphabet(AlphabetKind::Binary);
    }
    static constexpr Alphabet dna() noexcept
    {
        return Alphabet(AlphabetKind::Dna);
    }

    constexpr AlphabetKind kind() const noexcept { return _kind; }

    /// Symbols in canonical order ("01" or "ACGT").
    constexpr std::string_view symbols() const noexcept
    {
        return _kind == AlphabetKind::Binary ? std::string_view("01")
                                             : std::string_view("ACGT");
    }

    constexpr bool contains(char c) const noexcept
    {
        return symbols().find(c) != std::string_view::npos;
    }

    /// Watson-Crick complement (A<->T, C<->G) or bit flip. Throws
    /// InvalidAlphabet for a foreign character.
    char complement(char c) const;

    std::string_view name() const noexcept
    {
        return _kind == AlphabetKind::Binary ? "binary" : "dna";
    }

    constexpr bool operator==(const Alphabet &) const noexcept = default;

private:
    AlphabetKind _kind;
};

/// A fixed-length sequence of symbols from one alphabet.
class Word
{
public:
    /// Throws InvalidAlphabet if any character is outside the alphabet.
    Word(Alphabet alphabet, std::string chars);

    /// Infers the alphabet: strings over {0,1} are binary, strings over
    /// {A,C,G,T} are DNA. The empty string is binary.
    static Word parse(std::string_view text);

    Alphabet alphabet() const noexcept { return _alphabet; }
    const std::string &str() const noexcept { return _chars; }
    std::size_t length() const noexcept { return _chars.size(); }
    bool empty() const noexcept { return _chars.empty(); }

    /// 1-based character access.
    char at(std::size_t position) const;

    char operator[](std::size_t zero_based) const noexcept
    {
        return _chars[zero_based];
    }

    bool operator==(const Word &) const = default;

private:
    Alphabet _alphabet;
    std::string _chars;
};

Word reverse(const Word &w);
Word complement(const Word &w);
Word reverse_complement(const Word &w);

/// Number of differing positions. Throws LengthMismatch on unequal
/// lengths and InvalidAlphabet on mixed alphabets.
std::size_t hamming(const Word &x, const Word &y);

/// x_i .. x_j inclusive, 1-based. Throws IndexError unless
/// 1 <= i <= j <= length.
Word substring(const Word &w, std::size_t i, std::size_t j);

/// Length of the longest run of identical characters (0 for "").
std::size_t longest_run(const Word &w);

/// Number of G or C characters.
std::size_t gc_count(const Word &w);

/// A set of n pairwise distinct words sharing one alphabet and length.
class Code
{
public:
    /// Throws InvalidParameter on an empty list or duplicate words,
    /// LengthMismatch / InvalidAlphabet on inconsistent words.
    explicit Code(std::vector<Word> words);

    /// Convenience constructor; alphabet inferred as in Word::parse.
    static Code from_strings(const std::vector<std::string> &words);

    std::size_t size() const noexcept { return _words.size(); }
    std::size_t length() const noexcept { return _words.front().length(); }
    Alphabet alphabet() const noexcept { return _words.front().alphabet(); }

    const std::vector<Word> &words() const noexcept { return _words; }
    const Word &operator[](std::size_t zero_based) const noexcept
    {
        return _words[zero_based];
    }

    auto begin() const noexcept { return _words.begin(); }
    auto end() const noexcept { return _words.end(); }

    std::vector<std::string> strings() const;

    bool operator==(const Code &) const = default;

private:
    std::vector<Word> _words;
};

} // namespace dnawords
