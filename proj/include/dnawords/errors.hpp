// errors.hpp -- exception types shared by every module

#pragma once

#include <stdexcept>
#include <string>

namespace dnawords {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Two words (or rows) that must have equal length do not.
class LengthMismatch : public Error
{
public:
    using Error::Error;
};

/// A 1-based index lies outside the word.
class IndexError : public Error
{
public:
    using Error::Error;
};

/// A numeric parameter violates its documented range.
class InvalidParameter : public Error
{
public:
    using Error::Error;
};

/// An operation was applied to a word or code over the wrong alphabet.
class InvalidAlphabet : public Error
{
public:
    using Error::Error;
};

/// The requested word length does not satisfy the derandomization
/// base case, so no construction is attempted.
class InfeasibleLength : public Error
{
public:
    InfeasibleLength(std::size_t length, std::string evidence)
      : Error("infeasible word length " + std::to_string(length) + ": " +
              evidence),
        _length(length)
    {
    }

    std::size_t length() const noexcept { return _length; }

private:
    std::size_t _length;
};

/// A constructed code was rejected by the constraint oracle.
class VerificationFailed : public Error
{
public:
    using Error::Error;
};

} // namespace dnawords
