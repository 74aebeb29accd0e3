#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spantag {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A code that is not part of the tag registry. `line` is 0 when the code did
// not come from a file.
class UnknownTagError : public Error {
 public:
  explicit UnknownTagError(std::string code, std::size_t line = 0)
      : Error(line == 0 ? "unknown tag '" + code + "'"
                        : "line " + std::to_string(line) + ": unknown tag '" +
                              code + "'"),
        code_(std::move(code)),
        line_(line) {}

  const std::string& code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string code_;
  std::size_t line_;
};

// Line-addressed syntax problem in one of the plain-text input formats.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NoSuchTagError : public Error {
 public:
  using Error::Error;
};

// The embedded registry table failed validation.
class RegistryError : public Error {
 public:
  using Error::Error;
};

class BadPatternError : public ParseError {
 public:
  using ParseError::ParseError;
};

class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

class AlignmentError : public Error {
 public:
  explicit AlignmentError(std::size_t position)
      : Error("token streams differ at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NoValidPathError : public Error {
 public:
  explicit NoValidPathError(std::size_t sentence = 0)
      : Error("bias rules leave no valid tag path for sentence " +
              std::to_string(sentence)),
        sentence_(sentence) {}

  std::size_t sentence() const noexcept { return sentence_; }

 private:
  std::size_t sentence_;
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("training corpus is empty") {}
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty word form") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spantag
