#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jhkit {

/// Two operands live over different alphabets (or coefficient rings).
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter name that the alphabet does not contain.
class UnknownLetter : public std::invalid_argument {
 public:
  explicit UnknownLetter(const std::string& name)
      : std::invalid_argument("unknown letter '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Text input that does not follow one of the documented grammars.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation's precondition does not hold for the given value.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jhkit
