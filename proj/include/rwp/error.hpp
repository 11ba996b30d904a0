#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rwp {

  // Raised when caller-supplied data violates an operation's precondition.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Malformed text in one of the line-oriented file formats.
  class parse_error : public input_error {
   public:
    parse_error(std::size_t line, std::string const& what)
        : input_error("line " + std::to_string(line) + ": " + what),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // An internal guarantee did not hold; indicates a bug, not bad input.
  class invariant_violation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // A bounded procedure could not reach a verdict within its bounds.
  class inconclusive_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace rwp
