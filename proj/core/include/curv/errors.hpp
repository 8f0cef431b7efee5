#pragma once

#include <stdexcept>
#include <string>

namespace curv {

// Caller handed an operation something outside its documented range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition between cooperating components was broken.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A guarantee the library itself relies on failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed serialized input. offset() is the byte position of the defect.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Rejection sampling exceeded its configured ceiling.
class SamplingExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curv
