#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ajcable {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "our" failures from std ones can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define AJCABLE_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

// ring
AJCABLE_DEFINE_ERROR(InexactDivision)
AJCABLE_DEFINE_ERROR(ZeroArgument)
AJCABLE_DEFINE_ERROR(ExponentOverflow)

// matrix
AJCABLE_DEFINE_ERROR(NotSquare)
AJCABLE_DEFINE_ERROR(TooLarge)
AJCABLE_DEFINE_ERROR(DimensionMismatch)

// annihilator
AJCABLE_DEFINE_ERROR(DegreeTooSmall)
AJCABLE_DEFINE_ERROR(SingularSystem)
AJCABLE_DEFINE_ERROR(IndexOutOfRange)
AJCABLE_DEFINE_ERROR(InvalidFamily)
AJCABLE_DEFINE_ERROR(InternalInvariant)

// cabling
AJCABLE_DEFINE_ERROR(BothConstant)
AJCABLE_DEFINE_ERROR(OddMPower)
AJCABLE_DEFINE_ERROR(EvenR)
AJCABLE_DEFINE_ERROR(ZeroR)

// oretorus
AJCABLE_DEFINE_ERROR(UnsupportedKnot)
AJCABLE_DEFINE_ERROR(ColorTooLarge)

// knotdb
AJCABLE_DEFINE_ERROR(NegativeLExponent)
AJCABLE_DEFINE_ERROR(DuplicateName)

#undef AJCABLE_DEFINE_ERROR

/// A failed structural identity; `index` is the first coefficient index at
/// which the two sides disagree.
class IdentityFailure : public Error {
 public:
  IdentityFailure(std::string identity, int index)
      : Error(identity + " violated at index " + std::to_string(index)),
        identity_(std::move(identity)),
        index_(index) {}

  const std::string& identity() const noexcept { return identity_; }
  int index() const noexcept { return index_; }

 private:
  std::string identity_;
  int index_;
};

/// Parse failure with the byte offset into the text being parsed.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string record, const std::string& invariant)
      : Error("record '" + record + "': " + invariant), record_(std::move(record)) {}

  const std::string& record() const noexcept { return record_; }

 private:
  std::string record_;
};

}  // namespace ajcable
