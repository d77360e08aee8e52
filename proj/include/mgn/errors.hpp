#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MGN_DEFINE_ERROR(Name)      \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

MGN_DEFINE_ERROR(InvalidSpace)
MGN_DEFINE_ERROR(InvalidGenerator)
MGN_DEFINE_ERROR(InvalidPermutation)
MGN_DEFINE_ERROR(SpaceMismatch)
MGN_DEFINE_ERROR(UnknownCoefficient)
MGN_DEFINE_ERROR(InvalidEmbedding)
MGN_DEFINE_ERROR(UnsupportedGenus)
MGN_DEFINE_ERROR(NoBNClass)
MGN_DEFINE_ERROR(InvalidSpec)
MGN_DEFINE_ERROR(DimensionMismatch)

#undef MGN_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mgn
