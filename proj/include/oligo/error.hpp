#ifndef OLIGO_ERROR_HPP
#define OLIGO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace oligo
{

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configurable resource cap (element count, degree, search size) was hit.
class SizeLimitError : public Error
{
public:
  using Error::Error;
};

/// Degrees or domains of the operands do not match, or a set is not stable.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

class ContainmentError : public Error
{
public:
  using Error::Error;
};

/// The coset pairing handed to subdirect() is not an isomorphism of quotients.
class CorrespondenceError : public Error
{
public:
  using Error::Error;
};

/// recognize() could not rebuild decorated data; what() names the stage.
class RecognitionError : public Error
{
public:
  using Error::Error;
};

/// A mathematical property that must hold was found violated. Indicates a bug.
class FalsifiedPropertyError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(std::string const &message, std::size_t offset)
  : Error(message + " at offset " + std::to_string(offset)),
    offset_(offset)
  {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

} // namespace oligo

#endif // OLIGO_ERROR_HPP
