#ifndef APROP_ERRORS_HPP
#define APROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aprop {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol is not part of the domain it is used against.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Items or attribute subsets that do not fit the schema they are used with.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input data (files, datasets, relations).
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid parameters or violated operation preconditions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace aprop

#endif  // APROP_ERRORS_HPP
