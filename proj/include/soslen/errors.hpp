#pragma once

#include <stdexcept>
#include <string>

namespace soslen {

/// Caller passed parameters outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proven identity or inequality was violated; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Random sampling did not produce a configuration in general position.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two primes reported different ranks for the same integer instance.
class PrimeDisagreement : public GenericityFailure {
 public:
  using GenericityFailure::GenericityFailure;
};

/// Injectivity evidence for a length certificate could not be produced.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Job exceeds the instance size guard and --allow-large was not given.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace soslen
