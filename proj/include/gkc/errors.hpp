#pragma once

#include <stdexcept>
#include <string>

namespace gkc {

/// An operation was called outside the (m, tail, depth) regime it supports.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cone combination outside the family's known shapes.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The K-theory does not determine the requested order (the AF-AF case).
class NotDetermined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent routes to the same answer disagreed. Always a bug.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gkc
