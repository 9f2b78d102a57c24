// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace chshkit {

/// An argument lies outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sequences or arrays whose lengths must agree do not.
class ShapeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A file or document could not be parsed into the expected structure.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested correlations cannot be realized by any joint distribution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chshkit
