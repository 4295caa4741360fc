// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spincat {

/// Superposition whose two components cancel; the state is the zero vector
/// and no normalization exists.
class DegenerateSuperposition : public std::runtime_error {
 public:
  explicit DegenerateSuperposition(const std::string& what)
      : std::runtime_error(what) {}
};

/// Stereographic parametrization requested at or beyond the south pole,
/// where z = e^{-i phi} tan(theta/2) diverges.
class PoleSingularity : public std::runtime_error {
 public:
  explicit PoleSingularity(const std::string& what)
      : std::runtime_error(what) {}
};

/// Log-likelihood has no unique maximum inside the search window at grid
/// resolution (uninformative measurement).
class FlatLikelihood : public std::runtime_error {
 public:
  explicit FlatLikelihood(const std::string& what)
      : std::runtime_error(what) {}
};

/// Eigendecomposition did not converge or the input violated its contract.
class EigenFailure : public std::runtime_error {
 public:
  explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spincat
