// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace steerlab {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (negative time, r < 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Covariance matrix violates cov + i*Omega >= 0, or has det <= 0.
class UnphysicalState : public Error {
 public:
  using Error::Error;
};

/// A variance that must be strictly positive is zero, or a covariance
/// matrix is rank deficient.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined for this input, e.g. a sudden-death
/// time for a state that is not steerable at t = 0.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A numerical routine detected loss of accuracy (truncation tail, trace
/// drift, failed root bracket).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace steerlab
