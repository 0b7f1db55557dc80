// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCORR_ERRORS_H_
#define QCORR_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcorr {

/// Input violates a documented precondition (non-Hermitian, non-unit trace,
/// unphysical correlators, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A two-qubit matrix expected to be Bell-diagonal carries other Pauli
/// correlators. `offending()` lists them as "XZ=0.25"-style strings.
class StructureError : public ValidationError {
 public:
  StructureError(const std::string &what, std::vector<std::string> offending)
      : ValidationError(what), offending_(std::move(offending)) {}
  const std::vector<std::string> &offending() const { return offending_; }

 private:
  std::vector<std::string> offending_;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The filter annihilated the state (zero post-filter trace).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric optimizer exhausted its restarts without meeting its
/// convergence criterion. Carries the best objective value seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string &what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}
  double best_value() const { return best_value_; }

 private:
  double best_value_;
};

}  // namespace qcorr

#endif  // QCORR_ERRORS_H_
