// Copyright 2026 The Persuade Authors
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

#ifndef PERSUADE_ERRORS_H_
#define PERSUADE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace persuade {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERSUADE_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

// Posterior weights do not average back to the prior.
PERSUADE_DEFINE_ERROR(BayesViolation);
PERSUADE_DEFINE_ERROR(Infeasible);
PERSUADE_DEFINE_ERROR(NotAffinelyIndependent);
PERSUADE_DEFINE_ERROR(DegenerateRegion);
PERSUADE_DEFINE_ERROR(DomainError);
PERSUADE_DEFINE_ERROR(PreconditionUnmet);
PERSUADE_DEFINE_ERROR(ScaleExceeded);
PERSUADE_DEFINE_ERROR(EmptyInterval);
PERSUADE_DEFINE_ERROR(ParseError);
PERSUADE_DEFINE_ERROR(ValidationError);

#undef PERSUADE_DEFINE_ERROR

}  // namespace persuade

#endif  // PERSUADE_ERRORS_H_
