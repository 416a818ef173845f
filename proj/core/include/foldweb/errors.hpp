// Copyright 2026 The foldweb Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace foldweb {

/// Base class for every error raised by the library. The concrete subclass
/// names the failure; `what()` carries the details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept = 0;
};

#define FOLDWEB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char *kind() const noexcept override { return #Name; }     \
  };

FOLDWEB_DEFINE_ERROR(RegistryError)
FOLDWEB_DEFINE_ERROR(DegreeViolation)
FOLDWEB_DEFINE_ERROR(NotFound)
FOLDWEB_DEFINE_ERROR(ValidationError)
FOLDWEB_DEFINE_ERROR(SchemaError)
FOLDWEB_DEFINE_ERROR(AnticommutesWithMeasurement)
FOLDWEB_DEFINE_ERROR(UnsupportedPlacement)
FOLDWEB_DEFINE_ERROR(OddDistanceRequired)
FOLDWEB_DEFINE_ERROR(WebInvalid)
FOLDWEB_DEFINE_ERROR(ForcedContradiction)
FOLDWEB_DEFINE_ERROR(ShapeError)
FOLDWEB_DEFINE_ERROR(TooLarge)
FOLDWEB_DEFINE_ERROR(OverlayMismatch)

#undef FOLDWEB_DEFINE_ERROR

}  // namespace foldweb
