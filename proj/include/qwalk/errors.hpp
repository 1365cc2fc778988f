// Copyright 2026 The qwalk Authors
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

namespace qwalk {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QWALK_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

QWALK_DEFINE_ERROR(InvalidParams);
QWALK_DEFINE_ERROR(InvalidSize);
QWALK_DEFINE_ERROR(NotUnitary);
QWALK_DEFINE_ERROR(NotNormalized);
QWALK_DEFINE_ERROR(NotBlockCirculant);
QWALK_DEFINE_ERROR(DimensionMismatch);
QWALK_DEFINE_ERROR(IndexOutOfRange);
QWALK_DEFINE_ERROR(InvalidSequence);
QWALK_DEFINE_ERROR(NotUnitModulus);
QWALK_DEFINE_ERROR(OutOfRange);
QWALK_DEFINE_ERROR(OutOfDomain);
QWALK_DEFINE_ERROR(RootOutOfRange);
QWALK_DEFINE_ERROR(DegenerateInterval);
QWALK_DEFINE_ERROR(InvalidPosition);
QWALK_DEFINE_ERROR(InvalidMessage);
QWALK_DEFINE_ERROR(NotPositionEigenstate);

#undef QWALK_DEFINE_ERROR

}  // namespace qwalk
