// Copyright 2026 The qpuf Authors
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

#include "qpuf/error.hpp"

namespace qpuf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kUnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kDivisibility: return "divisibility";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kQueryBudget: return "query-budget";
  }
  return "unknown";
}

}  // namespace qpuf
