// Copyright 2026 The Gfrieze Authors.
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
#include <string_view>

namespace gfrieze {

enum class Errc {
  InvalidSize,        // n is not of the form d + m(d-2), or n/d below 3
  CrossingDiagonals,  // two diagonals cross in the interior
  NotDAngulation,     // bad labels, duplicates, wrong count, or non-d-gon face
  NotBoundaryFace,    // face is not cut off by a single diagonal
  CannotCut,          // dissection has no diagonal to cut along
  DimensionMismatch,  // matrix dimensions incompatible with the operation
  NotSquare,          // square matrix required
  SizeLimit,          // instance exceeds a configured cap
  SameEdge,           // distinct boundary edges required
  ParseError,         // malformed textual input
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::CrossingDiagonals: return "CrossingDiagonals";
    case Errc::NotDAngulation: return "NotDAngulation";
    case Errc::NotBoundaryFace: return "NotBoundaryFace";
    case Errc::CannotCut: return "CannotCut";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::SameEdge: return "SameEdge";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/// Validation or domain error with a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gfrieze
