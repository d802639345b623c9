// Copyright 2026 The Authors.
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

#include "milnor/error.hpp"

namespace milnor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kWrongCardinality: return "WrongCardinality";
    case ErrorCode::kExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kElementInBasis: return "ElementInBasis";
    case ErrorCode::kNotACircuit: return "NotACircuit";
    case ErrorCode::kHasLoop: return "HasLoop";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kCertificateFailed: return "CertificateFailed";
    case ErrorCode::kNoCommonBasis: return "NoCommonBasis";
    case ErrorCode::kParallelPairPresent: return "ParallelPairPresent";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kBadCharacteristic: return "BadCharacteristic";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kDivisibilityFailed: return "DivisibilityFailed";
    case ErrorCode::kCrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::kWrongResidue: return "WrongResidue";
    case ErrorCode::kInvarianceFailed: return "InvarianceFailed";
    case ErrorCode::kRouteMismatch: return "RouteMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace milnor
