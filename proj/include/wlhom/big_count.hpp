// Copyright 2026 The wlhom Authors
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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wlhom {

/// Exact natural number for homomorphism counts. Values such as d^n overflow
/// any machine word almost immediately, so every count is arbitrary precision.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

/// Parses a non-empty string of decimal digits. Returns false on anything else.
bool parse_decimal(const std::string& text, BigCount& out);

inline BigCount pow(const BigCount& base, std::uint64_t exponent) {
  BigCount result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace wlhom
