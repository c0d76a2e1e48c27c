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

#ifndef HASHADJUST_HASH_POINT_HPP
#define HASHADJUST_HASH_POINT_HPP

#include <openssl/evp.h>

#include <compare>
#include <cstdint>
#include <string_view>

#include "hashadjust/errors.hpp"

namespace hashadjust {

/// Position on the unit ring, stored as value/2^64 in [0,1).
/// Clockwise distance wraps mod 2^64, i.e. mod 1 on the fraction.
struct HashPoint {
  std::uint64_t value = 0;

  friend auto operator<=>(const HashPoint&, const HashPoint&) = default;

  /// Clockwise distance from *this to b (how far forward b lies).
  std::uint64_t clockwise_to(HashPoint b) const { return b.value - value; }

  double fraction() const { return static_cast<double>(value) / 18446744073709551616.0; }
};

enum class HashBackend {
  sha512,   // first 64 bits of SHA-512, big-endian
  fixture,  // "name@0.25" ids declare their own fraction; exact decimal parse
};

namespace detail {

inline std::uint64_t sha512_prefix64(std::string_view id) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(id.data(), id.size(), digest, &len, EVP_sha512(), nullptr) != 1 || len < 8)
    fail(Errc::inconsistent_state, "SHA-512 digest failed");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | digest[i];
  return v;
}

// Exact conversion of a decimal fraction "0.ddd" (or "0", ".ddd") to floor(f * 2^64).
inline std::uint64_t parse_declared_fraction(std::string_view id, std::string_view frac) {
  std::size_t pos = 0;
  if (pos < frac.size() && frac[pos] == '0') ++pos;
  if (pos == frac.size()) return 0;  // "0"
  if (frac[pos] != '.') fail(Errc::invalid_id, "bad fixture fraction in '" + std::string(id) + "'");
  ++pos;
  if (pos == frac.size()) fail(Errc::invalid_id, "bad fixture fraction in '" + std::string(id) + "'");
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;
  int digits = 0;
  for (; pos < frac.size(); ++pos) {
    char c = frac[pos];
    if (c < '0' || c > '9') fail(Errc::invalid_id, "bad fixture fraction in '" + std::string(id) + "'");
    if (++digits > 19) fail(Errc::invalid_id, "fixture fraction too long in '" + std::string(id) + "'");
    num = num * 10 + static_cast<unsigned>(c - '0');
    den *= 10;
  }
  return static_cast<std::uint64_t>((num << 64) / den);
}

}  // namespace detail

/// Maps an identifier to its ring position. Production backend hashes with
/// SHA-512; the fixture backend reads the fraction declared after the last
/// '@' so tests are reproducible bit-exactly.
inline HashPoint hash_point(std::string_view id, HashBackend backend = HashBackend::sha512) {
  if (id.empty()) fail(Errc::invalid_id, "empty identifier");
  if (backend == HashBackend::sha512) return HashPoint{detail::sha512_prefix64(id)};
  auto at = id.rfind('@');
  if (at == std::string_view::npos || at + 1 == id.size())
    fail(Errc::invalid_id, "fixture id '" + std::string(id) + "' lacks '@fraction'");
  return HashPoint{detail::parse_declared_fraction(id, id.substr(at + 1))};
}

}  // namespace hashadjust

#endif  // HASHADJUST_HASH_POINT_HPP
