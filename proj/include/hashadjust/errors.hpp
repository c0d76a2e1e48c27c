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

#ifndef HASHADJUST_ERRORS_HPP
#define HASHADJUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hashadjust {

enum class Errc {
  invalid_id,
  no_servers,
  unknown_server,
  unknown_item,
  point_collision,
  not_adjacent,
  inconsistent_state,
  capacity_exhausted,
  all_full,
  not_ahead,
  incomparable_snapshots,
  too_large,
  parse_error,
  invalid_config,
  inconsistent,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_id: return "InvalidId";
    case Errc::no_servers: return "NoServers";
    case Errc::unknown_server: return "UnknownServer";
    case Errc::unknown_item: return "UnknownItem";
    case Errc::point_collision: return "PointCollision";
    case Errc::not_adjacent: return "NotAdjacent";
    case Errc::inconsistent_state: return "InconsistentState";
    case Errc::capacity_exhausted: return "CapacityExhausted";
    case Errc::all_full: return "AllFull";
    case Errc::not_ahead: return "NotAhead";
    case Errc::incomparable_snapshots: return "IncomparableSnapshots";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

/// Single exception type carrying a structured code; tests match on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hashadjust

#endif  // HASHADJUST_ERRORS_HPP
