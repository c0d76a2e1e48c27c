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

#ifndef HASHADJUST_RING_HPP
#define HASHADJUST_RING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hashadjust/errors.hpp"
#include "hashadjust/hash_point.hpp"

namespace hashadjust {

struct ItemRecord {
  std::string id;
  HashPoint point;
  std::string head_id;       // recomputed whenever the server set changes
  std::string host_id;       // server currently storing the item
  std::uint64_t last_access = 0;
  double inserted_at = 0.0;  // trace seconds
  // True once the item has been accessed in place; cleared when churn
  // machinery relocates it. Recency/position coherence is only asserted
  // between items with this flag set.
  bool access_stamped = false;
};

struct ServerNode {
  std::string id;
  HashPoint point;
  std::size_t capacity = 0;
  bool was_full_prev_phase = false;
  // Arrival order into this server; front = oldest arrival.
  std::vector<std::string> items;
};

/// Ordered cyclic set of servers plus the item table and global parameters.
/// Single-threaded; copyable for snapshots.
class RingTopology {
 public:
  explicit RingTopology(HashBackend backend = HashBackend::sha512) : backend_(backend) {}

  HashBackend backend() const { return backend_; }
  HashPoint point_of(std::string_view id) const { return hash_point(id, backend_); }

  std::size_t server_count() const { return by_point_.size(); }
  std::size_t item_count() const { return items_.size(); }

  // -- servers ---------------------------------------------------------

  bool has_server(const std::string& id) const { return server_points_.count(id) != 0; }

  /// Inserts an empty node at hash_point(id). Rejects point collisions:
  /// two servers on one point would break the cyclic order.
  ServerNode& add_server_node(const std::string& id) {
    if (has_server(id)) fail(Errc::point_collision, "server '" + id + "' already present");
    HashPoint p = point_of(id);
    auto [it, fresh] = by_point_.try_emplace(p.value);
    if (!fresh) fail(Errc::point_collision, "hash point of '" + id + "' collides with '" + it->second.id + "'");
    it->second.id = id;
    it->second.point = p;
    server_points_.emplace(id, p.value);
    return it->second;
  }

  /// Detaches the node and returns its item sequence in order. Plumbing
  /// only: callers are responsible for re-homing the returned items.
  std::vector<std::string> remove_server_node(const std::string& id) {
    auto* node = find_server(id);
    if (!node) fail(Errc::unknown_server, "server '" + id + "'");
    std::vector<std::string> evicted = std::move(node->items);
    server_points_.erase(id);
    by_point_.erase(node->point.value);
    return evicted;
  }

  const ServerNode& server(const std::string& id) const {
    const auto* node = find_server(id);
    if (!node) fail(Errc::unknown_server, "server '" + id + "'");
    return *node;
  }
  ServerNode& server(const std::string& id) {
    auto* node = find_server(id);
    if (!node) fail(Errc::unknown_server, "server '" + id + "'");
    return *node;
  }

  /// Server ids in clockwise order starting from the smallest hash point.
  std::vector<std::string> servers_clockwise() const {
    std::vector<std::string> out;
    out.reserve(by_point_.size());
    for (const auto& [p, node] : by_point_) out.push_back(node.id);
    return out;
  }

  /// First server at or after the point clockwise (ties = zero distance).
  const std::string& head_of_point(HashPoint p) const {
    if (by_point_.empty()) fail(Errc::no_servers, "empty topology");
    auto it = by_point_.lower_bound(p.value);
    if (it == by_point_.end()) it = by_point_.begin();
    return it->second.id;
  }

  const std::string& neighbor(const std::string& id, bool clockwise) const {
    auto sp = server_points_.find(id);
    if (sp == server_points_.end()) fail(Errc::unknown_server, "server '" + id + "'");
    auto it = by_point_.find(sp->second);
    if (clockwise) {
      ++it;
      if (it == by_point_.end()) it = by_point_.begin();
    } else {
      if (it == by_point_.begin()) it = by_point_.end();
      --it;
    }
    return it->second.id;
  }

  /// Clockwise hops from server a to server b (0 when equal).
  std::size_t server_distance(const std::string& a, const std::string& b) const {
    if (a == b) return 0;
    std::size_t d = 0;
    std::string cur = a;
    while (cur != b) {
      cur = neighbor(cur, true);
      if (++d > by_point_.size()) fail(Errc::unknown_server, "server '" + b + "' not reachable");
    }
    return d;
  }

  std::size_t load(const std::string& id) const { return server(id).items.size(); }
  bool is_full(const std::string& id) const {
    const auto& s = server(id);
    return s.items.size() >= s.capacity;
  }

  void set_capacity_all(std::size_t c) {
    capacity_ = c;
    for (auto& [p, node] : by_point_) node.capacity = c;
  }
  std::size_t capacity() const { return capacity_; }

  // -- items -----------------------------------------------------------

  bool has_item(const std::string& id) const { return items_.count(id) != 0; }

  const ItemRecord& item(const std::string& id) const {
    auto it = items_.find(id);
    if (it == items_.end()) fail(Errc::unknown_item, "item '" + id + "'");
    return it->second;
  }
  ItemRecord& item(const std::string& id) {
    auto it = items_.find(id);
    if (it == items_.end()) fail(Errc::unknown_item, "item '" + id + "'");
    return it->second;
  }

  /// Low-level placement used by engines and fixtures; appends at the back
  /// unless at_front is set. Does not touch phase counters.
  ItemRecord& place_item(const std::string& id, const std::string& host, std::uint64_t stamp,
                         double inserted_at = 0.0, bool at_front = false) {
    if (has_item(id)) fail(Errc::inconsistent_state, "item '" + id + "' already placed");
    ServerNode& s = server(host);
    if (at_front)
      s.items.insert(s.items.begin(), id);
    else
      s.items.push_back(id);
    ItemRecord rec;
    rec.id = id;
    rec.point = point_of(id);
    rec.head_id = head_of_point(rec.point);
    rec.host_id = host;
    rec.last_access = stamp;
    rec.inserted_at = inserted_at;
    auto [it, _] = items_.emplace(id, std::move(rec));
    return it->second;
  }

  void erase_item(const std::string& id) {
    ItemRecord& rec = item(id);
    detach_from_host(rec);
    items_.erase(id);
  }

  /// Moves an item between servers; arrival position per at_front.
  void move_item(const std::string& id, const std::string& dst, bool at_front) {
    ItemRecord& rec = item(id);
    detach_from_host(rec);
    ServerNode& d = server(dst);
    if (at_front)
      d.items.insert(d.items.begin(), id);
    else
      d.items.push_back(id);
    rec.host_id = dst;
  }

  /// Re-appends an item at the back of its current host (intra-server,
  /// cost-free; refreshes its arrival position after an access).
  void refresh_position(const std::string& id) {
    ItemRecord& rec = item(id);
    ServerNode& s = server(rec.host_id);
    auto it = std::find(s.items.begin(), s.items.end(), id);
    s.items.erase(it);
    s.items.push_back(id);
  }

  void recompute_heads() {
    for (auto& [id, rec] : items_) rec.head_id = head_of_point(rec.point);
  }

  const std::unordered_map<std::string, ItemRecord>& items() const { return items_; }

  /// Index from the front of the host sequence (0 = oldest arrival).
  std::size_t arrival_index(const std::string& item_id) const {
    const ItemRecord& rec = item(item_id);
    const auto& seq = server(rec.host_id).items;
    auto it = std::find(seq.begin(), seq.end(), item_id);
    return static_cast<std::size_t>(it - seq.begin());
  }

  // Ring-wide parameters (shared by the engines).
  int alpha = 1;
  double omega = 1.0;
  long long delta = 0;
  std::uint64_t clock = 0;

 private:
  ServerNode* find_server(const std::string& id) {
    auto sp = server_points_.find(id);
    if (sp == server_points_.end()) return nullptr;
    return &by_point_.find(sp->second)->second;
  }
  const ServerNode* find_server(const std::string& id) const {
    auto sp = server_points_.find(id);
    if (sp == server_points_.end()) return nullptr;
    return &by_point_.find(sp->second)->second;
  }

  void detach_from_host(ItemRecord& rec) {
    ServerNode& s = server(rec.host_id);
    auto it = std::find(s.items.begin(), s.items.end(), rec.id);
    if (it == s.items.end()) fail(Errc::inconsistent_state, "item '" + rec.id + "' missing from host");
    s.items.erase(it);
  }

  HashBackend backend_;
  std::map<std::uint64_t, ServerNode> by_point_;
  std::unordered_map<std::string, std::uint64_t> server_points_;
  std::unordered_map<std::string, ItemRecord> items_;
  std::size_t capacity_ = 0;
};

}  // namespace hashadjust

#endif  // HASHADJUST_RING_HPP
