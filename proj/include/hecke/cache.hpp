#pragma once

#include "hecke/root_datum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace hecke {

// Per-datum memo storage.  One instance of T is created lazily for each live
// datum; entries whose datum has expired are dropped on the next lookup.
// T must be default constructible and should carry its own shared_mutex for
// read-mostly access.
template <class T>
std::shared_ptr<T> datum_cache(const DatumPtr& d) {
  struct Slot {
    std::weak_ptr<const RootDatum> owner;
    std::shared_ptr<T> value;
  };
  static std::mutex mu;
  static std::map<const RootDatum*, Slot> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(d.get());
  if (it != reg.end() && it->second.owner.lock() == d) return it->second.value;
  for (auto j = reg.begin(); j != reg.end();) {
    if (j->second.owner.expired())
      j = reg.erase(j);
    else
      ++j;
  }
  auto v = std::make_shared<T>();
  reg[d.get()] = Slot{d, v};
  return v;
}

// Look up `key` under a shared lock; compute outside any lock on a miss and
// publish under an exclusive lock.  `compute` may recurse into the same map.
template <class Map, class Key, class F>
typename Map::mapped_type memo_lookup(std::shared_mutex& mu, Map& map, const Key& key, F&& compute) {
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = compute();
  std::unique_lock<std::shared_mutex> lock(mu);
  map.emplace(key, value);
  return value;
}

}  // namespace hecke
