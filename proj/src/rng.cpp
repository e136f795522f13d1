#include "scov/rng.hpp"

#include <cstdlib>
#include <string>

namespace scov {

int shard_count_from_env() {
  const char* v = std::getenv("STEINER_COVER_THREADS");
  if (v == nullptr) return 1;
  try {
    const int n = std::stoi(v);
    return n >= 1 ? n : 1;
  } catch (...) {
    return 1;
  }
}

int resolve_shards(int shards) {
  return shards >= 1 ? shards : shard_count_from_env();
}

}  // namespace scov
