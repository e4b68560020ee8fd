#pragma once

#include <cstdint>
#include <string>

namespace asmax {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::uint64_t cap = 200'000'000;       // oracle enumeration cap, field elements
  std::uint64_t budget = 100'000;        // Lagrangian search candidates
  std::string cache_path = "asmax-cache.jsonl";
  bool use_cache = false;
  std::string format = "pretty";         // json | tsv | pretty
  int threads = 0;                       // 0: OpenMP default
  std::uint64_t seed = 20240601;         // sampled property checks only
  std::uint64_t kmax = 12;               // verdict table range
  std::uint64_t lpoly_cap = 4096;        // largest L-polynomial degree expanded
};

}  // namespace asmax
