#include "springer/rng.hpp"

namespace springer {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& context, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the context string
  for (unsigned char c : context) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  SplitMix64 mix(seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL));
  mix.next();
  return mix.next();
}

}  // namespace springer
