#include "nlomni/random.hpp"

namespace nlomni {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::string_view stream) : engine_(seed ^ fnv1a(stream)) {}

int SeededRng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

}  // namespace nlomni
