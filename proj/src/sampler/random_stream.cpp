#include "linklab/random_stream.hpp"

#include <stdexcept>

namespace linklab {

namespace {
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  return std::mt19937_64(seq);
}
}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void RandomStream::mixed(const std::uint64_t* radix, std::uint64_t* out, std::size_t count) {
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t prod = 1;
    std::size_t j = i;
    while (j < count && prod <= (~std::uint64_t{0}) / radix[j]) prod *= radix[j++];
    if (j == i) throw std::invalid_argument("radix too large");
    std::uint64_t x = below(prod);
    for (; i < j; ++i) {
      out[i] = x % radix[i];
      x /= radix[i];
    }
  }
}

}  // namespace linklab
