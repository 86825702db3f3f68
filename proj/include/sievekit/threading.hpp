#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sievekit {

int thread_budget();
void set_thread_budget(int n);

// Splits [lo, hi] into contiguous chunks, one worker thread each; per-chunk
// states are returned in chunk order so reductions stay deterministic.
template <class State>
std::vector<State> parallel_ranges(std::uint64_t lo, std::uint64_t hi, int threads,
                                   const std::function<void(std::uint64_t, std::uint64_t, State&)>& work) {
  if (threads <= 0) threads = thread_budget();
  std::uint64_t span = (hi >= lo) ? hi - lo + 1 : 0;
  if (span == 0) return {};
  std::uint64_t nchunk = std::min<std::uint64_t>(threads, span);
  std::vector<State> states(nchunk);
  std::vector<std::thread> pool;
  pool.reserve(nchunk);
  for (std::uint64_t c = 0; c < nchunk; ++c) {
    std::uint64_t a = lo + span * c / nchunk;
    std::uint64_t b = lo + span * (c + 1) / nchunk - 1;
    pool.emplace_back([&, a, b, c] { work(a, b, states[c]); });
  }
  for (auto& t : pool) t.join();
  return states;
}

}  // namespace sievekit
