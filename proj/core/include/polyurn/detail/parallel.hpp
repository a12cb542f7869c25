#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace polyurn {

template <class Body>
void parallel_for_index(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::uint64_t j = 0; j < count; ++j) body(j);
    return;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(workers, count);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = count * c / chunks;
      const std::uint64_t end = count * (c + 1) / chunks;
      threads.emplace_back([&, c, begin, end] {
        try {
          for (std::uint64_t j = begin; j < end; ++j) body(j);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace polyurn
