#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

namespace betti {

template <class R, class F>
std::vector<R> evaluate_cells(const std::vector<Params>& cells, F fn) {
  std::vector<std::optional<R>> out(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), cells.size()));
  auto run = [&](std::size_t start) {
    for (std::size_t c = start; c < cells.size(); c += workers) {
      try {
        out[c] = fn(cells[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<R> result;
  result.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (errors[c]) std::rethrow_exception(errors[c]);
    result.push_back(std::move(*out[c]));
  }
  return result;
}

}  // namespace betti
