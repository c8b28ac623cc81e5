#pragma once

#include <cstddef>
#include <vector>

namespace hopfkit {

template <class Fn>
std::vector<SparseVec> map_columns(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<SparseVec> out(n);
  const auto count = static_cast<long long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace hopfkit
