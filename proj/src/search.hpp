#pragma once

#include <string>
#include <vector>

#include "ua/algebra.hpp"

namespace ua::detail {

// odometer over choice lists; f returns false to stop
template <class T, class F>
void for_each_choice(const std::vector<std::vector<T>>& options, F&& f) {
  const std::size_t k = options.size();
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<T> cur(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = options[i][idx[i]];
    if (!f(static_cast<const std::vector<T>&>(cur))) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

inline std::size_t product_size(const std::vector<std::size_t>& sizes, std::size_t cap, const char* what) {
  std::size_t total = 1;
  for (auto s : sizes) {
    if (s != 0 && total > cap / s) throw CapExceeded(std::string(what) + ": search space exceeds cap");
    total *= s;
  }
  return total;
}

}  // namespace ua::detail
