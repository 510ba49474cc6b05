#pragma once

#include "casorati/bigfloat.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casorati {

class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Values on {0, ..., xMax}.
template <class T>
struct GridFn {
  std::vector<T> values;
  std::optional<T> energy;

  long xMax() const { return static_cast<long>(values.size()) - 1; }
  bool empty() const { return values.empty(); }

  const T& at(long x) const {
    if (x < 0 || x > xMax())
      throw WindowError("grid function evaluated at x=" + std::to_string(x) + " outside window {0.." +
                        std::to_string(xMax()) + "}");
    return values[static_cast<std::size_t>(x)];
  }
};

template <class T>
long commonWindow(const std::vector<GridFn<T>>& fs) {
  long w = fs.empty() ? -1 : fs.front().xMax();
  for (const auto& f : fs) w = std::min(w, f.xMax());
  return w;
}

}  // namespace casorati
