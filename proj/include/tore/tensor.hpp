#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace tore {

/// Dense row-major tensor of doubles.
struct Tensor {
  std::vector<std::uint32_t> dims;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::uint32_t> shape, double fill = 0.0)
      : dims(std::move(shape)), data(element_count(dims), fill) {}

  static std::size_t element_count(const std::vector<std::uint32_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                           [](std::size_t a, std::uint32_t b) { return a * b; });
  }

  std::size_t rank() const noexcept { return dims.size(); }
  std::size_t size() const noexcept { return data.size(); }

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

}  // namespace tore
