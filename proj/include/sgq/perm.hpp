// Copyright 2026 The sgq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sgq {

using Point = std::uint32_t;
using Object = std::vector<Point>;

struct ObjectHash {
  std::size_t operator()(const Object& o) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : o) {
      h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Permutation of {0..n-1}; products compose left to right, so (x * y)(i) is y(x(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // Cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(const std::string& text, std::size_t degree);
  static Permutation from_cycle_list(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point image(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  std::string to_string() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return ObjectHash{}(p.images());
  }
};

}  // namespace sgq
