#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcover {

using Point = std::uint16_t;

class PermutationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bijection of {1..degree}, stored as its image array.
///
/// Products use the right action: point^(p*q) = (point^p)^q.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes a 1-based image array; throws if it is not a bijection.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point point) const { return images_[point - 1]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// First point moved, or 0 for the identity.
  Point first_moved() const;

  /// Lengths of all cycles, including fixed points.
  std::vector<std::size_t> cycle_type() const;

  /// Disjoint-cycle notation, e.g. "(1,2)(3,4)"; the identity is "()".
  std::string to_cycles() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Right-action product; rejects unequal degrees.
Permutation compose(Permutation const &p, Permutation const &q);
inline Permutation operator*(Permutation const &p, Permutation const &q) { return compose(p, q); }

/// q^-1 p q.
Permutation conjugate(Permutation const &p, Permutation const &by);

/// Least m >= 1 with p^m = 1.
std::uint64_t order_of(Permutation const &p);

/// Parses a product of disjoint cycles such as "(1,2,3)(4,5)". The empty
/// string and "()" both denote the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

}  // namespace kcover

template <>
struct std::hash<kcover::Permutation> {
  std::size_t operator()(kcover::Permutation const &p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};
