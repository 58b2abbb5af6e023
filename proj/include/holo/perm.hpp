#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace holo {

using Point = std::uint32_t;

// Permutation of {0, ..., degree-1}, stored as its image vector.
// Composition is left to right throughout: (a * b) applies a first,
// so x^(a*b) = (x^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);            // identity
  explicit Perm(std::vector<Point> images);     // validates bijectivity

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  // x^(a.then(b)) = (x^a)^b
  Perm then(const Perm& other) const;
  Perm inverse() const;
  // this^t = t^-1 * this * t
  Perm conjugated_by(const Perm& t) const;

  bool operator==(const Perm& other) const = default;
  std::strong_ordering operator<=>(const Perm& other) const {
    return images_ <=> other.images_;
  }

  // Cycle notation with 0-indexed points, e.g. "(0 1 2)(3 4)".
  // The identity prints as "()". parse() round-trips to_cycles() exactly.
  std::string to_cycles() const;
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

// Left-to-right composition: x^compose(a, b) = (x^a)^b.
inline Perm compose(const Perm& a, const Perm& b) { return a.then(b); }

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace holo
