#ifndef CAYLEYLAB_PERM_HPP
#define CAYLEYLAB_PERM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayleylab {

// A permutation of {1..n}, n <= kMaxDegree.
//
// Points are 0-based internally and 1-based in every textual form. Products
// are read left to right with the point acting on the right:
//   i^(ab) = (i^a)^b,
// so compose(a, b) applies a first. Under this reading
// (1,2)(2,3) = (1,3,2).
class Permutation {
 public:
  static constexpr int kMaxDegree = 8;
  using Point = std::uint8_t;

  // Identity of degree 1. Mostly useful as a placeholder value.
  Permutation() : Permutation(identity(1)) {}

  // `images[i]` is the 0-based image of the 0-based point i. Throws
  // InvalidArgument unless `images` is a bijection on [0, n).
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::span<const int>(images.begin(), images.size())) {}

  static Permutation identity(int n);
  // The transposition swapping the 1-based points i and j.
  static Permutation transposition(int n, int i, int j);
  // Builds a permutation from disjoint cycles given in 1-based points.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles);
  // Parses cycle notation such as "(1,2,3)(4,5)" or "()". Whitespace is
  // ignored; a comma between cycles is tolerated.
  static Permutation parse(int n, std::string_view text);

  int degree() const { return n_; }
  // 0-based image of a 0-based point.
  int operator[](int point) const { return images_[point]; }
  std::span<const Point> images() const { return {images_.data(), size_t(n_)}; }

  bool is_identity() const;
  bool is_transposition() const;
  // Cycle notation, 1-based, identity is "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 1;
  std::array<Point, kMaxDegree> images_{};
};

// i^(compose(a,b)) = (i^a)^b. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// g^-1 a g.
Permutation conjugate(const Permutation& a, const Permutation& g);

// Nontrivial cycles in 1-based points, each rotated to start at its minimum
// and sorted by first point.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& a);
// 1-based points moved by a, ascending.
std::vector<int> support(const Permutation& a);
// Cycle lengths including fixed points, sorted descending.
std::vector<int> cycle_type(const Permutation& a);
// Number of cycles counting fixed points.
int cycle_count(const Permutation& a);

std::uint64_t factorial(int n);
// Lehmer-code rank in [0, n!); rank(identity) = 0.
std::uint64_t rank(const Permutation& a);
// Inverse of rank. Throws InvalidArgument when r >= n!.
Permutation unrank(int n, std::uint64_t r);

// Parses a list of cycle-notation permutations, one per parenthesised
// group: "(1,2),(2,3)" or "(1,2)(2,3)" both give two permutations.
std::vector<Permutation> parse_permutation_list(int n, std::string_view text);

}  // namespace cayleylab

template <>
struct std::hash<cayleylab::Permutation> {
  size_t operator()(const cayleylab::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(cayleylab::rank(p) * 16 + p.degree());
  }
};

#endif  // CAYLEYLAB_PERM_HPP
