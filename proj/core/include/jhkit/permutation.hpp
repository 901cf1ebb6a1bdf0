#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jhkit {

/// A permutation of {0, ..., n-1}, stored as its image table. Text forms use
/// 1-based cycle notation, e.g. "(1 2)(3 4)"; "()" is the identity.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Parses cycle notation on {1..n}; missing points are fixed.
  static Permutation parse_cycles(std::string_view text, int n);
  /// All permutations of n points in lexicographic order of image tables.
  static std::vector<Permutation> all(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace jhkit
