#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hyptube {

/// Freely reduced word in the generators. Letters are signed, one-based
/// generator indices: +k is generator k−1, −k its inverse.
class Word {
 public:
  Word() = default;
  /// Reduces the input freely. Zero letters are rejected.
  explicit Word(std::vector<int> letters);

  static Word letter(int generator_index, bool inverse = false);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  /// Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  /// Lowercase letters for generators, uppercase for inverses. `names[i]` is
  /// the name of generator i.
  std::string to_string(const std::string& names) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Canonical order: shorter first, then lexicographic with the letter order
  /// a < A < b < B < …
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<int> letters_;
};

/// Position of a letter in the canonical alphabet order a, A, b, B, …
inline int letter_rank(int letter) { return 2 * ((letter < 0 ? -letter : letter) - 1) + (letter < 0); }

}  // namespace hyptube
