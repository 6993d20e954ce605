#include "hyptube/word.hpp"

#include <algorithm>
#include <cctype>

#include "hyptube/error.hpp"

namespace hyptube {

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw Error(ErrorKind::InvalidArgument, "word letter 0");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

Word Word::letter(int generator_index, bool inverse) {
  if (generator_index < 0) throw Error(ErrorKind::InvalidArgument, "negative generator index");
  const int x = generator_index + 1;
  return Word({inverse ? -x : x});
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> joined = letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(joined));
}

std::string Word::to_string(const std::string& names) const {
  std::string out;
  out.reserve(letters_.size());
  for (int x : letters_) {
    const auto index = static_cast<std::size_t>(std::abs(x) - 1);
    if (index >= names.size()) throw Error(ErrorKind::InvalidArgument, "word letter out of range");
    const char c = names[index];
    out.push_back(x > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.length() <=> rhs.length(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.length(); ++i) {
    if (auto c = letter_rank(lhs.letters_[i]) <=> letter_rank(rhs.letters_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace hyptube
