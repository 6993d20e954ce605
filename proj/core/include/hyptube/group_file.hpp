#pragma once

// The plain-text group file:
//
//   % comment to end of line
//   name <string>
//   generator <lowercase-letter>
//     <re><sign><im>i  <re><sign><im>i
//     <re><sign><im>i  <re><sign><im>i
//   geodesic <identifier> = <word>
//
// Words are strings of generator letters, uppercase for inverses.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyptube/lifts.hpp"

namespace hyptube {

struct RawGenerator {
  char name;
  std::array<Complex, 4> entries;  // as written, before normalization

  friend bool operator==(const RawGenerator&, const RawGenerator&) = default;
};

struct NamedGeodesic {
  std::string name;
  std::string word;  // as written

  friend bool operator==(const NamedGeodesic&, const NamedGeodesic&) = default;
};

struct GroupFile {
  std::optional<std::string> name;
  std::vector<std::string> comments;  // comment text without the leading '%'
  std::vector<RawGenerator> generators;
  std::vector<NamedGeodesic> geodesics;

  /// Normalized generators.
  GroupPresentation presentation;
  /// geodesics[i].word resolved against the generators.
  std::vector<Word> words;

  /// Equality of what the file says; the derived fields follow from it.
  bool same_content(const GroupFile& other) const;
  /// Throws InvalidArgument for an unknown name.
  const Word& geodesic(std::string_view name) const;
};

/// Throws SyntaxError (with the line number), BadDeterminant,
/// UnknownGenerator or DuplicateName.
GroupFile parse_group_file(std::string_view text);

/// Inverse of parse_group_file: numbers are written in shortest round-trip
/// form, so parse(render(x)) has the same content as x.
std::string render_group_file(const GroupFile& file);

}  // namespace hyptube
