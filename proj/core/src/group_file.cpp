#include "hyptube/group_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hyptube/format.hpp"

namespace hyptube {

namespace {

constexpr double kMinDeterminant = 1e-6;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

// Unsigned decimal with optional fraction and exponent, starting at `pos`.
bool read_unsigned(std::string_view s, std::size_t& pos, double& out) {
  if (pos >= s.size()) return false;
  const char c = s[pos];
  if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.')) return false;
  const auto res = std::from_chars(s.data() + pos, s.data() + s.size(), out,
                                   std::chars_format::general);
  if (res.ec != std::errc()) return false;
  pos = static_cast<std::size_t>(res.ptr - s.data());
  return true;
}

// <re><sign><im>i
bool read_complex(std::string_view token, Complex& out) {
  std::size_t pos = 0;
  double sign = 1.0;
  if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
    sign = token[pos] == '-' ? -1.0 : 1.0;
    ++pos;
  }
  double re = 0.0, im = 0.0;
  if (!read_unsigned(token, pos, re)) return false;
  if (pos >= token.size() || (token[pos] != '+' && token[pos] != '-')) return false;
  const double im_sign = token[pos] == '-' ? -1.0 : 1.0;
  ++pos;
  if (!read_unsigned(token, pos, im)) return false;
  if (pos + 1 != token.size() || token[pos] != 'i') return false;
  out = Complex(sign * re, im_sign * im);
  return true;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string render_complex(Complex z) {
  const double im = z.imag();
  const bool negative = std::signbit(im);
  return format_exact(z.real()) + (negative ? "-" : "+") + format_exact(negative ? -im : im) + "i";
}

}  // namespace

bool GroupFile::same_content(const GroupFile& other) const {
  return name == other.name && comments == other.comments && generators == other.generators &&
         geodesics == other.geodesics;
}

const Word& GroupFile::geodesic(std::string_view wanted) const {
  for (std::size_t i = 0; i < geodesics.size(); ++i) {
    if (geodesics[i].name == wanted) return words[i];
  }
  throw Error(ErrorKind::InvalidArgument, "no geodesic named " + std::string(wanted));
}

GroupFile parse_group_file(std::string_view text) {
  GroupFile file;
  std::vector<std::size_t> geodesic_lines;

  std::optional<RawGenerator> pending;  // generator awaiting matrix rows
  int rows_read = 0;
  std::size_t generator_line = 0;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const std::size_t end = std::min(text.find('\n', cursor), text.size());
    std::string_view line = text.substr(cursor, end - cursor);
    cursor = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (const auto pct = line.find('%'); pct != std::string_view::npos) {
      file.comments.emplace_back(line.substr(pct + 1));
      line = line.substr(0, pct);
    }
    line = trim(line);
    if (line.empty()) {
      if (cursor > text.size()) break;
      continue;
    }

    if (pending) {
      const auto tokens = split_ws(line);
      if (tokens.size() != 2) syntax_error(line_no, "expected two complex entries per matrix row");
      for (std::size_t k = 0; k < 2; ++k) {
        Complex z;
        if (!read_complex(tokens[k], z)) {
          syntax_error(line_no, "malformed complex number '" + std::string(tokens[k]) + "'");
        }
        pending->entries[static_cast<std::size_t>(2 * rows_read) + k] = z;
      }
      if (++rows_read == 2) {
        const auto& e = pending->entries;
        const Complex det = e[0] * e[3] - e[1] * e[2];
        if (!(std::abs(det) > kMinDeterminant)) {
          throw Error(ErrorKind::BadDeterminant, "line " + std::to_string(generator_line) +
                                                     ": generator " + pending->name +
                                                     " has determinant " + render_complex(det));
        }
        file.presentation.add_generator(pending->name,
                                        Isometry::from_entries(e[0], e[1], e[2], e[3]));
        file.generators.push_back(*pending);
        pending.reset();
      }
      continue;
    }

    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

    if (keyword == "name") {
      if (rest.empty()) syntax_error(line_no, "name needs a value");
      if (file.name) throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) + ": name given twice");
      file.name = std::string(rest);
    } else if (keyword == "generator") {
      if (rest.size() != 1 || !std::islower(static_cast<unsigned char>(rest[0]))) {
        syntax_error(line_no, "generator name must be a single lowercase letter");
      }
      for (const RawGenerator& g : file.generators) {
        if (g.name == rest[0]) {
          throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) +
                                                    ": generator " + rest[0] + " declared twice");
        }
      }
      pending = RawGenerator{rest[0], {}};
      rows_read = 0;
      generator_line = line_no;
    } else if (keyword == "geodesic") {
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos) syntax_error(line_no, "expected 'geodesic <name> = <word>'");
      const std::string_view id = trim(rest.substr(0, eq));
      const std::string_view word = trim(rest.substr(eq + 1));
      if (!is_identifier(id)) syntax_error(line_no, "bad geodesic name '" + std::string(id) + "'");
      if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) {
            return std::isalpha(static_cast<unsigned char>(c));
          })) {
        syntax_error(line_no, "bad word '" + std::string(word) + "'");
      }
      for (const NamedGeodesic& g : file.geodesics) {
        if (g.name == id) {
          throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) + ": geodesic " +
                                                    std::string(id) + " declared twice");
        }
      }
      file.geodesics.push_back({std::string(id), std::string(word)});
      geodesic_lines.push_back(line_no);
    } else {
      syntax_error(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
    if (cursor > text.size()) break;
  }
  if (pending) syntax_error(line_no, "generator " + std::string(1, pending->name) + " is missing matrix rows");

  for (std::size_t i = 0; i < file.geodesics.size(); ++i) {
    try {
      file.words.push_back(file.presentation.parse_word(file.geodesics[i].word));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(geodesic_lines[i]) + ": " +
                                std::string(e.what()).substr(to_string(e.kind()).size() + 2));
    }
  }
  return file;
}

std::string render_group_file(const GroupFile& file) {
  std::ostringstream out;
  for (const std::string& c : file.comments) out << '%' << c << '\n';
  if (file.name) out << "name " << *file.name << '\n';
  for (const RawGenerator& g : file.generators) {
    out << "generator " << g.name << '\n';
    out << "  " << render_complex(g.entries[0]) << "  " << render_complex(g.entries[1]) << '\n';
    out << "  " << render_complex(g.entries[2]) << "  " << render_complex(g.entries[3]) << '\n';
  }
  for (const NamedGeodesic& g : file.geodesics) {
    out << "geodesic " << g.name << " = " << g.word << '\n';
  }
  return out.str();
}

}  // namespace hyptube
