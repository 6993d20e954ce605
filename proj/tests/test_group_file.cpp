#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyptube/error.hpp"
#include "hyptube/group_file.hpp"
#include "support.hpp"

namespace hyptube {
namespace {

constexpr const char* kTwoGenerator = R"(% two generators
name example
generator a
  2+0i  0+0i
  0+0i  0.5+0i
generator b
  1+0i  1+0i
  1+0i  2+0i
geodesic delta = ab
)";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::Internal;
}

std::string message_of(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(GroupFile, ParsesTwoGeneratorExample) {
  const GroupFile f = parse_group_file(kTwoGenerator);
  ASSERT_TRUE(f.name.has_value());
  EXPECT_EQ(*f.name, "example");
  EXPECT_EQ(f.presentation.names(), "ab");
  ASSERT_EQ(f.geodesics.size(), 1u);
  EXPECT_EQ(f.geodesics[0].name, "delta");
  EXPECT_EQ(f.geodesics[0].word, "ab");
  EXPECT_EQ(f.geodesic("delta"), Word({1, 2}));
  EXPECT_EQ(f.comments, std::vector<std::string>({" two generators"}));
  EXPECT_THROW(f.geodesic("gamma"), Error);
}

TEST(GroupFile, NormalizesGenerators) {
  const GroupFile f = parse_group_file(
      "generator g\n  3+0i -3+0i\n  1+0i -3+0i\ngeodesic x = g\n");
  const Isometry& g = f.presentation.generators()[0].matrix;
  EXPECT_NEAR(std::abs(g.determinant() - 1.0), 0.0, 1e-14);
  EXPECT_EQ(f.generators[0].entries[0], Complex(3.0, 0.0));  // raw entries kept as written
}

TEST(GroupFile, NumberForms) {
  const GroupFile f = parse_group_file(
      "generator a\n  1e-3+2.5E2i  -0.5-1.25i\n  +3.0+0i  .5-.5e1i\n");
  const auto& e = f.generators[0].entries;
  EXPECT_EQ(e[0], Complex(1e-3, 250.0));
  EXPECT_EQ(e[1], Complex(-0.5, -1.25));
  EXPECT_EQ(e[2], Complex(3.0, 0.0));
  EXPECT_EQ(e[3], Complex(0.5, -5.0));
}

TEST(GroupFile, BadDeterminant) {
  EXPECT_EQ(kind_of("generator a\n  1+0i 2+0i\n  2+0i 4+0i\n"), ErrorKind::BadDeterminant);
  EXPECT_EQ(kind_of("generator a\n  1e-4+0i 0+0i\n  0+0i 1e-4+0i\n"), ErrorKind::BadDeterminant);
  EXPECT_NO_THROW(parse_group_file("generator a\n  2e-3+0i 0+0i\n  0+0i 2e-3+0i\n"));
}

TEST(GroupFile, UnknownGenerator) {
  EXPECT_EQ(kind_of("generator a\n  2+0i 0+0i\n  0+0i 0.5+0i\ngeodesic d = aX\n"),
            ErrorKind::UnknownGenerator);
  EXPECT_NE(message_of("generator a\n  2+0i 0+0i\n  0+0i 0.5+0i\ngeodesic d = aX\n").find("line 4"),
            std::string::npos);
}

TEST(GroupFile, DuplicateNames) {
  const std::string a = "generator a\n  2+0i 0+0i\n  0+0i 0.5+0i\n";
  EXPECT_EQ(kind_of(a + a), ErrorKind::DuplicateName);
  EXPECT_EQ(kind_of(a + "geodesic d = a\ngeodesic d = A\n"), ErrorKind::DuplicateName);
  EXPECT_EQ(kind_of("name x\nname y\n"), ErrorKind::DuplicateName);
}

TEST(GroupFile, SyntaxErrorsCarryLineNumbers) {
  const std::string head = "% header\ngenerator a\n";
  EXPECT_EQ(kind_of(head + "  1+2 0+0i\n  0+0i 1+0i\n"), ErrorKind::SyntaxError);
  EXPECT_NE(message_of(head + "  1+2 0+0i\n  0+0i 1+0i\n").find("line 3"), std::string::npos);
  EXPECT_EQ(kind_of(head + "  1+0i\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of(head + "  1+0i 0+0i\n"), ErrorKind::SyntaxError);  // missing second row
  EXPECT_EQ(kind_of("generator A\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("generator ab\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("geodesic d ab\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("geodesic 1d = a\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("geodesic d = a1\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("relator aa\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("name\n"), ErrorKind::SyntaxError);
  EXPECT_NE(message_of("\n\n\nbogus\n").find("line 4"), std::string::npos);
}

TEST(GroupFile, CommentsAndBlankLines) {
  const GroupFile f = parse_group_file(
      "\n% one\ngenerator a % inline\n\n  2+0i 0+0i\n  0+0i 0.5+0i %\r\n");
  EXPECT_EQ(f.comments, std::vector<std::string>({" one", " inline", ""}));
  EXPECT_EQ(f.generators.size(), 1u);
}

void expect_round_trip(const GroupFile& f) {
  const std::string text = render_group_file(f);
  const GroupFile g = parse_group_file(text);
  EXPECT_TRUE(g.same_content(f)) << text;
  EXPECT_EQ(render_group_file(g), text);
}

TEST(GroupFile, RoundTripCorpus) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(HYPTUBE_DATA_DIR)) {
    if (entry.path().extension() != ".grp") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    expect_round_trip(parse_group_file(buf.str()));
    ++count;
  }
  EXPECT_GE(count, 3);
  expect_round_trip(parse_group_file(kTwoGenerator));
}

TEST(GroupFile, RoundTripRandomFiles) {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> count(1, 4);
  for (int i = 0; i < 100; ++i) {
    GroupFile f;
    if (i % 2) f.name = "random group " + std::to_string(i);
    if (i % 3 == 0) f.comments = {" made up", "another % with percent"};
    const int n = count(rng);
    std::string letters;
    for (int k = 0; k < n; ++k) {
      RawGenerator g{static_cast<char>('a' + 2 * k), {}};
      for (;;) {
        for (Complex& z : g.entries) z = testing::random_complex(rng, std::pow(10.0, k - 1));
        const auto& e = g.entries;
        if (std::abs(e[0] * e[3] - e[1] * e[2]) > 1e-3) break;
      }
      f.generators.push_back(g);
      letters += g.name;
      letters += static_cast<char>(g.name - 'a' + 'A');
    }
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (int k = 0; k < count(rng); ++k) {
      std::string w;
      for (int m = 0; m < count(rng); ++m) w += letters[pick(rng)];
      f.geodesics.push_back({"g" + std::to_string(k), w});
    }
    // Render, parse and compare.
    expect_round_trip(parse_group_file(render_group_file(f)));
    EXPECT_TRUE(parse_group_file(render_group_file(f)).same_content(f));
  }
}

}  // namespace
}  // namespace hyptube
