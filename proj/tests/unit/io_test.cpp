#include <gtest/gtest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "saxshape/error.hpp"
#include "saxshape/io.hpp"
#include "saxshape/raster.hpp"

namespace saxshape {
namespace {

// Runs fn and returns the ParseError it throws.
template <typename Fn>
ParseError parse_error(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  } catch (const std::exception& e) {
    ADD_FAILURE() << "unexpected exception: " << e.what();
    return ParseError(ParseError::Unit::kByte, 0, "");
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError(ParseError::Unit::kByte, 0, "");
}

std::string bytes(std::initializer_list<unsigned char> list) {
  return std::string(list.begin(), list.end());
}

// ------------------------------------------------------------ PBM

TEST(PbmTest, PlainExamples) {
  const auto full = read_pbm("P1\n2 2\n1 1\n1 1\n");
  EXPECT_EQ(full.width(), 2u);
  EXPECT_EQ(full.height(), 2u);
  EXPECT_EQ(full.foreground_count(), 4u);

  const auto blank = read_pbm("P1\n1 1\n0\n");
  EXPECT_EQ(blank.foreground_count(), 0u);
  EXPECT_THROW(centroid(blank), Error);
}

TEST(PbmTest, CommentsAndPackedDigits) {
  const auto img = read_pbm("P1\n# made by hand\n3 # width\n2\n101# tail\n010");
  EXPECT_EQ(img, BinaryImage(3, 2, {1, 0, 1, 0, 1, 0}));
}

TEST(PbmTest, RawMatchesPlain) {
  const auto plain = read_pbm("P1\n3 3\n1 0 1\n0 1 0\n1 1 1\n");
  const auto raw = read_pbm("P4\n3 3\n" + bytes({0xA0, 0x40, 0xE0}));
  EXPECT_EQ(raw, plain);

  // Padding bits beyond the width are ignored.
  EXPECT_EQ(read_pbm("P4\n3 3\n" + bytes({0xBF, 0x5F, 0xFF})), plain);

  const auto wide = read_pbm("P4 10 1\n" + bytes({0xFF, 0x40}));
  EXPECT_EQ(wide, BinaryImage(10, 1, {1, 1, 1, 1, 1, 1, 1, 1, 0, 1}));
}

TEST(PbmTest, Invert) {
  const auto img = read_pbm("P1\n2 1\n1 0\n", {.invert = true});
  EXPECT_EQ(img, BinaryImage(2, 1, {0, 1}));
  EXPECT_EQ(write_pbm(img, {.invert = true}), "P1\n2 1\n1 0\n");
}

TEST(PbmTest, WriteGolden) {
  EXPECT_EQ(write_pbm(BinaryImage(1, 1, {1})), "P1\n1 1\n1\n");
  EXPECT_EQ(write_pbm(BinaryImage(2, 3, {1, 0, 0, 1, 1, 0})), "P1\n2 3\n1 0\n0 1\n1 0\n");

  const auto text = write_pbm(BinaryImage(40, 1));
  EXPECT_EQ(text, "P1\n40 1\n" + [] {
    std::string row;
    for (int i = 0; i < 35; ++i) row += i ? " 0" : "0";
    row += "\n0 0 0 0 0\n";
    return row;
  }());
  for (std::size_t pos = 0, end; pos < text.size(); pos = end + 1) {
    end = text.find('\n', pos);
    EXPECT_LE(end - pos, 70u);
  }
}

TEST(PbmTest, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto img = testing::random_image(rng, 80, 0.4);
    EXPECT_EQ(read_pbm(write_pbm(img)), img);
    EXPECT_EQ(read_pbm(write_pbm(img, {.invert = true}), {.invert = true}), img);
  }
  EXPECT_EQ(read_pbm(write_pbm(testing::octagon_fixture())), testing::octagon_fixture());
}

TEST(PbmTest, ErrorsCarryByteOffsets) {
  auto e = parse_error([] { read_pbm("P2\n1 1\n0\n"); });
  EXPECT_EQ(e.unit(), ParseError::Unit::kByte);
  EXPECT_EQ(e.offset(), 1u);
  EXPECT_EQ(parse_error([] { read_pbm("X1"); }).offset(), 0u);
  EXPECT_EQ(parse_error([] { read_pbm(""); }).offset(), 0u);

  e = parse_error([] { read_pbm("P1\n2 2\n1 1\n1"); });
  EXPECT_EQ(e.offset(), 12u);
  EXPECT_NE(std::string(e.what()).find("byte 12"), std::string::npos);

  EXPECT_EQ(parse_error([] { read_pbm("P1\n2 1\n1 x\n"); }).offset(), 9u);
  EXPECT_EQ(parse_error([] { read_pbm("P1\n0 1\n"); }).offset(), 4u);
  EXPECT_EQ(parse_error([] { read_pbm("P1\n2"); }).offset(), 4u);
  EXPECT_EQ(parse_error([] { read_pbm("P1\n99999999999999999999 1\n"); }).kind(), ErrorKind::kParse);
  EXPECT_EQ(parse_error([] { read_pbm("P1\n65536 65536\n"); }).kind(), ErrorKind::kParse);
  EXPECT_EQ(parse_error([] { read_pbm("P4\n9 2\n" + bytes({0xFF, 0x80, 0xFF})); }).offset(), 7u);
}

// ------------------------------------------------------------ series

TEST(SeriesTest, Examples) {
  EXPECT_EQ(read_series("1\n2\n3\n"), TimeSeries({1, 2, 3}));
  EXPECT_EQ(read_series("# header\n1.5\n\n2.5\n"), TimeSeries({1.5, 2.5}));
  EXPECT_EQ(read_series("  -4e2\r\n7"), TimeSeries({-400, 7}));
  EXPECT_EQ(write_series(TimeSeries({1, 2.5, -0.1})), "1\n2.5\n-0.1\n");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_real(0.0), "0");
}

TEST(SeriesTest, ErrorsCarryLineNumbers) {
  auto e = parse_error([] { read_series("1\n\nabc\n"); });
  EXPECT_EQ(e.unit(), ParseError::Unit::kLine);
  EXPECT_EQ(e.offset(), 3u);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  EXPECT_EQ(parse_error([] { read_series("1\n2 3\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_series("nan\n"); }).offset(), 1u);
  EXPECT_EQ(parse_error([] { read_series("1\ninf\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_series("# only a comment\n"); }).kind(), ErrorKind::kParse);
  EXPECT_EQ(parse_error([] { read_series(""); }).kind(), ErrorKind::kParse);
}

TEST(SeriesTest, WriteReadIsIdempotent) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> exponent(-30, 30);
  for (int i = 0; i < 300; ++i) {
    auto samples = testing::random_samples(rng, 1 + i % 50);
    for (auto& s : samples) s *= std::pow(10.0, exponent(rng));
    const auto once = write_series(read_series(write_series(TimeSeries(samples))));
    const auto twice = write_series(read_series(once));
    EXPECT_EQ(once, twice);
    const auto back = read_series(once);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      EXPECT_NEAR(back[k], samples[k], std::abs(samples[k]) * 1e-8);
    }
  }
}

// ------------------------------------------------------------ word sets

TEST(WordSetFileTest, Examples) {
  const auto db = read_word_sets("#sax a=3 w=2\ncircle\tbb\n");
  EXPECT_EQ(db.alphabet_size(), 3);
  EXPECT_EQ(db.word_length(), 2u);
  ASSERT_EQ(db.classes().size(), 1u);
  EXPECT_EQ(db.classes().at("circle").size(), 1u);
  EXPECT_EQ(*db.owner(SaxWord::from_letters("bb", 3)), "circle");
}

TEST(WordSetFileTest, CanonicalGolden) {
  const std::string shuffled =
      "#sax a=4 w=3\n"
      "triangle\tdad\n"
      "circle\tbbc\n"
      "octagon\tcbc\n"
      "triangle\tadd\n"
      "\n"
      "circle\tbbb\n"
      "octagon\tbcb\n"
      "triangle\tadd\n";
  const std::string golden =
      "#sax a=4 w=3\n"
      "circle\tbbb\n"
      "circle\tbbc\n"
      "octagon\tbcb\n"
      "octagon\tcbc\n"
      "triangle\tadd\n"
      "triangle\tdad\n";
  EXPECT_EQ(write_word_sets(read_word_sets(shuffled)), golden);
  EXPECT_EQ(write_word_sets(read_word_sets(golden)), golden);
}

TEST(WordSetFileTest, ErrorsNameTheLine) {
  auto e = parse_error([] { read_word_sets("#sax a=3 w=2\nx\tab\ny\tab\n"); });
  EXPECT_EQ(e.unit(), ParseError::Unit::kLine);
  EXPECT_EQ(e.offset(), 3u);

  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=2\nx\tad\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=2\nx\tabc\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=2\n\nx ab\n"); }).offset(), 3u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=2\n\tab\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=2\nx\ta\tb\n"); }).offset(), 2u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=9 w=2\n"); }).offset(), 1u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3 w=0\n"); }).offset(), 1u);
  EXPECT_EQ(parse_error([] { read_word_sets("#sax a=3\n"); }).offset(), 1u);
  EXPECT_EQ(parse_error([] { read_word_sets("circle\tbb\n"); }).offset(), 1u);
  EXPECT_EQ(parse_error([] { read_word_sets(""); }).offset(), 1u);
}

TEST(WordSetFileTest, RoundTripRandomDatabases) {
  std::mt19937_64 rng(13);
  const char* labels[] = {"circle", "octagon", "triangle", "a b"};
  for (int trial = 0; trial < 100; ++trial) {
    const int a = std::uniform_int_distribution<int>(3, 8)(rng);
    const std::size_t w = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    WordSetDatabase db(a, w);
    std::uniform_int_distribution<int> sym(1, a);
    for (int i = 0; i < 40; ++i) {
      std::vector<Symbol> s(w);
      for (auto& x : s) x = static_cast<Symbol>(sym(rng));
      const SaxWord word(s, a);
      if (db.owner(word) == nullptr) db.add(labels[i % 4], word);
    }
    const auto text = write_word_sets(db);
    EXPECT_EQ(read_word_sets(text), db);
    EXPECT_EQ(write_word_sets(read_word_sets(text)), text);
  }
}

// ------------------------------------------------------------ robustness

TEST(ParserFuzzTest, RandomBytesYieldStructuredErrors) {
  std::mt19937_64 rng(14);
  const std::string seeds[] = {"P1\n3 2\n", "P4\n9 2\n", "#sax a=4 w=3\n", "1.5\n"};
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 2000; ++i) {
    std::string input = i % 2 ? seeds[i / 2 % 4] : "";
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 64)(rng);
    for (std::size_t k = 0; k < len; ++k) input.push_back(static_cast<char>(byte(rng)));
    for (auto parse : {+[](std::string_view s) { read_pbm(s); },
                       +[](std::string_view s) { read_series(s); },
                       +[](std::string_view s) { read_word_sets(s); }}) {
      try {
        parse(input);
      } catch (const Error&) {
      }
    }
  }
}

}  // namespace
}  // namespace saxshape
