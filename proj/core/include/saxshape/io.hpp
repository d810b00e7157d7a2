#pragma once

// Text and bitmap carriers: PBM (P1/P4) images, one-sample-per-line series
// files and the tab-separated word-set format
//
//   #sax a=<alphabet_size> w=<word_length>
//   <label>\t<letters>
//
// Every reader reports malformed input as ParseError.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "saxshape/classifier.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace saxshape {

struct PbmOptions {
  /// By default a PBM 1 (ink) pixel is foreground. With `invert`, PBM 0 is.
  bool invert = false;
};

/// Largest accepted width * height.
inline constexpr std::size_t kMaxPbmPixels = std::size_t{1} << 28;

/// Parses a plain (P1) or raw (P4) bitmap. Errors carry the byte offset.
BinaryImage read_pbm(std::span<const std::byte> bytes, PbmOptions options = {});
BinaryImage read_pbm(std::string_view bytes, PbmOptions options = {});

/// Plain P1, rows of space-separated digits wrapped at 70 columns.
std::string write_pbm(const BinaryImage& image, PbmOptions options = {});

/// One sample per line; blank lines and lines starting with '#' are skipped.
/// Errors carry the 1-based line number.
TimeSeries read_series(std::string_view text);

/// One sample per line with 9 significant digits.
std::string write_series(const TimeSeries& series);

/// Shortest "%.9g"-style rendering used by every text writer.
std::string format_real(double value);

/// Parses and validates a word-set file (header, alphabet range, word length,
/// cross-class exclusivity). Errors carry the 1-based line number.
WordSetDatabase read_word_sets(std::string_view text);

/// Canonical form: classes then words in lexicographic order.
std::string write_word_sets(const WordSetDatabase& db);

/// Reads a whole file as bytes. Throws Error(kInvalidInput) when it cannot
/// be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace saxshape
