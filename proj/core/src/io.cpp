#include "saxshape/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "saxshape/error.hpp"

namespace saxshape {

namespace {

// ---------------------------------------------------------------- PBM

class PbmCursor {
 public:
  explicit PbmCursor(std::span<const std::byte> bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= bytes_.size(); }
  char peek() const noexcept { return static_cast<char>(bytes_[pos_]); }
  char next() noexcept { return static_cast<char>(bytes_[pos_++]); }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::byte raw(std::size_t i) const noexcept { return bytes_[pos_ + i]; }
  void advance(std::size_t n) noexcept { pos_ += n; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Unit::kByte, pos_, message);
  }

  static bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() noexcept {
    while (!done()) {
      const char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t read_dimension(const char* what) {
    skip_space_and_comments();
    if (done()) fail(std::string("truncated header: missing ") + what);
    if (peek() < '0' || peek() > '9') fail(std::string("expected ") + what);
    std::size_t value = 0;
    while (!done() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      if (value > kMaxPbmPixels) fail(std::string(what) + " overflows the supported size");
      ++pos_;
    }
    if (value == 0) fail(std::string(what) + " must be at least 1");
    return value;
  }

 private:
  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

// Whether a stored PBM bit is foreground.
bool to_foreground(bool ink, PbmOptions options) noexcept { return ink != options.invert; }

// ---------------------------------------------------------------- text

std::string_view trim(std::string_view s) noexcept {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, line) for every '\n'-separated line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 1;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    fn(line_no, text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
    ++line_no;
  }
}

template <typename T>
bool parse_whole(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

BinaryImage read_pbm(std::span<const std::byte> bytes, PbmOptions options) {
  PbmCursor in(bytes);
  if (in.remaining() < 2 || in.next() != 'P') {
    throw ParseError(ParseError::Unit::kByte, 0, "bad magic number: expected P1 or P4");
  }
  const char variant = in.next();
  if (variant != '1' && variant != '4') {
    throw ParseError(ParseError::Unit::kByte, 1, "bad magic number: expected P1 or P4");
  }

  const std::size_t width = in.read_dimension("width");
  const std::size_t height = in.read_dimension("height");
  if (width * height > kMaxPbmPixels) in.fail("image dimensions overflow the supported size");

  std::vector<std::uint8_t> pixels(width * height);
  if (variant == '1') {
    for (auto& px : pixels) {
      in.skip_space_and_comments();
      if (in.done()) in.fail("truncated raster");
      const char c = in.peek();
      if (c != '0' && c != '1') in.fail(std::string("unexpected raster character"));
      px = to_foreground(c == '1', options) ? 1 : 0;
      in.advance(1);
    }
  } else {
    if (in.done() || !PbmCursor::is_space(in.peek())) {
      in.fail("expected a single whitespace byte before the raster");
    }
    in.advance(1);
    const std::size_t row_bytes = (width + 7) / 8;
    if (in.remaining() / row_bytes < height) in.fail("truncated raster");
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const auto byte = std::to_integer<unsigned>(in.raw(x / 8));
        const bool ink = (byte >> (7 - x % 8)) & 1u;
        pixels[y * width + x] = to_foreground(ink, options) ? 1 : 0;
      }
      in.advance(row_bytes);
    }
  }
  return BinaryImage(width, height, std::move(pixels));
}

BinaryImage read_pbm(std::string_view bytes, PbmOptions options) {
  return read_pbm(std::as_bytes(std::span(bytes.data(), bytes.size())), options);
}

std::string write_pbm(const BinaryImage& image, PbmOptions options) {
  // 35 digits plus separators keep each line within 70 columns.
  constexpr std::size_t kPerLine = 35;
  std::string out = "P1\n" + std::to_string(image.width()) + " " +
                    std::to_string(image.height()) + "\n";
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      if (x > 0) out.push_back(x % kPerLine == 0 ? '\n' : ' ');
      out.push_back(to_foreground(image.at(x, y), options) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 9);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

TimeSeries read_series(std::string_view text) {
  std::vector<double> samples;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    double value = 0.0;
    if (!parse_whole(line, value)) {
      throw ParseError(ParseError::Unit::kLine, line_no, "not a decimal number");
    }
    if (!std::isfinite(value)) {
      throw ParseError(ParseError::Unit::kLine, line_no, "sample is not finite");
    }
    samples.push_back(value);
  });
  if (samples.empty()) throw ParseError(ParseError::Unit::kLine, 1, "series has no samples");
  return TimeSeries(std::move(samples));
}

std::string write_series(const TimeSeries& series) {
  std::string out;
  for (double x : series) {
    out += format_real(x);
    out.push_back('\n');
  }
  return out;
}

WordSetDatabase read_word_sets(std::string_view text) {
  const auto eol = text.find('\n');
  const std::string_view header = text.substr(0, eol);

  constexpr std::string_view kPrefix = "#sax a=";
  constexpr std::string_view kMiddle = " w=";
  const auto header_error = [] {
    return ParseError(ParseError::Unit::kLine, 1,
                      "expected header '#sax a=<alphabet_size> w=<word_length>'");
  };
  if (!header.starts_with(kPrefix)) throw header_error();
  const auto rest = header.substr(kPrefix.size());
  const auto mid = rest.find(kMiddle);
  if (mid == std::string_view::npos) throw header_error();
  int alphabet = 0;
  std::size_t length = 0;
  if (!parse_whole(rest.substr(0, mid), alphabet) ||
      !parse_whole(rest.substr(mid + kMiddle.size()), length)) {
    throw header_error();
  }
  if (alphabet < kMinAlphabetSize || alphabet > kMaxAlphabetSize) {
    throw ParseError(ParseError::Unit::kLine, 1,
                     "alphabet size " + std::to_string(alphabet) +
                         " not supported (supported range is 3-8)");
  }
  if (length == 0) throw ParseError(ParseError::Unit::kLine, 1, "word length must be at least 1");

  WordSetDatabase db(alphabet, length);
  if (eol == std::string_view::npos) return db;

  for_each_line(text.substr(eol + 1), [&](std::size_t index, std::string_view line) {
    const std::size_t line_no = index + 1;
    if (line.empty()) return;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError(ParseError::Unit::kLine, line_no,
                       "expected '<label>\\t<word>' with exactly one tab");
    }
    const std::string label(line.substr(0, tab));
    const auto letters = line.substr(tab + 1);
    if (label.empty()) throw ParseError(ParseError::Unit::kLine, line_no, "empty class label");
    if (letters.size() != length) {
      throw ParseError(ParseError::Unit::kLine, line_no,
                       "word length " + std::to_string(letters.size()) +
                           " does not match header w=" + std::to_string(length));
    }
    try {
      db.add(label, SaxWord::from_letters(letters, alphabet));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(ParseError::Unit::kLine, line_no, e.what());
    }
  });
  return db;
}

std::string write_word_sets(const WordSetDatabase& db) {
  std::string out = "#sax a=" + std::to_string(db.alphabet_size()) +
                    " w=" + std::to_string(db.word_length()) + "\n";
  for (const auto& [label, words] : db.classes()) {
    for (const SaxWord& word : words) {
      out += label;
      out.push_back('\t');
      out += word.letters();
      out.push_back('\n');
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::kInvalidInput, "failed writing '" + path + "'");
}

}  // namespace saxshape
