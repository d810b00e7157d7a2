#pragma once

// Symbolic aggregate approximation: z-normalization, piecewise aggregate
// approximation, Gaussian-breakpoint discretization, word distance and
// letter-transition detection. All functions are pure.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saxshape {

inline constexpr int kMinAlphabetSize = 3;
inline constexpr int kMaxAlphabetSize = 8;

/// Ordered, uniformly spaced real samples. Never empty, never NaN/inf.
class TimeSeries {
 public:
  /// Throws Error(kInvalidInput) on an empty or non-finite input.
  explicit TimeSeries(std::vector<double> samples);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }
  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  /// Releases the underlying buffer.
  std::vector<double> take() && noexcept { return std::move(samples_); }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> samples_;
};

struct NormalizationStats {
  double mean = 0.0;
  /// Population standard deviation (divisor N).
  double std_dev = 0.0;
};

struct Normalized {
  TimeSeries series;
  NormalizationStats stats;
};

/// Alphabet size, word length and the matching breakpoint row.
class SaxConfig {
 public:
  /// Throws Error(kUnsupportedAlphabet) unless 3 <= alphabet_size <= 8 and
  /// Error(kInvalidInput) if word_length is zero.
  SaxConfig(int alphabet_size, std::size_t word_length);

  int alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t word_length() const noexcept { return word_length_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }

 private:
  int alphabet_size_;
  std::size_t word_length_;
  std::span<const double> breakpoints_;
};

/// Symbol index, 1-based: 1 renders as 'a', 2 as 'b', and so on.
using Symbol = std::uint8_t;

char to_letter(Symbol symbol) noexcept;

/// Fixed-length string of symbol indices over an alphabet of size 3..8.
/// Ordering is lexicographic on the symbols, which matches lexicographic
/// order of the letter rendering.
class SaxWord {
 public:
  /// Throws Error(kUnsupportedAlphabet) for a bad alphabet and
  /// Error(kInvalidInput) for a symbol outside [1, alphabet_size].
  SaxWord(std::vector<Symbol> symbols, int alphabet_size);

  /// Parses the letter rendering ("abca"). Throws Error(kInvalidInput) on a
  /// letter outside the alphabet.
  static SaxWord from_letters(std::string_view letters, int alphabet_size);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  int alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  std::string letters() const;

  friend bool operator==(const SaxWord&, const SaxWord&) = default;
  friend auto operator<=>(const SaxWord&, const SaxWord&) = default;

 private:
  std::vector<Symbol> symbols_;
  int alphabet_size_;
};

/// A letter change between segment `position` and `position + 1`
/// (1-based, so position lies in [1, w-1]).
struct TransitionEvent {
  std::size_t position = 0;
  Symbol from = 0;
  Symbol to = 0;

  friend bool operator==(const TransitionEvent&, const TransitionEvent&) = default;
};

/// (X - mean) / sigma with the population sigma. A constant series maps to
/// all zeros with std_dev reported as 0.
Normalized znormalize(const TimeSeries& series);

/// Reduces `series` to `word_length` segment means. When word_length does
/// not divide the length, each segment spans n/w sample widths and boundary
/// samples contribute in proportion to their overlap.
/// Throws Error(kInvalidInput) unless 1 <= word_length <= series.size().
TimeSeries paa(const TimeSeries& series, std::size_t word_length);

/// The a-1 standard two-decimal Gaussian breakpoints for alphabet size a.
/// Throws Error(kUnsupportedAlphabet) outside [3, 8].
std::span<const double> breakpoints(int alphabet_size);

/// Maps each PAA value to a symbol: 1 if t <= b1, a if t > b(a-1), else the
/// k with b(k-1) < t <= bk. Throws Error(kInvalidInput) on a length mismatch.
SaxWord discretize(const TimeSeries& paa_series, const SaxConfig& config);

/// normalize -> PAA -> discretize.
SaxWord sax_transform(const TimeSeries& series, const SaxConfig& config);

/// Per-letter cost: zero for identical or adjacent symbols, otherwise the
/// breakpoint span between them.
double letter_distance(Symbol lhs, Symbol rhs, std::span<const double> cuts) noexcept;

/// Plain sum of letter costs over all positions (no scaling, no root).
/// Throws Error(kInvalidInput) on a length or alphabet mismatch.
double word_distance(const SaxWord& lhs, const SaxWord& rhs);

/// One event per adjacent differing pair, in positional order.
std::vector<TransitionEvent> detect_transitions(const SaxWord& word);

}  // namespace saxshape
