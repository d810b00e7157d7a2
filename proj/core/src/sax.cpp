#include "saxshape/sax.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "saxshape/error.hpp"

namespace saxshape {

namespace {

// Gaussian equiprobable cuts, standard two-decimal values, rows a = 3..8.
constexpr std::array<double, 2> kCuts3{-0.43, 0.43};
constexpr std::array<double, 3> kCuts4{-0.67, 0.0, 0.67};
constexpr std::array<double, 4> kCuts5{-0.84, -0.25, 0.25, 0.84};
constexpr std::array<double, 5> kCuts6{-0.97, -0.43, 0.0, 0.43, 0.97};
constexpr std::array<double, 6> kCuts7{-1.07, -0.57, -0.18, 0.18, 0.57, 1.07};
constexpr std::array<double, 7> kCuts8{-1.15, -0.67, -0.32, 0.0, 0.32, 0.67, 1.15};

std::string alphabet_message(int alphabet_size) {
  return "alphabet size " + std::to_string(alphabet_size) +
         " not supported (supported range is " + std::to_string(kMinAlphabetSize) +
         "-" + std::to_string(kMaxAlphabetSize) + ")";
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw Error(ErrorKind::kInvalidInput, "time series must contain at least one sample");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorKind::kInvalidInput,
                  "time series sample " + std::to_string(i) + " is not finite");
    }
  }
}

std::span<const double> breakpoints(int alphabet_size) {
  switch (alphabet_size) {
    case 3:
      return kCuts3;
    case 4:
      return kCuts4;
    case 5:
      return kCuts5;
    case 6:
      return kCuts6;
    case 7:
      return kCuts7;
    case 8:
      return kCuts8;
    default:
      throw Error(ErrorKind::kUnsupportedAlphabet, alphabet_message(alphabet_size));
  }
}

SaxConfig::SaxConfig(int alphabet_size, std::size_t word_length)
    : alphabet_size_(alphabet_size),
      word_length_(word_length),
      breakpoints_(saxshape::breakpoints(alphabet_size)) {
  if (word_length_ == 0) {
    throw Error(ErrorKind::kInvalidInput, "word length must be at least 1");
  }
}

char to_letter(Symbol symbol) noexcept { return static_cast<char>('a' + symbol - 1); }

SaxWord::SaxWord(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < kMinAlphabetSize || alphabet_size_ > kMaxAlphabetSize) {
    throw Error(ErrorKind::kUnsupportedAlphabet, alphabet_message(alphabet_size_));
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] < 1 || symbols_[i] > alphabet_size_) {
      throw Error(ErrorKind::kInvalidInput,
                  "symbol " + std::to_string(symbols_[i]) + " at position " +
                      std::to_string(i) + " outside alphabet of size " +
                      std::to_string(alphabet_size_));
    }
  }
}

SaxWord SaxWord::from_letters(std::string_view letters, int alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c < 'a' || c >= 'a' + std::min(alphabet_size, kMaxAlphabetSize)) {
      throw Error(ErrorKind::kInvalidInput,
                  std::string("letter '") + c + "' at position " + std::to_string(i) +
                      " outside alphabet of size " + std::to_string(alphabet_size));
    }
    symbols.push_back(static_cast<Symbol>(c - 'a' + 1));
  }
  return SaxWord(std::move(symbols), alphabet_size);
}

std::string SaxWord::letters() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(to_letter(s));
  return out;
}

Normalized znormalize(const TimeSeries& series) {
  const auto samples = series.samples();
  const std::size_t n = samples.size();

  // Exact constancy check: a computed mean of equal values need not equal
  // them, which would leave a spurious nonzero sigma.
  const bool constant = std::all_of(samples.begin(), samples.end(),
                                    [&](double x) { return x == samples.front(); });
  if (constant) {
    return {TimeSeries(std::vector<double>(n, 0.0)), {samples.front(), 0.0}};
  }

  double sum = 0.0;
  for (double x : samples) sum += x;
  const double mean = sum / static_cast<double>(n);

  double squares = 0.0;
  for (double x : samples) squares += (x - mean) * (x - mean);
  const double std_dev = std::sqrt(squares / static_cast<double>(n));

  if (std_dev == 0.0) {
    return {TimeSeries(std::vector<double>(n, 0.0)), {mean, 0.0}};
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (samples[i] - mean) / std_dev;
  return {TimeSeries(std::move(out)), {mean, std_dev}};
}

TimeSeries paa(const TimeSeries& series, std::size_t word_length) {
  const auto samples = series.samples();
  const std::size_t n = samples.size();
  if (word_length < 1 || word_length > n) {
    throw Error(ErrorKind::kInvalidInput,
                "word length " + std::to_string(word_length) + " must lie in [1, " +
                    std::to_string(n) + "]");
  }
  if (word_length == n) return series;

  std::vector<double> out(word_length);
  if (n % word_length == 0) {
    const std::size_t span = n / word_length;
    for (std::size_t i = 0; i < word_length; ++i) {
      double sum = 0.0;
      for (std::size_t j = i * span; j < (i + 1) * span; ++j) sum += samples[j];
      out[i] = sum / static_cast<double>(span);
    }
    return TimeSeries(std::move(out));
  }

  // Work in units of 1/w sample widths so every boundary is an integer:
  // segment i covers [i*n, (i+1)*n), sample j covers [j*w, (j+1)*w).
  const std::uint64_t w = word_length;
  const std::uint64_t len = n;
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t begin = i * len;
    const std::uint64_t end = begin + len;
    double sum = 0.0;
    for (std::uint64_t j = begin / w; j * w < end; ++j) {
      const std::uint64_t lo = std::max(begin, j * w);
      const std::uint64_t hi = std::min(end, (j + 1) * w);
      sum += static_cast<double>(hi - lo) * samples[j];
    }
    out[i] = sum / static_cast<double>(len);
  }
  return TimeSeries(std::move(out));
}

SaxWord discretize(const TimeSeries& paa_series, const SaxConfig& config) {
  if (paa_series.size() != config.word_length()) {
    throw Error(ErrorKind::kInvalidInput,
                "PAA length " + std::to_string(paa_series.size()) +
                    " does not match word length " + std::to_string(config.word_length()));
  }
  const auto cuts = config.breakpoints();
  std::vector<Symbol> symbols;
  symbols.reserve(paa_series.size());
  for (double t : paa_series) {
    // First cut with t <= cut; past the last cut means symbol a.
    const auto it = std::lower_bound(cuts.begin(), cuts.end(), t);
    symbols.push_back(static_cast<Symbol>(it - cuts.begin() + 1));
  }
  return SaxWord(std::move(symbols), config.alphabet_size());
}

SaxWord sax_transform(const TimeSeries& series, const SaxConfig& config) {
  return discretize(paa(znormalize(series).series, config.word_length()), config);
}

double letter_distance(Symbol lhs, Symbol rhs, std::span<const double> cuts) noexcept {
  const Symbol lo = std::min(lhs, rhs);
  const Symbol hi = std::max(lhs, rhs);
  if (hi - lo <= 1) return 0.0;
  return cuts[hi - 2] - cuts[lo - 1];
}

double word_distance(const SaxWord& lhs, const SaxWord& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "word lengths differ (" + std::to_string(lhs.size()) + " vs " +
                    std::to_string(rhs.size()) + ")");
  }
  if (lhs.alphabet_size() != rhs.alphabet_size()) {
    throw Error(ErrorKind::kInvalidInput,
                "alphabet sizes differ (" + std::to_string(lhs.alphabet_size()) + " vs " +
                    std::to_string(rhs.alphabet_size()) + ")");
  }
  const auto cuts = breakpoints(lhs.alphabet_size());
  double dist = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    dist += letter_distance(lhs[i], rhs[i], cuts);
  }
  return dist;
}

std::vector<TransitionEvent> detect_transitions(const SaxWord& word) {
  std::vector<TransitionEvent> events;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] != word[i - 1]) events.push_back({i, word[i - 1], word[i]});
  }
  return events;
}

}  // namespace saxshape
