#pragma once

// Rotation word sets and nearest-word classification.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "saxshape/error.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace saxshape {

/// Per-class sets of SAX words sharing one alphabet size and word length.
/// A word belongs to at most one class.
class WordSetDatabase {
 public:
  using WordSet = std::set<SaxWord>;

  /// Throws like SaxConfig on a bad alphabet or zero word length.
  WordSetDatabase(int alphabet_size, std::size_t word_length);

  int alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t word_length() const noexcept { return word_length_; }

  /// Inserts `word` into class `label`; re-adding an existing pair is a
  /// no-op. Throws Error(kInvalidInput) if the word's shape does not match,
  /// the label is empty or holds a tab/newline, or the word already belongs
  /// to another class.
  void add(const std::string& label, const SaxWord& word);

  /// Classes ordered by label.
  const std::map<std::string, WordSet>& classes() const noexcept { return classes_; }
  bool empty() const noexcept { return classes_.empty(); }
  std::size_t word_count() const noexcept { return owner_.size(); }

  /// Label owning `word`, or nullptr.
  const std::string* owner(const SaxWord& word) const;

  friend bool operator==(const WordSetDatabase& a, const WordSetDatabase& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.word_length_ == b.word_length_ &&
           a.classes_ == b.classes_;
  }

 private:
  int alphabet_size_;
  std::size_t word_length_;
  std::map<std::string, WordSet> classes_;
  std::map<SaxWord, std::string> owner_;
};

/// A word generated by two or more classes; it is dropped from all of them.
struct WordConflict {
  SaxWord word;
  std::vector<std::string> labels;
};

struct BuildResult {
  WordSetDatabase database;
  std::vector<WordConflict> conflicts;
};

/// Raised when conflict removal leaves a class with no words. Carries the
/// full conflict report.
class DegenerateClassError : public Error {
 public:
  DegenerateClassError(std::string label, std::vector<WordConflict> conflicts);

  const std::string& label() const noexcept { return label_; }
  const std::vector<WordConflict>& conflicts() const noexcept { return conflicts_; }

 private:
  std::string label_;
  std::vector<WordConflict> conflicts_;
};

struct LabeledImage {
  std::string label;
  BinaryImage image;
};

/// Deduplicates per class, removes every word produced by more than one
/// class, and reports those conflicts (sorted by word).
/// Throws DegenerateClassError if a class ends up empty.
BuildResult build_word_sets_from_words(
    std::span<const std::pair<std::string, SaxWord>> labeled_words, const SaxConfig& config);

/// image -> signature -> SAX word for each input, then as above.
BuildResult build_word_sets(std::span<const LabeledImage> labeled_images,
                            const SaxConfig& config, std::size_t bins = kDefaultBins);

struct ClassificationResult {
  std::string label;
  double distance = 0.0;
  SaxWord nearest_word;
};

/// Exhaustive nearest-word search. A candidate stored verbatim returns its
/// own class; other ties go to the smallest label, then the smallest word.
/// Throws Error(kInvalidInput) for an empty database or a candidate whose alphabet/length differ from the database.
ClassificationResult classify(const SaxWord& candidate, const WordSetDatabase& db);

/// Equals classify(sax_transform(signature(image, bins).samples, config), db).
ClassificationResult classify_image(const BinaryImage& image, const WordSetDatabase& db,
                                    const SaxConfig& config, std::size_t bins = kDefaultBins);

/// The SAX word for one image.
SaxWord shape_word(const BinaryImage& image, const SaxConfig& config,
                   std::size_t bins = kDefaultBins);

}  // namespace saxshape
