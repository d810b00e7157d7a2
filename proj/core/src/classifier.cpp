#include "saxshape/classifier.hpp"

#include <limits>

namespace saxshape {

WordSetDatabase::WordSetDatabase(int alphabet_size, std::size_t word_length)
    : alphabet_size_(alphabet_size), word_length_(word_length) {
  // Validates both parameters.
  SaxConfig(alphabet_size, word_length);
}

void WordSetDatabase::add(const std::string& label, const SaxWord& word) {
  if (label.empty() || label.find_first_of("\t\n\r") != std::string::npos) {
    throw Error(ErrorKind::kInvalidInput,
                "class label must be nonempty and free of tabs and line breaks");
  }
  if (word.alphabet_size() != alphabet_size_ || word.size() != word_length_) {
    throw Error(ErrorKind::kInvalidInput,
                "word '" + word.letters() + "' (a=" + std::to_string(word.alphabet_size()) +
                    ", w=" + std::to_string(word.size()) + ") does not match database (a=" +
                    std::to_string(alphabet_size_) + ", w=" + std::to_string(word_length_) +
                    ")");
  }
  const auto [it, inserted] = owner_.try_emplace(word, label);
  if (!inserted) {
    if (it->second == label) return;
    throw Error(ErrorKind::kInvalidInput, "word '" + word.letters() + "' appears in classes '" +
                                              it->second + "' and '" + label + "'");
  }
  classes_[label].insert(word);
}

const std::string* WordSetDatabase::owner(const SaxWord& word) const {
  const auto it = owner_.find(word);
  return it == owner_.end() ? nullptr : &it->second;
}

DegenerateClassError::DegenerateClassError(std::string label,
                                           std::vector<WordConflict> conflicts)
    : Error(ErrorKind::kDegenerateClass,
            "degenerate class '" + label + "': every word conflicts with another class"),
      label_(std::move(label)),
      conflicts_(std::move(conflicts)) {}

BuildResult build_word_sets_from_words(
    std::span<const std::pair<std::string, SaxWord>> labeled_words, const SaxConfig& config) {
  std::map<SaxWord, std::set<std::string>> producers;
  std::set<std::string> labels;
  for (const auto& [label, word] : labeled_words) {
    producers[word].insert(label);
    labels.insert(label);
  }

  WordSetDatabase db(config.alphabet_size(), config.word_length());
  std::vector<WordConflict> conflicts;
  for (const auto& [word, owners] : producers) {
    if (owners.size() > 1) {
      conflicts.push_back({word, {owners.begin(), owners.end()}});
      continue;
    }
    db.add(*owners.begin(), word);
  }

  for (const auto& label : labels) {
    if (!db.classes().contains(label)) throw DegenerateClassError(label, std::move(conflicts));
  }
  return {std::move(db), std::move(conflicts)};
}

SaxWord shape_word(const BinaryImage& image, const SaxConfig& config, std::size_t bins) {
  return sax_transform(signature(image, bins).samples, config);
}

BuildResult build_word_sets(std::span<const LabeledImage> labeled_images,
                            const SaxConfig& config, std::size_t bins) {
  std::vector<std::pair<std::string, SaxWord>> words;
  words.reserve(labeled_images.size());
  for (const auto& item : labeled_images) {
    words.emplace_back(item.label, shape_word(item.image, config, bins));
  }
  return build_word_sets_from_words(words, config);
}

ClassificationResult classify(const SaxWord& candidate, const WordSetDatabase& db) {
  if (db.empty()) throw Error(ErrorKind::kInvalidInput, "word-set database is empty");
  if (candidate.alphabet_size() != db.alphabet_size() || candidate.size() != db.word_length()) {
    throw Error(ErrorKind::kInvalidInput,
                "candidate (a=" + std::to_string(candidate.alphabet_size()) +
                    ", w=" + std::to_string(candidate.size()) + ") does not match database (a=" +
                    std::to_string(db.alphabet_size()) +
                    ", w=" + std::to_string(db.word_length()) + ")");
  }

  // A stored copy of the candidate wins outright; otherwise a word from
  // another class that differs only by adjacent letters would tie at zero.
  if (const std::string* label = db.owner(candidate)) return {*label, 0.0, candidate};

  const auto cuts = breakpoints(db.alphabet_size());
  const auto probe = candidate.symbols();
  double best = std::numeric_limits<double>::infinity();
  const std::string* best_label = nullptr;
  const SaxWord* best_word = nullptr;

  // Classes and words iterate in lexicographic order, so keeping only strict
  // improvements implements the tie rule.
  for (const auto& [label, words] : db.classes()) {
    for (const SaxWord& word : words) {
      double dist = 0.0;
      for (std::size_t i = 0; i < probe.size() && dist <= best; ++i) {
        dist += letter_distance(probe[i], word[i], cuts);
      }
      if (dist < best) {
        best = dist;
        best_label = &label;
        best_word = &word;
      }
    }
  }
  return {*best_label, best, *best_word};
}

ClassificationResult classify_image(const BinaryImage& image, const WordSetDatabase& db,
                                    const SaxConfig& config, std::size_t bins) {
  return classify(shape_word(image, config, bins), db);
}

}  // namespace saxshape
