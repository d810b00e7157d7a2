#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <numbers>
#include <optional>

#include "bench_harness.hpp"
#include "saxshape/classifier.hpp"
#include "saxshape/error.hpp"
#include "saxshape/io.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace saxshape::cli {

namespace fs = std::filesystem;

namespace {

struct SaxOptions {
  std::string input;
  int alphabet = 0;
  std::size_t word_length = 0;
};

struct SignatureOptions {
  std::string input;
  std::size_t bins = kDefaultBins;
  std::string output;
  bool invert = false;
};

struct BuildSetsOptions {
  std::string input;
  int alphabet = 0;
  std::size_t word_length = 0;
  std::size_t bins = kDefaultBins;
  std::size_t rotations = 0;
  std::string output;
  bool invert = false;
};

struct ClassifyOptions {
  std::string sets;
  std::string input;
  std::size_t bins = kDefaultBins;
  std::optional<double> threshold;
  bool invert = false;
};

struct BenchOptions {
  std::string op;
  std::size_t size = 1000;
  std::size_t reps = 5;
  std::uint64_t seed = kDefaultBenchSeed;
};

BinaryImage load_pbm(const std::string& path, bool invert) {
  return read_pbm(read_file(path), PbmOptions{invert});
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

void cmd_sax(const SaxOptions& o, std::ostream& out) {
  const SaxConfig config(o.alphabet, o.word_length);
  const TimeSeries series = read_series(read_file(o.input));
  out << sax_transform(series, config).letters() << '\n';
}

void cmd_events(const SaxOptions& o, std::ostream& out) {
  const SaxConfig config(o.alphabet, o.word_length);
  const TimeSeries series = read_series(read_file(o.input));
  for (const auto& e : detect_transitions(sax_transform(series, config))) {
    out << e.position << '\t' << to_letter(e.from) << '\t' << to_letter(e.to) << '\n';
  }
}

void cmd_signature(const SignatureOptions& o, std::ostream& out) {
  const auto sig = signature(load_pbm(o.input, o.invert), o.bins);
  emit(o.output, write_series(sig.samples), out);
}

std::vector<fs::path> sorted_entries(const fs::path& dir, bool want_dirs) {
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (want_dirs ? entry.is_directory()
                  : entry.is_regular_file() && entry.path().extension() == ".pbm") {
      entries.push_back(entry.path());
    }
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

void report_conflicts(const std::vector<WordConflict>& conflicts, std::ostream& err) {
  for (const auto& c : conflicts) {
    err << "conflict\t" << c.word.letters() << '\t';
    for (std::size_t i = 0; i < c.labels.size(); ++i) err << (i ? "," : "") << c.labels[i];
    err << '\n';
  }
}

void cmd_build_sets(const BuildSetsOptions& o, std::ostream& out, std::ostream& err) {
  const SaxConfig config(o.alphabet, o.word_length);
  if (!fs::is_directory(o.input)) {
    throw Error(ErrorKind::kInvalidInput, "'" + o.input + "' is not a directory");
  }
  const auto class_dirs = sorted_entries(o.input, true);
  if (class_dirs.empty()) {
    throw Error(ErrorKind::kInvalidInput, "'" + o.input + "' has no class subdirectories");
  }

  std::vector<LabeledImage> images;
  for (const auto& dir : class_dirs) {
    const std::string label = dir.filename().string();
    const auto files = sorted_entries(dir, false);
    if (files.empty()) {
      throw Error(ErrorKind::kInvalidInput, "class directory '" + dir.string() +
                                                "' contains no .pbm files");
    }
    for (const auto& file : files) {
      const BinaryImage base = load_pbm(file.string(), o.invert);
      if (o.rotations == 0) {
        images.push_back({label, base});
        continue;
      }
      for (std::size_t k = 0; k < o.rotations; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o.rotations);
        images.push_back({label, k == 0 ? base : rotate_image(base, angle)});
      }
    }
  }

  try {
    const BuildResult result = build_word_sets(images, config, o.bins);
    report_conflicts(result.conflicts, err);
    emit(o.output, write_word_sets(result.database), out);
  } catch (const DegenerateClassError& e) {
    report_conflicts(e.conflicts(), err);
    throw;
  }
}

void cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  const WordSetDatabase db = read_word_sets(read_file(o.sets));
  const SaxConfig config(db.alphabet_size(), db.word_length());
  const auto result = classify_image(load_pbm(o.input, o.invert), db, config, o.bins);
  if (o.threshold && result.distance > *o.threshold) {
    out << "UNKNOWN\n";
    return;
  }
  out << result.label << '\t' << format_real(result.distance) << '\n';
}

void cmd_bench(const BenchOptions& o, std::ostream& out) {
  write_report(run_bench(o.op, o.size, o.reps, o.seed), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic aggregate approximation of time series and binary shapes",
               "saxshape"};
  app.require_subcommand(1);

  SaxOptions sax;
  auto* sax_cmd = app.add_subcommand("sax", "Print the SAX word of a series file");
  sax_cmd->add_option("--input", sax.input, "Series file (one sample per line)")->required();
  sax_cmd->add_option("--alphabet", sax.alphabet, "Alphabet size (3-8)")->required();
  sax_cmd->add_option("--word-length", sax.word_length, "Word length")->required();

  SaxOptions events;
  auto* events_cmd =
      app.add_subcommand("events", "List letter transitions of a series' SAX word");
  events_cmd->add_option("--input", events.input, "Series file")->required();
  events_cmd->add_option("--alphabet", events.alphabet, "Alphabet size (3-8)")->required();
  events_cmd->add_option("--word-length", events.word_length, "Word length")->required();

  SignatureOptions sig;
  auto* sig_cmd = app.add_subcommand("signature", "Write the centroid-distance signature");
  sig_cmd->add_option("--input", sig.input, "PBM image")->required();
  sig_cmd->add_option("--bins", sig.bins, "Angular bins")->capture_default_str();
  sig_cmd->add_option("--output", sig.output, "Series file (default: stdout)");
  sig_cmd->add_flag("--invert", sig.invert, "Treat PBM 0 pixels as the shape");

  BuildSetsOptions build;
  auto* build_cmd = app.add_subcommand("build-sets", "Build per-class rotation word sets");
  build_cmd->add_option("--input", build.input, "Directory with one subdirectory per class")
      ->required();
  build_cmd->add_option("--alphabet", build.alphabet, "Alphabet size (3-8)")->required();
  build_cmd->add_option("--word-length", build.word_length, "Word length")->required();
  build_cmd->add_option("--bins", build.bins, "Angular bins")->capture_default_str();
  build_cmd
      ->add_option("--rotations", build.rotations,
                   "In-plane rotations per image at uniform angles (0: none)")
      ->capture_default_str();
  build_cmd->add_option("--output", build.output, "Word-set file (default: stdout)");
  build_cmd->add_flag("--invert", build.invert, "Treat PBM 0 pixels as the shape");

  ClassifyOptions cls;
  auto* cls_cmd = app.add_subcommand("classify", "Classify a shape against word sets");
  cls_cmd->add_option("--sets", cls.sets, "Word-set file")->required();
  cls_cmd->add_option("--input", cls.input, "PBM image")->required();
  cls_cmd->add_option("--bins", cls.bins, "Angular bins")->capture_default_str();
  cls_cmd->add_option("--threshold", cls.threshold,
                      "Print UNKNOWN when the nearest word is farther than this");
  cls_cmd->add_flag("--invert", cls.invert, "Treat PBM 0 pixels as the shape");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time an operation on synthetic input");
  bench_cmd->add_option("--op", bench.op, "sax, signature or classify")->required();
  bench_cmd->add_option("--size", bench.size, "Input size")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions (>= 3)")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Input generator seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (*sax_cmd) cmd_sax(sax, out);
    if (*events_cmd) cmd_events(events, out);
    if (*sig_cmd) cmd_signature(sig, out);
    if (*build_cmd) cmd_build_sets(build, out, err);
    if (*cls_cmd) cmd_classify(cls, out);
    if (*bench_cmd) cmd_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace saxshape::cli
