#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modlat/harness/json_io.hpp"

namespace modlat::harness {

/// Expected values; absent fields are not checked.
struct ModuleGoldens {
  std::optional<std::size_t> hdim;
  std::optional<std::size_t> udim;
  std::optional<std::size_t> length;
  std::optional<bool> self_projective;
};

struct RingGoldens {
  std::optional<std::size_t> hdim_left;
  std::optional<std::size_t> hdim_right;
  std::optional<std::size_t> jacobson_size;
  std::optional<std::size_t> units;
  std::optional<bool> local;
};

struct ModuleEntry {
  std::string id;  ///< unique within its ring
  ModuleSpec spec;
  ModuleGoldens expect;
};

struct CorpusEntry {
  std::string id;  ///< unique within the corpus
  RingSpec ring;
  std::vector<ModuleEntry> modules;
  RingGoldens expect;
  std::vector<std::string> tags;
};

/// Largest direct sum of two quotients included by `default_modules`.
inline constexpr std::size_t kMaxPairOrder = 144;

/// Regular left and right modules, R/I for every left ideal 0 ≠ I (R/R is
/// the zero module), and A ⊕ B for A, B among R and those quotients with
/// |A||B| ≤ kMaxPairOrder.
std::vector<ModuleEntry> default_modules(const RingSpec& ring);

std::vector<CorpusEntry> builtin_corpus();

/// One entry per *.json file, in file-name order. A file holds
///   {"id":..., "ring":<ring>, "modules":[{"id":..., "spec":<module>,
///    "expect":{...}}], "expect":{...}, "tags":[...]}
/// with "modules" defaulting to `default_modules`.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

CorpusEntry corpus_entry_from_json(const Json& j);
Json to_json(const CorpusEntry& e);

}  // namespace modlat::harness
