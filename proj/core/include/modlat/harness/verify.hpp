#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modlat/harness/corpus.hpp"

namespace modlat::harness {

enum class Status { pass, fail, skip };
const char* to_string(Status s);

struct TheoremInfo {
  std::string id;
  std::string summary;
};

/// The filter vocabulary, in execution order.
const std::vector<TheoremInfo>& theorem_catalog();

/// "all" or a comma-separated list of catalog ids, returned in catalog
/// order. Spelled-out prefixes ("lemma-3.4") name the short id. Throws
/// InvalidInput on an unknown id.
std::vector<std::string> parse_theorem_filter(std::string_view text);

/// Largest End(M) the Takeuchi check builds; larger ones are skipped.
inline constexpr std::size_t kMaxEndOrder = 1024;

struct TaskResult {
  std::string theorem;
  std::string instance;  ///< ring id, or "ring|module"
  Status status = Status::pass;
  std::string detail;  ///< witness summary, skip reason, or failure message
  double seconds = 0;
};

struct VerificationReport {
  std::string corpus;
  std::vector<std::string> theorems;
  std::vector<TaskResult> results;  ///< corpus order, then catalog order, then module order
  double total_seconds = 0;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }

  /// Everything except timings; identical across job counts and runs.
  Json body() const;
  /// body() plus a "timings" section.
  Json to_json() const;
};

/// Runs every selected verifier on every applicable instance with `jobs`
/// worker threads. Per-instance errors become failed results; cap overruns
/// become skips.
VerificationReport run_verification(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& theorems,
                                    std::size_t jobs, const std::string& corpus_label = "builtin");

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);

}  // namespace modlat::harness
