#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spantag/lexicon.hpp"
#include "spantag/tagger.hpp"

namespace spantag {

// One "token<TAB>TAG" line. `tag` is empty when the code is not in the
// registry (lenient reads only).
struct VerticalEntry {
  std::string form;
  std::string code;
  std::optional<Tag> tag;
  std::size_t line = 0;
};

struct VerticalSentence {
  std::vector<VerticalEntry> entries;
  // Preceded by a "#FALLBACK" line.
  bool fallback = false;
};

struct UnknownTagIssue {
  std::size_t line = 0;
  std::string code;
};

struct VerticalDocument {
  std::vector<VerticalSentence> sentences;
  std::string provenance;
  // Filled by lenient reads.
  std::vector<UnknownTagIssue> unknown_tags;

  std::size_t token_count() const;
};

// Blank lines end sentences; lines starting with '#' and holding no tab are
// comments. Throws FormatError(line) for a line without exactly one tab or
// with an empty field, and UnknownTagError(code, line) in strict mode.
VerticalDocument parse_vertical(std::istream& in, std::string provenance, bool strict = true);
VerticalDocument read_vertical(const std::filesystem::path& path, bool strict = true);

void write_vertical(std::ostream& out, const VerticalDocument& doc);
std::string write_vertical(const VerticalDocument& doc);
void write_vertical(const std::filesystem::path& path, const VerticalDocument& doc);

// Throws UnknownTagError(code, line) for entries without a registry tag.
std::vector<TaggedSentence> to_tagged(const VerticalDocument& doc);
VerticalDocument from_tagged(std::span<const TaggedOutput> sentences, std::string provenance = {});

struct EvalReport {
  std::size_t tokens = 0;
  std::size_t correct = 0;
  double accuracy = 1.0;
  // (gold code, predicted code) -> count, including agreements.
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;
  // Present when a lexicon was supplied.
  std::optional<std::size_t> unknown_tokens;
  std::optional<std::size_t> unknown_correct;
  std::optional<double> unknown_accuracy;
};

// Token streams must match form for form; throws AlignmentError with the
// zero-based token position otherwise. Tokens the lexicon does not cover
// count as unknown.
EvalReport evaluate(const VerticalDocument& gold, const VerticalDocument& predicted,
                    const Lexicon* lexicon = nullptr);

// Summary block, a blank line, then the confusion table as
// GOLD<TAB>PRED<TAB>COUNT rows.
void write_report(std::ostream& out, const EvalReport& report);

}  // namespace spantag
