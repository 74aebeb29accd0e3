#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantag/lexicon.hpp"

namespace spantag {

enum class TokenKind {
  kWord,
  kPunctuation,
  kNumber,
  kCode,
  kFormula,
  kAbbreviation,
  kPortmanteauPart,
  kEncliticPart,
};

std::string_view to_string(TokenKind kind);

// Where a split token came from: the orthographic word and the part's index.
struct TokenOrigin {
  std::string parent;
  std::size_t part = 0;

  bool operator==(const TokenOrigin&) const = default;
};

struct Token {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;
  std::optional<TokenOrigin> origin;

  bool operator==(const Token&) const = default;
};

enum class SplitConfidence { kCertain, kHeuristic };

struct SplitPart {
  std::string surface;
  AmbiguityClass candidates;
};

struct SplitDecision {
  std::vector<SplitPart> parts;
  SplitConfidence confidence = SplitConfidence::kHeuristic;
  // The stem as written in the text, before accent restoration. Equal to
  // parts[0].surface when no accent was removed.
  std::string written_stem;
};

struct TokenizerConfig {
  // Forms that keep their trailing period, e.g. "Sr.".
  std::set<std::string> abbreviations;
  // Fixed multiword textwords, one vector of words each.
  std::vector<std::vector<std::string>> multiwords;

  // Abbreviations listed among the title and unit-of-measure examples.
  static TokenizerConfig defaults();

  // Plain-text resources: UTF-8, one entry per line, '#' comments. Throw
  // IoError when the file cannot be read.
  void load_abbreviations(const std::filesystem::path& path);
  void load_multiwords(const std::filesystem::path& path);
};

class Tokenizer {
 public:
  Tokenizer();
  explicit Tokenizer(TokenizerConfig config);

  // Total over any byte string; whitespace is the only thing not covered by
  // some token's span.
  std::vector<Token> tokenize(std::string_view text) const;

  const TokenizerConfig& config() const noexcept { return config_; }

 private:
  void tokenize_chunk(std::string_view text, std::size_t begin, std::size_t end,
                      std::vector<Token>& out) const;
  void merge_multiwords(std::string_view text, std::vector<Token>& tokens) const;

  TokenizerConfig config_;
};

std::vector<Token> tokenize(std::string_view text);

// "al" and "del" stay one textword with their portmanteau candidates.
std::optional<SplitDecision> split_portmanteau(const Token& token);

// Clitic pronouns that may attach to a verb, in matching order.
std::span<const std::string_view> enclitic_forms();

// Strips up to two enclitic pronouns when the remaining stem is attested in
// the lexicon as an imperative, infinitive or gerund.
std::optional<SplitDecision> split_enclitics(const Token& token, const Lexicon& lexicon);

// Sentences end after ".", "?", "!" and ellipsis tokens.
std::vector<std::span<const Token>> sentence_split(std::span<const Token> tokens);

}  // namespace spantag
