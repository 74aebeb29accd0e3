#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spantag/bias.hpp"
#include "spantag/lexicon.hpp"
#include "spantag/tagset.hpp"
#include "spantag/tokenizer.hpp"

namespace spantag {

struct TaggedToken {
  Token token;
  Tag tag;
};

using TaggedSentence = std::vector<TaggedToken>;

struct Smoothing {
  double transition_k = 0.5;
  double emission_k = 0.1;
  // Probability mass shared by the guessed tags of an out-of-vocabulary word.
  double unknown_mass = 1e-4;
};

// First-order HMM over the full registry. Transition contexts are the tags
// plus a sentence-start state; outcomes are the tags plus sentence end.
// Emissions are conditioned on the tag over the training vocabulary plus one
// unknown-word symbol. Word forms are lowercased before counting and lookup.
class HmmModel {
 public:
  // Add-k estimates from tagged sentences. Throws EmptyCorpusError or
  // ParameterError (non-positive k, unknown mass outside (0, 1]).
  static HmmModel train(std::span<const TaggedSentence> corpus, Smoothing smoothing = {},
                        std::string corpus_name = {});

  // Plain-text model with TRANSITIONS, EMISSIONS and META sections. Loading
  // checks that every distribution sums to one.
  static HmmModel read(std::istream& in);
  static HmmModel load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  // Natural-log probabilities.
  double log_start(Tag tag) const { return transitions_[index(kBoundary, tag.index())]; }
  double log_transition(Tag from, Tag to) const {
    return transitions_[index(from.index(), to.index())];
  }
  double log_end(Tag tag) const { return transitions_[index(tag.index(), kBoundary)]; }
  double log_emission(Tag tag, std::string_view word) const;
  double log_unknown_emission(Tag tag) const;
  double log_prior(Tag tag) const { return priors_.at(tag.index()); }

  // Emission term the decoder uses: the smoothed emission for in-vocabulary
  // forms; otherwise the unknown mass split over `candidates` in proportion
  // to the tag priors.
  double emission_score(std::string_view word, Tag tag, const AmbiguityClass& candidates) const;

  bool known(std::string_view word) const;

  // Full conditional sums, for normalization checks.
  double transition_sum(std::optional<Tag> context) const;
  double emission_sum(Tag tag) const;
  double prior_sum() const;

  // Raw training counts; zero for models read from disk. An empty optional
  // stands for the sentence boundary.
  std::uint64_t transition_count(std::optional<Tag> from, std::optional<Tag> to) const;
  std::uint64_t tag_count(Tag tag) const;

  const Smoothing& smoothing() const noexcept { return smoothing_; }
  const std::string& corpus_name() const noexcept { return corpus_name_; }
  std::uint64_t token_count() const noexcept { return token_count_; }
  std::uint64_t sentence_count() const noexcept { return sentence_count_; }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }

 private:
  static constexpr std::size_t kBoundary = static_cast<std::size_t>(-1);

  std::size_t index(std::size_t from, std::size_t to) const {
    const std::size_t row = from == kBoundary ? tag_count_ : from;
    const std::size_t col = to == kBoundary ? tag_count_ : to;
    return row * (tag_count_ + 1) + col;
  }

  std::size_t tag_count_ = 0;
  Smoothing smoothing_;
  std::string corpus_name_;
  std::uint64_t token_count_ = 0;
  std::uint64_t sentence_count_ = 0;

  std::vector<double> transitions_;  // (tags + 1) x (tags + 1)
  std::vector<double> priors_;
  std::unordered_map<std::string, std::uint32_t> vocabulary_;
  // Per tag: word id -> log P(word | tag); unseen words use the fallback.
  std::vector<std::unordered_map<std::uint32_t, double>> emissions_;
  std::vector<double> emission_fallback_;

  std::vector<std::uint64_t> transition_counts_;
  std::vector<std::uint64_t> tag_counts_;
};

// A textword ready for decoding.
struct Textword {
  Token token;
  AmbiguityClass candidates;
};

struct DecodeResult {
  std::vector<Tag> tags;
  double score = 0.0;
};

// Highest-scoring tag path whose adjacent pairs the rule set allows. Ties go
// to the path with the lowest registry index at the first differing
// position. Throws NoValidPathError(sentence_index) when the rules admit no
// path.
DecodeResult viterbi_decode(const HmmModel& model, const RuleSet& rules,
                            std::span<const Textword> sentence,
                            std::size_t sentence_index = 0);

// Log score of a given path under the model, summed left to right.
double path_score(const HmmModel& model, std::span<const Textword> sentence,
                  std::span<const Tag> tags);

// Tag of a punctuation surface, if it has one.
std::optional<Tag> punctuation_tag(std::string_view surface);

// Candidate tags for an unsplit token: punctuation mark, lexicon class,
// token-kind default, or the unknown-word guess. Capitalized unknown forms
// away from the sentence start also get the proper-noun tags.
AmbiguityClass candidates(const Lexicon& lexicon, const Token& token, bool sentence_initial);

struct PipelineOptions {
  bool enclitic_split = true;
  std::size_t jobs = 1;
};

struct TaggedOutput {
  TaggedSentence tokens;
  // Set when the rules left no valid path and the sentence was decoded unconstrained.
  bool fallback = false;
  double score = 0.0;
};

class Pipeline {
 public:
  Pipeline(const HmmModel& model, const Lexicon& lexicon, const RuleSet& rules,
           const Tokenizer& tokenizer, PipelineOptions options = {});

  // Splits portmanteaux and enclitic groups and attaches candidate sets.
  std::vector<Textword> textwords(std::span<const Token> sentence) const;

  TaggedOutput tag_sentence(std::span<const Token> sentence, std::size_t index) const;
  std::vector<TaggedOutput> tag_text(std::string_view text) const;

 private:
  const HmmModel& model_;
  const Lexicon& lexicon_;
  const RuleSet& rules_;
  const Tokenizer& tokenizer_;
  PipelineOptions options_;
};

std::vector<TaggedOutput> tag_text(const HmmModel& model, const Lexicon& lexicon,
                                   const RuleSet& rules, std::string_view text,
                                   PipelineOptions options = {});

}  // namespace spantag
