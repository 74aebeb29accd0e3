#include <algorithm>
#include <cmath>
#include <limits>

#include "spantag/errors.hpp"
#include "spantag/tagger.hpp"

namespace spantag {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Scores within this relative distance of the best count as tied.
bool near_best(double value, double best) {
  if (value == kNegInf) return false;
  return value >= best - 1e-12 * std::max(1.0, std::abs(best));
}

}  // namespace

DecodeResult viterbi_decode(const HmmModel& model, const RuleSet& rules,
                            std::span<const Textword> sentence, std::size_t sentence_index) {
  const std::size_t n = sentence.size();
  if (n == 0) return {};

  std::vector<std::vector<double>> emission(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& word = sentence[i];
    for (Tag tag : word.candidates.tags()) {
      emission[i].push_back(model.emission_score(word.token.surface, tag, word.candidates));
    }
  }

  // beta[i][a]: best score of positions i..n-1 plus the end transition,
  // given tag a at position i.
  std::vector<std::vector<double>> beta(n);
  {
    const auto tags = sentence[n - 1].candidates.tags();
    beta[n - 1].resize(tags.size());
    for (std::size_t a = 0; a < tags.size(); ++a) {
      beta[n - 1][a] = emission[n - 1][a] + model.log_end(tags[a]);
    }
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    const auto here = sentence[i].candidates.tags();
    const auto next = sentence[i + 1].candidates.tags();
    beta[i].assign(here.size(), kNegInf);
    for (std::size_t a = 0; a < here.size(); ++a) {
      double best = kNegInf;
      for (std::size_t b = 0; b < next.size(); ++b) {
        if (beta[i + 1][b] == kNegInf || !rules.allowed(here[a], next[b])) continue;
        best = std::max(best, model.log_transition(here[a], next[b]) + beta[i + 1][b]);
      }
      if (best != kNegInf) beta[i][a] = emission[i][a] + best;
    }
  }

  DecodeResult result;
  result.tags.reserve(n);
  std::size_t previous = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto tags = sentence[i].candidates.tags();
    std::vector<double> value(tags.size(), kNegInf);
    double best = kNegInf;
    for (std::size_t b = 0; b < tags.size(); ++b) {
      if (beta[i][b] == kNegInf) continue;
      if (i == 0) {
        value[b] = model.log_start(tags[b]) + beta[i][b];
      } else {
        const Tag from = result.tags.back();
        if (!rules.allowed(from, tags[b])) continue;
        value[b] = model.log_transition(from, tags[b]) + beta[i][b];
      }
      best = std::max(best, value[b]);
    }
    if (best == kNegInf) throw NoValidPathError(sentence_index);
    for (std::size_t b = 0; b < tags.size(); ++b) {
      if (near_best(value[b], best)) {
        previous = b;
        break;
      }
    }
    result.tags.push_back(tags[previous]);
  }
  result.score = path_score(model, sentence, result.tags);
  return result;
}

double path_score(const HmmModel& model, std::span<const Textword> sentence,
                  std::span<const Tag> tags) {
  if (sentence.size() != tags.size()) throw Error("path length differs from sentence length");
  if (tags.empty()) return 0.0;
  double score = model.log_start(tags[0]);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) score += model.log_transition(tags[i - 1], tags[i]);
    score += model.emission_score(sentence[i].token.surface, tags[i], sentence[i].candidates);
  }
  return score + model.log_end(tags.back());
}

}  // namespace spantag
