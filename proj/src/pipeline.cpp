#include <algorithm>
#include <future>
#include <map>

#include "spantag/errors.hpp"
#include "spantag/tagger.hpp"
#include "spantag/text.hpp"

namespace spantag {

namespace {

const RuleSet& no_rules() {
  static const RuleSet rules;
  return rules;
}

}  // namespace

std::optional<Tag> punctuation_tag(std::string_view surface) {
  static const std::map<std::string, std::string, std::less<>> kAliases{
      {"¿", "IQUEST"}, {"¡", "IEXCL"}, {"…", "..."}, {"«", "\""}, {"»", "\""},
      {"“", "\""},     {"”", "\""},    {"„", "\""},  {"[", "("},  {"]", ")"},
      {"\u2014", "-"}, {"\u2013", "-"},
  };
  if (auto alias = kAliases.find(surface); alias != kAliases.end()) return parse_tag(alias->second);
  if (auto tag = find_tag(surface); tag && tag->features().category == Category::kPunctuation) {
    return tag;
  }
  return std::nullopt;
}

AmbiguityClass candidates(const Lexicon& lexicon, const Token& token, bool sentence_initial) {
  static const Tag kUnclassified = parse_tag("PNC");
  if (token.kind == TokenKind::kPunctuation) {
    if (auto tag = punctuation_tag(token.surface)) return AmbiguityClass{*tag};
  }
  if (const auto* known = lexicon.lookup(token.surface)) return *known;
  switch (token.kind) {
    case TokenKind::kPunctuation:
    case TokenKind::kAbbreviation:
      return AmbiguityClass{kUnclassified};
    case TokenKind::kNumber:
      return AmbiguityClass::of(
          {token.surface.find('-') != std::string::npos ? "CARDGU" : "CARDXP"});
    case TokenKind::kCode:
      return AmbiguityClass::of({"CODE"});
    case TokenKind::kFormula:
      return AmbiguityClass::of({"FO"});
    default:
      break;
  }
  auto guess = guess_unknown(token.surface);
  if (!sentence_initial && text::starts_upper(token.surface)) {
    guess = guess.united(AmbiguityClass::of({"NPAXX", "NPTOS"}));
  }
  return guess;
}

Pipeline::Pipeline(const HmmModel& model, const Lexicon& lexicon, const RuleSet& rules,
                   const Tokenizer& tokenizer, PipelineOptions options)
    : model_(model), lexicon_(lexicon), rules_(rules), tokenizer_(tokenizer), options_(options) {}

std::vector<Textword> Pipeline::textwords(std::span<const Token> sentence) const {
  std::vector<Textword> out;
  out.reserve(sentence.size());
  const auto first_word = std::find_if(sentence.begin(), sentence.end(), [](const Token& t) {
    return t.kind != TokenKind::kPunctuation;
  });
  for (auto it = sentence.begin(); it != sentence.end(); ++it) {
    const Token& token = *it;
    if (auto split = split_portmanteau(token)) {
      Token part = token;
      part.kind = TokenKind::kPortmanteauPart;
      part.origin = TokenOrigin{token.surface, 0};
      out.push_back({std::move(part), split->parts.front().candidates});
      continue;
    }
    if (options_.enclitic_split && token.kind == TokenKind::kWord && !lexicon_.lookup(token.surface)) {
      if (auto split = split_enclitics(token, lexicon_)) {
        for (std::size_t j = 0; j < split->parts.size(); ++j) {
          Token part{split->parts[j].surface, token.begin, token.end, TokenKind::kEncliticPart,
                     TokenOrigin{token.surface, j}};
          out.push_back({std::move(part), split->parts[j].candidates});
        }
        continue;
      }
    }
    out.push_back({token, candidates(lexicon_, token, it == first_word)});
  }
  return out;
}

TaggedOutput Pipeline::tag_sentence(std::span<const Token> sentence, std::size_t index) const {
  const auto words = textwords(sentence);
  TaggedOutput output;
  DecodeResult decoded;
  try {
    decoded = viterbi_decode(model_, rules_, words, index);
  } catch (const NoValidPathError&) {
    decoded = viterbi_decode(model_, no_rules(), words, index);
    output.fallback = true;
  }
  output.score = decoded.score;
  output.tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    output.tokens.push_back({words[i].token, decoded.tags[i]});
  }
  return output;
}

std::vector<TaggedOutput> Pipeline::tag_text(std::string_view text) const {
  const auto tokens = tokenizer_.tokenize(text);
  const auto sentences = sentence_split(tokens);
  std::vector<TaggedOutput> out(sentences.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options_.jobs, sentences.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) out[i] = tag_sentence(sentences[i], i);
    return out;
  }
  // Strided partition; each task writes only its own slots.
  std::vector<std::future<void>> tasks;
  tasks.reserve(jobs);
  for (std::size_t job = 0; job < jobs; ++job) {
    tasks.push_back(std::async(std::launch::async, [&, job] {
      for (std::size_t i = job; i < sentences.size(); i += jobs) {
        out[i] = tag_sentence(sentences[i], i);
      }
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

std::vector<TaggedOutput> tag_text(const HmmModel& model, const Lexicon& lexicon,
                                   const RuleSet& rules, std::string_view text,
                                   PipelineOptions options) {
  static const Tokenizer tokenizer;
  return Pipeline(model, lexicon, rules, tokenizer, options).tag_text(text);
}

}  // namespace spantag
