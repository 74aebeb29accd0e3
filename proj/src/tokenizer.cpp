#include "spantag/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "spantag/errors.hpp"
#include "spantag/text.hpp"

namespace spantag {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kNumber: return "number";
    case TokenKind::kCode: return "code";
    case TokenKind::kFormula: return "formula";
    case TokenKind::kAbbreviation: return "abbreviation";
    case TokenKind::kPortmanteauPart: return "portmanteau-part";
    case TokenKind::kEncliticPart: return "enclitic-part";
  }
  return "word";
}

namespace {

std::vector<std::string> read_resource_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

bool is_alnum(char32_t c) { return text::is_letter(c) || text::is_digit(c); }

bool is_operator(char c) {
  return c == '=' || c == '+' || c == '*' || c == '^' || c == '<' || c == '>';
}

bool is_formula_char(char c) {
  return is_operator(c) || c == '-' || c == '/' || c == '(' || c == ')' || c == '.' ||
         c == ',';
}

// Length of the formula prefix of `chunk`, or 0 when the chunk is not a
// formula. Trailing sentence punctuation is left outside.
std::size_t formula_length(std::string_view chunk) {
  std::size_t end = chunk.size();
  while (end > 0 && std::string_view(".,;:?!").find(chunk[end - 1]) != std::string_view::npos) {
    --end;
  }
  bool has_operator = false;
  bool has_alnum = false;
  for (std::size_t i = 0; i < end;) {
    auto cp = text::decode(chunk, i);
    if (cp.valid && is_alnum(cp.value)) {
      has_alnum = true;
    } else if (cp.value < 0x80 && is_formula_char(static_cast<char>(cp.value))) {
      has_operator = has_operator || is_operator(static_cast<char>(cp.value));
    } else {
      return 0;
    }
    i += cp.length;
  }
  return has_operator && has_alnum ? end : 0;
}

bool is_terminal(const Token& token) {
  if (token.kind != TokenKind::kPunctuation) return false;
  const auto& s = token.surface;
  return s == "." || s == "?" || s == "!" || s == "..." || s == "…";
}

}  // namespace

TokenizerConfig TokenizerConfig::defaults() {
  TokenizerConfig config;
  for (const auto& entry : load_registry().entries()) {
    const auto category = entry.features.category;
    if (category != Category::kTitleNoun && category != Category::kUnitOfMeasure) continue;
    for (const auto& form : entry.examples) {
      if (text::ends_with(form, ".")) config.abbreviations.insert(form);
    }
  }
  return config;
}

void TokenizerConfig::load_abbreviations(const std::filesystem::path& path) {
  for (auto& line : read_resource_lines(path)) abbreviations.insert(std::move(line));
}

void TokenizerConfig::load_multiwords(const std::filesystem::path& path) {
  for (const auto& line : read_resource_lines(path)) {
    std::istringstream words(line);
    std::vector<std::string> multiword;
    for (std::string word; words >> word;) multiword.push_back(word);
    if (multiword.size() >= 2) multiwords.push_back(std::move(multiword));
  }
  std::stable_sort(multiwords.begin(), multiwords.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

Tokenizer::Tokenizer() : Tokenizer(TokenizerConfig::defaults()) {}

Tokenizer::Tokenizer(TokenizerConfig config) : config_(std::move(config)) {
  std::stable_sort(config_.multiwords.begin(), config_.multiwords.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

std::vector<Token> Tokenizer::tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = text::decode(text, pos);
    if (cp.valid && text::is_space(cp.value)) {
      pos += cp.length;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size()) {
      auto next = text::decode(text, end);
      if (next.valid && text::is_space(next.value)) break;
      end += next.length;
    }
    tokenize_chunk(text, pos, end, tokens);
    pos = end;
  }
  if (!config_.multiwords.empty()) merge_multiwords(text, tokens);
  return tokens;
}

void Tokenizer::tokenize_chunk(std::string_view text, std::size_t begin, std::size_t end,
                               std::vector<Token>& out) const {
  auto emit = [&](std::size_t b, std::size_t e, TokenKind kind) {
    out.push_back(Token{std::string(text.substr(b, e - b)), b, e, kind, std::nullopt});
  };

  if (auto length = formula_length(text.substr(begin, end - begin))) {
    emit(begin, begin + length, TokenKind::kFormula);
    begin += length;
  }

  std::size_t i = begin;
  while (i < end) {
    if (text.substr(i, 3) == "...") {
      emit(i, i + 3, TokenKind::kPunctuation);
      i += 3;
      continue;
    }
    auto cp = text::decode(text, i);
    if (!(cp.valid && is_alnum(cp.value))) {
      emit(i, i + cp.length, TokenKind::kPunctuation);
      i += cp.length;
      continue;
    }

    // Alphanumeric run. Hyphens join alphanumeric parts; '.' and ',' join
    // digit groups.
    bool has_letter = false;
    bool has_digit = false;
    std::size_t j = i;
    bool last_digit = false;
    while (j < end) {
      auto c = text::decode(text, j);
      if (c.valid && is_alnum(c.value)) {
        last_digit = text::is_digit(c.value);
        has_digit = has_digit || last_digit;
        has_letter = has_letter || !last_digit;
        j += c.length;
        continue;
      }
      if (j + 1 < end && (text[j] == '-' || text[j] == '.' || text[j] == ',')) {
        auto after = text::decode(text, j + 1);
        const bool joins =
            text[j] == '-' ? (after.valid && is_alnum(after.value))
                           : (last_digit && after.valid && text::is_digit(after.value));
        if (joins) {
          ++j;
          continue;
        }
      }
      break;
    }

    TokenKind kind = TokenKind::kWord;
    if (has_digit && has_letter) {
      kind = TokenKind::kCode;
    } else if (has_digit) {
      kind = TokenKind::kNumber;
    }
    if (kind == TokenKind::kWord && j < end && text[j] == '.' &&
        config_.abbreviations.contains(std::string(text.substr(i, j + 1 - i)))) {
      ++j;
      kind = TokenKind::kAbbreviation;
    }
    emit(i, j, kind);
    i = j;
  }
}

void Tokenizer::merge_multiwords(std::string_view text, std::vector<Token>& tokens) const {
  std::vector<Token> merged;
  merged.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t matched = 0;
    if (tokens[i].kind == TokenKind::kWord) {
      for (const auto& words : config_.multiwords) {
        if (i + words.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < words.size() && ok; ++k) {
          const auto& token = tokens[i + k];
          ok = token.kind == TokenKind::kWord &&
               text::to_lower(token.surface) == text::to_lower(words[k]) &&
               (k == 0 || token.begin > tokens[i + k - 1].end);
        }
        if (ok) {
          matched = words.size();
          break;
        }
      }
    }
    if (matched == 0) {
      merged.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    const auto b = tokens[i].begin;
    const auto e = tokens[i + matched - 1].end;
    merged.push_back(Token{std::string(text.substr(b, e - b)), b, e, TokenKind::kWord,
                           std::nullopt});
    i += matched;
  }
  tokens = std::move(merged);
}

std::vector<Token> tokenize(std::string_view text) {
  static const Tokenizer tokenizer;
  return tokenizer.tokenize(text);
}

// ---------------------------------------------------------------------------
// Splitting

std::optional<SplitDecision> split_portmanteau(const Token& token) {
  if (token.kind != TokenKind::kWord || token.surface.empty()) return std::nullopt;
  std::string folded = token.surface;
  if (folded[0] >= 'A' && folded[0] <= 'Z') folded[0] = static_cast<char>(folded[0] + 32);
  std::optional<AmbiguityClass> candidates;
  if (folded == "al") {
    candidates = AmbiguityClass::of({"PAL", "CSUBI"});
  } else if (folded == "del") {
    candidates = AmbiguityClass::of({"PDEL"});
  } else {
    return std::nullopt;
  }
  SplitDecision decision;
  decision.parts.push_back(SplitPart{token.surface, *candidates});
  decision.confidence = SplitConfidence::kCertain;
  decision.written_stem = token.surface;
  return decision;
}

namespace {

constexpr std::array<std::string_view, 11> kEncliticForms{
    "les", "las", "los", "nos", "me", "te", "se", "le", "la", "lo", "os"};

// Clitic pronoun tags keyed by form, read off the registry examples.
const std::map<std::string, AmbiguityClass, std::less<>>& clitic_tags() {
  static const auto table = [] {
    std::map<std::string, AmbiguityClass, std::less<>> out;
    for (const auto& entry : load_registry().entries()) {
      const auto& f = entry.features;
      const bool clitic = (f.category == Category::kPronoun &&
                           f.subcategory == Subcategory::kPersonalClitic) ||
                          f.category == Category::kSeParticle;
      if (!clitic) continue;
      for (const auto& form : entry.examples) {
        auto it = out.find(form);
        if (it == out.end()) {
          out.emplace(form, AmbiguityClass{entry.tag});
        } else {
          it->second = it->second.united(AmbiguityClass{entry.tag});
        }
      }
    }
    return out;
  }();
  return table;
}

// Verb readings of `form` that can host enclitics.
std::optional<AmbiguityClass> host_readings(const Lexicon& lexicon, std::string_view form) {
  const auto* tags = lexicon.lookup(form);
  if (!tags) return std::nullopt;
  std::vector<Tag> hosts;
  for (Tag tag : tags->tags()) {
    const auto& f = tag.features();
    if (f.category == Category::kVerb &&
        (f.mood == Mood::kImperative || f.mood == Mood::kInfinitive ||
         f.mood == Mood::kGerund)) {
      hosts.push_back(tag);
    }
  }
  if (hosts.empty()) return std::nullopt;
  return AmbiguityClass(std::move(hosts));
}

struct StemMatch {
  std::string stem;
  AmbiguityClass readings;
};

std::optional<StemMatch> attested_stem(const Lexicon& lexicon, std::string_view written) {
  if (auto readings = host_readings(lexicon, written)) {
    return StemMatch{std::string(written), *readings};
  }
  if (text::has_acute(written)) {
    auto bare = text::strip_acute(written);
    if (auto readings = host_readings(lexicon, bare)) return StemMatch{bare, *readings};
  }
  return std::nullopt;
}

}  // namespace

std::span<const std::string_view> enclitic_forms() { return kEncliticForms; }

std::optional<SplitDecision> split_enclitics(const Token& token, const Lexicon& lexicon) {
  if (token.kind != TokenKind::kWord) return std::nullopt;
  const std::string& surface = token.surface;
  const std::string lower = text::to_lower(surface);
  // Lowercasing keeps byte lengths for the Latin-1 range, so offsets line up.
  if (lower.size() != surface.size()) return std::nullopt;

  // Try two clitics before one; within a count, the first hit in
  // kEncliticForms order wins.
  for (std::size_t count : {2u, 1u}) {
    std::vector<std::string_view> chosen;
    std::optional<SplitDecision> found;
    auto search = [&](auto& self, std::size_t stem_end) -> void {
      if (found) return;
      if (chosen.size() == count) {
        const auto written = std::string_view(surface).substr(0, stem_end);
        if (auto match = attested_stem(lexicon, written)) {
          SplitDecision decision;
          decision.confidence = SplitConfidence::kHeuristic;
          decision.written_stem = std::string(written);
          decision.parts.push_back(SplitPart{match->stem, match->readings});
          std::size_t offset = stem_end;
          for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            auto part = surface.substr(offset, it->size());
            decision.parts.push_back(SplitPart{part, clitic_tags().find(*it)->second});
            offset += it->size();
          }
          found = std::move(decision);
        }
        return;
      }
      for (auto form : kEncliticForms) {
        if (stem_end <= form.size()) continue;
        if (std::string_view(lower).substr(stem_end - form.size(), form.size()) != form) continue;
        chosen.push_back(form);
        self(self, stem_end - form.size());
        chosen.pop_back();
        if (found) return;
      }
    };
    search(search, surface.size());
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<std::span<const Token>> sentence_split(std::span<const Token> tokens) {
  std::vector<std::span<const Token>> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_terminal(tokens[i])) {
      sentences.push_back(tokens.subspan(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < tokens.size()) sentences.push_back(tokens.subspan(start));
  return sentences;
}

}  // namespace spantag
