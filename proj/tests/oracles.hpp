#pragma once

// Independent reference implementations used to check the library.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spantag/bias.hpp"
#include "spantag/lexicon.hpp"
#include "spantag/tagger.hpp"
#include "spantag/tagset.hpp"
#include "spantag/text.hpp"
#include "spantag/tokenizer.hpp"

#ifndef SPANTAG_FIXTURES
#define SPANTAG_FIXTURES "tests/fixtures"
#endif

namespace oracle {

using namespace spantag;

inline std::string fixture(const std::string& name) {
  return std::string(SPANTAG_FIXTURES) + "/" + name;
}

// ---------------------------------------------------------------------------
// Bias rules, evaluated through regular expressions.

inline const std::regex& pattern_regex(const std::string& pattern) {
  static std::map<std::string, std::regex> cache;
  if (auto it = cache.find(pattern); it != cache.end()) return it->second;
  std::string re;
  for (char c : pattern) {
    if (c == '?') {
      re += '.';
    } else if (c == '*') {
      re += ".*";
    } else {
      if (!std::isalnum(static_cast<unsigned char>(c))) re += '\\';
      re += c;
    }
  }
  return cache.emplace(pattern, std::regex(re)).first->second;
}

struct PlainRule {
  bool forbid = true;
  std::string left;
  std::string right;
};

inline bool rule_allows(const std::vector<PlainRule>& rules, const std::string& a,
                        const std::string& b) {
  for (const auto& rule : rules) {
    const bool left = std::regex_match(a, pattern_regex(rule.left));
    if (!left) continue;
    const bool right = std::regex_match(b, pattern_regex(rule.right));
    if (rule.forbid && right) return false;
    if (!rule.forbid && !right) return false;
  }
  return true;
}

inline std::string rules_text(const std::vector<PlainRule>& rules) {
  std::string out;
  for (const auto& rule : rules) {
    out += (rule.forbid ? "FORBID " : "REQUIRE ") + rule.left + " " + rule.right + "\n";
  }
  return out;
}

// Turns a code into a random pattern that still matches it.
inline std::string loosen(const std::string& code, std::mt19937& rng) {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto roll = rng() % 10;
    if (roll == 0 && i > 0) return out + "*";
    out += roll == 1 ? '?' : code[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decoding by enumeration.

struct BruteForce {
  std::vector<Tag> tags;
  double score = 0.0;
  bool feasible = false;
};

inline double sum_score(const HmmModel& model, const std::vector<Textword>& sentence,
                        const std::vector<Tag>& path) {
  double total = model.log_start(path.front()) + model.log_end(path.back());
  for (std::size_t i = 0; i < path.size(); ++i) {
    total += model.emission_score(sentence[i].token.surface, path[i], sentence[i].candidates);
    if (i > 0) total += model.log_transition(path[i - 1], path[i]);
  }
  return total;
}

// All paths in lexicographic registry order; the first one within
// tolerance of the maximum wins.
inline BruteForce brute_force_decode(const HmmModel& model, const std::vector<PlainRule>& rules,
                                     const std::vector<Textword>& sentence) {
  const std::size_t n = sentence.size();
  std::vector<std::size_t> odometer(n, 0);
  std::vector<std::pair<std::vector<Tag>, double>> feasible;
  while (true) {
    std::vector<Tag> path(n);
    for (std::size_t i = 0; i < n; ++i) path[i] = sentence[i].candidates.tags()[odometer[i]];
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) {
      ok = rule_allows(rules, path[i].code(), path[i + 1].code());
    }
    if (ok) feasible.emplace_back(path, sum_score(model, sentence, path));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++odometer[k] < sentence[k].candidates.size()) break;
      odometer[k] = 0;
      if (k == 0) {
        k = n + 1;
        break;
      }
    }
    if (k == n + 1 || n == 0) break;
  }
  BruteForce result;
  if (feasible.empty()) return result;
  double best = -INFINITY;
  for (const auto& [path, score] : feasible) best = std::max(best, score);
  for (const auto& [path, score] : feasible) {
    if (score >= best - 1e-12 * std::max(1.0, std::abs(best))) {
      result.tags = path;
      result.score = score;
      result.feasible = true;
      break;
    }
  }
  return result;
}

// A model file with random distributions over `subset` and a small
// vocabulary; every other context is uniform.
inline std::string random_model_text(const std::vector<Tag>& subset,
                                     const std::vector<std::string>& vocabulary,
                                     std::mt19937& rng) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  const auto& registry = load_registry();
  const std::size_t n = registry.size();
  std::ostringstream out;
  out.precision(17);
  out << "TRANSITIONS\n";
  auto row = [&](const std::string& context) {
    std::vector<std::pair<std::string, double>> listed;
    for (Tag t : subset) listed.emplace_back(t.code(), weight(rng));
    listed.emplace_back("</S>", weight(rng));
    const double fallback = weight(rng) * 1e-3;
    double total = fallback * static_cast<double>(n + 1 - listed.size());
    for (const auto& [o, w] : listed) total += w;
    for (const auto& [o, w] : listed) out << context << '\t' << o << '\t' << std::log10(w / total) << '\n';
    out << context << "\t<*>\t" << std::log10(fallback / total) << '\n';
  };
  row("<S>");
  for (Tag t : subset) row(t.code());
  out << "EMISSIONS\n";
  for (Tag t : subset) {
    std::vector<double> w;
    double total = 0.0;
    for (std::size_t i = 0; i <= vocabulary.size(); ++i) {
      w.push_back(weight(rng));
      total += w.back();
    }
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
      out << t.code() << '\t' << vocabulary[i] << '\t' << std::log10(w[i] / total) << '\n';
    }
    out << t.code() << "\t<UNK>\t" << std::log10(w.back() / total) << '\n';
  }
  out << "META\ncorpus\trandom\ntokens\t0\nsentences\t0\nvocabulary\t" << vocabulary.size()
      << "\ntransition_k\t0.5\nemission_k\t0.1\nunknown_mass\t0.0001\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Enclitic segmentation by exhaustive right stripping.

struct EncliticSplit {
  std::string stem;
  std::vector<std::string> clitics;
};

inline const std::vector<std::string>& clitic_list() {
  static const std::vector<std::string> list{"me", "te", "se", "le", "les", "la",
                                             "las", "lo", "los", "nos", "os"};
  return list;
}

inline bool hosts_clitics(const Lexicon& lexicon, const std::string& form) {
  const auto* tags = lexicon.lookup(form);
  if (!tags) return false;
  for (Tag t : tags->tags()) {
    const auto& f = t.features();
    if (f.category == Category::kVerb &&
        (f.mood == Mood::kImperative || f.mood == Mood::kInfinitive || f.mood == Mood::kGerund)) {
      return true;
    }
  }
  return false;
}

// Every way to write `word` as stem + up to two listed clitics with an
// attested host stem, preferring more clitics.
inline std::vector<EncliticSplit> enclitic_splits(const Lexicon& lexicon, const std::string& word) {
  const auto lower = text::to_lower(word);
  std::vector<EncliticSplit> found;
  for (int count = 2; count >= 1; --count) {
    for (std::size_t cut1 = 1; cut1 < lower.size(); ++cut1) {
      std::vector<std::size_t> cuts{cut1};
      if (count == 2) {
        for (std::size_t cut2 = cut1 + 1; cut2 < lower.size(); ++cut2) {
          const auto a = lower.substr(cut1, cut2 - cut1);
          const auto b = lower.substr(cut2);
          const auto& list = clitic_list();
          if (std::find(list.begin(), list.end(), a) == list.end()) continue;
          if (std::find(list.begin(), list.end(), b) == list.end()) continue;
          auto stem = word.substr(0, cut1);
          if (!hosts_clitics(lexicon, stem)) stem = text::strip_acute(stem);
          if (hosts_clitics(lexicon, stem)) found.push_back({stem, {a, b}});
        }
      } else {
        const auto a = lower.substr(cut1);
        const auto& list = clitic_list();
        if (std::find(list.begin(), list.end(), a) == list.end()) continue;
        auto stem = word.substr(0, cut1);
        if (!hosts_clitics(lexicon, stem)) stem = text::strip_acute(stem);
        if (hosts_clitics(lexicon, stem)) found.push_back({stem, {a}});
      }
    }
    if (!found.empty()) return found;
  }
  return found;
}

// ---------------------------------------------------------------------------
// Verb tag names: V, a class letter, then a form code.

inline std::optional<FeatureBundle> verb_bundle_from_name(const std::string& code) {
  if (code.size() < 3 || code[0] != 'V') return std::nullopt;
  FeatureBundle b;
  b.category = Category::kVerb;
  switch (code[1]) {
    case 'E': b.verb_class = VerbClass::kEstar; break;
    case 'H': b.verb_class = VerbClass::kHaber; break;
    case 'S': b.verb_class = VerbClass::kSer; break;
    case 'L': b.verb_class = VerbClass::kLexical; break;
    case 'M': b.verb_class = VerbClass::kModal; break;
    default: return std::nullopt;
  }
  const std::string form = code.substr(2);
  auto gender = [](char c) { return c == 'M' ? Gender::kMasculine : Gender::kFeminine; };
  auto number = [](char c) { return c == 'S' ? Number::kSingular : Number::kPlural; };
  auto person = [](char c) {
    return c == '1' ? Person::kFirst : c == '2' ? Person::kSecond : Person::kThird;
  };
  if (form == "GER") { b.mood = Mood::kGerund; return b; }
  if (form == "INF") { b.mood = Mood::kInfinitive; return b; }
  if (form == "PX") { b.mood = Mood::kPastParticiple; return b; }
  if (form.size() == 4 && (form.starts_with("PX") || form.starts_with("PP"))) {
    b.mood = form[1] == 'X' ? Mood::kPastParticiple : Mood::kPresentParticiple;
    b.gender = gender(form[2]);
    b.number = number(form[3]);
    return b;
  }
  if (form.size() == 4 && form.starts_with("PM")) {
    b.mood = Mood::kImperative;
    b.person = person(form[2]);
    b.number = number(form[3]);
    return b;
  }
  if (form.size() != 4) return std::nullopt;
  switch (form[0]) {
    case 'P': b.tense = Tense::kPresent; break;
    case 'I': b.tense = Tense::kImperfect; break;
    case 'F': b.tense = Tense::kFuture; break;
    case 'C': b.tense = Tense::kConditional; break;
    case 'X': b.tense = Tense::kPreterite; break;
    default: return std::nullopt;
  }
  b.mood = form[1] == 'I' ? Mood::kIndicative : Mood::kSubjunctive;
  b.person = person(form[2]);
  if (form[3] == 'E') {
    b.number = Number::kSingular;
    b.existential = true;
  } else {
    b.number = number(form[3]);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Random text for the tokenizer.

inline std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> pieces{
      "a", "e", "n", "Z", "á", "é", "ñ", "Ñ", "ü", "¿", "¡", "?", "!", ".", ",", ";", ":",
      "...", "…", "-", "0", "7", "40", " ", " ", "  ", "\n", "\t", "\r\n", "\xC2\xA0",
      "Sr.", "cm.", "\xFF", "\xC3", "\x80", "(", ")", "\"", "«", "»", "=", "+", "x", "^",
      "/", "al", "del", "€", "日本", "😀", "'", "1850-1990",
  };
  std::string out;
  const std::size_t length = rng() % 40;
  for (std::size_t i = 0; i < length; ++i) out += pieces[rng() % pieces.size()];
  return out;
}

// Rebuilds the input from token spans and the whitespace between them;
// returns nullopt when spans overlap, run backwards, or a gap holds
// anything but whitespace.
inline std::optional<std::string> reconstruct(std::string_view input,
                                              const std::vector<Token>& tokens) {
  std::string out;
  std::size_t cursor = 0;
  auto gap_ok = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to;) {
      const auto cp = text::decode(input, i);
      if (!cp.valid || !text::is_space(cp.value)) return false;
      i += cp.length;
    }
    return true;
  };
  for (const auto& token : tokens) {
    if (token.begin < cursor || token.end < token.begin || token.end > input.size()) {
      return std::nullopt;
    }
    if (!gap_ok(cursor, token.begin)) return std::nullopt;
    if (input.substr(token.begin, token.end - token.begin) != token.surface) return std::nullopt;
    out += input.substr(cursor, token.begin - cursor);
    out += token.surface;
    cursor = token.end;
  }
  if (!gap_ok(cursor, input.size())) return std::nullopt;
  out += input.substr(cursor);
  return out;
}

}  // namespace oracle
