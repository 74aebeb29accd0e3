#include "spantag/bias.hpp"

#include <fstream>
#include <sstream>

#include "spantag/errors.hpp"

namespace spantag {

TagPattern TagPattern::parse(std::string_view text, std::size_t line) {
  if (text.empty()) throw BadPatternError(line, "empty tag pattern");
  TagPattern pattern;
  pattern.text_ = std::string(text);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '*') {
      if (i + 1 != text.size()) {
        throw BadPatternError(line, "'*' must be the last character of '" +
                                        std::string(text) + "'");
      }
      pattern.open_ = true;
      continue;
    }
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '?';
    if (!ok) {
      throw BadPatternError(line, "bad character in tag pattern '" + std::string(text) + "'");
    }
    pattern.body_ += c;
  }
  return pattern;
}

bool TagPattern::matches(std::string_view code) const {
  if (open_ ? code.size() < body_.size() : code.size() != body_.size()) return false;
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (body_[i] != '?' && body_[i] != code[i]) return false;
  }
  return true;
}

bool BiasRule::rejects(Tag left_tag, Tag right_tag) const {
  if (!left.matches(left_tag)) return false;
  const bool right_match = right.matches(right_tag);
  return kind == RuleKind::kForbid ? right_match : !right_match;
}

RuleSet::RuleSet() : RuleSet(std::vector<BiasRule>{}) {}

RuleSet::RuleSet(std::vector<BiasRule> rules)
    : rules_(std::move(rules)), size_(load_registry().size()), allowed_(size_ * size_, 1) {
  const auto& entries = load_registry().entries();
  for (const auto& rule : rules_) {
    for (const auto& left : entries) {
      if (!rule.left.matches(left.code)) continue;
      for (const auto& right : entries) {
        if (rule.rejects(left.tag, right.tag)) {
          allowed_[static_cast<std::size_t>(left.tag.index()) * size_ + right.tag.index()] = 0;
        }
      }
    }
  }
}

RuleSet RuleSet::parse(std::string_view text) {
  std::vector<BiasRule> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string directive, left, right, extra;
    if (!(fields >> directive)) continue;
    if (!(fields >> left >> right) || (fields >> extra)) {
      throw ParseError(number, "expected '<FORBID|REQUIRE> <pattern> <pattern>'");
    }
    BiasRule rule;
    if (directive == "FORBID") {
      rule.kind = RuleKind::kForbid;
    } else if (directive == "REQUIRE") {
      rule.kind = RuleKind::kRequire;
    } else {
      throw ParseError(number, "unknown directive '" + directive + "'");
    }
    rule.left = TagPattern::parse(left, number);
    rule.right = TagPattern::parse(right, number);
    rule.id = number;
    rules.push_back(std::move(rule));
  }
  return RuleSet(std::move(rules));
}

RuleSet RuleSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const BiasRule* RuleSet::first_violated(Tag left, Tag right) const {
  for (const auto& rule : rules_) {
    if (rule.rejects(left, right)) return &rule;
  }
  return nullptr;
}

std::vector<Violation> validate_sequence(const RuleSet& rules, std::span<const Tag> tags) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i + 1 < tags.size(); ++i) {
    if (rules.allowed(tags[i], tags[i + 1])) continue;
    out.push_back(Violation{i, rules.first_violated(tags[i], tags[i + 1])->id, 0});
  }
  return out;
}

std::vector<Violation> validate_sentences(const RuleSet& rules,
                                          std::span<const std::vector<Tag>> sentences) {
  std::vector<Violation> out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (auto violation : validate_sequence(rules, sentences[s])) {
      violation.sentence = s;
      out.push_back(violation);
    }
  }
  return out;
}

}  // namespace spantag
