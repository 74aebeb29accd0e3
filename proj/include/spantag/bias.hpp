#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantag/tagset.hpp"

namespace spantag {

// Tag code pattern: literal uppercase letters and digits, '?' for any one
// character, and an optional final '*' for any suffix.
class TagPattern {
 public:
  // Throws BadPatternError (line `line`) for characters outside the pattern
  // alphabet or a '*' that is not last.
  static TagPattern parse(std::string_view text, std::size_t line = 0);

  bool matches(std::string_view code) const;
  bool matches(Tag tag) const { return matches(tag.code()); }
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
  std::string body_;
  bool open_ = false;
};

enum class RuleKind { kForbid, kRequire };

struct BiasRule {
  RuleKind kind = RuleKind::kForbid;
  TagPattern left;
  TagPattern right;
  std::size_t id = 0;  // source line

  // True when this rule alone rejects the pair (left, right).
  bool rejects(Tag left_tag, Tag right_tag) const;
};

struct Violation {
  std::size_t index = 0;    // position of the left tag of the pair
  std::size_t rule_id = 0;
  std::size_t sentence = 0;

  bool operator==(const Violation&) const = default;
};

// Hard constraints on adjacent tag pairs. The full registry pair table is
// compiled on construction.
class RuleSet {
 public:
  RuleSet();
  explicit RuleSet(std::vector<BiasRule> rules);

  // One rule per line: "FORBID <pat> <pat>" or "REQUIRE <pat> <pat>";
  // '#' starts a comment. Throws ParseError or BadPatternError.
  static RuleSet parse(std::string_view text);
  static RuleSet load(const std::string& path);

  bool allowed(Tag left, Tag right) const {
    return allowed_[static_cast<std::size_t>(left.index()) * size_ + right.index()] != 0;
  }
  // First rule (in file order) that rejects the pair, or nullptr.
  const BiasRule* first_violated(Tag left, Tag right) const;

  const std::vector<BiasRule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }

 private:
  std::vector<BiasRule> rules_;
  std::size_t size_ = 0;
  std::vector<unsigned char> allowed_;
};

// One violation per adjacent pair the rule set rejects.
std::vector<Violation> validate_sequence(const RuleSet& rules, std::span<const Tag> tags);
// Adjacency does not cross sentence boundaries.
std::vector<Violation> validate_sentences(const RuleSet& rules,
                                          std::span<const std::vector<Tag>> sentences);

}  // namespace spantag
