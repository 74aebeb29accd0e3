#pragma once

#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantag/tagset.hpp"

namespace spantag {

// Non-empty set of tags a word form may bear, kept in registry order.
class AmbiguityClass {
 public:
  // Sorts and deduplicates. Throws Error when `tags` is empty.
  explicit AmbiguityClass(std::vector<Tag> tags);
  AmbiguityClass(std::initializer_list<Tag> tags);
  // Throws UnknownTagError.
  static AmbiguityClass of(std::initializer_list<std::string_view> codes);

  std::span<const Tag> tags() const noexcept { return tags_; }
  std::size_t size() const noexcept { return tags_.size(); }
  bool contains(Tag tag) const;
  bool contains(const AmbiguityClass& other) const;

  AmbiguityClass united(const AmbiguityClass& other) const;
  // Space-separated codes in registry order.
  std::string signature() const;

  auto operator<=>(const AmbiguityClass&) const = default;

 private:
  std::vector<Tag> tags_;
};

class Lexicon {
 public:
  Lexicon() = default;

  // The built-in closed-class lexicon alone.
  static Lexicon seed();
  // Reads "wordform<TAB>TAG1,TAG2,..." lines. Throws ParseError or
  // UnknownTagError carrying the line number, IoError when unreadable.
  static Lexicon load(const std::filesystem::path& path, bool with_seed = true);
  static Lexicon parse(std::istream& in, std::string source, bool with_seed = true);

  // Unions `tags` into the class of `form`.
  void add(std::string_view form, const AmbiguityClass& tags);

  // Exact match, then the lowercased form. nullptr when absent.
  const AmbiguityClass* lookup(std::string_view form) const;

  const std::map<std::string, AmbiguityClass>& entries() const noexcept { return entries_; }
  // Entries that came from files or add(), without the seed.
  const std::map<std::string, AmbiguityClass>& user_entries() const noexcept {
    return user_entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& source() const noexcept { return source_; }

  // Writes the user layer in canonical form: forms in byte order, tags in
  // registry order.
  void save(std::ostream& out) const;

 private:
  void merge(std::map<std::string, AmbiguityClass>& into, std::string_view form,
             const AmbiguityClass& tags);

  std::map<std::string, AmbiguityClass> entries_;
  std::map<std::string, AmbiguityClass> user_entries_;
  std::string source_;
};

// Suffix-driven open-class guess for a form missing from the lexicon. Never
// yields a closed-class tag. Throws EmptyInputError for "".
AmbiguityClass guess_unknown(std::string_view wordform);

struct AmbiguityGroup {
  AmbiguityClass tags;
  std::size_t count = 0;
  std::vector<std::string> examples;
};

// Groups word forms by identical tag set; largest groups first, ties by
// signature.
std::vector<AmbiguityGroup> ambiguity_report(const Lexicon& lexicon,
                                             std::size_t max_examples = 5);

}  // namespace spantag
