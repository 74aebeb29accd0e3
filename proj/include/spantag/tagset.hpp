#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spantag {

// Feature values. Every enum except Category starts with kNone, which means
// "attribute not applicable" and is omitted from all textual renderings.

enum class Category : std::uint8_t {
  kPunctuation,
  kAdjective,
  kAdverb,
  kAlphabetLetter,
  kArticle,
  kCardinal,
  kConjunction,
  kCode,
  kDemonstrative,
  kFormula,
  kInterjection,
  kInterrogative,
  kNegation,
  kNoun,
  kOrdinal,
  kPortmanteau,
  kForeignWord,
  kUnclassified,
  kPronoun,
  kPreposition,
  kQuantifier,
  kRelative,
  kSeParticle,
  kTitleNoun,
  kUnitOfMeasure,
  kVerb,
};

enum class Subcategory : std::uint8_t {
  kNone,
  // punctuation marks
  kQuestionInverted,
  kExclamationInverted,
  kExclamation,
  kQuotes,
  kLeftBracket,
  kRightBracket,
  kComma,
  kDash,
  kFullStop,
  kEllipsis,
  kColon,
  kSemicolon,
  kQuestion,
  // adverbs
  kDegree,
  kInterrogative,
  kLocative,
  kLocativeInterrogative,
  kLocativeRelative,
  kGeneral,
  kModalRelative,
  kTemporal,
  kTemporalInterrogative,
  kTemporalRelative,
  // articles
  kDefinite,
  kIndefiniteCardinal,
  kIndefiniteQuantifier,
  // cardinals
  kHyphenated,
  // conjunctions
  kCoordinating,
  kAdversative,
  kNegativeCoordinating,
  kQue,
  kSubordinatingFinite,
  kSubordinatingInfinite,
  kSubordinatingUnderspecified,
  // nouns (kLocative and kTemporal are shared with adverbs)
  kCommon,
  kMeasure,
  kNumeral,
  kOrganization,
  kAnthroponym,
  kToponymOrOrg,
  kToponym,
  // portmanteaux
  kAEl,
  kDeEl,
  // pronouns and relatives
  kPersonalClitic,
  kPersonal,
  kPossessive,
  // quantifiers
  kDistributive,
  kMultiplicative,
};

enum class Gender : std::uint8_t { kNone, kMasculine, kFeminine, kNeuter, kUnderspecified };
enum class Number : std::uint8_t { kNone, kSingular, kPlural, kUnderspecified };
enum class Person : std::uint8_t { kNone, kFirst, kSecond, kThird, kUnderspecified };
enum class Degree : std::uint8_t { kNone, kPositive, kComparative, kSuperlative, kUnderspecified };
enum class VerbClass : std::uint8_t { kNone, kEstar, kHaber, kSer, kLexical, kModal };
enum class Tense : std::uint8_t { kNone, kPresent, kImperfect, kFuture, kConditional, kPreterite };
enum class Mood : std::uint8_t {
  kNone,
  kIndicative,
  kSubjunctive,
  kImperative,
  kGerund,
  kInfinitive,
  kPastParticiple,
  kPresentParticiple,
};
enum class Deixis : std::uint8_t { kNone, kProximal, kDistal, kRemote, kUnderspecified };
enum class Directionality : std::uint8_t { kNone, kStatic, kDynamic, kUnderspecified };
enum class Polarity : std::uint8_t { kNone, kNegative, kNeutral };
enum class PronominalFunction : std::uint8_t {
  kNone,
  kPronominal,
  kCapableOfPronominal,
  kNonPronominal,
  kUnderspecified,
};
enum class Animacy : std::uint8_t { kNone, kAnimate, kInanimate, kUnderspecified };
enum class CaseRole : std::uint8_t {
  kNone,
  kNominative,
  kOblique,
  kNominativeOrOblique,
  kDirectObject,
  kDirectOrIndirectObject,
};
enum class Politeness : std::uint8_t { kNone, kPolite, kNeutral };
enum class PossessivePosition : std::uint8_t { kNone, kPrenominal, kFullForm };

// Attribute-value decomposition of one registry tag.
struct FeatureBundle {
  Category category = Category::kUnclassified;
  Subcategory subcategory = Subcategory::kNone;
  Gender gender = Gender::kNone;
  Number number = Number::kNone;
  Person person = Person::kNone;
  Degree degree = Degree::kNone;
  VerbClass verb_class = VerbClass::kNone;
  Tense tense = Tense::kNone;
  Mood mood = Mood::kNone;
  Deixis deixis = Deixis::kNone;
  Directionality directionality = Directionality::kNone;
  Polarity polarity = Polarity::kNone;
  PronominalFunction pronominal_function = PronominalFunction::kNone;
  Animacy animacy = Animacy::kNone;
  CaseRole case_role = CaseRole::kNone;
  Politeness politeness = Politeness::kNone;
  bool existential = false;
  PossessivePosition possessive_position = PossessivePosition::kNone;

  auto operator<=>(const FeatureBundle&) const = default;
};

// Attribute names in canonical rendering order: category first, then
// alphabetical.
std::span<const std::string_view> feature_attribute_names();

// Text value of one attribute, or nullopt when the attribute is absent
// (value kNone / existential false). Throws Error on an unknown name.
std::optional<std::string_view> attribute_value(const FeatureBundle& bundle,
                                                std::string_view attribute);

// Sets one attribute from its text value; returns false when the name or the
// value is not recognised.
bool set_attribute(FeatureBundle& bundle, std::string_view attribute,
                   std::string_view value);

std::string_view to_string(Category value);
std::string_view to_string(Subcategory value);
std::string_view to_string(Gender value);
std::string_view to_string(Number value);
std::string_view to_string(Person value);
std::string_view to_string(Degree value);
std::string_view to_string(VerbClass value);
std::string_view to_string(Tense value);
std::string_view to_string(Mood value);
std::string_view to_string(Deixis value);
std::string_view to_string(Directionality value);
std::string_view to_string(Polarity value);
std::string_view to_string(PronominalFunction value);
std::string_view to_string(Animacy value);
std::string_view to_string(CaseRole value);
std::string_view to_string(Politeness value);
std::string_view to_string(PossessivePosition value);

class Registry;

// A validated tag. Holds the tag's position in the registry, so ordering
// between tags is registry order.
class Tag {
 public:
  constexpr Tag() = default;
  constexpr explicit Tag(std::uint16_t index) : index_(index) {}

  constexpr std::uint16_t index() const noexcept { return index_; }
  const std::string& code() const;
  const FeatureBundle& features() const;

  constexpr auto operator<=>(const Tag&) const = default;

 private:
  std::uint16_t index_ = 0;
};

std::ostream& operator<<(std::ostream& os, Tag tag);

struct RegistryEntry {
  Tag tag;
  std::string code;
  FeatureBundle features;
  std::string description;
  std::vector<std::string> examples;
  std::string notes;
};

// One row of the embedded table: features use the format_features syntax,
// examples are ", " separated.
struct RawRegistryRow {
  std::string_view code;
  std::string_view features;
  std::string_view description;
  std::string_view examples;
  std::string_view notes;
};

class Registry {
 public:
  // Validates and indexes a table. Throws RegistryError on duplicate codes,
  // malformed feature strings, duplicate bundles or broken verb invariants.
  static Registry build(std::span<const RawRegistryRow> rows);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }
  const RegistryEntry& entry(Tag tag) const { return entries_.at(tag.index()); }

  std::optional<Tag> find(std::string_view code) const;
  std::optional<Tag> find(const FeatureBundle& bundle) const;

 private:
  std::vector<RegistryEntry> entries_;
  std::unordered_map<std::string, Tag> by_code_;
  std::map<FeatureBundle, Tag> by_bundle_;
};

// Number of items in the transcribed tag list.
inline constexpr std::size_t kRegistrySize = 492;

std::span<const RawRegistryRow> embedded_registry_rows();

// The process-wide registry, built from the embedded table on first use.
const Registry& load_registry();

std::optional<Tag> find_tag(std::string_view code);
// Throws UnknownTagError.
Tag parse_tag(std::string_view code);

const FeatureBundle& decompose(Tag tag);
// Throws NoSuchTagError when no registry entry carries exactly `bundle`.
Tag compose(const FeatureBundle& bundle);

std::string format_features(const FeatureBundle& bundle);
std::string format_features(Tag tag);
// Inverse of format_features. Throws Error on unknown attributes or values.
FeatureBundle parse_features(std::string_view text);

std::vector<Tag> list_by(const std::function<bool(const FeatureBundle&)>& predicate);

// Registry dump with the fixed column layout; absent values are "-".
void write_registry_tsv(std::ostream& os, std::span<const Tag> tags);
void write_registry_tsv(std::ostream& os);

}  // namespace spantag

template <>
struct std::hash<spantag::Tag> {
  std::size_t operator()(spantag::Tag tag) const noexcept { return tag.index(); }
};
