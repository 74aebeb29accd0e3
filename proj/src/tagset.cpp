#include "spantag/tagset.hpp"

#include <array>
#include <ostream>

#include "spantag/errors.hpp"

namespace spantag {

namespace {

using namespace std::string_view_literals;

constexpr std::array kCategoryNames{
    "punctuation"sv,  "adjective"sv,    "adverb"sv,       "alphabet-letter"sv,
    "article"sv,      "cardinal"sv,     "conjunction"sv,  "code"sv,
    "demonstrative"sv, "formula"sv,     "interjection"sv, "interrogative"sv,
    "negation"sv,     "noun"sv,         "ordinal"sv,      "portmanteau"sv,
    "foreign-word"sv, "unclassified"sv, "pronoun"sv,      "preposition"sv,
    "quantifier"sv,   "relative"sv,     "se-particle"sv,  "title-noun"sv,
    "unit-of-measure"sv, "verb"sv,
};

constexpr std::array kSubcategoryNames{
    "none"sv,
    "question-inverted"sv,
    "exclamation-inverted"sv,
    "exclamation"sv,
    "quotes"sv,
    "left-bracket"sv,
    "right-bracket"sv,
    "comma"sv,
    "dash"sv,
    "full-stop"sv,
    "ellipsis"sv,
    "colon"sv,
    "semicolon"sv,
    "question"sv,
    "degree"sv,
    "interrogative"sv,
    "locative"sv,
    "locative-interrogative"sv,
    "locative-relative"sv,
    "general"sv,
    "modal-relative"sv,
    "temporal"sv,
    "temporal-interrogative"sv,
    "temporal-relative"sv,
    "definite"sv,
    "indefinite-cardinal"sv,
    "indefinite-quantifier"sv,
    "hyphenated"sv,
    "coordinating"sv,
    "adversative"sv,
    "negative-coordinating"sv,
    "que"sv,
    "subordinating-finite"sv,
    "subordinating-infinite"sv,
    "subordinating-underspecified"sv,
    "common"sv,
    "measure"sv,
    "numeral"sv,
    "organization"sv,
    "anthroponym"sv,
    "toponym-or-org"sv,
    "toponym"sv,
    "a-el"sv,
    "de-el"sv,
    "personal-clitic"sv,
    "personal"sv,
    "possessive"sv,
    "distributive"sv,
    "multiplicative"sv,
};

constexpr std::array kGenderNames{"none"sv, "masculine"sv, "feminine"sv, "neuter"sv,
                                  "underspecified"sv};
constexpr std::array kNumberNames{"none"sv, "singular"sv, "plural"sv, "underspecified"sv};
constexpr std::array kPersonNames{"none"sv, "first"sv, "second"sv, "third"sv,
                                  "underspecified"sv};
constexpr std::array kDegreeNames{"none"sv, "positive"sv, "comparative"sv, "superlative"sv,
                                  "underspecified"sv};
constexpr std::array kVerbClassNames{"none"sv, "estar"sv,   "haber"sv,
                                     "ser"sv,  "lexical"sv, "modal"sv};
constexpr std::array kTenseNames{"none"sv,        "present"sv,     "imperfect"sv,
                                 "future"sv,      "conditional"sv, "preterite"sv};
constexpr std::array kMoodNames{"none"sv,       "indicative"sv,     "subjunctive"sv,
                                "imperative"sv, "gerund"sv,         "infinitive"sv,
                                "past-participle"sv, "present-participle"sv};
constexpr std::array kDeixisNames{"none"sv, "proximal"sv, "distal"sv, "remote"sv,
                                  "underspecified"sv};
constexpr std::array kDirectionalityNames{"none"sv, "static"sv, "dynamic"sv,
                                          "underspecified"sv};
constexpr std::array kPolarityNames{"none"sv, "negative"sv, "neutral"sv};
constexpr std::array kPronominalFunctionNames{"none"sv, "pronominal"sv,
                                              "capable-of-pronominal"sv,
                                              "non-pronominal"sv, "underspecified"sv};
constexpr std::array kAnimacyNames{"none"sv, "animate"sv, "inanimate"sv,
                                   "underspecified"sv};
constexpr std::array kCaseRoleNames{"none"sv,
                                    "nominative"sv,
                                    "oblique"sv,
                                    "nominative-or-oblique"sv,
                                    "direct-object"sv,
                                    "direct-or-indirect-object"sv};
constexpr std::array kPolitenessNames{"none"sv, "polite"sv, "neutral"sv};
constexpr std::array kPossessivePositionNames{"none"sv, "prenominal"sv, "full-form"sv};

template <typename E, std::size_t N>
std::optional<E> lookup_name(const std::array<std::string_view, N>& names,
                             std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <auto Member, const auto& kNames>
std::optional<std::string_view> get_enum(const FeatureBundle& bundle) {
  const auto value = static_cast<std::size_t>(bundle.*Member);
  if (value == 0) return std::nullopt;
  return kNames[value];
}

template <auto Member, const auto& kNames>
bool set_enum(FeatureBundle& bundle, std::string_view text) {
  using E = std::remove_cvref_t<decltype(bundle.*Member)>;
  auto value = lookup_name<E>(kNames, text);
  if (!value) return false;
  bundle.*Member = *value;
  return true;
}

struct AttributeAccess {
  std::string_view name;
  std::optional<std::string_view> (*get)(const FeatureBundle&);
  bool (*set)(FeatureBundle&, std::string_view);
};

std::optional<std::string_view> get_category(const FeatureBundle& bundle) {
  return kCategoryNames[static_cast<std::size_t>(bundle.category)];
}

bool set_category(FeatureBundle& bundle, std::string_view text) {
  auto value = lookup_name<Category>(kCategoryNames, text);
  if (!value) return false;
  bundle.category = *value;
  return true;
}

std::optional<std::string_view> get_existential(const FeatureBundle& bundle) {
  if (!bundle.existential) return std::nullopt;
  return "true"sv;
}

bool set_existential(FeatureBundle& bundle, std::string_view text) {
  if (text == "true") {
    bundle.existential = true;
  } else if (text == "false" || text == "none") {
    bundle.existential = false;
  } else {
    return false;
  }
  return true;
}

// Canonical order: category first, then alphabetical by name.
constexpr std::array<AttributeAccess, 18> kAttributes{{
    {"category", &get_category, &set_category},
    {"animacy", &get_enum<&FeatureBundle::animacy, kAnimacyNames>,
     &set_enum<&FeatureBundle::animacy, kAnimacyNames>},
    {"case-role", &get_enum<&FeatureBundle::case_role, kCaseRoleNames>,
     &set_enum<&FeatureBundle::case_role, kCaseRoleNames>},
    {"degree", &get_enum<&FeatureBundle::degree, kDegreeNames>,
     &set_enum<&FeatureBundle::degree, kDegreeNames>},
    {"deixis", &get_enum<&FeatureBundle::deixis, kDeixisNames>,
     &set_enum<&FeatureBundle::deixis, kDeixisNames>},
    {"directionality", &get_enum<&FeatureBundle::directionality, kDirectionalityNames>,
     &set_enum<&FeatureBundle::directionality, kDirectionalityNames>},
    {"existential", &get_existential, &set_existential},
    {"gender", &get_enum<&FeatureBundle::gender, kGenderNames>,
     &set_enum<&FeatureBundle::gender, kGenderNames>},
    {"mood", &get_enum<&FeatureBundle::mood, kMoodNames>,
     &set_enum<&FeatureBundle::mood, kMoodNames>},
    {"number", &get_enum<&FeatureBundle::number, kNumberNames>,
     &set_enum<&FeatureBundle::number, kNumberNames>},
    {"person", &get_enum<&FeatureBundle::person, kPersonNames>,
     &set_enum<&FeatureBundle::person, kPersonNames>},
    {"polarity", &get_enum<&FeatureBundle::polarity, kPolarityNames>,
     &set_enum<&FeatureBundle::polarity, kPolarityNames>},
    {"politeness", &get_enum<&FeatureBundle::politeness, kPolitenessNames>,
     &set_enum<&FeatureBundle::politeness, kPolitenessNames>},
    {"possessive-position",
     &get_enum<&FeatureBundle::possessive_position, kPossessivePositionNames>,
     &set_enum<&FeatureBundle::possessive_position, kPossessivePositionNames>},
    {"pronominal-function",
     &get_enum<&FeatureBundle::pronominal_function, kPronominalFunctionNames>,
     &set_enum<&FeatureBundle::pronominal_function, kPronominalFunctionNames>},
    {"subcategory", &get_enum<&FeatureBundle::subcategory, kSubcategoryNames>,
     &set_enum<&FeatureBundle::subcategory, kSubcategoryNames>},
    {"tense", &get_enum<&FeatureBundle::tense, kTenseNames>,
     &set_enum<&FeatureBundle::tense, kTenseNames>},
    {"verb-class", &get_enum<&FeatureBundle::verb_class, kVerbClassNames>,
     &set_enum<&FeatureBundle::verb_class, kVerbClassNames>},
}};

constexpr std::array kAttributeNames = [] {
  std::array<std::string_view, kAttributes.size()> names{};
  for (std::size_t i = 0; i < kAttributes.size(); ++i) names[i] = kAttributes[i].name;
  return names;
}();

const AttributeAccess* find_attribute(std::string_view name) {
  for (const auto& attribute : kAttributes) {
    if (attribute.name == name) return &attribute;
  }
  return nullptr;
}

std::vector<std::string> split_examples(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    auto pos = text.find(", ");
    out.emplace_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 2);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void check_bundle_invariants(std::string_view code, const FeatureBundle& f) {
  const bool verb = f.category == Category::kVerb;
  if (verb != (f.verb_class != VerbClass::kNone)) {
    throw RegistryError("tag " + std::string(code) + ": verb class inconsistent with category");
  }
  if (!verb && (f.tense != Tense::kNone || f.mood != Mood::kNone)) {
    throw RegistryError("tag " + std::string(code) + ": tense or mood on a non-verb");
  }
  if (f.existential &&
      (f.verb_class != VerbClass::kHaber || f.tense != Tense::kPresent ||
       f.mood != Mood::kIndicative || f.person != Person::kThird ||
       f.number != Number::kSingular)) {
    throw RegistryError("tag " + std::string(code) +
                        ": existential reading must be haber, present indicative, 3sg");
  }
}

}  // namespace

std::string_view to_string(Category v) { return kCategoryNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Subcategory v) { return kSubcategoryNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Gender v) { return kGenderNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Number v) { return kNumberNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Person v) { return kPersonNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Degree v) { return kDegreeNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(VerbClass v) { return kVerbClassNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Tense v) { return kTenseNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Mood v) { return kMoodNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Deixis v) { return kDeixisNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Directionality v) {
  return kDirectionalityNames.at(static_cast<std::size_t>(v));
}
std::string_view to_string(Polarity v) { return kPolarityNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(PronominalFunction v) {
  return kPronominalFunctionNames.at(static_cast<std::size_t>(v));
}
std::string_view to_string(Animacy v) { return kAnimacyNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(CaseRole v) { return kCaseRoleNames.at(static_cast<std::size_t>(v)); }
std::string_view to_string(Politeness v) {
  return kPolitenessNames.at(static_cast<std::size_t>(v));
}
std::string_view to_string(PossessivePosition v) {
  return kPossessivePositionNames.at(static_cast<std::size_t>(v));
}

std::span<const std::string_view> feature_attribute_names() { return kAttributeNames; }

std::optional<std::string_view> attribute_value(const FeatureBundle& bundle,
                                                std::string_view attribute) {
  const auto* access = find_attribute(attribute);
  if (!access) throw Error("unknown feature attribute '" + std::string(attribute) + "'");
  return access->get(bundle);
}

bool set_attribute(FeatureBundle& bundle, std::string_view attribute,
                   std::string_view value) {
  const auto* access = find_attribute(attribute);
  return access != nullptr && access->set(bundle, value);
}

// ---------------------------------------------------------------------------
// Tag

const std::string& Tag::code() const { return load_registry().entry(*this).code; }

const FeatureBundle& Tag::features() const {
  return load_registry().entry(*this).features;
}

std::ostream& operator<<(std::ostream& os, Tag tag) { return os << tag.code(); }

// ---------------------------------------------------------------------------
// Registry

Registry Registry::build(std::span<const RawRegistryRow> rows) {
  if (rows.size() > 0xFFFF) throw RegistryError("registry table too large");
  Registry registry;
  registry.entries_.reserve(rows.size());
  for (const auto& row : rows) {
    const std::string code(row.code);
    if (code.empty() || code.size() > 6 || code.find_first_of(" \t\n") != std::string::npos) {
      throw RegistryError("malformed tag code '" + code + "'");
    }
    FeatureBundle features;
    try {
      features = parse_features(row.features);
    } catch (const Error& e) {
      throw RegistryError("tag " + code + ": " + e.what());
    }
    check_bundle_invariants(code, features);

    const Tag tag(static_cast<std::uint16_t>(registry.entries_.size()));
    if (!registry.by_code_.emplace(code, tag).second) {
      throw RegistryError("duplicate tag code '" + code + "'");
    }
    auto [it, inserted] = registry.by_bundle_.emplace(features, tag);
    if (!inserted) {
      throw RegistryError("tags " + registry.entries_[it->second.index()].code + " and " +
                          code + " share a feature bundle");
    }
    registry.entries_.push_back(RegistryEntry{tag, code, features,
                                              std::string(row.description),
                                              split_examples(row.examples),
                                              std::string(row.notes)});
  }
  return registry;
}

std::optional<Tag> Registry::find(std::string_view code) const {
  auto it = by_code_.find(std::string(code));
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

std::optional<Tag> Registry::find(const FeatureBundle& bundle) const {
  auto it = by_bundle_.find(bundle);
  if (it == by_bundle_.end()) return std::nullopt;
  return it->second;
}

const Registry& load_registry() {
  static const Registry registry = [] {
    auto built = Registry::build(embedded_registry_rows());
    if (built.size() != kRegistrySize) {
      throw RegistryError("embedded registry has " + std::to_string(built.size()) +
                          " entries, expected " + std::to_string(kRegistrySize));
    }
    return built;
  }();
  return registry;
}

std::optional<Tag> find_tag(std::string_view code) { return load_registry().find(code); }

Tag parse_tag(std::string_view code) {
  if (auto tag = find_tag(code)) return *tag;
  throw UnknownTagError(std::string(code));
}

const FeatureBundle& decompose(Tag tag) { return load_registry().entry(tag).features; }

Tag compose(const FeatureBundle& bundle) {
  if (auto tag = load_registry().find(bundle)) return *tag;
  throw NoSuchTagError("no tag carries features " + format_features(bundle));
}

std::string format_features(const FeatureBundle& bundle) {
  std::string out;
  for (const auto& attribute : kAttributes) {
    auto value = attribute.get(bundle);
    if (!value) continue;
    if (!out.empty()) out += '|';
    out += attribute.name;
    out += '=';
    out += *value;
  }
  return out;
}

std::string format_features(Tag tag) { return format_features(decompose(tag)); }

FeatureBundle parse_features(std::string_view text) {
  FeatureBundle bundle;
  bool have_category = false;
  while (!text.empty()) {
    auto bar = text.find('|');
    std::string_view item = text.substr(0, bar);
    text = bar == std::string_view::npos ? std::string_view{} : text.substr(bar + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error("malformed feature '" + std::string(item) + "'");
    }
    auto name = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    if (!set_attribute(bundle, name, value)) {
      throw Error("bad feature '" + std::string(item) + "'");
    }
    if (name == "category") have_category = true;
  }
  if (!have_category) throw Error("feature string lacks a category");
  return bundle;
}

std::vector<Tag> list_by(const std::function<bool(const FeatureBundle&)>& predicate) {
  std::vector<Tag> out;
  for (const auto& entry : load_registry().entries()) {
    if (predicate(entry.features)) out.push_back(entry.tag);
  }
  return out;
}

void write_registry_tsv(std::ostream& os, std::span<const Tag> tags) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 17> kColumns{{
      {"CATEGORY", "category"},
      {"SUBCATEGORY", "subcategory"},
      {"GENDER", "gender"},
      {"NUMBER", "number"},
      {"PERSON", "person"},
      {"DEGREE", "degree"},
      {"VERBCLASS", "verb-class"},
      {"TENSE", "tense"},
      {"MOOD", "mood"},
      {"DEIXIS", "deixis"},
      {"DIRECTIONALITY", "directionality"},
      {"POLARITY", "polarity"},
      {"PRONFN", "pronominal-function"},
      {"ANIMACY", "animacy"},
      {"CASE", "case-role"},
      {"POLITENESS", "politeness"},
      {"EXISTENTIAL", "existential"},
  }};
  os << "TAG";
  for (const auto& column : kColumns) os << '\t' << column.first;
  os << "\tDESCRIPTION\tEXAMPLES\n";
  const auto& registry = load_registry();
  for (Tag tag : tags) {
    const auto& entry = registry.entry(tag);
    os << entry.code;
    for (const auto& column : kColumns) {
      os << '\t' << attribute_value(entry.features, column.second).value_or("-");
    }
    os << '\t' << entry.description << '\t'
       << (entry.examples.empty() ? std::string("-") : join(entry.examples, ", ")) << '\n';
  }
}

void write_registry_tsv(std::ostream& os) {
  std::vector<Tag> all;
  for (const auto& entry : load_registry().entries()) all.push_back(entry.tag);
  write_registry_tsv(os, all);
}

}  // namespace spantag
