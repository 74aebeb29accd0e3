#include "spantag/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <set>

#include "spantag/errors.hpp"
#include "spantag/text.hpp"

namespace spantag {

// ---------------------------------------------------------------------------
// AmbiguityClass

AmbiguityClass::AmbiguityClass(std::vector<Tag> tags) : tags_(std::move(tags)) {
  if (tags_.empty()) throw Error("ambiguity class must not be empty");
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

AmbiguityClass::AmbiguityClass(std::initializer_list<Tag> tags)
    : AmbiguityClass(std::vector<Tag>(tags)) {}

AmbiguityClass AmbiguityClass::of(std::initializer_list<std::string_view> codes) {
  std::vector<Tag> tags;
  for (auto code : codes) tags.push_back(parse_tag(code));
  return AmbiguityClass(std::move(tags));
}

bool AmbiguityClass::contains(Tag tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag);
}

bool AmbiguityClass::contains(const AmbiguityClass& other) const {
  return std::includes(tags_.begin(), tags_.end(), other.tags_.begin(), other.tags_.end());
}

AmbiguityClass AmbiguityClass::united(const AmbiguityClass& other) const {
  std::vector<Tag> merged;
  std::set_union(tags_.begin(), tags_.end(), other.tags_.begin(), other.tags_.end(),
                 std::back_inserter(merged));
  return AmbiguityClass(std::move(merged));
}

std::string AmbiguityClass::signature() const {
  std::string out;
  for (Tag tag : tags_) {
    if (!out.empty()) out += ' ';
    out += tag.code();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lexicon

namespace {

// Closed classes whose listed example forms make up the seed lexicon.
constexpr std::array kSeedCategories{
    Category::kArticle,      Category::kPronoun,       Category::kDemonstrative,
    Category::kQuantifier,   Category::kConjunction,   Category::kRelative,
    Category::kInterrogative, Category::kAdverb,       Category::kPortmanteau,
    Category::kSeParticle,   Category::kTitleNoun,     Category::kUnitOfMeasure,
    Category::kPreposition,  Category::kCardinal,      Category::kOrdinal,
    Category::kInterjection,
};

// Closed-class forms the tag list names without giving examples.
struct SupplementaryForm {
  std::string_view form;
  std::string_view code;
};

constexpr std::array<SupplementaryForm, 19> kSupplementary{{
    {"no", "NEG"},       {"a", "PREP"},      {"ante", "PREP"},    {"bajo", "PREP"},
    {"con", "PREP"},     {"contra", "PREP"}, {"de", "PREP"},      {"desde", "PREP"},
    {"durante", "PREP"}, {"en", "PREP"},     {"entre", "PREP"},   {"hacia", "PREP"},
    {"hasta", "PREP"},   {"mediante", "PREP"}, {"para", "PREP"},  {"por", "PREP"},
    {"según", "PREP"},   {"sobre", "PREP"},  {"tras", "PREP"},
}};

AmbiguityClass parse_tag_list(std::string_view field, std::size_t line) {
  if (field == ",") return AmbiguityClass{parse_tag(",")};
  std::vector<Tag> tags;
  while (true) {
    auto comma = field.find(',');
    auto code = field.substr(0, comma);
    if (code.empty()) throw ParseError(line, "empty tag in tag list");
    auto tag = find_tag(code);
    if (!tag) throw UnknownTagError(std::string(code), line);
    tags.push_back(*tag);
    if (comma == std::string_view::npos) break;
    field.remove_prefix(comma + 1);
  }
  return AmbiguityClass(std::move(tags));
}

}  // namespace

void Lexicon::merge(std::map<std::string, AmbiguityClass>& into, std::string_view form,
                    const AmbiguityClass& tags) {
  auto it = into.find(std::string(form));
  if (it == into.end()) {
    into.emplace(std::string(form), tags);
  } else {
    it->second = it->second.united(tags);
  }
}

void Lexicon::add(std::string_view form, const AmbiguityClass& tags) {
  if (form.empty()) throw EmptyInputError();
  merge(entries_, form, tags);
  merge(user_entries_, form, tags);
}

Lexicon Lexicon::seed() {
  Lexicon lexicon;
  lexicon.source_ = "seed";
  for (const auto& entry : load_registry().entries()) {
    const auto category = entry.features.category;
    if (std::find(kSeedCategories.begin(), kSeedCategories.end(), category) ==
        kSeedCategories.end()) {
      continue;
    }
    if (entry.features.subcategory == Subcategory::kHyphenated) continue;
    for (const auto& form : entry.examples) {
      lexicon.merge(lexicon.entries_, form, AmbiguityClass{entry.tag});
    }
  }
  for (const auto& extra : kSupplementary) {
    lexicon.merge(lexicon.entries_, extra.form, AmbiguityClass{parse_tag(extra.code)});
  }
  return lexicon;
}

Lexicon Lexicon::parse(std::istream& in, std::string source, bool with_seed) {
  Lexicon lexicon = with_seed ? seed() : Lexicon{};
  lexicon.source_ = std::move(source);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(number, "expected 'wordform<TAB>TAG1,TAG2,...'");
    }
    std::string_view view(line);
    auto form = view.substr(0, tab);
    if (form.empty()) throw ParseError(number, "empty word form");
    lexicon.add(form, parse_tag_list(view.substr(tab + 1), number));
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& path, bool with_seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse(in, path.string(), with_seed);
}

const AmbiguityClass* Lexicon::lookup(std::string_view form) const {
  auto it = entries_.find(std::string(form));
  if (it != entries_.end()) return &it->second;
  const auto lower = text::to_lower(form);
  if (lower != form) {
    it = entries_.find(lower);
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

void Lexicon::save(std::ostream& out) const {
  static const Tag kComma = parse_tag(",");
  for (const auto& [form, tags] : user_entries_) {
    std::string list;
    bool comma = false;
    for (Tag tag : tags.tags()) {
      if (tag == kComma) {
        comma = true;
        continue;
      }
      if (!list.empty()) list += ',';
      list += tag.code();
    }
    if (!list.empty()) out << form << '\t' << list << '\n';
    // The comma tag cannot share a list with other tags.
    if (comma) out << form << "\t,\n";
  }
}

// ---------------------------------------------------------------------------
// Unknown words

namespace {

struct SuffixRule {
  std::string_view suffix;
  std::array<std::string_view, 2> codes;
};

// Ordered; the first matching rule wins.
constexpr std::array<SuffixRule, 27> kSuffixRules{{
    {"mente", {"ADVN", ""}},
    {"ísimos", {"ADJSMP", ""}},
    {"ísimas", {"ADJSFP", ""}},
    {"ísimo", {"ADJSMS", ""}},
    {"ísima", {"ADJSFS", ""}},
    {"ciones", {"NCFP", ""}},
    {"siones", {"NCFP", ""}},
    {"ción", {"NCFS", ""}},
    {"sión", {"NCFS", ""}},
    {"ar", {"VLINF", ""}},
    {"er", {"VLINF", ""}},
    {"ir", {"VLINF", ""}},
    {"ando", {"VLGER", ""}},
    {"iendo", {"VLGER", ""}},
    {"ados", {"VLPXMP", ""}},
    {"adas", {"VLPXFP", ""}},
    {"idos", {"VLPXMP", ""}},
    {"idas", {"VLPXFP", ""}},
    {"ado", {"VLPXMS", ""}},
    {"ada", {"VLPXFS", ""}},
    {"ido", {"VLPXMS", ""}},
    {"ida", {"VLPXFS", ""}},
    {"os", {"NCMP", "ADJGMP"}},
    {"as", {"NCFP", "ADJGFP"}},
    {"o", {"NCMS", "ADJGMS"}},
    {"a", {"NCFS", "ADJGFS"}},
    {"es", {"NCMP", "NCFP"}},
}};

AmbiguityClass from_codes(const std::array<std::string_view, 2>& codes) {
  std::vector<Tag> tags;
  for (auto code : codes) {
    if (!code.empty()) tags.push_back(parse_tag(code));
  }
  return AmbiguityClass(std::move(tags));
}

}  // namespace

AmbiguityClass guess_unknown(std::string_view wordform) {
  if (wordform.empty()) throw EmptyInputError();
  const auto lower = text::to_lower(wordform);
  for (const auto& rule : kSuffixRules) {
    if (text::ends_with(lower, rule.suffix)) return from_codes(rule.codes);
  }
  // -ar/-er/-ir forms never reach this point, so VLINF drops out.
  return AmbiguityClass::of({"NCMS", "NCFS", "ADJGMS", "ADJGFS"});
}

std::vector<AmbiguityGroup> ambiguity_report(const Lexicon& lexicon,
                                             std::size_t max_examples) {
  std::map<AmbiguityClass, AmbiguityGroup> groups;
  for (const auto& [form, tags] : lexicon.entries()) {
    auto it = groups.try_emplace(tags, AmbiguityGroup{tags, 0, {}}).first;
    ++it->second.count;
    if (it->second.examples.size() < max_examples) it->second.examples.push_back(form);
  }
  std::vector<AmbiguityGroup> out;
  out.reserve(groups.size());
  for (auto& [tags, group] : groups) out.push_back(std::move(group));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.tags.signature() < b.tags.signature();
  });
  return out;
}

}  // namespace spantag
