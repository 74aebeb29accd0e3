// Acceptance suite: one PASS/FAIL line per criterion.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "spantag/bias.hpp"
#include "spantag/corpus_io.hpp"
#include "spantag/errors.hpp"
#include "spantag/lexicon.hpp"
#include "spantag/tagger.hpp"
#include "spantag/tagset.hpp"
#include "spantag/tokenizer.hpp"

using namespace spantag;

namespace {

constexpr double kScoreTolerance = 1e-9;
constexpr double kNormalizationTolerance = 1e-9;
constexpr std::size_t kOracleInstances = 200;
constexpr int kFuzzInputs = 1000;
constexpr std::size_t kMaxTokens = 6;
constexpr std::size_t kMaxCandidates = 4;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

HmmModel train_fixture() {
  return HmmModel::train(to_tagged(read_vertical(oracle::fixture("train.vrt"))));
}

Outcome registry_completeness() {
  Outcome o;
  o.require(load_registry().size() == kRegistrySize, "registry size");
  for (auto code : {"IQUEST", "VHPI3E", "PAL", "PDEL", "SE", "CQUE", "QUDF", "CARDGU", "NPAXX",
                    "VLPPFP", "PPXT2S", "UMFX"}) {
    o.require(find_tag(code).has_value(), std::string("missing ") + code);
  }
  std::size_t failures = 0;
  for (const auto& e : load_registry().entries()) {
    try {
      if (compose(decompose(e.tag)) != e.tag) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " round-trip failures");
  if (o.pass) o.detail = std::to_string(load_registry().size()) + " tags, 0 round-trip failures";
  return o;
}

Outcome codec_features() {
  Outcome o;
  FeatureBundle vlpi3s;
  vlpi3s.category = Category::kVerb;
  vlpi3s.verb_class = VerbClass::kLexical;
  vlpi3s.mood = Mood::kIndicative;
  vlpi3s.tense = Tense::kPresent;
  vlpi3s.person = Person::kThird;
  vlpi3s.number = Number::kSingular;
  o.require(decompose(parse_tag("VLPI3S")) == vlpi3s, "VLPI3S");

  FeatureBundle dmrpns;
  dmrpns.category = Category::kDemonstrative;
  dmrpns.pronominal_function = PronominalFunction::kPronominal;
  dmrpns.gender = Gender::kNeuter;
  dmrpns.number = Number::kSingular;
  dmrpns.deixis = Deixis::kRemote;
  o.require(decompose(parse_tag("DMRPNS")) == dmrpns, "DMRPNS");

  FeatureBundle prepn;
  prepn.category = Category::kPreposition;
  prepn.polarity = Polarity::kNegative;
  o.require(decompose(parse_tag("PREPN")) == prepn, "PREPN");

  FeatureBundle vhpi3e = vlpi3s;
  vhpi3e.verb_class = VerbClass::kHaber;
  vhpi3e.existential = true;
  o.require(decompose(parse_tag("VHPI3E")) == vhpi3e, "VHPI3E");
  if (o.pass) o.detail = "4 bundles match";
  return o;
}

Outcome tokenizer_suite() {
  Outcome o;
  auto surfaces = [](const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
  };
  using Words = std::vector<std::string>;
  o.require(surfaces(tokenize("¿Dónde está Juan?")) == Words{"¿", "Dónde", "está", "Juan", "?"},
            "inverted marks");
  o.require(surfaces(tokenize("Pues... no")) == Words{"Pues", "...", "no"}, "ellipsis");
  const auto range = tokenize("40-50 hectáreas");
  o.require(range.size() == 2 && range[0].surface == "40-50" && range[0].kind == TokenKind::kNumber,
            "hyphenated cardinal");
  o.require(surfaces(tokenize("El Sr. García")) == Words{"El", "Sr.", "García"}, "abbreviation");

  std::mt19937 rng(20240601);
  const Tokenizer tokenizer;
  int broken = 0;
  for (int i = 0; i < kFuzzInputs; ++i) {
    const auto input = oracle::random_text(rng);
    const auto rebuilt = oracle::reconstruct(input, tokenizer.tokenize(input));
    if (!rebuilt || *rebuilt != input) ++broken;
  }
  o.require(broken == 0, std::to_string(broken) + " fuzz inputs not reconstructed");

  Token al;
  al.surface = "al";
  const auto al_split = split_portmanteau(al);
  o.require(al_split && al_split->parts.size() == 1 &&
                al_split->parts[0].candidates == AmbiguityClass::of({"PAL", "CSUBI"}),
            "al candidates");
  Token del;
  del.surface = "del";
  const auto del_split = split_portmanteau(del);
  o.require(del_split && del_split->parts[0].candidates == AmbiguityClass::of({"PDEL"}),
            "del candidates");

  const auto lexicon = Lexicon::load(oracle::fixture("verbs.lex"));
  for (const std::string w : {"dímelo", "comerse", "mesa"}) {
    Token t;
    t.surface = w;
    const auto expected = oracle::enclitic_splits(lexicon, w);
    const auto actual = split_enclitics(t, lexicon);
    bool agree = actual.has_value() == !expected.empty();
    if (agree && actual) {
      std::vector<std::string> clitics;
      for (std::size_t j = 1; j < actual->parts.size(); ++j) clitics.push_back(actual->parts[j].surface);
      agree = std::any_of(expected.begin(), expected.end(), [&](const auto& e) {
        return e.stem == actual->parts[0].surface && e.clitics == clitics;
      });
    }
    o.require(agree, "enclitic split of " + w);
  }
  Token mesa;
  mesa.surface = "mesa";
  o.require(!split_enclitics(mesa, lexicon) && !split_enclitics(mesa, Lexicon::seed()), "mesa split");
  if (o.pass) o.detail = std::to_string(kFuzzInputs) + " fuzz inputs reconstructed";
  return o;
}

Outcome decoder_oracle() {
  Outcome o;
  std::mt19937 rng(4242);
  std::vector<Tag> pool;
  for (const auto& e : load_registry().entries()) {
    if (std::all_of(e.code.begin(), e.code.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); })) {
      pool.push_back(e.tag);
    }
  }
  const std::vector<std::string> vocabulary{"w0", "w1", "w2", "w3", "w4", "w5"};
  std::size_t instances = 0;
  std::size_t agreements = 0;
  double worst = 0.0;
  while (instances < kOracleInstances) {
    std::vector<Tag> subset;
    while (subset.size() < 6) {
      const Tag t = pool[rng() % pool.size()];
      if (std::find(subset.begin(), subset.end(), t) == subset.end()) subset.push_back(t);
    }
    std::istringstream model_text(oracle::random_model_text(subset, vocabulary, rng));
    const auto model = HmmModel::read(model_text);
    std::vector<Textword> words;
    const std::size_t length = 1 + rng() % kMaxTokens;
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<Tag> tags;
      const std::size_t width = 1 + rng() % kMaxCandidates;
      while (tags.size() < width) {
        const Tag t = subset[rng() % subset.size()];
        if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
      }
      Token tok;
      tok.surface = vocabulary[rng() % vocabulary.size()];
      words.push_back({tok, AmbiguityClass(tags)});
    }
    std::vector<oracle::PlainRule> plain;
    const std::size_t rule_count = rng() % 4;
    for (std::size_t r = 0; r < rule_count; ++r) {
      plain.push_back({rng() % 3 != 0, oracle::loosen(subset[rng() % subset.size()].code(), rng),
                       oracle::loosen(subset[rng() % subset.size()].code(), rng)});
    }
    const auto expected = oracle::brute_force_decode(model, plain, words);
    if (!expected.feasible) continue;
    ++instances;
    try {
      const auto actual = viterbi_decode(model, RuleSet::parse(oracle::rules_text(plain)), words);
      const double gap = std::abs(actual.score - expected.score);
      worst = std::max(worst, gap);
      if (actual.tags == expected.tags && gap <= kScoreTolerance) ++agreements;
    } catch (const NoValidPathError&) {
    }
  }
  o.require(agreements == instances,
            std::to_string(agreements) + "/" + std::to_string(instances) + " agree");
  std::ostringstream detail;
  detail << agreements << "/" << instances << " instances agree, max score gap " << worst;
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome constraint_soundness() {
  Outcome o;
  const auto model = train_fixture();
  const auto rules = RuleSet::parse("FORBID ARTDFS NCFS\nFORBID ARTDMS NCMS\nREQUIRE PPO3FS V*\n");
  const auto lexicon = Lexicon::load(oracle::fixture("verbs.lex"));
  std::size_t violations = 0;
  std::size_t sentences = 0;
  for (auto name : {"two_sentences.vrt", "train.vrt", "gold10.vrt"}) {
    const auto doc = read_vertical(oracle::fixture(name));
    std::string text;
    for (const auto& s : doc.sentences) {
      for (const auto& e : s.entries) text += e.form + " ";
    }
    for (const auto& out : tag_text(model, lexicon, rules, text)) {
      ++sentences;
      if (out.fallback) continue;
      std::vector<Tag> tags;
      for (const auto& t : out.tokens) tags.push_back(t.tag);
      violations += validate_sequence(rules, tags).size();
    }
  }
  o.require(violations == 0, std::to_string(violations) + " forbidden pairs");

  Token la;
  la.surface = "la";
  Token mesa;
  mesa.surface = "mesa";
  const std::vector<Textword> pair{{la, AmbiguityClass::of({"ARTDFS", "PPO3FS"})},
                                   {mesa, AmbiguityClass::of({"NCFS"})}};
  bool raised = false;
  try {
    viterbi_decode(model, RuleSet::parse("FORBID * *\n"), pair);
  } catch (const NoValidPathError&) {
    raised = true;
  }
  o.require(raised, "saturated forbid did not raise");

  const auto flagged = from_tagged(tag_text(model, lexicon, RuleSet::parse("FORBID * *\n"), "La mesa."));
  o.require(write_vertical(flagged).rfind("#FALLBACK\n", 0) == 0, "no #FALLBACK sentence");
  if (o.pass) o.detail = std::to_string(sentences) + " sentences, 0 forbidden pairs";
  return o;
}

Outcome ambiguity_classes() {
  Outcome o;
  const auto seed = Lexicon::seed();
  const auto* al = seed.lookup("al");
  const auto* la = seed.lookup("la");
  const auto* lo = seed.lookup("lo");
  o.require(al && *al == AmbiguityClass::of({"PAL", "CSUBI"}), "al");
  o.require(la && la->contains(AmbiguityClass::of({"ARTDFS", "PPO3FS"})), "la");
  o.require(lo && lo->contains(AmbiguityClass::of({"ARTDNS", "PPO3XS"})), "lo");
  const auto report = ambiguity_report(seed);
  for (const std::string form : {"al", "la", "lo"}) {
    const auto* cls = seed.lookup(form);
    if (!cls) continue;
    std::size_t holders = 0;
    for (const auto& group : report) {
      const bool listed = std::find(group.examples.begin(), group.examples.end(), form) != group.examples.end();
      if (group.tags == *cls) {
        o.require(group.count >= 1, "group for " + form);
      }
      if (listed) {
        ++holders;
        o.require(group.tags == *cls, form + " listed under the wrong class");
      }
    }
    o.require(holders <= 1, form + " listed twice");
  }
  std::size_t total = 0;
  for (const auto& g : report) total += g.count;
  o.require(total == seed.size(), "report does not partition the lexicon");
  if (o.pass) o.detail = std::to_string(report.size()) + " classes over " + std::to_string(seed.size()) + " forms";
  return o;
}

Outcome normalization() {
  Outcome o;
  const auto toy = to_tagged(read_vertical(oracle::fixture("toy.vrt")));
  const auto model = HmmModel::train(toy);
  double worst = std::abs(model.transition_sum(std::nullopt) - 1.0);
  for (const auto& e : load_registry().entries()) {
    worst = std::max(worst, std::abs(model.transition_sum(e.tag) - 1.0));
    worst = std::max(worst, std::abs(model.emission_sum(e.tag) - 1.0));
  }
  worst = std::max(worst, std::abs(model.prior_sum() - 1.0));
  o.require(worst <= kNormalizationTolerance, "distribution off by " + std::to_string(worst));

  // Hand count over the toy corpus: two sentences of "la mesa .".
  const Tag art = parse_tag("ARTDFS");
  const Tag noun = parse_tag("NCFS");
  const Tag stop = parse_tag(".");
  o.require(model.transition_count(std::nullopt, art) == 2, "count(START, ARTDFS)");
  o.require(model.transition_count(art, noun) == 2, "count(ARTDFS, NCFS)");
  o.require(model.transition_count(noun, stop) == 2, "count(NCFS, .)");
  o.require(model.transition_count(stop, std::nullopt) == 2, "count(., END)");
  o.require(model.transition_count(art, art) == 0 && model.transition_count(noun, art) == 0,
            "spurious counts");
  std::ostringstream detail;
  detail << "max deviation " << worst;
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome io_suite() {
  Outcome o;
  for (auto name : {"two_sentences.vrt", "gold10.vrt", "toy.vrt", "train.vrt"}) {
    const auto path = oracle::fixture(name);
    o.require(write_vertical(read_vertical(path)) == slurp(path), std::string("round trip ") + name);
  }
  const auto gold = read_vertical(oracle::fixture("gold10.vrt"));
  o.require(evaluate(gold, gold).accuracy == 1.0, "identical accuracy");
  o.require(std::abs(evaluate(gold, read_vertical(oracle::fixture("pred10_one_mismatch.vrt"))).accuracy - 0.9) < 1e-12,
            "mismatch accuracy");

  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  o.require(run({"validate", oracle::fixture("gold10.vrt")}) == 0, "validate clean file");
  std::string report;
  o.require(run({"validate", oracle::fixture("badtag.vrt")}, &report) == 1 &&
                report.find("line 5") != std::string::npos,
            "validate BADTAG");

  const auto dir = std::filesystem::temp_directory_path() / "spantag_acceptance";
  std::filesystem::create_directories(dir);
  const auto model = (dir / "m.txt").string();
  const auto input = (dir / "in.txt").string();
  std::ofstream(input) << "¿Dónde está Juan?";
  o.require(run({"train", oracle::fixture("train.vrt"), "-o", model}) == 0, "train");
  std::string tagged;
  o.require(run({"tag", "--lexicon", "seed", "--model", model, input}, &tagged) == 0 &&
                tagged.rfind("¿\tIQUEST\n", 0) == 0,
            "tag first line");
  if (o.pass) o.detail = "round trips, accuracy and exit codes hold";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"registry completeness", registry_completeness},
      {"codec feature checks", codec_features},
      {"tokenizer", tokenizer_suite},
      {"decoder oracle", decoder_oracle},
      {"constraint soundness", constraint_soundness},
      {"ambiguity classes", ambiguity_classes},
      {"normalization", normalization},
      {"I/O", io_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << ": " << outcome.detail << '\n';
  }
  return failed == 0 ? 0 : 1;
}
