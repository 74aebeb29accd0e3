#include <doctest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "spantag/errors.hpp"
#include "spantag/tokenizer.hpp"

using namespace spantag;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

Token word(std::string surface) {
  Token t;
  t.end = surface.size();
  t.surface = std::move(surface);
  return t;
}

Lexicon verb_lexicon() { return Lexicon::load(oracle::fixture("verbs.lex")); }

}  // namespace

TEST_CASE("inverted marks are separate punctuation tokens") {
  const auto tokens = tokenize("¿Dónde está Juan?");
  CHECK(surfaces(tokens) == std::vector<std::string>{"¿", "Dónde", "está", "Juan", "?"});
  CHECK(tokens[0].kind == TokenKind::kPunctuation);
  CHECK(tokens[1].kind == TokenKind::kWord);
  CHECK(tokens[4].kind == TokenKind::kPunctuation);
  CHECK(surfaces(tokenize("¡Hola!")) == std::vector<std::string>{"¡", "Hola", "!"});
}

TEST_CASE("empty and whitespace input") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \n\t ").empty());
}

TEST_CASE("ellipsis") {
  auto tokens = tokenize("Pues... no");
  CHECK(surfaces(tokens) == std::vector<std::string>{"Pues", "...", "no"});
  CHECK(tokens[1].kind == TokenKind::kPunctuation);
  tokens = tokenize("Bueno…");
  CHECK(surfaces(tokens) == std::vector<std::string>{"Bueno", "…"});
}

TEST_CASE("numbers, ranges and codes") {
  auto tokens = tokenize("40-50 hectáreas");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].surface == "40-50");
  CHECK(tokens[0].kind == TokenKind::kNumber);
  CHECK(tokens[1].surface == "hectáreas");

  tokens = tokenize("1850-1990, 3.500 y 2,5");
  CHECK(surfaces(tokens) == std::vector<std::string>{"1850-1990", ",", "3.500", "y", "2,5"});
  CHECK(tokens[0].kind == TokenKind::kNumber);
  CHECK(tokens[2].kind == TokenKind::kNumber);

  tokens = tokenize("el modelo A4B y el MS-DOS2");
  CHECK(tokens[2].surface == "A4B");
  CHECK(tokens[2].kind == TokenKind::kCode);
  CHECK(tokens[5].surface == "MS-DOS2");
  CHECK(tokens[5].kind == TokenKind::kCode);

  tokens = tokenize("vale 7.");
  CHECK(surfaces(tokens) == std::vector<std::string>{"vale", "7", "."});
}

TEST_CASE("formulas") {
  const auto tokens = tokenize("si x=2+y, entonces");
  CHECK(surfaces(tokens) == std::vector<std::string>{"si", "x=2+y", ",", "entonces"});
  CHECK(tokens[1].kind == TokenKind::kFormula);
}

TEST_CASE("abbreviations keep their period") {
  for (auto abbreviation : {"Sr.", "D.", "Prof.", "Exmo.", "Sra.", "pta.", "cm."}) {
    CAPTURE(abbreviation);
    const auto tokens = tokenize(std::string(abbreviation) + " García");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].surface == abbreviation);
    CHECK(tokens[0].kind == TokenKind::kAbbreviation);
  }
  const auto tokens = tokenize("Vino tarde.");
  CHECK(surfaces(tokens) == std::vector<std::string>{"Vino", "tarde", "."});
}

TEST_CASE("user abbreviations and multiwords") {
  TokenizerConfig config = TokenizerConfig::defaults();
  config.load_abbreviations(oracle::fixture("abbreviations.txt"));
  config.load_multiwords(oracle::fixture("multiwords.txt"));
  const Tokenizer tokenizer(config);
  const auto tokens = tokenizer.tokenize("Lo vio el Dr. Ruiz sin embargo, a pesar de todo.");
  CHECK(surfaces(tokens) == std::vector<std::string>{"Lo", "vio", "el", "Dr.", "Ruiz",
                                                     "sin embargo", ",", "a pesar de", "todo",
                                                     "."});
  CHECK(tokens[3].kind == TokenKind::kAbbreviation);
  CHECK_THROWS_AS(config.load_multiwords("/nonexistent/file"), IoError);
}

TEST_CASE("portmanteau decisions") {
  auto al = split_portmanteau(word("al"));
  REQUIRE(al);
  REQUIRE(al->parts.size() == 1);
  CHECK(al->parts[0].candidates == AmbiguityClass::of({"PAL", "CSUBI"}));
  CHECK(al->confidence == SplitConfidence::kCertain);

  auto del = split_portmanteau(word("Del"));
  REQUIRE(del);
  CHECK(del->parts[0].surface == "Del");
  CHECK(del->parts[0].candidates == AmbiguityClass::of({"PDEL"}));

  CHECK_FALSE(split_portmanteau(word("mal")));
  CHECK_FALSE(split_portmanteau(word("ALTO")));
  Token punct = word("al");
  punct.kind = TokenKind::kPunctuation;
  CHECK_FALSE(split_portmanteau(punct));
}

TEST_CASE("enclitic examples") {
  const auto lexicon = verb_lexicon();
  auto split = split_enclitics(word("dímelo"), lexicon);
  REQUIRE(split);
  REQUIRE(split->parts.size() == 3);
  CHECK(split->parts[0].surface == "di");
  CHECK(split->parts[0].candidates == AmbiguityClass::of({"VLPM2S"}));
  CHECK(split->parts[1].surface == "me");
  CHECK(split->parts[1].candidates == AmbiguityClass::of({"PPC1S"}));
  CHECK(split->parts[2].surface == "lo");
  CHECK(split->parts[2].candidates == AmbiguityClass::of({"PPO3XS"}));
  CHECK(split->written_stem == "dí");
  CHECK(split->confidence == SplitConfidence::kHeuristic);

  split = split_enclitics(word("comerse"), lexicon);
  REQUIRE(split);
  REQUIRE(split->parts.size() == 2);
  CHECK(split->parts[0].surface == "comer");
  CHECK(split->parts[0].candidates == AmbiguityClass::of({"VLINF"}));
  CHECK(split->parts[1].surface == "se");
  CHECK(split->parts[1].candidates.contains(parse_tag("SE")));

  CHECK_FALSE(split_enclitics(word("mesa"), lexicon));
  CHECK_FALSE(split_enclitics(word("comer"), lexicon));
  CHECK_FALSE(split_enclitics(word("dímelo"), Lexicon::seed()));
  // Host filtering keeps only the imperative reading of "come".
  split = split_enclitics(word("cómete"), lexicon);
  REQUIRE(split);
  CHECK(split->parts[0].surface == "come");
  CHECK(split->parts[0].candidates == AmbiguityClass::of({"VLPM2S"}));
}

TEST_CASE("enclitic splits agree with the stripping oracle") {
  const auto lexicon = verb_lexicon();
  std::vector<std::string> words{"dímelo", "comerse", "mesa", "dámelo", "dadme", "dadnos",
                                 "diciéndoselo", "diciendo", "comérselo", "comerlos",
                                 "leelo", "léelo", "cómelos", "Dímelo", "comeros", "mesas",
                                 "dale", "dales", "da", "lo", "se", "meme", "comerte",
                                 "comernoslo", "comerlaslos", "estáte", "estate"};
  std::mt19937 rng(11);
  const std::vector<std::string> stems{"di", "dí", "come", "cóme", "comer", "dad", "da", "dá",
                                       "diciendo", "diciéndo", "mesa", "x"};
  for (int i = 0; i < 400; ++i) {
    std::string w = stems[rng() % stems.size()];
    const auto count = rng() % 3;
    for (std::size_t k = 0; k < count; ++k) w += oracle::clitic_list()[rng() % 11];
    words.push_back(w);
  }
  for (const auto& w : words) {
    CAPTURE(w);
    const auto expected = oracle::enclitic_splits(lexicon, w);
    const auto actual = split_enclitics(word(w), lexicon);
    REQUIRE(actual.has_value() == !expected.empty());
    if (!actual) continue;
    const auto& parts = actual->parts;
    std::vector<std::string> clitics;
    for (std::size_t j = 1; j < parts.size(); ++j) clitics.push_back(text::to_lower(parts[j].surface));
    const bool listed = std::any_of(expected.begin(), expected.end(), [&](const auto& e) {
      return e.stem == parts[0].surface && e.clitics == clitics;
    });
    CHECK(listed);
    // Parts re-concatenate to the written word.
    std::string rebuilt = actual->written_stem;
    for (std::size_t j = 1; j < parts.size(); ++j) rebuilt += parts[j].surface;
    CHECK(rebuilt == w);
    CHECK(text::strip_acute(actual->written_stem) == text::strip_acute(parts[0].surface));
    for (const auto& c : clitics) {
      CHECK(std::find(oracle::clitic_list().begin(), oracle::clitic_list().end(), c) !=
            oracle::clitic_list().end());
    }
  }
}

TEST_CASE("sentence splitting") {
  auto tokens = tokenize("Hola. Adiós.");
  CHECK(sentence_split(tokens).size() == 2);
  tokens = tokenize("Sr. García vino.");
  auto sentences = sentence_split(tokens);
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].size() == 4);
  CHECK(sentence_split({}).empty());
  tokens = tokenize("¿Qué? ¡Nada! Pues... y luego");
  sentences = sentence_split(tokens);
  REQUIRE(sentences.size() == 4);
  CHECK(sentences[3].size() == 2);
}

TEST_CASE("fuzz: byte-exact reconstruction") {
  std::mt19937 rng(2024);
  const Tokenizer tokenizer;
  for (int i = 0; i < 1000; ++i) {
    const auto input = oracle::random_text(rng);
    CAPTURE(input);
    const auto tokens = tokenizer.tokenize(input);
    const auto rebuilt = oracle::reconstruct(input, tokens);
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == input);
    for (const auto& t : tokens) CHECK(!t.surface.empty());
    CHECK(tokenizer.tokenize(input) == tokens);
  }
}
