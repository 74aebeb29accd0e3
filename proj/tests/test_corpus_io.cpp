#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "spantag/corpus_io.hpp"
#include "spantag/errors.hpp"

using namespace spantag;

namespace {

VerticalDocument from_string(const std::string& text, bool strict = true) {
  std::istringstream in(text);
  return parse_vertical(in, "inline", strict);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

VerticalDocument random_document(std::mt19937& rng) {
  const auto& entries = load_registry().entries();
  const std::vector<std::string> forms{"la", "mesa", "¿", "Dónde", "niña", "40-50", "Sr.", "#x", "a b"};
  VerticalDocument doc;
  const std::size_t sentences = rng() % 5;
  for (std::size_t s = 0; s < sentences; ++s) {
    VerticalSentence sentence;
    sentence.fallback = rng() % 4 == 0;
    const std::size_t length = 1 + rng() % 6;
    for (std::size_t i = 0; i < length; ++i) {
      const auto& e = entries[rng() % entries.size()];
      sentence.entries.push_back({forms[rng() % forms.size()], e.code, e.tag, 0});
    }
    doc.sentences.push_back(sentence);
  }
  return doc;
}

}  // namespace

TEST_CASE("reading a two-sentence file") {
  const auto doc = read_vertical(oracle::fixture("two_sentences.vrt"));
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].entries.size() == 5);
  CHECK(doc.sentences[1].entries.size() == 8);
  CHECK(doc.token_count() == 13);
  CHECK(doc.sentences[0].entries[0].form == "¿");
  CHECK(doc.sentences[0].entries[0].tag == parse_tag("IQUEST"));
  CHECK(doc.sentences[1].entries[3].form == "Sr.");
  CHECK(doc.sentences[1].entries[3].line == 10);
  CHECK(doc.provenance.find("two_sentences.vrt") != std::string::npos);
}

TEST_CASE("format errors") {
  try {
    read_vertical(oracle::fixture("no_tab.vrt"));
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(from_string("a\tB\tC\n"), FormatError);
  CHECK_THROWS_AS(from_string("\tNCFS\n"), FormatError);
  CHECK_THROWS_AS(from_string("mesa\t\n"), FormatError);
  CHECK_THROWS_AS(read_vertical("/nonexistent/file.vrt"), IoError);

  const auto comments = from_string("# a comment\nla\tARTDFS\n\n\n#FALLBACK\nmesa\tNCFS\n");
  REQUIRE(comments.sentences.size() == 2);
  CHECK_FALSE(comments.sentences[0].fallback);
  CHECK(comments.sentences[1].fallback);
  CHECK(from_string("la\tARTDFS\r\n").sentences[0].entries[0].code == "ARTDFS");
  CHECK(from_string("#\tPNC\n").sentences[0].entries[0].form == "#");
}

TEST_CASE("strict and lenient unknown tags") {
  try {
    read_vertical(oracle::fixture("badtag.vrt"));
    FAIL("expected UnknownTagError");
  } catch (const UnknownTagError& e) {
    CHECK(e.line() == 5);
    CHECK(e.code() == "BADTAG");
  }
  const auto lenient = read_vertical(oracle::fixture("badtag.vrt"), false);
  REQUIRE(lenient.unknown_tags.size() == 1);
  CHECK(lenient.unknown_tags[0].line == 5);
  CHECK(lenient.unknown_tags[0].code == "BADTAG");
  CHECK_FALSE(lenient.sentences[1].entries[0].tag.has_value());
  CHECK_THROWS_AS(to_tagged(lenient), UnknownTagError);
}

TEST_CASE("writing is byte-identical for canonical files") {
  for (auto name : {"two_sentences.vrt", "gold10.vrt", "toy.vrt", "train.vrt"}) {
    CAPTURE(name);
    const auto path = oracle::fixture(name);
    CHECK(write_vertical(read_vertical(path)) == slurp(path));
  }
  CHECK(write_vertical(VerticalDocument{}).empty());
  CHECK(write_vertical(from_string("")).empty());
}

TEST_CASE("write after read is a fixed point") {
  std::mt19937 rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto doc = random_document(rng);
    const auto once = write_vertical(doc);
    const auto twice = write_vertical(from_string(once));
    CHECK(once == twice);
    const auto back = from_string(once);
    REQUIRE(back.sentences.size() == doc.sentences.size());
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      CHECK(back.sentences[s].fallback == doc.sentences[s].fallback);
      REQUIRE(back.sentences[s].entries.size() == doc.sentences[s].entries.size());
      for (std::size_t k = 0; k < doc.sentences[s].entries.size(); ++k) {
        CHECK(back.sentences[s].entries[k].form == doc.sentences[s].entries[k].form);
        CHECK(back.sentences[s].entries[k].tag == doc.sentences[s].entries[k].tag);
      }
    }
  }
}

TEST_CASE("tagged output conversion") {
  Token la;
  la.surface = "la";
  Token mesa;
  mesa.surface = "mesa";
  std::vector<TaggedOutput> out(2);
  out[0].tokens = {{la, parse_tag("ARTDFS")}, {mesa, parse_tag("NCFS")}};
  out[1].tokens = {{mesa, parse_tag("NCMS")}};
  out[1].fallback = true;
  const auto doc = from_tagged(out, "test");
  CHECK(write_vertical(doc) == "la\tARTDFS\nmesa\tNCFS\n\n#FALLBACK\nmesa\tNCMS\n\n");
  const auto tagged = to_tagged(doc);
  REQUIRE(tagged.size() == 2);
  CHECK(tagged[0][1].tag == parse_tag("NCFS"));
}

TEST_CASE("evaluation") {
  const auto gold = read_vertical(oracle::fixture("gold10.vrt"));
  auto report = evaluate(gold, gold);
  CHECK(report.tokens == 10);
  CHECK(report.correct == 10);
  CHECK(report.accuracy == 1.0);
  CHECK_FALSE(report.unknown_tokens.has_value());

  report = evaluate(gold, read_vertical(oracle::fixture("pred10_one_mismatch.vrt")));
  CHECK(report.correct == 9);
  CHECK(report.accuracy == doctest::Approx(0.9));
  CHECK(report.confusion.at({"NCMS", "ADJGMS"}) == 1);
  CHECK(report.confusion.at({"NCMS", "NCMS"}) == 1);

  try {
    evaluate(gold, read_vertical(oracle::fixture("pred10_token3.vrt")));
    FAIL("expected AlignmentError");
  } catch (const AlignmentError& e) {
    CHECK(e.position() == 3);
  }
  const auto shorter = from_string("El\tARTDMS\nperro\tNCMS\n");
  try {
    evaluate(gold, shorter);
    FAIL("expected AlignmentError");
  } catch (const AlignmentError& e) {
    CHECK(e.position() == 2);
  }

  const auto empty = evaluate(VerticalDocument{}, VerticalDocument{});
  CHECK(empty.accuracy == 1.0);
  CHECK(empty.tokens == 0);
}

TEST_CASE("evaluation properties") {
  std::mt19937 rng(8);
  const auto& entries = load_registry().entries();
  for (int i = 0; i < 200; ++i) {
    auto gold = random_document(rng);
    auto pred = gold;
    for (auto& s : pred.sentences) {
      for (auto& e : s.entries) {
        if (rng() % 3 == 0) {
          const auto& r = entries[rng() % entries.size()];
          e.code = r.code;
          e.tag = r.tag;
        }
      }
    }
    const auto forward = evaluate(gold, pred);
    const auto backward = evaluate(pred, gold);
    CHECK(forward.accuracy >= 0.0);
    CHECK(forward.accuracy <= 1.0);
    CHECK(forward.correct == backward.correct);
    CHECK(forward.accuracy == backward.accuracy);
    std::size_t total = 0;
    for (const auto& [pair, count] : forward.confusion) {
      total += count;
      CHECK(backward.confusion.at({pair.second, pair.first}) == count);
    }
    CHECK(total == forward.tokens);
  }
}

TEST_CASE("unknown-word accuracy") {
  const auto gold = read_vertical(oracle::fixture("gold10.vrt"));
  const auto pred = read_vertical(oracle::fixture("pred10_one_mismatch.vrt"));
  std::istringstream lex_text("El\tARTDMS\nperro\tNCMS\n.\t.\nLa\tARTDFS\nun\tARCAMS\n");
  const auto lexicon = Lexicon::parse(lex_text, "inline", false);
  const auto report = evaluate(gold, pred, &lexicon);
  REQUIRE(report.unknown_tokens.has_value());
  CHECK(*report.unknown_tokens == 4);
  CHECK(*report.unknown_correct == 3);
  CHECK(*report.unknown_accuracy == doctest::Approx(0.75));

  std::ostringstream out;
  write_report(out, report);
  const auto text = out.str();
  CHECK(text.rfind("tokens\t10\ncorrect\t9\naccuracy\t0.900000\n", 0) == 0);
  CHECK(text.find("unknown_accuracy\t0.750000\n") != std::string::npos);
  CHECK(text.find("\n\nGOLD\tPRED\tCOUNT\n") != std::string::npos);
  CHECK(text.find("NCMS\tADJGMS\t1\n") != std::string::npos);
}
