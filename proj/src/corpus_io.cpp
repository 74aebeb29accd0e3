#include "spantag/corpus_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "spantag/errors.hpp"

namespace spantag {

std::size_t VerticalDocument::token_count() const {
  std::size_t count = 0;
  for (const auto& sentence : sentences) count += sentence.entries.size();
  return count;
}

VerticalDocument parse_vertical(std::istream& in, std::string provenance, bool strict) {
  VerticalDocument doc;
  doc.provenance = std::move(provenance);
  VerticalSentence current;
  bool pending_fallback = false;

  auto close_sentence = [&] {
    if (current.entries.empty()) return;
    doc.sentences.push_back(std::move(current));
    current = {};
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) {
      close_sentence();
      continue;
    }
    const auto tab = raw.find('\t');
    if (raw.front() == '#' && tab == std::string::npos) {
      if (raw == "#FALLBACK") {
        close_sentence();
        pending_fallback = true;
      }
      continue;
    }
    if (tab == std::string::npos) throw FormatError(line, "expected 'token<TAB>TAG'");
    if (raw.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(line, "more than one tab");
    }
    VerticalEntry entry{raw.substr(0, tab), raw.substr(tab + 1), std::nullopt, line};
    if (entry.form.empty()) throw FormatError(line, "empty token");
    if (entry.code.empty()) throw FormatError(line, "empty tag");
    entry.tag = find_tag(entry.code);
    if (!entry.tag) {
      if (strict) throw UnknownTagError(entry.code, line);
      doc.unknown_tags.push_back({line, entry.code});
    }
    if (current.entries.empty()) {
      current.fallback = pending_fallback;
      pending_fallback = false;
    }
    current.entries.push_back(std::move(entry));
  }
  close_sentence();
  return doc;
}

VerticalDocument read_vertical(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_vertical(in, path.string(), strict);
}

void write_vertical(std::ostream& out, const VerticalDocument& doc) {
  for (const auto& sentence : doc.sentences) {
    if (sentence.entries.empty()) continue;
    if (sentence.fallback) out << "#FALLBACK\n";
    for (const auto& entry : sentence.entries) out << entry.form << '\t' << entry.code << '\n';
    out << '\n';
  }
}

std::string write_vertical(const VerticalDocument& doc) {
  std::ostringstream out;
  write_vertical(out, doc);
  return out.str();
}

void write_vertical(const std::filesystem::path& path, const VerticalDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_vertical(out, doc);
  if (!out) throw IoError("error writing " + path.string());
}

std::vector<TaggedSentence> to_tagged(const VerticalDocument& doc) {
  std::vector<TaggedSentence> out;
  out.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) {
    TaggedSentence tagged;
    tagged.reserve(sentence.entries.size());
    for (const auto& entry : sentence.entries) {
      if (!entry.tag) throw UnknownTagError(entry.code, entry.line);
      Token token;
      token.surface = entry.form;
      tagged.push_back({std::move(token), *entry.tag});
    }
    out.push_back(std::move(tagged));
  }
  return out;
}

VerticalDocument from_tagged(std::span<const TaggedOutput> sentences, std::string provenance) {
  VerticalDocument doc;
  doc.provenance = std::move(provenance);
  for (const auto& sentence : sentences) {
    if (sentence.tokens.empty()) continue;
    VerticalSentence out;
    out.fallback = sentence.fallback;
    for (const auto& item : sentence.tokens) {
      out.entries.push_back({item.token.surface, item.tag.code(), item.tag, 0});
    }
    doc.sentences.push_back(std::move(out));
  }
  return doc;
}

EvalReport evaluate(const VerticalDocument& gold, const VerticalDocument& predicted,
                    const Lexicon* lexicon) {
  std::vector<const VerticalEntry*> left;
  std::vector<const VerticalEntry*> right;
  for (const auto& s : gold.sentences) {
    for (const auto& e : s.entries) left.push_back(&e);
  }
  for (const auto& s : predicted.sentences) {
    for (const auto& e : s.entries) right.push_back(&e);
  }

  EvalReport report;
  std::size_t unknown = 0;
  std::size_t unknown_correct = 0;
  const std::size_t common = std::min(left.size(), right.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (left[i]->form != right[i]->form) throw AlignmentError(i);
    const bool hit = left[i]->code == right[i]->code;
    ++report.tokens;
    if (hit) ++report.correct;
    ++report.confusion[{left[i]->code, right[i]->code}];
    if (lexicon && !lexicon->lookup(left[i]->form)) {
      ++unknown;
      if (hit) ++unknown_correct;
    }
  }
  if (left.size() != right.size()) throw AlignmentError(common);

  if (report.tokens > 0) {
    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.tokens);
  }
  if (lexicon) {
    report.unknown_tokens = unknown;
    report.unknown_correct = unknown_correct;
    report.unknown_accuracy =
        unknown == 0 ? 1.0 : static_cast<double>(unknown_correct) / static_cast<double>(unknown);
  }
  return report;
}

void write_report(std::ostream& out, const EvalReport& report) {
  char buffer[32];
  auto ratio = [&](double value) {
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return std::string(buffer);
  };
  out << "tokens\t" << report.tokens << '\n';
  out << "correct\t" << report.correct << '\n';
  out << "accuracy\t" << ratio(report.accuracy) << '\n';
  if (report.unknown_accuracy) {
    out << "unknown_tokens\t" << *report.unknown_tokens << '\n';
    out << "unknown_correct\t" << *report.unknown_correct << '\n';
    out << "unknown_accuracy\t" << ratio(*report.unknown_accuracy) << '\n';
  }
  out << "\nGOLD\tPRED\tCOUNT\n";
  for (const auto& [pair, count] : report.confusion) {
    out << pair.first << '\t' << pair.second << '\t' << count << '\n';
  }
}

}  // namespace spantag
