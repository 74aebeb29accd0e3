#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "spantag/errors.hpp"
#include "spantag/tagger.hpp"
#include "spantag/text.hpp"

namespace spantag {

namespace {

constexpr std::string_view kStartName = "<S>";
constexpr std::string_view kEndName = "</S>";
constexpr std::string_view kDefaultName = "<*>";
constexpr std::string_view kUnknownName = "<UNK>";
constexpr double kLn10 = 2.302585092994045684;
constexpr double kNormalizationTolerance = 1e-9;

// Word forms beginning with '<' or '\' are written with a '\' prefix so they
// cannot collide with the reserved outcome names.
std::string escape_word(const std::string& word) {
  if (!word.empty() && (word.front() == '<' || word.front() == '\\')) return "\\" + word;
  return word;
}

std::string unescape_word(std::string_view word) {
  if (!word.empty() && word.front() == '\\') word.remove_prefix(1);
  return std::string(word);
}

std::string format_log10(double natural_log) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", natural_log / kLn10);
  return buffer;
}

double parse_double(std::string_view text, std::size_t line) {
  std::string copy(text);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || errno == ERANGE) {
    throw FormatError(line, "bad number '" + copy + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view text, std::size_t line) {
  std::string copy(text);
  char* end = nullptr;
  const auto value = std::strtoull(copy.c_str(), &end, 10);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw FormatError(line, "bad count '" + copy + "'");
  }
  return value;
}

void check_smoothing(const Smoothing& s) {
  if (!(s.transition_k > 0.0) || !std::isfinite(s.transition_k)) {
    throw ParameterError("transition add-k must be positive");
  }
  if (!(s.emission_k > 0.0) || !std::isfinite(s.emission_k)) {
    throw ParameterError("emission add-k must be positive");
  }
  if (!(s.unknown_mass > 0.0) || s.unknown_mass > 1.0) {
    throw ParameterError("unknown-word mass must lie in (0, 1]");
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

}  // namespace

HmmModel HmmModel::train(std::span<const TaggedSentence> corpus, Smoothing smoothing,
                         std::string corpus_name) {
  check_smoothing(smoothing);
  HmmModel model;
  const std::size_t n = load_registry().size();
  model.tag_count_ = n;
  model.smoothing_ = smoothing;
  model.corpus_name_ = std::move(corpus_name);
  model.transition_counts_.assign((n + 1) * (n + 1), 0);
  model.tag_counts_.assign(n, 0);

  std::vector<std::map<std::uint32_t, std::uint64_t>> emission_counts(n);
  for (const auto& sentence : corpus) {
    if (sentence.empty()) continue;
    ++model.sentence_count_;
    std::size_t previous = kBoundary;
    for (const auto& item : sentence) {
      const std::size_t t = item.tag.index();
      ++model.transition_counts_[model.index(previous, t)];
      ++model.tag_counts_[t];
      const auto word = text::to_lower(item.token.surface);
      const auto id = static_cast<std::uint32_t>(model.vocabulary_.size());
      const auto it = model.vocabulary_.try_emplace(word, id).first;
      ++emission_counts[t][it->second];
      previous = t;
    }
    ++model.transition_counts_[model.index(previous, kBoundary)];
    model.token_count_ += sentence.size();
  }
  if (model.token_count_ == 0) throw EmptyCorpusError();

  const double kt = smoothing.transition_k;
  model.transitions_.resize((n + 1) * (n + 1));
  for (std::size_t row = 0; row <= n; ++row) {
    std::uint64_t total = 0;
    for (std::size_t col = 0; col <= n; ++col) total += model.transition_counts_[row * (n + 1) + col];
    const double denominator = static_cast<double>(total) + kt * static_cast<double>(n + 1);
    for (std::size_t col = 0; col <= n; ++col) {
      const double count = static_cast<double>(model.transition_counts_[row * (n + 1) + col]);
      model.transitions_[row * (n + 1) + col] = std::log((count + kt) / denominator);
    }
  }

  const double ke = smoothing.emission_k;
  const double vocabulary = static_cast<double>(model.vocabulary_.size());
  model.emissions_.resize(n);
  model.emission_fallback_.resize(n);
  model.priors_.resize(n);
  const double prior_denominator =
      static_cast<double>(model.token_count_) + ke * static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double denominator = static_cast<double>(model.tag_counts_[t]) + ke * (vocabulary + 1.0);
    model.emission_fallback_[t] = std::log(ke / denominator);
    for (const auto& [id, count] : emission_counts[t]) {
      model.emissions_[t][id] = std::log((static_cast<double>(count) + ke) / denominator);
    }
    model.priors_[t] =
        std::log((static_cast<double>(model.tag_counts_[t]) + ke) / prior_denominator);
  }
  return model;
}

double HmmModel::log_emission(Tag tag, std::string_view word) const {
  const auto it = vocabulary_.find(text::to_lower(word));
  if (it == vocabulary_.end()) return emission_fallback_.at(tag.index());
  const auto& row = emissions_.at(tag.index());
  const auto hit = row.find(it->second);
  return hit == row.end() ? emission_fallback_[tag.index()] : hit->second;
}

double HmmModel::log_unknown_emission(Tag tag) const {
  return emission_fallback_.at(tag.index());
}

bool HmmModel::known(std::string_view word) const {
  return vocabulary_.contains(text::to_lower(word));
}

double HmmModel::emission_score(std::string_view word, Tag tag,
                                const AmbiguityClass& candidates) const {
  if (known(word)) return log_emission(tag, word);
  double mass = 0.0;
  for (Tag t : candidates.tags()) mass += std::exp(priors_.at(t.index()));
  return std::log(smoothing_.unknown_mass) + priors_.at(tag.index()) - std::log(mass);
}

double HmmModel::transition_sum(std::optional<Tag> context) const {
  const std::size_t row = context ? context->index() : tag_count_;
  double sum = 0.0;
  for (std::size_t col = 0; col <= tag_count_; ++col) {
    sum += std::exp(transitions_[row * (tag_count_ + 1) + col]);
  }
  return sum;
}

double HmmModel::emission_sum(Tag tag) const {
  const auto& row = emissions_.at(tag.index());
  const double fallback = std::exp(emission_fallback_[tag.index()]);
  double sum = fallback;  // the unknown-word symbol
  for (const auto& [word, id] : vocabulary_) {
    const auto hit = row.find(id);
    sum += hit == row.end() ? fallback : std::exp(hit->second);
  }
  return sum;
}

double HmmModel::prior_sum() const {
  double sum = 0.0;
  for (double p : priors_) sum += std::exp(p);
  return sum;
}

std::uint64_t HmmModel::transition_count(std::optional<Tag> from, std::optional<Tag> to) const {
  if (transition_counts_.empty()) return 0;
  return transition_counts_[index(from ? from->index() : kBoundary, to ? to->index() : kBoundary)];
}

std::uint64_t HmmModel::tag_count(Tag tag) const {
  return tag_counts_.empty() ? 0 : tag_counts_.at(tag.index());
}

// ---------------------------------------------------------------------------
// Model file

void HmmModel::write(std::ostream& out) const {
  const auto& registry = load_registry();
  const std::size_t n = tag_count_;
  auto name = [&](std::size_t t) -> std::string_view { return registry.entries()[t].code; };

  // Outcomes equal to the row's most common value are folded into one
  // default row.
  auto write_row = [&](std::string_view context, std::size_t row) {
    std::map<double, std::size_t> frequency;
    for (std::size_t col = 0; col <= n; ++col) ++frequency[transitions_[row * (n + 1) + col]];
    const double fallback =
        std::max_element(frequency.begin(), frequency.end(), [](const auto& a, const auto& b) {
          return a.second < b.second;
        })->first;
    for (std::size_t col = 0; col <= n; ++col) {
      const double value = transitions_[row * (n + 1) + col];
      if (value == fallback) continue;
      out << context << '\t' << (col == n ? kEndName : name(col)) << '\t' << format_log10(value)
          << '\n';
    }
    out << context << '\t' << kDefaultName << '\t' << format_log10(fallback) << '\n';
  };

  out << "TRANSITIONS\n";
  write_row(kStartName, n);
  for (std::size_t t = 0; t < n; ++t) write_row(name(t), t);

  std::vector<std::string> words(vocabulary_.size());
  for (const auto& [word, id] : vocabulary_) words[id] = word;
  out << "EMISSIONS\n";
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::pair<std::string, double>> rows;
    for (const auto& [id, value] : emissions_[t]) rows.emplace_back(words[id], value);
    std::sort(rows.begin(), rows.end());
    for (const auto& [word, value] : rows) {
      out << name(t) << '\t' << escape_word(word) << '\t' << format_log10(value) << '\n';
    }
    out << name(t) << '\t' << kUnknownName << '\t' << format_log10(emission_fallback_[t]) << '\n';
  }

  std::string corpus = corpus_name_;
  std::replace_if(corpus.begin(), corpus.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  char buffer[40];
  auto number = [&](double value) {
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return std::string(buffer);
  };
  out << "META\n";
  out << "corpus\t" << corpus << '\n';
  out << "tokens\t" << token_count_ << '\n';
  out << "sentences\t" << sentence_count_ << '\n';
  out << "vocabulary\t" << vocabulary_.size() << '\n';
  out << "transition_k\t" << number(smoothing_.transition_k) << '\n';
  out << "emission_k\t" << number(smoothing_.emission_k) << '\n';
  out << "unknown_mass\t" << number(smoothing_.unknown_mass) << '\n';
  for (std::size_t t = 0; t < n; ++t) {
    out << "prior\t" << name(t) << '\t' << format_log10(priors_[t]) << '\n';
  }
}

void HmmModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model " + path.string());
  write(out);
  if (!out) throw IoError("error writing model " + path.string());
}

HmmModel HmmModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path.string());
  return read(in);
}

HmmModel HmmModel::read(std::istream& in) {
  const auto& registry = load_registry();
  const std::size_t n = registry.size();

  HmmModel model;
  model.tag_count_ = n;

  enum class Section { kNone, kTransitions, kEmissions, kMeta } section = Section::kNone;

  struct Row {
    std::map<std::size_t, double> values;  // outcome -> log10
    std::optional<double> fallback;
    std::size_t line = 0;
  };
  std::map<std::size_t, Row> transition_rows;  // context n is the start state
  std::map<std::size_t, std::map<std::string, double>> emission_rows;
  std::map<std::size_t, std::pair<double, std::size_t>> emission_unknown;
  std::map<std::size_t, double> priors;
  std::optional<std::uint64_t> declared_vocabulary;
  bool seen_meta = false;

  auto tag_index = [&](std::string_view code, std::size_t line) {
    auto tag = registry.find(code);
    if (!tag) throw UnknownTagError(std::string(code), line);
    return static_cast<std::size_t>(tag->index());
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw.front() == '#') continue;
    if (raw == "TRANSITIONS") { section = Section::kTransitions; continue; }
    if (raw == "EMISSIONS") { section = Section::kEmissions; continue; }
    if (raw == "META") { section = Section::kMeta; seen_meta = true; continue; }

    const auto fields = split_tabs(raw);
    switch (section) {
      case Section::kNone:
        throw FormatError(line, "row outside any section");
      case Section::kTransitions: {
        if (fields.size() != 3) throw FormatError(line, "expected context, outcome, log10-prob");
        const std::size_t context = fields[0] == kStartName ? n : tag_index(fields[0], line);
        const double value = parse_double(fields[2], line);
        auto& row = transition_rows[context];
        row.line = line;
        if (fields[1] == kDefaultName) {
          row.fallback = value;
        } else {
          const std::size_t outcome = fields[1] == kEndName ? n : tag_index(fields[1], line);
          if (!row.values.emplace(outcome, value).second) {
            throw FormatError(line, "duplicate transition row");
          }
        }
        break;
      }
      case Section::kEmissions: {
        if (fields.size() != 3) throw FormatError(line, "expected tag, word, log10-prob");
        const std::size_t tag = tag_index(fields[0], line);
        const double value = parse_double(fields[2], line);
        if (fields[1] == kUnknownName) {
          emission_unknown[tag] = {value, line};
        } else if (!emission_rows[tag].emplace(unescape_word(fields[1]), value).second) {
          throw FormatError(line, "duplicate emission row");
        }
        break;
      }
      case Section::kMeta: {
        if (fields.size() == 3 && fields[0] == "prior") {
          priors[tag_index(fields[1], line)] = parse_double(fields[2], line);
          break;
        }
        if (fields.size() != 2) throw FormatError(line, "expected key and value");
        const auto key = fields[0];
        const auto value = fields[1];
        if (key == "corpus") model.corpus_name_ = std::string(value);
        else if (key == "tokens") model.token_count_ = parse_count(value, line);
        else if (key == "sentences") model.sentence_count_ = parse_count(value, line);
        else if (key == "vocabulary") declared_vocabulary = parse_count(value, line);
        else if (key == "transition_k") model.smoothing_.transition_k = parse_double(value, line);
        else if (key == "emission_k") model.smoothing_.emission_k = parse_double(value, line);
        else if (key == "unknown_mass") model.smoothing_.unknown_mass = parse_double(value, line);
        else throw FormatError(line, "unknown META key '" + std::string(key) + "'");
        break;
      }
    }
  }
  if (!seen_meta) throw FormatError(line, "missing META section");
  check_smoothing(model.smoothing_);

  auto check_sum = [](double sum, std::size_t at, const std::string& what) {
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
      throw FormatError(at, what + " does not sum to 1");
    }
  };

  model.transitions_.assign((n + 1) * (n + 1), -std::log(static_cast<double>(n + 1)));
  for (const auto& [context, row] : transition_rows) {
    const double fallback = row.fallback ? *row.fallback * kLn10 : -INFINITY;
    double sum = 0.0;
    for (std::size_t col = 0; col <= n; ++col) {
      const auto hit = row.values.find(col);
      const double value = hit == row.values.end() ? fallback : hit->second * kLn10;
      model.transitions_[context * (n + 1) + col] = value;
      sum += std::exp(value);
    }
    check_sum(sum, row.line, "transition distribution");
  }

  std::size_t next_id = 0;
  for (const auto& [tag, words] : emission_rows) {
    for (const auto& [word, value] : words) {
      if (model.vocabulary_.try_emplace(word, static_cast<std::uint32_t>(next_id)).second) ++next_id;
    }
  }
  if (declared_vocabulary && *declared_vocabulary != model.vocabulary_.size()) {
    throw FormatError(line, "vocabulary size does not match the emission rows");
  }
  const double vocabulary = static_cast<double>(model.vocabulary_.size());
  model.emissions_.resize(n);
  model.emission_fallback_.assign(n, -std::log(vocabulary + 1.0));
  for (std::size_t t = 0; t < n; ++t) {
    const auto rows = emission_rows.find(t);
    const auto unknown = emission_unknown.find(t);
    if (rows == emission_rows.end() && unknown == emission_unknown.end()) continue;
    const double fallback = unknown == emission_unknown.end() ? -INFINITY : unknown->second.first * kLn10;
    model.emission_fallback_[t] = fallback;
    double sum = std::exp(fallback);
    std::size_t listed = 0;
    if (rows != emission_rows.end()) {
      for (const auto& [word, value] : rows->second) {
        model.emissions_[t][model.vocabulary_.at(word)] = value * kLn10;
        sum += std::exp(value * kLn10);
        ++listed;
      }
    }
    sum += (vocabulary - static_cast<double>(listed)) * std::exp(fallback);
    check_sum(sum, unknown == emission_unknown.end() ? line : unknown->second.second,
              "emission distribution of " + registry.entries()[t].code);
  }

  model.priors_.assign(n, -std::log(static_cast<double>(n)));
  if (!priors.empty()) {
    double sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const auto hit = priors.find(t);
      model.priors_[t] = hit == priors.end() ? -INFINITY : hit->second * kLn10;
      sum += std::exp(model.priors_[t]);
    }
    check_sum(sum, line, "tag prior");
  }
  return model;
}

}  // namespace spantag
