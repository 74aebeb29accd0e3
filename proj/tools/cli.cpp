#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "spantag/bias.hpp"
#include "spantag/corpus_io.hpp"
#include "spantag/errors.hpp"
#include "spantag/lexicon.hpp"
#include "spantag/tagger.hpp"
#include "spantag/tagset.hpp"
#include "spantag/tokenizer.hpp"

namespace spantag::cli {

namespace {

struct TagsetOptions {
  std::string category;
  std::vector<std::string> where;
};

struct TokenizeOptions {
  std::string input = "-";
  std::string output;
  std::string abbreviations;
  std::string multiwords;
};

struct TrainOptions {
  std::vector<std::string> corpora;
  std::string output;
  Smoothing smoothing;
  bool strict = true;
};

struct TagOptions {
  std::string input = "-";
  std::string output;
  std::string lexicon = "seed";
  std::string model;
  std::string rules;
  std::string abbreviations;
  std::string multiwords;
  bool no_enclitic_split = false;
  bool seed_lexicon_only = false;
  std::size_t jobs = 1;
};

struct ValidateOptions {
  std::string input;
  std::string rules;
};

struct EvalOptions {
  std::string gold;
  std::string predicted;
  std::string lexicon;
  std::string confusion;
  bool strict = true;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or to `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback), path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("error writing " + (path_.empty() ? "output" : path_));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

Lexicon load_lexicon(const std::string& source) {
  if (source.empty() || source == "seed") return Lexicon::seed();
  return Lexicon::load(source);
}

TokenizerConfig tokenizer_config(const std::string& abbreviations, const std::string& multiwords) {
  auto config = TokenizerConfig::defaults();
  if (!abbreviations.empty()) config.load_abbreviations(abbreviations);
  if (!multiwords.empty()) config.load_multiwords(multiwords);
  return config;
}

int cmd_tagset(const TagsetOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> filters;
  if (!opts.category.empty()) filters.emplace_back("category", opts.category);
  for (const auto& clause : opts.where) {
    const auto eq = clause.find('=');
    if (eq == std::string::npos) {
      err << "error: --where expects attribute=value, got '" << clause << "'\n";
      return kExitUsage;
    }
    filters.emplace_back(clause.substr(0, eq), clause.substr(eq + 1));
  }
  for (const auto& [attribute, value] : filters) {
    FeatureBundle probe;
    if (!set_attribute(probe, attribute, value)) {
      err << "error: bad filter " << attribute << '=' << value << '\n';
      return kExitUsage;
    }
  }
  const auto tags = list_by([&](const FeatureBundle& bundle) {
    return std::all_of(filters.begin(), filters.end(), [&](const auto& f) {
      return attribute_value(bundle, f.first) == std::optional<std::string_view>(f.second);
    });
  });
  write_registry_tsv(out, tags);
  return kExitOk;
}

int cmd_tokenize(const TokenizeOptions& opts, std::ostream& out) {
  const Tokenizer tokenizer(tokenizer_config(opts.abbreviations, opts.multiwords));
  const auto text = read_all(opts.input);
  const auto tokens = tokenizer.tokenize(text);
  Sink sink(opts.output, out);
  for (const auto sentence : sentence_split(tokens)) {
    for (const auto& token : sentence) {
      sink.get() << token.surface << '\t' << to_string(token.kind) << '\n';
    }
    sink.get() << '\n';
  }
  sink.finish();
  return kExitOk;
}

int cmd_train(const TrainOptions& opts, std::ostream& out) {
  std::vector<TaggedSentence> corpus;
  std::string name;
  for (const auto& path : opts.corpora) {
    auto doc = read_vertical(path, opts.strict);
    if (!opts.strict) {
      // Unknown codes cannot be counted; drop the sentences holding them.
      std::erase_if(doc.sentences, [](const VerticalSentence& s) {
        return std::any_of(s.entries.begin(), s.entries.end(),
                           [](const VerticalEntry& e) { return !e.tag; });
      });
    }
    auto tagged = to_tagged(doc);
    std::move(tagged.begin(), tagged.end(), std::back_inserter(corpus));
    if (!name.empty()) name += ',';
    name += path;
  }
  const auto model = HmmModel::train(corpus, opts.smoothing, name);
  model.save(opts.output);

  std::set<Tag> used;
  for (const auto& sentence : corpus) {
    for (const auto& item : sentence) used.insert(item.tag);
  }
  out << "sentences\t" << model.sentence_count() << '\n';
  out << "tokens\t" << model.token_count() << '\n';
  out << "vocabulary\t" << model.vocabulary_size() << '\n';
  out << "tags_used\t" << used.size() << '\n';
  out << "model\t" << opts.output << '\n';
  return kExitOk;
}

int cmd_tag(const TagOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.seed_lexicon_only && opts.lexicon != "seed") {
    err << "error: --seed-lexicon-only conflicts with --lexicon " << opts.lexicon << '\n';
    return kExitUsage;
  }
  const auto lexicon = load_lexicon(opts.seed_lexicon_only ? "seed" : opts.lexicon);
  const auto model = HmmModel::load(opts.model);
  const auto rules = opts.rules.empty() ? RuleSet() : RuleSet::load(opts.rules);
  const Tokenizer tokenizer(tokenizer_config(opts.abbreviations, opts.multiwords));
  const auto text = read_all(opts.input);

  PipelineOptions options;
  options.enclitic_split = !opts.no_enclitic_split;
  options.jobs = opts.jobs;
  const Pipeline pipeline(model, lexicon, rules, tokenizer, options);
  const auto tagged = pipeline.tag_text(text);

  Sink sink(opts.output, out);
  write_vertical(sink.get(), from_tagged(tagged));
  sink.finish();
  const auto fallbacks = std::count_if(tagged.begin(), tagged.end(),
                                       [](const TaggedOutput& s) { return s.fallback; });
  if (fallbacks > 0) {
    err << "warning: " << fallbacks << " sentence(s) decoded without bias rules\n";
  }
  return kExitOk;
}

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
  const auto rules = opts.rules.empty() ? RuleSet() : RuleSet::load(opts.rules);
  VerticalDocument doc;
  try {
    doc = read_vertical(opts.input, /*strict=*/false);
  } catch (const FormatError& e) {
    out << opts.input << ':' << e.what() << '\n';
    err << "invalid: malformed vertical file\n";
    return kExitInvalid;
  }

  std::size_t problems = 0;
  for (const auto& issue : doc.unknown_tags) {
    out << opts.input << ":line " << issue.line << ": unknown tag '" << issue.code << "'\n";
    ++problems;
  }
  for (const auto& sentence : doc.sentences) {
    for (std::size_t i = 0; i + 1 < sentence.entries.size(); ++i) {
      const auto& left = sentence.entries[i];
      const auto& right = sentence.entries[i + 1];
      if (!left.tag || !right.tag) continue;
      if (const auto* rule = rules.first_violated(*left.tag, *right.tag)) {
        out << opts.input << ":line " << left.line << ": " << left.code << ' ' << right.code
            << " violates rule at line " << rule->id << " ("
            << (rule->kind == RuleKind::kForbid ? "FORBID " : "REQUIRE ") << rule->left.text()
            << ' ' << rule->right.text() << ")\n";
        ++problems;
      }
    }
  }
  if (problems > 0) {
    err << "invalid: " << problems << " problem(s) in " << opts.input << '\n';
    return kExitInvalid;
  }
  err << "ok: " << doc.sentences.size() << " sentence(s), " << doc.token_count()
      << " token(s)\n";
  return kExitOk;
}

int cmd_eval(const EvalOptions& opts, std::ostream& out) {
  const auto gold = read_vertical(opts.gold, opts.strict);
  const auto predicted = read_vertical(opts.predicted, opts.strict);
  std::optional<Lexicon> lexicon;
  if (!opts.lexicon.empty()) lexicon = load_lexicon(opts.lexicon);
  const auto report = evaluate(gold, predicted, lexicon ? &*lexicon : nullptr);
  if (opts.confusion.empty()) {
    write_report(out, report);
  } else {
    std::ostringstream full;
    write_report(full, report);
    const auto text = full.str();
    const auto split = text.find("\n\n");
    out << text.substr(0, split + 1);
    Sink sink(opts.confusion, out);
    sink.get() << text.substr(split + 2);
    sink.finish();
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanish morphosyntactic tagging toolkit", "spantag"};
  app.require_subcommand(1);

  TagsetOptions tagset;
  auto* tagset_cmd = app.add_subcommand("tagset", "Print the tag registry as TSV");
  tagset_cmd->add_option("--category", tagset.category, "Keep tags of this category");
  tagset_cmd->add_option("--where", tagset.where, "Keep tags with attribute=value");

  TokenizeOptions tokenize;
  auto* tokenize_cmd = app.add_subcommand("tokenize", "Print one token per line with its kind");
  tokenize_cmd->add_option("input", tokenize.input, "UTF-8 text file, '-' for stdin");
  tokenize_cmd->add_option("-o,--output", tokenize.output, "Output file");
  tokenize_cmd->add_option("--abbreviations", tokenize.abbreviations, "Abbreviation list");
  tokenize_cmd->add_option("--multiwords", tokenize.multiwords, "Multiword list");

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Train a bigram model from vertical corpora");
  train_cmd->add_option("corpus", train.corpora, "Vertical files")->required();
  train_cmd->add_option("-o,--output", train.output, "Model file")->required();
  train_cmd->add_option("--transition-k", train.smoothing.transition_k, "Add-k for transitions");
  train_cmd->add_option("--emission-k", train.smoothing.emission_k, "Add-k for emissions");
  train_cmd->add_option("--unknown-mass", train.smoothing.unknown_mass,
                        "Emission mass for unknown words");
  train_cmd->add_flag("--strict,!--no-strict", train.strict, "Reject unknown tags");

  TagOptions tag;
  auto* tag_cmd = app.add_subcommand("tag", "Tag raw text, writing vertical output");
  tag_cmd->add_option("input", tag.input, "UTF-8 text file, '-' for stdin");
  tag_cmd->add_option("-m,--model", tag.model, "Model file")->required();
  tag_cmd->add_option("-l,--lexicon", tag.lexicon, "Lexicon file, or 'seed'");
  tag_cmd->add_option("-r,--rules", tag.rules, "Bias rule file");
  tag_cmd->add_option("-o,--output", tag.output, "Output file");
  tag_cmd->add_option("--abbreviations", tag.abbreviations, "Abbreviation list");
  tag_cmd->add_option("--multiwords", tag.multiwords, "Multiword list");
  tag_cmd->add_flag("--no-enclitic-split", tag.no_enclitic_split, "Keep verb+clitic groups whole");
  tag_cmd->add_flag("--seed-lexicon-only", tag.seed_lexicon_only, "Use the built-in lexicon only");
  tag_cmd->add_option("-j,--jobs", tag.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ValidateOptions validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check tags of a vertical file against the registry");
  validate_cmd->add_option("input", validate.input, "Vertical file")->required();
  validate_cmd->add_option("-r,--rules", validate.rules, "Bias rule file");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compare predicted tags against gold");
  eval_cmd->add_option("gold", eval.gold, "Gold vertical file")->required();
  eval_cmd->add_option("predicted", eval.predicted, "Predicted vertical file")->required();
  eval_cmd->add_option("-l,--lexicon", eval.lexicon, "Lexicon for unknown-token accuracy");
  eval_cmd->add_option("--confusion", eval.confusion, "Write the confusion TSV here");
  eval_cmd->add_flag("--strict,!--no-strict", eval.strict, "Reject unknown tags");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tagset_cmd) return cmd_tagset(tagset, out, err);
    if (*tokenize_cmd) return cmd_tokenize(tokenize, out);
    if (*train_cmd) return cmd_train(train, out);
    if (*tag_cmd) return cmd_tag(tag, out, err);
    if (*validate_cmd) return cmd_validate(validate, out, err);
    if (*eval_cmd) return cmd_eval(eval, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace spantag::cli
