// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0
//
// addrtag command line: synthetic address-corpus generation, tagger
// training, tagging and evaluation in one binary.
//
//   generate        render BIO-tagged sentences for one generation pattern
//   lowercase-dup   append a lowercased copy of every sentence
//   split           shuffle and cut a corpus into train/validation/test
//   train           fit the averaged-perceptron tagger
//   tag             label raw text or token records with a trained model
//   eval            confusion matrix, token accuracy and P/R/F1 reports
//   analyze         mine conditioned error patterns from gold vs predicted
//   gazetteer-check validate name lists and print counts
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "addrtag/analysis.hpp"
#include "addrtag/corpus_io.hpp"
#include "addrtag/error.hpp"
#include "addrtag/generate.hpp"
#include "addrtag/metrics.hpp"
#include "addrtag/model.hpp"
#include "addrtag/train.hpp"
#include "addrtag/util.hpp"

namespace {

using addrtag::corpus;
using addrtag::corpus_format;
using ordered_json = nlohmann::ordered_json;

constexpr const char* version_string = "0.1.0";

struct global_options {
  std::uint64_t seed = 42;
  std::string streets_path;
  std::string municipalities_path;
  bool json = false;
  bool quiet = false;
};

std::string env_or(const char* name, const char* fallback) {
  const char* value = std::getenv(name);
  return value != nullptr ? value : fallback;
}

// Run manifest: what ran, with which seed, over which input bytes.
class manifest {
 public:
  manifest(const std::string& command, const global_options& options)
      : json_(options.json), quiet_(options.quiet) {
    data_["command"] = command;
    data_["version"] = version_string;
    data_["seed"] = options.seed;
    data_["inputs"] = ordered_json::object();
  }

  void input(const std::string& path) {
    data_["inputs"][path] = addrtag::fingerprint_hex(addrtag::read_file(path));
  }
  void output(const std::string& path) { data_["outputs"].push_back(path); }

  template <typename T>
  void set(const std::string& key, const T& value) {
    data_[key] = value;
  }
  ordered_json& data() { return data_; }

  void finish() const {
    if (json_) std::cout << data_.dump(2) << '\n';
  }

  void info(const std::string& line) const {
    if (!quiet_) std::cerr << line << '\n';
  }

  // Human-readable result line; suppressed in JSON mode where the manifest
  // carries the same value.
  void result(const std::string& line) const {
    if (!json_) std::cout << line << '\n';
  }

 private:
  ordered_json data_;
  bool json_;
  bool quiet_;
};

addrtag::gazetteer load_gazetteer(const global_options& options,
                                  manifest& m) {
  m.input(options.streets_path);
  m.input(options.municipalities_path);
  return addrtag::gazetteer::load(options.streets_path,
                                  options.municipalities_path);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * fraction);
  return buf;
}

std::string metric_or_dash(const std::optional<double>& value) {
  if (!value) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *value);
  return buf;
}

std::vector<double> parse_ratios(const std::string& text) {
  std::vector<double> ratios;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string field = comma == std::string::npos
                            ? text.substr(start)
                            : text.substr(start, comma - start);
    ratios.push_back(addrtag::parse_double(addrtag::trim(field)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ratios;
}

ordered_json report_to_json(const addrtag::eval_report& report) {
  ordered_json out;
  out["token_accuracy"] = report.token_accuracy;
  ordered_json matrix = ordered_json::array();
  for (addrtag::tag g : addrtag::all_tags()) {
    ordered_json row = ordered_json::array();
    for (addrtag::tag p : addrtag::all_tags()) {
      row.push_back(report.matrix.at(g, p));
    }
    matrix.push_back(row);
  }
  out["confusion_matrix"] = matrix;
  ordered_json per_class = ordered_json::object();
  for (addrtag::tag t : addrtag::all_tags()) {
    const auto& m = report.per_class[addrtag::index_of(t)];
    ordered_json entry;
    entry["support"] = m.support;
    if (m.precision) entry["precision"] = *m.precision;
    if (m.recall) entry["recall"] = *m.recall;
    if (m.f1) entry["f1"] = *m.f1;
    per_class[std::string(addrtag::to_string(t))] = entry;
  }
  out["per_class"] = per_class;
  ordered_json per_entity = ordered_json::object();
  for (std::size_t e = 0; e < addrtag::entity_type_count; ++e) {
    const auto& m = report.per_entity[e];
    ordered_json entry;
    entry["gold"] = m.gold;
    entry["predicted"] = m.predicted;
    entry["true_positives"] = m.true_positives;
    if (m.precision) entry["precision"] = *m.precision;
    if (m.recall) entry["recall"] = *m.recall;
    if (m.f1) entry["f1"] = *m.f1;
    per_entity[std::string(
        addrtag::to_string(static_cast<addrtag::entity_type>(e)))] = entry;
  }
  out["per_entity"] = per_entity;
  return out;
}

void print_report(const addrtag::eval_report& report, manifest& m) {
  m.result(report.matrix.to_text());
  m.result("token accuracy: " + percent(report.token_accuracy));
  m.result("");
  m.result("per-class metrics (precision / recall / F1 / support):");
  for (addrtag::tag t : addrtag::all_tags()) {
    const auto& metrics = report.per_class[addrtag::index_of(t)];
    m.result("  " + std::string(addrtag::to_string(t)) + ": " +
             metric_or_dash(metrics.precision) + " / " +
             metric_or_dash(metrics.recall) + " / " +
             metric_or_dash(metrics.f1) + " / " +
             std::to_string(metrics.support));
  }
  m.result("");
  m.result("entity exact-span metrics (precision / recall / F1 / gold):");
  for (std::size_t e = 0; e < addrtag::entity_type_count; ++e) {
    const auto& metrics = report.per_entity[e];
    m.result("  " +
             std::string(addrtag::to_string(
                 static_cast<addrtag::entity_type>(e))) +
             ": " + metric_or_dash(metrics.precision) + " / " +
             metric_or_dash(metrics.recall) + " / " +
             metric_or_dash(metrics.f1) + " / " +
             std::to_string(metrics.gold));
  }
  m.set("report", report_to_json(report));
}

// ---- subcommand bodies ----------------------------------------------------

int run_generate(const global_options& options, int pattern, std::size_t count,
                 bool noise, const std::string& templates_path,
                 const std::string& out_path, const std::string& format_name) {
  manifest m("generate", options);
  auto g = load_gazetteer(options, m);
  m.input(templates_path);
  auto bank = addrtag::template_bank::load(templates_path);
  auto cfg = addrtag::generation_config::for_pattern(pattern, count,
                                                     options.seed, noise);
  corpus c = addrtag::generate(cfg, g, bank);
  addrtag::write_corpus(c, out_path, addrtag::parse_corpus_format(format_name));
  m.output(out_path);
  m.set("pattern", pattern);
  m.set("count", c.size());
  m.set("noise", noise);
  m.info("generated " + std::to_string(c.size()) + " sentences (pattern " +
         std::to_string(pattern) + (noise ? ", with noise" : "") + ", seed " +
         std::to_string(options.seed) + ") -> " + out_path);
  m.finish();
  return 0;
}

int run_lowercase_dup(const global_options& options, const std::string& in_path,
                      const std::string& out_path,
                      const std::string& format_name) {
  manifest m("lowercase-dup", options);
  auto format = addrtag::parse_corpus_format(format_name);
  m.input(in_path);
  corpus c = addrtag::read_corpus(in_path, format);
  corpus doubled = addrtag::lowercase_duplicate(c);
  addrtag::write_corpus(doubled, out_path, format);
  m.output(out_path);
  m.set("sentences_in", c.size());
  m.set("sentences_out", doubled.size());
  m.info(std::to_string(c.size()) + " -> " + std::to_string(doubled.size()) +
         " sentences -> " + out_path);
  m.finish();
  return 0;
}

int run_split(const global_options& options, const std::string& in_path,
              const std::string& ratios_text, const std::string& out_prefix,
              const std::string& format_name) {
  manifest m("split", options);
  auto format = addrtag::parse_corpus_format(format_name);
  auto ratios = parse_ratios(ratios_text);
  if (ratios.size() != 3) {
    throw addrtag::error("--ratios needs three comma-separated numbers");
  }
  m.input(in_path);
  corpus c = addrtag::read_corpus(in_path, format);
  auto split =
      addrtag::split_corpus(c, ratios[0], ratios[1], ratios[2], options.seed);
  std::string suffix = format == corpus_format::jsonl ? ".jsonl" : ".conll";
  struct part {
    const corpus* c;
    std::string path;
  };
  for (const auto& [pc, path] :
       {part{&split.train, out_prefix + ".train" + suffix},
        part{&split.validation, out_prefix + ".val" + suffix},
        part{&split.test, out_prefix + ".test" + suffix}}) {
    addrtag::write_corpus(*pc, path, format);
    m.output(path);
    m.info(std::to_string(pc->size()) + " sentences -> " + path);
  }
  m.set("sizes", ordered_json{{"train", split.train.size()},
                              {"validation", split.validation.size()},
                              {"test", split.test.size()}});
  m.finish();
  return 0;
}

int run_train(const global_options& options, const std::string& train_path,
              const std::string& val_path, int epochs, int patience,
              const std::string& model_path, const std::string& format_name) {
  manifest m("train", options);
  auto format = addrtag::parse_corpus_format(format_name);
  auto g = load_gazetteer(options, m);
  m.input(train_path);
  m.input(val_path);
  corpus train_corpus = addrtag::read_corpus(train_path, format);
  corpus val_corpus = addrtag::read_corpus(val_path, format);

  addrtag::train_config cfg;
  cfg.epochs = epochs;
  cfg.seed = options.seed;
  cfg.early_stop_patience = patience;
  auto model = addrtag::train(train_corpus, val_corpus, g, cfg);
  addrtag::save_model(model, model_path);
  m.output(model_path);

  double val_accuracy = addrtag::token_accuracy_on(model, val_corpus, g);
  m.set("epochs_run", model.metadata.epochs_run);
  m.set("best_epoch", model.metadata.best_epoch);
  m.set("validation_accuracy", val_accuracy);
  m.info("trained on " + std::to_string(train_corpus.size()) +
         " sentences, best epoch " + std::to_string(model.metadata.best_epoch) +
         "/" + std::to_string(model.metadata.epochs_run) +
         ", validation accuracy " + percent(val_accuracy));
  m.result("validation accuracy: " + percent(val_accuracy));
  m.finish();
  return 0;
}

int run_tag(const global_options& options, const std::string& model_path,
            const std::string& in_path, const std::string& out_path,
            const std::string& input_format, const std::string& format_name) {
  manifest m("tag", options);
  auto g = load_gazetteer(options, m);
  m.input(model_path);
  auto model = addrtag::load_model(model_path);
  m.input(in_path);

  std::vector<std::vector<std::string>> inputs;
  if (input_format == "text") {
    std::string text = addrtag::read_file(in_path);
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string::npos) nl = text.size();
      auto tokens = addrtag::whitespace_tokenize(
          std::string_view(text).substr(start, nl - start));
      if (!tokens.empty()) inputs.push_back(std::move(tokens));
      start = nl + 1;
    }
  } else if (input_format == "jsonl") {
    corpus c = addrtag::read_corpus(in_path, corpus_format::jsonl);
    for (auto& s : c.sentences) inputs.push_back(s.tokens);
  } else {
    throw addrtag::error("unknown input format \"" + input_format + "\"");
  }

  corpus tagged;
  tagged.name = "tagged";
  for (auto& tokens : inputs) {
    tagged.sentences.push_back(addrtag::tag_tokens(model, std::move(tokens), g));
  }
  addrtag::write_corpus(tagged, out_path,
                        addrtag::parse_corpus_format(format_name));
  m.output(out_path);
  m.set("sentences", tagged.size());
  m.info("tagged " + std::to_string(tagged.size()) + " sentences -> " +
         out_path);
  m.finish();
  return 0;
}

int run_eval(const global_options& options, const std::string& cm_path,
             const std::string& cm_b_path, const std::string& gold_path,
             const std::string& pred_path, const std::string& model_path,
             const std::string& format_name) {
  manifest m("eval", options);
  auto format = addrtag::parse_corpus_format(format_name);

  if (!cm_path.empty()) {
    m.input(cm_path);
    auto cm = addrtag::confusion_matrix::read(cm_path);
    double accuracy = addrtag::token_accuracy(cm);
    m.set("token_accuracy", accuracy);
    m.result("token accuracy: " + percent(accuracy));
    if (!cm_b_path.empty()) {
      m.input(cm_b_path);
      auto cm_b = addrtag::confusion_matrix::read(cm_b_path);
      double accuracy_b = addrtag::token_accuracy(cm_b);
      double delta = addrtag::accuracy_delta_pp(cm, cm_b);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%+.2f", delta);
      m.set("token_accuracy_b", accuracy_b);
      m.set("accuracy_delta_pp", delta);
      m.result("token accuracy (second matrix): " + percent(accuracy_b));
      m.result(std::string("accuracy delta: ") + buf + " pp");
    }
    m.finish();
    return 0;
  }

  if (gold_path.empty()) {
    throw addrtag::error("eval needs --cm, or --gold with --pred or --model");
  }
  m.input(gold_path);
  corpus gold = addrtag::read_corpus(gold_path, format);
  corpus pred;
  if (!pred_path.empty()) {
    m.input(pred_path);
    pred = addrtag::read_corpus(pred_path, format);
  } else if (!model_path.empty()) {
    auto g = load_gazetteer(options, m);
    m.input(model_path);
    auto model = addrtag::load_model(model_path);
    pred.name = "predicted";
    for (const auto& s : gold.sentences) {
      pred.sentences.push_back(addrtag::tag_tokens(model, s.tokens, g));
    }
  } else {
    throw addrtag::error("eval needs --pred or --model alongside --gold");
  }
  auto report = addrtag::evaluate(gold, pred);
  print_report(report, m);
  m.finish();
  return 0;
}

int run_analyze(const global_options& options, const std::string& gold_path,
                const std::string& pred_path, std::size_t top_k,
                const std::string& format_name) {
  manifest m("analyze", options);
  auto format = addrtag::parse_corpus_format(format_name);
  m.input(gold_path);
  m.input(pred_path);
  corpus gold = addrtag::read_corpus(gold_path, format);
  corpus pred = addrtag::read_corpus(pred_path, format);
  auto report = addrtag::mine_error_patterns(gold, pred, top_k);

  ordered_json patterns = ordered_json::array();
  if (report.patterns.empty()) {
    m.result("no errors found");
  } else {
    m.result("error patterns (rate / support):");
  }
  for (const auto& p : report.patterns) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", p.rate);
    m.result("  " + std::string(buf) + " / " + std::to_string(p.support) +
             "  " + p.description);
    patterns.push_back(ordered_json{{"description", p.description},
                                    {"rate", p.rate},
                                    {"support", p.support}});
  }
  m.set("patterns", patterns);
  m.finish();
  return 0;
}

int run_gazetteer_check(const global_options& options) {
  manifest m("gazetteer-check", options);
  auto g = load_gazetteer(options, m);
  m.set("streets", g.size(addrtag::name_kind::street));
  m.set("municipalities", g.size(addrtag::name_kind::municipality));
  m.result("streets: " + std::to_string(g.size(addrtag::name_kind::street)));
  m.result("municipalities: " +
           std::to_string(g.size(addrtag::name_kind::municipality)));
  m.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"address NER toolkit: synthetic corpus generation, sequence "
               "tagging and evaluation"};
  app.require_subcommand(1);

  global_options options;
  options.streets_path = env_or("ADDRTAG_GAZETTEER_STREETS",
                                "data/gazetteers/streets.txt");
  options.municipalities_path = env_or("ADDRTAG_GAZETTEER_MUNICIPALITIES",
                                       "data/gazetteers/municipalities.txt");
  app.add_option("--seed", options.seed, "random seed")->capture_default_str();
  app.add_option("--gazetteer-streets", options.streets_path,
                 "street name list")->capture_default_str();
  app.add_option("--gazetteer-municipalities", options.municipalities_path,
                 "municipality name list")->capture_default_str();
  app.add_flag("--json", options.json, "print a JSON run manifest to stdout");
  app.add_flag("--quiet", options.quiet, "suppress progress output");

  // generate
  auto* generate = app.add_subcommand("generate",
                                      "render tagged sentences for a pattern");
  int pattern = 1;
  std::size_t count = 1000;
  bool noise = false;
  std::string templates_path = "data/templates/bank.jsonl";
  std::string out_path;
  std::string format_name = "jsonl";
  generate->add_option("--pattern", pattern, "generation pattern (1-6)")
      ->required();
  generate->add_option("--count", count, "sentences to generate")
      ->capture_default_str();
  generate->add_flag("--noise", noise, "inject hesitation fillers");
  generate->add_option("--templates", templates_path, "template bank file")
      ->capture_default_str();
  generate->add_option("--out", out_path, "output corpus")->required();
  generate->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // lowercase-dup
  auto* lowercase =
      app.add_subcommand("lowercase-dup", "append lowercased copies");
  std::string in_path;
  lowercase->add_option("--in", in_path, "input corpus")->required();
  lowercase->add_option("--out", out_path, "output corpus")->required();
  lowercase->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // split
  auto* split = app.add_subcommand("split", "train/validation/test split");
  std::string ratios_text = "0.8,0.15,0.05";
  std::string out_prefix;
  split->add_option("--in", in_path, "input corpus")->required();
  split->add_option("--ratios", ratios_text, "three ratios summing to 1")
      ->capture_default_str();
  split->add_option("--out-prefix", out_prefix, "output path prefix")
      ->required();
  split->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // train
  auto* train = app.add_subcommand("train", "train the perceptron tagger");
  std::string train_path;
  std::string val_path;
  std::string model_path;
  int epochs = 15;
  int patience = 3;
  train->add_option("--train", train_path, "training corpus")->required();
  train->add_option("--val", val_path, "validation corpus")->required();
  train->add_option("--epochs", epochs, "maximum epochs")
      ->capture_default_str();
  train->add_option("--patience", patience,
                    "early-stop patience (non-improving epochs)")
      ->capture_default_str();
  train->add_option("--out-model", model_path, "model output path")
      ->required();
  train->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // tag
  auto* tag_cmd = app.add_subcommand("tag", "tag raw text or token records");
  std::string input_format = "text";
  tag_cmd->add_option("--model", model_path, "trained model")->required();
  tag_cmd->add_option("--in", in_path, "input file")->required();
  tag_cmd->add_option("--out", out_path, "output corpus")->required();
  tag_cmd->add_option("--input-format", input_format,
                      "text (one sentence per line) or jsonl")
      ->capture_default_str();
  tag_cmd->add_option("--format", format_name, "output format: jsonl or conll")
      ->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "accuracy and P/R/F1 reports");
  std::string cm_path;
  std::string cm_b_path;
  std::string gold_path;
  std::string pred_path;
  eval_cmd->add_option("--cm", cm_path, "confusion matrix fixture");
  eval_cmd->add_option("--cm-b", cm_b_path,
                       "second matrix; prints the accuracy delta");
  eval_cmd->add_option("--gold", gold_path, "gold corpus");
  eval_cmd->add_option("--pred", pred_path, "predicted corpus");
  eval_cmd->add_option("--model", model_path,
                       "model to tag the gold tokens with");
  eval_cmd->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "mine error patterns");
  std::size_t top_k = 10;
  analyze->add_option("--gold", gold_path, "gold corpus")->required();
  analyze->add_option("--pred", pred_path, "predicted corpus")->required();
  analyze->add_option("--top-k", top_k, "confusion pairs to detail")
      ->capture_default_str();
  analyze->add_option("--format", format_name, "jsonl or conll")
      ->capture_default_str();

  // gazetteer-check
  auto* gazetteer_check =
      app.add_subcommand("gazetteer-check", "validate gazetteer files");

  // Global flags remain usable after the subcommand name.
  for (auto* sub : {generate, lowercase, split, train, tag_cmd, eval_cmd,
                    analyze, gazetteer_check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (generate->parsed()) {
      return run_generate(options, pattern, count, noise, templates_path,
                          out_path, format_name);
    }
    if (lowercase->parsed()) {
      return run_lowercase_dup(options, in_path, out_path, format_name);
    }
    if (split->parsed()) {
      return run_split(options, in_path, ratios_text, out_prefix, format_name);
    }
    if (train->parsed()) {
      return run_train(options, train_path, val_path, epochs, patience,
                       model_path, format_name);
    }
    if (tag_cmd->parsed()) {
      return run_tag(options, model_path, in_path, out_path, input_format,
                     format_name);
    }
    if (eval_cmd->parsed()) {
      return run_eval(options, cm_path, cm_b_path, gold_path, pred_path,
                      model_path, format_name);
    }
    if (analyze->parsed()) {
      return run_analyze(options, gold_path, pred_path, top_k, format_name);
    }
    if (gazetteer_check->parsed()) {
      return run_gazetteer_check(options);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
