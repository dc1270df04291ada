#include "commands.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "comparo/checkpoint.hpp"
#include "comparo/corpus.hpp"
#include "comparo/embeddings.hpp"
#include "comparo/errors.hpp"
#include "comparo/eval.hpp"
#include "comparo/grad_check.hpp"
#include "comparo/preproc.hpp"
#include "comparo/resources.hpp"
#include "comparo/synthetic.hpp"
#include "comparo/tagger.hpp"
#include "comparo/trainer.hpp"
#include "comparo/weak_label.hpp"
#include "io.hpp"

namespace comparo::cli {
namespace {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

/// Runs `parse` on the file contents, reporting library errors as data
/// errors prefixed with the path.
template <class Parse>
auto parse_file(const std::string& path, Parse&& parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const comparo::Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

Dataset load_corpus(const std::string& path) {
  return parse_file(path, [](const std::string& text) { return parse_corpus(text); });
}

EmbeddingTable load_embeddings(const std::string& path) {
  return parse_file(path, [](const std::string& text) { return load_glove(text); });
}

Checkpoint load_checkpoint(const std::string& path) {
  const auto bytes = read_binary_file(path);
  try {
    return load_params(bytes);
  } catch (const comparo::Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

TagLexicon load_lexicon(const Settings& settings) {
  const auto lexicon = settings.find("lexicon");
  const auto suffixes = settings.find("suffixes");
  if (!lexicon && !suffixes) return TagLexicon::builtin();
  const std::string lexicon_text =
      lexicon ? read_text_file(*lexicon) : std::string(resources::penn_lexicon());
  const std::string suffix_text =
      suffixes ? read_text_file(*suffixes) : std::string(resources::suffix_rules());
  try {
    return TagLexicon::from_text(lexicon_text, suffix_text);
  } catch (const comparo::Error& e) {
    throw DataError(std::string("lexicon: ") + e.what());
  }
}

void require_optional_inputs(const Settings& settings, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    if (const auto path = settings.find(key)) require_input_file(*path);
  }
}

/// Checks that the table width matches the model input.
void check_table_fits(const EmbeddingTable& table, const ModelConfig& config) {
  if (table.dim() + kNumUpos != config.input_dim) {
    throw ConfigError("embeddings have dimension " + std::to_string(table.dim()) +
                      " but the model expects " + std::to_string(config.input_dim - kNumUpos));
  }
}

ModelConfig model_config_from(const Settings& settings, const EmbeddingTable& table) {
  ModelConfig config;
  if (const auto name = settings.find("variant")) {
    const auto variant = find_variant(*name);
    if (!variant) throw ConfigError("unknown variant '" + *name + "' (expected model1..model5)");
    config = apply_variant(config, *variant);
    if (table.dim() != variant->embedding_dim) {
      throw ConfigError("variant " + std::string(variant->name) + " expects " +
                        std::to_string(variant->embedding_dim) +
                        "-dimensional embeddings, loaded table has " +
                        std::to_string(table.dim()));
    }
  }
  if (const auto direction = settings.find("direction")) {
    if (*direction == "uni" || *direction == "unidirectional") {
      config.direction = Direction::kUnidirectional;
    } else if (*direction == "bi" || *direction == "bidirectional") {
      config.direction = Direction::kBidirectional;
    } else {
      throw ConfigError("direction must be uni or bi, got '" + *direction + "'");
    }
  }
  config.num_layers = settings.unsigned_value("num_layers", config.num_layers);
  config.hidden_dim = settings.unsigned_value("hidden_dim", config.hidden_dim);
  config.learning_rate = settings.real("learning_rate", config.learning_rate);
  config.epochs = settings.unsigned_value("epochs", config.epochs);
  config.seed = settings.unsigned_value("seed", config.seed);
  if (const auto clip = settings.find("clip_norm")) {
    if (*clip == "none" || *clip == "off") {
      config.clip_norm.reset();
    } else {
      const double value = settings.real("clip_norm", 0.0);
      config.clip_norm = value > 0.0 ? std::optional<double>(value) : std::nullopt;
    }
  }
  config.input_dim = table.dim() + kNumUpos;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

}  // namespace

int run_weak_label(const Settings& settings, std::ostream& out) {
  const std::string raw_path = settings.required("raw");
  const std::string output = settings.required("output");
  require_input_file(raw_path);
  require_optional_inputs(settings, {"patterns", "aspects", "products", "lexicon", "suffixes"});
  require_output_location(output);

  std::vector<PatternRule> rules = default_patterns();
  if (const auto path = settings.find("patterns")) {
    rules = parse_file(*path, [](const std::string& text) { return parse_pattern_file(text); });
  }
  DictionaryMap dictionaries = default_dictionaries();
  for (const char* name : {"aspects", "products"}) {
    if (const auto path = settings.find(name)) {
      dictionaries[name] = parse_file(
          *path, [&](const std::string& text) { return load_dictionary(text, name); });
    }
  }
  const TagLexicon lexicon = load_lexicon(settings);
  const std::vector<std::string> raw = read_lines(raw_path);

  WeakLabelResult result;
  try {
    result = weak_label(raw, rules, dictionaries, lexicon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  write_file_atomic(output, serialize_corpus(result.dataset));

  out << "labeled " << result.dataset.size() << " of " << result.total << " sentences\n";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out << "  " << rules[i].name << ": " << result.rule_hits[i] << "\n";
  }
  return kExitOk;
}

int run_train(const Settings& settings, std::ostream& out) {
  const std::string corpus_path = settings.required("corpus");
  const std::string embeddings_path = settings.required("embeddings");
  const std::string checkpoint_path = settings.required("checkpoint");
  const std::string log_path = settings.text("loss_log", checkpoint_path + ".loss.tsv");
  require_input_file(corpus_path);
  require_input_file(embeddings_path);
  require_optional_inputs(settings, {"lexicon", "suffixes"});
  require_output_location(checkpoint_path);
  require_output_location(log_path);
  const bool filter = settings.boolean("filter", true);

  const EmbeddingTable table = load_embeddings(embeddings_path);
  const ModelConfig config = model_config_from(settings, table);
  const TagLexicon lexicon = load_lexicon(settings);
  Dataset corpus = annotate_pos(load_corpus(corpus_path), lexicon);

  std::string log_text;
  if (filter) {
    Dataset kept;
    kept.provenance = corpus.provenance;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const LabeledSentence& sentence = corpus.sentences[i];
      if (filter_trainable(Dataset{{sentence}, corpus.provenance}).empty()) {
        const std::string note = "# filtered sentence " + std::to_string(i) + " (" +
                                 std::to_string(sentence.size()) + " tokens)\n";
        log_text += note;
        out << note;
      } else {
        kept.sentences.push_back(sentence);
      }
    }
    corpus = std::move(kept);
  }
  if (corpus.empty()) throw DataError(corpus_path + ": no trainable sentences");

  TrainReport report;
  try {
    report = train(corpus, config, table, [&](std::size_t epoch, double loss) {
      const std::string line = std::to_string(epoch + 1) + "\t" + format_g17(loss) + "\n";
      log_text += line;
      out << line << std::flush;
    });
  } catch (const comparo::Error& e) {
    throw DataError(corpus_path + ": " + e.what());
  }
  if (!all_finite(report.params)) throw DataError("training diverged: non-finite parameters");

  write_file_atomic(checkpoint_path, save_params(report.params, config));
  write_file_atomic(log_path, log_text);
  out << "trained " << corpus.size() << " sentences for " << config.epochs << " epochs ("
      << report.steps << " steps); training token accuracy "
      << token_accuracy(corpus, report.params, config, table) << "\n";
  return kExitOk;
}

int run_tag(const Settings& settings, std::ostream& out) {
  const std::string checkpoint_path = settings.required("checkpoint");
  const std::string embeddings_path = settings.required("embeddings");
  const std::string input_path = settings.required("input");
  const auto output = settings.find("output");
  require_input_file(checkpoint_path);
  require_input_file(embeddings_path);
  require_input_file(input_path);
  require_optional_inputs(settings, {"lexicon", "suffixes"});
  if (output) require_output_location(*output);

  const Checkpoint checkpoint = load_checkpoint(checkpoint_path);
  const EmbeddingTable table = load_embeddings(embeddings_path);
  check_table_fits(table, checkpoint.config);
  const TagLexicon lexicon = load_lexicon(settings);

  Dataset tagged;
  tagged.provenance = "predicted";
  for (const std::string& line : read_lines(input_path)) {
    LabeledSentence sentence = make_unlabeled_sentence(line, lexicon);
    if (sentence.tokens.empty()) continue;
    sentence.labels = predict(sentence, checkpoint.params, checkpoint.config, table);
    tagged.sentences.push_back(std::move(sentence));
  }
  const std::string text = serialize_corpus(tagged);
  if (output) {
    write_file_atomic(*output, text);
  } else {
    out << text;
  }
  return kExitOk;
}

int run_evaluate(const Settings& settings, std::ostream& out) {
  const std::string checkpoint_path = settings.required("checkpoint");
  const std::string embeddings_path = settings.required("embeddings");
  const std::string corpus_path = settings.required("corpus");
  const auto output = settings.find("output");
  require_input_file(checkpoint_path);
  require_input_file(embeddings_path);
  require_input_file(corpus_path);
  require_optional_inputs(settings, {"lexicon", "suffixes"});
  if (output) require_output_location(*output);

  const Checkpoint checkpoint = load_checkpoint(checkpoint_path);
  const EmbeddingTable table = load_embeddings(embeddings_path);
  check_table_fits(table, checkpoint.config);
  const Dataset test = annotate_pos(load_corpus(corpus_path), load_lexicon(settings));

  MetricsReport report;
  try {
    report = evaluate_model(test, checkpoint.params, checkpoint.config, table);
  } catch (const comparo::Error& e) {
    throw DataError(corpus_path + ": " + e.what());
  }
  const std::string key_values = format_report_key_values(report);
  out << format_report_table(report) << "\n" << key_values;
  if (output) write_file_atomic(*output, key_values);
  return kExitOk;
}

int run_grad_check(const Settings& settings, bool corrupt_gradient, std::ostream& out) {
  struct Topology {
    const char* name;
    Direction direction;
    std::size_t layers;
  };
  static constexpr Topology kTopologies[] = {{"uni1", Direction::kUnidirectional, 1},
                                             {"bi1", Direction::kBidirectional, 1},
                                             {"uni2", Direction::kUnidirectional, 2}};
  const std::string which = settings.text("topology", "all");
  std::vector<Topology> selected;
  for (const auto& t : kTopologies) {
    if (which == "all" || which == t.name) selected.push_back(t);
  }
  if (selected.empty()) {
    throw ConfigError("topology must be uni1, bi1, uni2 or all, got '" + which + "'");
  }

  ModelConfig config;
  config.input_dim = settings.unsigned_value("input_dim", 8);
  config.hidden_dim = settings.unsigned_value("hidden_dim", 6);
  const std::uint64_t seed = settings.unsigned_value("seed", 1);
  GradCheckOptions options;
  options.sequence_length = settings.unsigned_value("length", options.sequence_length);
  options.corrupt_gradient = corrupt_gradient;
  if (options.sequence_length == 0) throw ConfigError("length must be positive");

  bool all_passed = true;
  for (const auto& topology : selected) {
    config.direction = topology.direction;
    config.num_layers = topology.layers;
    try {
      validate(config);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const GradCheckResult result = grad_check(config, seed, options);
    const bool passed = result.max_relative_error <= kGradCheckTolerance;
    all_passed = all_passed && passed;
    char line[256];
    std::snprintf(line, sizeof line,
                  "%-5s max_relative_error=%.6e worst=%s[%zu] coordinates=%zu %s\n",
                  topology.name, result.max_relative_error, result.worst_tensor.c_str(),
                  result.worst_index, result.coordinates, passed ? "ok" : "FAIL");
    out << line;
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int run_synth(const Settings& settings, std::ostream& out) {
  const std::string output = settings.required("output");
  const auto embeddings_out = settings.find("embeddings_out");
  require_optional_inputs(settings, {"aspects", "products"});
  require_output_location(output);
  if (embeddings_out) require_output_location(*embeddings_out);

  const std::size_t count = settings.unsigned_value("count", 300);
  const std::uint64_t seed = settings.unsigned_value("seed", 1);
  const std::size_t dim = settings.unsigned_value("dim", 16);
  if (dim == 0) throw ConfigError("dim must be positive");

  DictionaryMap dictionaries = default_dictionaries();
  for (const char* name : {"aspects", "products"}) {
    if (const auto path = settings.find(name)) {
      dictionaries[name] = parse_file(
          *path, [&](const std::string& text) { return load_dictionary(text, name); });
    }
  }
  const std::vector<std::string> reviews = synthetic_reviews(count, seed, dictionaries);
  std::string text;
  Dataset tokens;
  for (const std::string& review : reviews) {
    text += review + "\n";
    tokens.sentences.push_back(make_unlabeled_sentence(review, TagLexicon::builtin()));
  }

  write_file_atomic(output, text);
  out << "wrote " << reviews.size() << " sentences to " << output << "\n";
  if (embeddings_out) {
    const EmbeddingTable table = toy_embeddings(vocabulary(tokens), dim, seed);
    write_file_atomic(*embeddings_out, format_glove(table));
    out << "wrote " << table.size() << " " << dim << "-dimensional vectors to " << *embeddings_out
        << "\n";
  }
  return kExitOk;
}

}  // namespace comparo::cli
