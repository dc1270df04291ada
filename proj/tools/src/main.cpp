#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "comparo/errors.hpp"
#include "commands.hpp"
#include "io.hpp"
#include "settings.hpp"

namespace {

using comparo::cli::Settings;

struct SettingFlags {
  std::map<std::string, std::string> values;

  /// Registers `--some-key` on `app`, stored under `some_key`.
  void add(CLI::App* app, const std::string& key, const std::string& help) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& value) { values[key] = value; }, help)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparative review entity tagger: weak labeling, (Bi)LSTM training, tagging "
               "and evaluation."};
  app.name("comparo");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file; flags override it");
  SettingFlags flags;

  CLI::App* weak = app.add_subcommand("weak-label", "Label raw sentences with the pattern rules");
  flags.add(weak, "raw", "Raw text, one sentence per line");
  flags.add(weak, "output", "Corpus file to write");
  flags.add(weak, "patterns", "Pattern rule file (default: shipped rules)");
  flags.add(weak, "aspects", "Aspect dictionary (default: shipped)");
  flags.add(weak, "products", "Product dictionary (default: shipped)");

  CLI::App* train = app.add_subcommand("train", "Train a tagger and write a checkpoint");
  flags.add(train, "corpus", "Training corpus");
  flags.add(train, "embeddings", "GloVe-format embedding file");
  flags.add(train, "checkpoint", "Checkpoint file to write");
  flags.add(train, "loss_log", "Loss log to write (default: <checkpoint>.loss.tsv)");
  flags.add(train, "filter", "Apply the length/comparative filter (default true)");
  flags.add(train, "variant", "model1 .. model5");
  flags.add(train, "direction", "uni or bi");
  flags.add(train, "num_layers", "Stacked LSTM layers");
  flags.add(train, "hidden_dim", "LSTM hidden size");
  flags.add(train, "learning_rate", "Adam step size");
  flags.add(train, "epochs", "Training epochs");
  flags.add(train, "clip_norm", "Global gradient-norm clip, or none");

  CLI::App* tag = app.add_subcommand("tag", "Tag raw sentences with a trained checkpoint");
  flags.add(tag, "checkpoint", "Checkpoint file");
  flags.add(tag, "embeddings", "GloVe-format embedding file");
  flags.add(tag, "input", "Raw text, one sentence per line");
  flags.add(tag, "output", "Corpus file to write (default: standard output)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a checkpoint on a labeled corpus");
  flags.add(evaluate, "checkpoint", "Checkpoint file");
  flags.add(evaluate, "embeddings", "GloVe-format embedding file");
  flags.add(evaluate, "corpus", "Labeled test corpus");
  flags.add(evaluate, "output", "Also write the key=value report here");

  CLI::App* grad = app.add_subcommand("grad-check", "Compare gradients with finite differences");
  flags.add(grad, "topology", "uni1, bi1, uni2 or all (default all)");
  flags.add(grad, "input_dim", "Input width (default 8)");
  flags.add(grad, "hidden_dim", "Hidden size (default 6)");
  flags.add(grad, "length", "Sentence length (default 5)");
  bool corrupt_gradient = false;
  grad->add_flag("--corrupt-gradient", corrupt_gradient)->group("");

  CLI::App* synth = app.add_subcommand("synth", "Write synthetic reviews and toy embeddings");
  flags.add(synth, "output", "Raw text file to write");
  flags.add(synth, "embeddings_out", "GloVe file to write for the vocabulary");
  flags.add(synth, "count", "Number of sentences (default 300)");
  flags.add(synth, "dim", "Embedding dimension (default 16)");
  flags.add(synth, "aspects", "Aspect dictionary (default: shipped)");
  flags.add(synth, "products", "Product dictionary (default: shipped)");

  for (CLI::App* sub : {weak, train, tag, evaluate}) {
    flags.add(sub, "lexicon", "Word to Penn tag table (default: shipped)");
    flags.add(sub, "suffixes", "Suffix rule table (default: shipped)");
  }
  for (CLI::App* sub : {train, grad, synth}) flags.add(sub, "seed", "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? comparo::cli::kExitOk : comparo::cli::kExitUsage;
  }

  try {
    Settings settings;
    if (!config_path.empty()) {
      settings.load_file_text(comparo::cli::read_text_file(config_path), config_path);
    }
    for (const auto& [key, value] : flags.values) settings.set(key, value);

    if (*weak) return comparo::cli::run_weak_label(settings, std::cout);
    if (*train) return comparo::cli::run_train(settings, std::cout);
    if (*tag) return comparo::cli::run_tag(settings, std::cout);
    if (*evaluate) return comparo::cli::run_evaluate(settings, std::cout);
    if (*grad) return comparo::cli::run_grad_check(settings, corrupt_gradient, std::cout);
    if (*synth) return comparo::cli::run_synth(settings, std::cout);
  } catch (const comparo::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return comparo::cli::kExitConfig;
  } catch (const comparo::cli::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return comparo::cli::kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return comparo::cli::kExitData;
  }
  return comparo::cli::kExitUsage;
}
