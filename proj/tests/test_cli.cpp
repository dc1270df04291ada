#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "comparo_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const std::string& name, const std::string& text) {
  std::ofstream(path(name), std::ios::binary) << text;
}

Run comparo(const std::string& args) {
  const std::string command = std::string(COMPARO_CLI_PATH) + " " + args + " >" +
                              path("stdout.txt") + " 2>" + path("stderr.txt");
  const int status = std::system(command.c_str());
  Run run;
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.out = slurp(path("stdout.txt"));
  run.err = slurp(path("stderr.txt"));
  return run;
}

std::size_t count_lines(const std::string& text, const std::string& prefix = "") {
  std::size_t n = 0, pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    if (text.compare(pos, prefix.size(), prefix) == 0) ++n;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return n;
}

/// Synthetic raw text, toy embeddings and the weak-labeled corpus, built once.
void ensure_corpus() {
  static bool done = false;
  if (done) return;
  REQUIRE(comparo("synth --count 120 --seed 5 --output " + path("raw.txt") + " --embeddings-out " +
                  path("toy.glove") + " --dim 8")
              .code == 0);
  REQUIRE(comparo("weak-label --raw " + path("raw.txt") + " --output " + path("weak.tsv")).code ==
          0);
  done = true;
}

std::string train_args(const std::string& checkpoint, const std::string& extra = "") {
  return "train --corpus " + path("weak.tsv") + " --embeddings " + path("toy.glove") +
         " --checkpoint " + path(checkpoint) + " --loss-log " + path(checkpoint + ".log") +
         " --direction bi --hidden-dim 12 --learning-rate 0.02 --epochs 15 --seed 3 " + extra;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(comparo("").code == 1);
  CHECK(comparo("frobnicate").code == 1);
  CHECK(comparo("train --no-such-flag 1").code == 1);
  CHECK(comparo("--help").code == 0);
}

TEST_CASE("weak-label") {
  write("example.txt", "The zoom in Nikon S8100 is far better.\nNothing to see here.\n");
  const Run run = comparo("weak-label --raw " + path("example.txt") + " --output " +
                          path("example.tsv"));
  REQUIRE(run.code == 0);
  CHECK(run.out.find("labeled 1 of 2 sentences") != std::string::npos);
  CHECK(slurp(path("example.tsv")) ==
        "The\tDT\tNone\nzoom\tNN\tAspect\nin\tIN\tNone\nNikon\tNNP\tProduct1\n"
        "S8100\tNNP\tProduct1\nis\tVBZ\tNone\nfar\tRB\tNone\nbetter\tJJR\tPredicate\n"
        ".\t.\tNone\n\n");

  write("empty.txt", "");
  const Run empty = comparo("weak-label --raw " + path("empty.txt") + " --output " +
                            path("empty.tsv"));
  CHECK(empty.code == 0);
  CHECK(empty.out.find("labeled 0 of 0") != std::string::npos);
  CHECK(slurp(path("empty.tsv")).empty());

  const Run missing = comparo("weak-label --raw " + path("example.txt") + " --aspects " +
                              path("no_such_dict.txt") + " --output " + path("never.tsv"));
  CHECK(missing.code == 2);
  CHECK_FALSE(fs::exists(path("never.tsv")));

  write("bad_patterns.txt", "ok: dict(products=Product1) cmp\nbroken: dict(products\n");
  const Run bad = comparo("weak-label --raw " + path("example.txt") + " --patterns " +
                          path("bad_patterns.txt") + " --output " + path("never.tsv"));
  CHECK(bad.code == 3);
  CHECK(bad.err.find("bad_patterns.txt: line 2") != std::string::npos);
  CHECK_FALSE(fs::exists(path("never.tsv")));
}

TEST_CASE("train is deterministic and logs one loss per epoch") {
  ensure_corpus();
  REQUIRE(comparo(train_args("a.ckpt")).code == 0);
  REQUIRE(comparo(train_args("b.ckpt")).code == 0);
  const std::string log = slurp(path("a.ckpt.log"));
  CHECK(count_lines(log) == 15);
  CHECK(log.rfind("1\t", 0) == 0);
  CHECK(log == slurp(path("b.ckpt.log")));
  CHECK(slurp(path("a.ckpt")) == slurp(path("b.ckpt")));

  REQUIRE(comparo(train_args("c.ckpt", "--seed 4")).code == 0);
  CHECK(slurp(path("a.ckpt")) != slurp(path("c.ckpt")));
}

TEST_CASE("train configuration") {
  ensure_corpus();
  write("run.cfg", "direction=bi\nhidden_dim=12\nepochs=9\nseed=3\n");
  const Run from_file = comparo("--config " + path("run.cfg") + " " +
                                "train --corpus " + path("weak.tsv") + " --embeddings " +
                                path("toy.glove") + " --checkpoint " + path("cfg.ckpt") +
                                " --epochs 2");
  REQUIRE(from_file.code == 0);
  CHECK(count_lines(slurp(path("cfg.ckpt.loss.tsv"))) == 2);

  write("bad.cfg", "epochs=2\nwidth=3\n");
  const Run unknown = comparo("train --config " + path("bad.cfg") + " --corpus " +
                              path("weak.tsv") + " --embeddings " + path("toy.glove") +
                              " --checkpoint " + path("never.ckpt"));
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown key 'width'") != std::string::npos);

  CHECK(comparo(train_args("never.ckpt", "--variant model2")).code == 2);
  CHECK(comparo(train_args("never.ckpt", "--direction sideways")).code == 2);
  CHECK(comparo(train_args("never.ckpt", "--num-layers 0")).code == 2);
  CHECK_FALSE(fs::exists(path("never.ckpt")));

  write("malformed.tsv", "Nikon\tNNP\tProduct1\nbetter\tJJR\n");
  const Run malformed = comparo("train --corpus " + path("malformed.tsv") + " --embeddings " +
                                path("toy.glove") + " --checkpoint " + path("never.ckpt"));
  CHECK(malformed.code == 3);
  CHECK(malformed.err.find("malformed.tsv: line 2") != std::string::npos);
  CHECK_FALSE(fs::exists(path("never.ckpt")));
}

TEST_CASE("train notes filtered sentences") {
  ensure_corpus();
  std::string corpus = slurp(path("weak.tsv"));
  for (int i = 0; i < 31; ++i) corpus += (i == 5 ? "better\tJJR\tPredicate\n" : "word\tNN\tNone\n");
  corpus += "\n";
  write("with_long.tsv", corpus);
  const Run run = comparo("train --corpus " + path("with_long.tsv") + " --embeddings " +
                          path("toy.glove") + " --checkpoint " + path("long.ckpt") +
                          " --hidden-dim 4 --epochs 1");
  REQUIRE(run.code == 0);
  CHECK(run.out.find("(31 tokens)") != std::string::npos);
  CHECK(count_lines(slurp(path("long.ckpt.loss.tsv")), "# filtered sentence") == 1);
}

TEST_CASE("tag and evaluate") {
  ensure_corpus();
  const std::string model = "--checkpoint " + path("fit.ckpt") + " --embeddings " +
                            path("toy.glove");
  REQUIRE(comparo(train_args("fit.ckpt", "--epochs 30")).code == 0);

  write("none.txt", "\n\n");
  const Run empty = comparo("tag " + model + " --input " + path("none.txt"));
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  const std::string corpus = slurp(path("weak.tsv"));
  const std::string first_block = corpus.substr(0, corpus.find("\n\n") + 2);
  std::string sentence;
  for (std::size_t pos = 0; pos + 1 < first_block.size();) {
    const auto end = first_block.find('\n', pos);
    if (!sentence.empty()) sentence += ' ';
    sentence += first_block.substr(pos, first_block.find('\t', pos) - pos);
    pos = end + 1;
  }
  write("one.txt", sentence + "\n");
  const Run one = comparo("tag " + model + " --input " + path("one.txt"));
  REQUIRE(one.code == 0);
  CHECK(one.out == first_block);
  CHECK(count_lines(one.out, "\n") == 1);

  const std::string raw = slurp(path("raw.txt"));
  REQUIRE(comparo("tag " + model + " --input " + path("raw.txt") + " --output " +
                  path("tagged.tsv"))
              .code == 0);
  CHECK(std::count(raw.begin(), raw.end(), '\n') ==
        static_cast<std::ptrdiff_t>(count_lines(slurp(path("tagged.tsv")), "\n")));

  const Run report = comparo("evaluate " + model + " --corpus " + path("weak.tsv") +
                             " --output " + path("report.txt"));
  REQUIRE(report.code == 0);
  CHECK(report.out.find("identification.any.f1=1.0000") != std::string::npos);
  for (const char* cls : {"Product1", "Product2", "Aspect", "Predicate"}) {
    CHECK(report.out.find(std::string("classification.") + cls + ".f1=") != std::string::npos);
  }
  CHECK(count_lines(slurp(path("report.txt"))) == 15);

  write("broken.tsv", "Nikon\tNNP\tProductX\n");
  CHECK(comparo("evaluate " + model + " --corpus " + path("broken.tsv")).code == 3);
  write("junk.ckpt", "not a checkpoint");
  CHECK(comparo("tag --checkpoint " + path("junk.ckpt") + " --embeddings " + path("toy.glove") +
                " --input " + path("one.txt"))
            .code == 3);
}

TEST_CASE("grad-check") {
  const Run first = comparo("grad-check --seed 1");
  CHECK(first.code == 0);
  CHECK(count_lines(first.out, "") == 3);
  CHECK(first.out.find("FAIL") == std::string::npos);
  CHECK(comparo("grad-check --seed 1").out == first.out);
  CHECK(comparo("grad-check --topology uni1 --corrupt-gradient").code == 4);
  CHECK(comparo("grad-check --topology tri3").code == 2);
}
