#include <doctest.h>

#include <set>

#include "comparo/corpus.hpp"
#include "comparo/errors.hpp"
#include "comparo/rng.hpp"

using namespace comparo;

namespace {

constexpr const char* kReviewExample =
    "Nikon\tNNP\tProduct1\n"
    "Coolpix\tNNP\tProduct1\n"
    "has\tVBZ\tNone\n"
    "better\tJJR\tPredicate\n"
    "image\tNN\tAspect\n"
    "quality\tNN\tAspect\n"
    "than\tIN\tNone\n"
    "Cannon\tNNP\tProduct2\n";

LabeledSentence sentence_with(std::size_t length, const char* comparative_at_end) {
  LabeledSentence s;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    s.tokens.push_back({"w" + std::to_string(i), "NN", {}});
    s.labels.push_back(Label::kNone);
  }
  s.tokens.push_back({"last", comparative_at_end, {}});
  s.labels.push_back(Label::kNone);
  return s;
}

Dataset random_dataset(Rng& rng, std::size_t count) {
  static const char* kWords[] = {"camera", "Nikon", "better", "zoom", ".", ",", "S8100", "than"};
  static const char* kTags[] = {"NN", "NNP", "JJR", "IN", ".", "RBS"};
  Dataset d;
  for (std::size_t n = 0; n < count; ++n) {
    LabeledSentence s;
    const bool with_pos = rng.index(2) == 0;
    const std::size_t len = 1 + rng.index(12);
    for (std::size_t i = 0; i < len; ++i) {
      Token t{kWords[rng.index(8)], {}, {}};
      if (with_pos || rng.index(4) == 0) t.penn_pos = kTags[rng.index(6)];
      s.tokens.push_back(t);
      s.labels.push_back(label_from_index(rng.index(kNumLabels)));
    }
    d.sentences.push_back(s);
  }
  return d;
}

}  // namespace

TEST_CASE("labels round-trip through their corpus spelling") {
  std::set<std::string_view> names;
  for (Label label : kAllLabels) {
    names.insert(to_string(label));
    CHECK(parse_label(to_string(label)) == label);
  }
  CHECK(names.size() == 5);
  CHECK_FALSE(parse_label("BADLABEL").has_value());
  CHECK_FALSE(parse_label("none").has_value());
}

TEST_CASE("parse_corpus reads a minimal block") {
  const Dataset d = parse_corpus("Nikon\tNNP\tProduct1\n.\t.\tNone\n");
  REQUIRE(d.size() == 1);
  REQUIRE(d.sentences[0].size() == 2);
  CHECK(d.sentences[0].labels == std::vector<Label>{Label::kProduct1, Label::kNone});
  CHECK(d.sentences[0].tokens[0].penn_pos == "NNP");
  CHECK(d.provenance == "manual");
}

TEST_CASE("parse_corpus reads the Nikon Coolpix example") {
  const Dataset d = parse_corpus(kReviewExample);
  REQUIRE(d.size() == 1);
  CHECK(d.sentences[0].labels ==
        std::vector<Label>{Label::kProduct1, Label::kProduct1, Label::kNone, Label::kPredicate,
                           Label::kAspect, Label::kAspect, Label::kNone, Label::kProduct2});
}

TEST_CASE("parse_corpus two-column lines have no POS") {
  const Dataset d = parse_corpus("better\tPredicate\n\nzoom\tAspect\n\n");
  REQUIRE(d.size() == 2);
  CHECK_FALSE(d.sentences[0].tokens[0].penn_pos.has_value());
  CHECK(d.sentences[1].labels[0] == Label::kAspect);
}

TEST_CASE("parse_corpus errors carry line numbers") {
  SUBCASE("unknown label") {
    try {
      parse_corpus("foo\tBADLABEL\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
  }
  SUBCASE("wrong column count") {
    try {
      parse_corpus("a\tNN\tNone\nb\tNN\tNone\textra\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_corpus("lonely\n"), ParseError);
  }
  SUBCASE("empty block") {
    try {
      parse_corpus("a\tNone\n\n\nb\tNone\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_corpus("\na\tNone\n"), ParseError);
  }
  SUBCASE("empty token") { CHECK_THROWS_AS(parse_corpus("\tNone\n"), ParseError); }
}

TEST_CASE("parse_corpus tolerates CRLF and a missing final newline") {
  const Dataset d = parse_corpus("a\tNN\tNone\r\nb\tAspect");
  REQUIRE(d.size() == 1);
  CHECK(d.sentences[0].tokens[1].text == "b");
}

TEST_CASE("serialize_corpus format contract") {
  CHECK(serialize_corpus(Dataset{}).empty());
  const Dataset d = parse_corpus("Nikon\tNNP\tProduct1\n.\tNone\n");
  CHECK(serialize_corpus(d) == "Nikon\tNNP\tProduct1\n.\tNone\n\n");
}

TEST_CASE("parse inverts serialize on random datasets") {
  Rng rng(7);
  for (int round = 0; round < 5; ++round) {
    const Dataset d = random_dataset(rng, 50);
    CHECK(parse_corpus(serialize_corpus(d)) == d);
  }
}

TEST_CASE("filter_trainable boundaries") {
  Dataset d;
  d.sentences.push_back(sentence_with(31, "JJR"));
  d.sentences.push_back(sentence_with(8, "NN"));
  d.sentences.push_back(sentence_with(8, "JJR"));
  d.sentences.push_back(sentence_with(30, "RBS"));
  const Dataset kept = filter_trainable(d);
  REQUIRE(kept.size() == 2);
  CHECK(kept.sentences[0] == d.sentences[2]);
  CHECK(kept.sentences[1] == d.sentences[3]);
  CHECK(filter_trainable(kept) == kept);
}

TEST_CASE("filter_trainable requires POS tags") {
  Dataset d;
  d.sentences.push_back(sentence_with(3, "JJR"));
  d.sentences.push_back(sentence_with(3, "JJR"));
  d.sentences[1].tokens[1].penn_pos.reset();
  try {
    filter_trainable(d);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("sentence 1") != std::string::npos);
  }
}

TEST_CASE("split_dataset sizes and determinism") {
  Rng rng(3);
  const Dataset ten = random_dataset(rng, 10);
  auto [train, test] = split_dataset(ten, 0.6, 42);
  CHECK(train.size() == 6);
  CHECK(test.size() == 4);
  auto [train2, test2] = split_dataset(ten, 0.6, 42);
  CHECK(train == train2);
  CHECK(test == test2);

  const Dataset one = random_dataset(rng, 1);
  auto [t1, s1] = split_dataset(one, 0.6, 1);
  CHECK(t1.size() == 0);
  CHECK(s1.size() == 1);

  CHECK_THROWS_AS(split_dataset(Dataset{}, 0.6, 1), PreconditionError);
  CHECK_THROWS_AS(split_dataset(ten, 1.0, 1), std::invalid_argument);
}

TEST_CASE("split_dataset is an exact partition") {
  Rng rng(11);
  for (std::size_t n = 1; n <= 40; n += 3) {
    Dataset d = random_dataset(rng, n);
    // Make sentences distinguishable.
    for (std::size_t i = 0; i < n; ++i) d.sentences[i].tokens[0].text = "id" + std::to_string(i);
    for (double fraction : {0.1, 0.5, 0.6, 0.99}) {
      auto [train, test] = split_dataset(d, fraction, n);
      CHECK(train.size() + test.size() == n);
      std::multiset<std::string> seen;
      for (const auto& s : train.sentences) seen.insert(s.tokens[0].text);
      for (const auto& s : test.sentences) seen.insert(s.tokens[0].text);
      std::multiset<std::string> expected;
      for (const auto& s : d.sentences) expected.insert(s.tokens[0].text);
      CHECK(seen == expected);
    }
  }
}

TEST_CASE("entity_spans examples") {
  const Dataset d = parse_corpus(kReviewExample);
  const auto spans = entity_spans(d.sentences[0]);
  CHECK(spans == std::vector<EntitySpan>{{0, 2, Label::kProduct1},
                                         {3, 4, Label::kPredicate},
                                         {4, 6, Label::kAspect},
                                         {7, 8, Label::kProduct2}});

  LabeledSentence none;
  none.labels = {Label::kNone, Label::kNone};
  none.tokens = {{"a", {}, {}}, {"b", {}, {}}};
  CHECK(entity_spans(none).empty());

  LabeledSentence two;
  two.labels = {Label::kAspect, Label::kProduct1};
  two.tokens = {{"a", {}, {}}, {"b", {}, {}}};
  CHECK(entity_spans(two) ==
        std::vector<EntitySpan>{{0, 1, Label::kAspect}, {1, 2, Label::kProduct1}});
}

TEST_CASE("entity_spans partition the non-None positions") {
  Rng rng(5);
  const Dataset d = random_dataset(rng, 200);
  for (const auto& s : d.sentences) {
    std::size_t covered = 0;
    std::vector<bool> hit(s.size(), false);
    const auto spans = entity_spans(s);
    for (std::size_t k = 0; k < spans.size(); ++k) {
      const auto& span = spans[k];
      REQUIRE(span.start < span.end);
      REQUIRE(span.end <= s.size());
      CHECK(span.label != Label::kNone);
      for (std::size_t i = span.start; i < span.end; ++i) {
        CHECK(s.labels[i] == span.label);
        CHECK_FALSE(hit[i]);
        hit[i] = true;
      }
      if (span.start > 0) CHECK(s.labels[span.start - 1] != span.label);
      if (span.end < s.size()) CHECK(s.labels[span.end] != span.label);
      covered += span.end - span.start;
    }
    std::size_t non_none = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      non_none += s.labels[i] != Label::kNone;
      CHECK(hit[i] == (s.labels[i] != Label::kNone));
    }
    CHECK(covered == non_none);
  }
}
