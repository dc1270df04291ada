#include <doctest.h>

#include <bit>
#include <cstring>

#include "comparo/embeddings.hpp"
#include "comparo/errors.hpp"
#include "comparo/preproc.hpp"
#include "comparo/synthetic.hpp"

using namespace comparo;

TEST_CASE("load_glove basics") {
  const EmbeddingTable table = load_glove("a 0.1 0.2\nb 0.3 0.4\n");
  CHECK(table.dim() == 2);
  CHECK(table.size() == 2);
  const auto a = table.lookup("A");
  REQUIRE(a.has_value());
  CHECK((*a)[0] == 0.1);
  CHECK((*a)[1] == 0.2);
  CHECK_FALSE(table.lookup("c").has_value());
}

TEST_CASE("load_glove errors") {
  try {
    load_glove("a 0.1 0.2\nb 0.3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_glove("a 0.1 x\n"), ParseError);
  CHECK_THROWS_AS(load_glove("a 0.1 0.2abc\n"), ParseError);
  CHECK_THROWS_AS(load_glove("header_only\n"), ParseError);
  CHECK_THROWS_AS(load_glove(""), ParseError);
  // A word2vec-style "count dim" header is rejected.
  CHECK_THROWS_AS(load_glove("2 3\na 0.1 0.2 0.3\nb 0.1 0.2 0.3\n"), ParseError);
}

TEST_CASE("load_glove keeps the first duplicate and parses values exactly") {
  const EmbeddingTable table = load_glove("the 1e-3 -2.5\nThe 9 9\nx 0.30000000000000004 1\n");
  CHECK(table.size() == 2);
  CHECK((*table.lookup("the"))[0] == 1e-3);
  const double expected = 0.30000000000000004;
  CHECK(std::bit_cast<std::uint64_t>((*table.lookup("x"))[0]) ==
        std::bit_cast<std::uint64_t>(expected));
}

TEST_CASE("embed_token layout") {
  const EmbeddingTable table = load_glove("camera 0.5 -0.25 1.5\n");
  const Eigen::VectorXd known = embed_token("Camera", Upos::kNoun, table);
  REQUIRE(known.size() == 3 + 17);
  CHECK(known[0] == 0.5);
  CHECK(known[1] == -0.25);
  CHECK(known[2] == 1.5);
  CHECK(known.tail(17).sum() == 1.0);
  CHECK(known[3 + static_cast<Eigen::Index>(upos_index(Upos::kNoun))] == 1.0);

  const Eigen::VectorXd oov = embed_token("zorgblat", Upos::kPropn, table);
  CHECK(oov.head(3).isZero());
  CHECK(oov.tail(17).sum() == 1.0);
  CHECK(oov[3 + static_cast<Eigen::Index>(upos_index(Upos::kPropn))] == 1.0);
  CHECK(oov.norm() > 0.0);

  for (std::size_t u = 0; u < kNumUpos; ++u) {
    const auto v = embed_token("camera", static_cast<Upos>(u), table);
    CHECK(v.size() == 20);
    CHECK(v.tail(17).sum() == 1.0);
  }
}

TEST_CASE("encode_sentence") {
  const EmbeddingTable table = load_glove("nikon 1 2\nbetter 3 4\n");
  const auto sentence = make_unlabeled_sentence("Nikon Coolpix has better image quality than Cannon",
                                                TagLexicon::builtin());
  const SentenceEncoding enc = encode_sentence(sentence, table);
  CHECK(enc.rows() == 8);
  CHECK(enc.cols() == 2 + 17);
  CHECK(enc(3, 0) == 3.0);
  CHECK(enc(0, 1) == 2.0);
  CHECK(enc(1, 0) == 0.0);
  CHECK(encode_sentence(sentence, table) == enc);

  const auto one = make_unlabeled_sentence("better", TagLexicon::builtin());
  CHECK(encode_sentence(one, table).rows() == 1);

  LabeledSentence untagged;
  untagged.tokens = {{"x", "NN", {}}};
  untagged.labels = {Label::kNone};
  CHECK_THROWS_AS(encode_sentence(untagged, table), PreconditionError);
}

TEST_CASE("checksum tracks content only") {
  const EmbeddingTable a = load_glove("a 1 2\nb 3 4\n");
  const EmbeddingTable b = load_glove("b 3 4\na 1 2\n");
  const EmbeddingTable c = load_glove("a 1 2\nb 3 4.000000000000001\n");
  CHECK(a.checksum() == b.checksum());
  CHECK(a.checksum() != c.checksum());
}

TEST_CASE("format_glove round-trips bit for bit") {
  const EmbeddingTable table = toy_embeddings({"alpha", "beta", "gamma"}, 16, 3);
  const EmbeddingTable again = load_glove(format_glove(table));
  CHECK(again.checksum() == table.checksum());
  CHECK(again.dim() == 16);
}
