#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sentisumm {

struct Token {
  std::string surface;  // lowercased, whitespace-free
  int index = 0;        // position within its sentence
};

struct Sentence {
  std::vector<Token> tokens;
  int index = 0;  // position within its document
  std::string raw;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::string> reference_summary;
};

struct LabeledExample {
  std::string text;
  int label = 0;  // 0 = negative, 1 = positive
};

// Lowercases, splits on whitespace, strips leading/trailing non-alphanumeric
// characters, drops empty pieces. Bytes >= 0x80 count as word characters so
// multi-byte UTF-8 sequences pass through untouched.
std::vector<Token> tokenize(const std::string& raw);

// Splits on '.', '!' or '?' followed by whitespace or end of text, and on
// blank lines. Raw text of each sentence keeps its terminal punctuation.
// Sentences that tokenize to zero tokens are kept here; document
// construction drops them.
std::vector<Sentence> segment_sentences(const std::string& text);

// Segments text and drops sentences with no tokens (they carry no
// similarity mass), reindexing the remainder 0..N-1.
Document make_document(std::string id, const std::string& text,
                       std::optional<std::string> reference_summary = std::nullopt,
                       std::vector<std::string>* warnings = nullptr);

// JSON-lines corpus: {"id": optional string, "text": required, "summary": optional}.
// Blank lines are skipped; malformed lines raise with their line number.
std::vector<Document> load_corpus(const std::string& path,
                                  std::vector<std::string>* warnings = nullptr);

// JSON-lines training data: {"text": ..., "label": 0|1}.
std::vector<LabeledExample> load_labeled_examples(const std::string& path);

}  // namespace sentisumm
