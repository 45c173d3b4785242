#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sentisumm/corpus.hpp"

namespace sentisumm {

using Vec = std::vector<double>;

class EmbeddingTable {
 public:
  EmbeddingTable(int dimension, std::unordered_map<std::string, Vec> entries);

  int dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const std::string& surface) const { return entries_.count(surface) > 0; }

  // Known word -> stored vector; anything else -> the zero vector.
  const Vec& lookup(const std::string& surface) const;
  const Vec& embed(const Token& token) const { return lookup(token.surface); }

 private:
  int dimension_;
  std::unordered_map<std::string, Vec> entries_;
  Vec oov_;
};

// word2vec text format: one "word v1 ... vE" per line, optional leading
// "V E" header. Duplicate words: last wins with a warning. Dimension
// mismatches are hard errors naming the line.
EmbeddingTable load_embeddings(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);

// Componentwise arithmetic mean of the tokens' embeddings; empty input is an error.
Vec mean_embedding(const EmbeddingTable& table, const std::vector<Token>& tokens);

double dot(const Vec& u, const Vec& v);
double norm(const Vec& v);

// u.v / (|u||v|); 0 when either norm is 0 so OOV-only sentences stay rankable.
double cosine(const Vec& u, const Vec& v);

}  // namespace sentisumm
