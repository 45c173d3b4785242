#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentisumm/corpus.hpp"
#include "sentisumm/embeddings.hpp"

namespace sentisumm {

// Mean-pooled token embeddings through a single logistic unit. The pooled
// form keeps gradients analytic, which the attribution module relies on.
struct SentimentModel {
  Vec weight;  // dimension E
  double bias = 0.0;
};

struct TrainConfig {
  double learning_rate = 0.5;
  int epochs = 200;
  std::uint64_t seed = 0;  // training is full-batch from zeros, so the seed only pins the contract
  double l2 = 0.0;
};

double logistic(double z);

// logistic(weight . mean(token_vectors) + bias), clamped strictly inside (0,1).
double forward(const SentimentModel& model, const std::vector<Vec>& token_vectors);

double sentence_probability(const SentimentModel& model, const EmbeddingTable& table,
                            const Sentence& sentence);

// Gradient of forward w.r.t. each token vector: p(1-p) * weight / n at every position.
std::vector<Vec> input_gradient(const SentimentModel& model,
                                const std::vector<Vec>& token_vectors);

double bce_loss(const SentimentModel& model, const EmbeddingTable& table,
                const std::vector<LabeledExample>& examples, double l2 = 0.0);

double accuracy(const SentimentModel& model, const EmbeddingTable& table,
                const std::vector<LabeledExample>& examples);

// Full-batch gradient descent on binary cross-entropy from a zero
// initialization (the objective is convex). Requires both classes present.
SentimentModel train(const std::vector<LabeledExample>& examples,
                     const EmbeddingTable& table, const TrainConfig& config);

enum class SentimentOrientation {
  kPositiveProb,  // p(s) as-is
  kIntensity,     // |2p - 1|, distance from neutral
};

double emotional_importance(double p, SentimentOrientation orientation);

// Persisted as {"dimension": E, "weight": [...], "bias": b}.
void save_sentiment_model(const SentimentModel& model, const std::string& path);
SentimentModel load_sentiment_model(const std::string& path);

}  // namespace sentisumm
