#pragma once

#include "mct/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mct {

/// Term -> count.
using TokenCounts = std::map<std::string, int>;
/// Term -> weight.
using TermVector = std::map<std::string, double>;

struct TextConfig {
    int tweets_per_node = 50;
    int top_terms = 100;
    int topics = 20;
    std::optional<double> alpha;  // defaults to 50 / topics
    double beta_prior = 0.01;
    int gibbs_iters = 1000;
    int burn_in = 200;
    int ngram = 1;
    std::set<std::string> stopwords = default_stopwords();
    double tau = 0.5;
    std::uint64_t seed = 42;
    /// Take a seeded random sample of tweets instead of the first k.
    bool sample_tweets = false;

    double doc_topic_prior() const { return alpha ? *alpha : 50.0 / topics; }
    void validate() const;

    static std::set<std::string> default_stopwords();
};

/// One stopword per line, '#' comments and blank lines ignored.
std::set<std::string> read_stopwords(const std::string& path);

/// Lowercases, strips URLs, @-mentions and punctuation, drops stopwords and
/// counts n-grams (n-grams joined with '_').
TokenCounts preprocess(const std::string& text, const TextConfig& cfg);

/// Smoothed inverse document frequency over a set of tokenized documents:
/// idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class IdfTable {
public:
    IdfTable() = default;
    explicit IdfTable(std::span<const TokenCounts> docs);
    double idf(const std::string& term) const;
    std::size_t num_docs() const { return num_docs_; }

private:
    std::size_t num_docs_ = 0;
    std::map<std::string, std::size_t> df_;
};

struct NodeAggregate {
    TokenCounts pseudo_document;  // pooled counts over the retained terms
    TermVector mean_vector;       // mean of per-tweet L2-normalised tf-idf vectors
    bool text_less = false;       // no tweet survived preprocessing
};

/// Chooses the tweets a node contributes: the first k, or a seeded sample.
std::vector<std::string> select_tweets(const std::vector<std::string>& texts, const TextConfig& cfg,
                                       const NodeId& node = {});

/// Builds the node fingerprint from its tweets. `idf` defaults to an IDF
/// table over these tweets alone. Each tweet vector keeps its top-b terms
/// before normalisation; the pseudo-document keeps counts for the top-b
/// terms of the mean vector.
NodeAggregate aggregate_node(const std::vector<std::string>& texts, const TextConfig& cfg,
                             const IdfTable* idf = nullptr);

struct TopicModel {
    DenseMatrix doc_topic;   // documents x topics
    DenseMatrix topic_word;  // topics x vocabulary
    std::vector<std::string> vocabulary;
};

/// Collapsed Gibbs sampling LDA. Estimates are averaged over every post
/// burn-in sweep. Throws ValidationError for an empty vocabulary or no
/// documents.
TopicModel fit_lda(const std::vector<TokenCounts>& docs, const TextConfig& cfg);

/// Base-2 Jensen-Shannon divergence in [0, 1]. Inputs must be the same length
/// and each sum to 1 within 1e-9.
double js_divergence(std::span<const double> x, std::span<const double> y);
/// sqrt(js_divergence); a metric on the simplex.
double js_distance(std::span<const double> x, std::span<const double> y);

struct TextualResult {
    std::vector<NodeId> nodes;          // corpus-bearing nodes, matrix order
    std::vector<NodeId> text_less;      // candidates excluded for lack of text
    std::vector<NodePair> related;      // similarity >= tau
    std::vector<NodePair> unrelated;
    DenseMatrix affinity;               // 1 - JS distance, unit diagonal
    DenseMatrix node_topics;            // nodes x topics
    TopicModel model;
    double tau = 0.5;

    bool covers(const NodeId& v) const;
    /// Affinity between two covered nodes; 0 if either is not covered.
    double similarity(const NodeId& a, const NodeId& b) const;
};

/// Topic-based similarity between the candidate nodes that have text.
/// Throws ValidationError when fewer than two candidates carry a corpus.
TextualResult text_sim(const std::vector<NodeId>& candidates, const NetworkData& net,
                       const TextConfig& cfg);

}  // namespace mct
