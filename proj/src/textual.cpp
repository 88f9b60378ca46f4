#include "mct/textual.hpp"

#include "mct/kernels.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>

namespace mct {

std::set<std::string> TextConfig::default_stopwords() {
    return {"a",      "about", "after", "again", "against", "all",    "am",    "an",
            "and",    "any",   "are",   "as",    "at",      "be",     "been",  "before",
            "being",  "below", "between", "both", "but",    "by",     "can",   "could",
            "did",    "do",    "does",  "doing", "down",    "during", "each",  "few",
            "for",    "from",  "further", "had", "has",     "have",   "having", "he",
            "her",    "here",  "hers",  "him",   "his",     "how",    "i",     "if",
            "in",     "into",  "is",    "it",    "its",     "just",   "me",    "more",
            "most",   "my",    "no",    "nor",   "not",     "of",     "off",   "on",
            "once",   "only",  "or",    "other", "our",     "ours",   "out",   "over",
            "own",    "same",  "she",   "should", "so",     "some",   "such",  "than",
            "that",   "the",   "their", "theirs", "them",   "then",   "there", "these",
            "they",   "this",  "those", "through", "to",    "too",    "under", "until",
            "up",     "very",  "was",   "we",    "were",    "what",   "when",  "where",
            "which",  "while", "who",   "whom",  "why",     "will",   "with",  "would",
            "you",    "your",  "yours", "rt",    "amp",     "via",    "im",
            "dont",   "cant",  "u",     "ur"};
}

void TextConfig::validate() const {
    if (topics < 1) throw ValidationError("topic count must be at least 1");
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("text tau must lie in (0, 1)");
    if (burn_in >= gibbs_iters) throw ValidationError("burn-in must be shorter than the Gibbs run");
    if (tweets_per_node < 1 || top_terms < 1 || ngram < 1)
        throw ValidationError("tweets_per_node, top_terms and ngram must be positive");
    if (doc_topic_prior() <= 0.0 || beta_prior <= 0.0)
        throw ValidationError("Dirichlet priors must be positive");
}

std::set<std::string> read_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open stopword file " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
        line = line.substr(start);
        if (line.empty() || line.front() == '#') continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(line);
    }
    return words;
}

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TokenCounts preprocess(const std::string& text, const TextConfig& cfg) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string chunk = text.substr(i, j - i);
        i = j;
        if (chunk.empty()) continue;
        std::string lower = chunk;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (starts_with(lower, "http://") || starts_with(lower, "https://") ||
            starts_with(lower, "www.") || lower.front() == '@')
            continue;
        // Apostrophes join ("don't" -> "dont"); any other punctuation splits.
        std::string cur;
        for (unsigned char c : lower) {
            if (c == '\'') continue;
            if (is_word_byte(c)) {
                cur.push_back(static_cast<char>(c));
            } else if (!cur.empty()) {
                words.push_back(std::move(cur));
                cur.clear();
            }
        }
        if (!cur.empty()) words.push_back(std::move(cur));
    }
    std::vector<std::string> shingles;
    for (auto& w : words)
        if (!cfg.stopwords.count(w)) shingles.push_back(std::move(w));

    TokenCounts counts;
    const auto n = static_cast<std::size_t>(cfg.ngram);
    if (shingles.size() < n) return counts;
    for (std::size_t k = 0; k + n <= shingles.size(); ++k) {
        std::string gram = shingles[k];
        for (std::size_t m = 1; m < n; ++m) gram += "_" + shingles[k + m];
        ++counts[gram];
    }
    return counts;
}

IdfTable::IdfTable(std::span<const TokenCounts> docs) : num_docs_(docs.size()) {
    for (const auto& d : docs)
        for (const auto& [term, c] : d) ++df_[term];
}

double IdfTable::idf(const std::string& term) const {
    auto it = df_.find(term);
    const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
    return std::log((1.0 + static_cast<double>(num_docs_)) / (1.0 + df)) + 1.0;
}

std::vector<std::string> select_tweets(const std::vector<std::string>& texts, const TextConfig& cfg,
                                       const NodeId& node) {
    const auto k = static_cast<std::size_t>(cfg.tweets_per_node);
    if (texts.size() <= k) return texts;
    if (!cfg.sample_tweets) return {texts.begin(), texts.begin() + static_cast<std::ptrdiff_t>(k)};
    std::vector<std::size_t> idx(texts.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(cfg.seed ^ fnv1a(node));
    rng.shuffle(idx);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(texts[i]);
    return out;
}

namespace {

// Keeps the b largest entries; ties resolved by term order.
TermVector top_terms(const TermVector& v, std::size_t b) {
    if (v.size() <= b) return v;
    std::vector<std::pair<std::string, double>> items(v.begin(), v.end());
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    items.resize(b);
    return {items.begin(), items.end()};
}

}  // namespace

NodeAggregate aggregate_node(const std::vector<std::string>& texts, const TextConfig& cfg,
                             const IdfTable* idf) {
    std::vector<TokenCounts> docs;
    for (const auto& t : texts) {
        auto d = preprocess(t, cfg);
        if (!d.empty()) docs.push_back(std::move(d));
    }
    NodeAggregate agg;
    if (docs.empty()) {
        agg.text_less = true;
        return agg;
    }
    IdfTable local;
    if (idf == nullptr) {
        local = IdfTable(docs);
        idf = &local;
    }
    const auto b = static_cast<std::size_t>(cfg.top_terms);
    for (const auto& d : docs) {
        TermVector x;
        for (const auto& [term, c] : d) x[term] = c * idf->idf(term);
        x = top_terms(x, b);
        double norm = 0.0;
        for (const auto& [term, w] : x) norm += w * w;
        norm = std::sqrt(norm);
        for (const auto& [term, w] : x) agg.mean_vector[term] += w / norm;
    }
    for (auto& [term, w] : agg.mean_vector) w /= static_cast<double>(docs.size());
    agg.mean_vector = top_terms(agg.mean_vector, b);
    for (const auto& d : docs)
        for (const auto& [term, c] : d)
            if (agg.mean_vector.count(term)) agg.pseudo_document[term] += c;
    return agg;
}

TopicModel fit_lda(const std::vector<TokenCounts>& docs, const TextConfig& cfg) {
    cfg.validate();
    if (docs.empty()) throw ValidationError("LDA needs at least one document");
    std::map<std::string, std::size_t> vocab_index;
    for (const auto& d : docs)
        for (const auto& [term, c] : d)
            if (c > 0) vocab_index.emplace(term, 0);
    if (vocab_index.empty()) throw ValidationError("LDA vocabulary is empty");

    TopicModel model;
    for (auto& [term, idx] : vocab_index) {
        idx = model.vocabulary.size();
        model.vocabulary.push_back(term);
    }
    const std::size_t D = docs.size();
    const std::size_t V = model.vocabulary.size();
    const auto T = static_cast<std::size_t>(cfg.topics);
    const double alpha = cfg.doc_topic_prior();
    const double beta = cfg.beta_prior;

    // Token streams in term order.
    std::vector<std::vector<std::size_t>> words(D);
    for (std::size_t d = 0; d < D; ++d)
        for (const auto& [term, c] : docs[d])
            for (int r = 0; r < c; ++r) words[d].push_back(vocab_index.at(term));

    Rng rng(cfg.seed);
    std::vector<std::vector<std::size_t>> z(D);
    std::vector<std::vector<int>> n_dt(D, std::vector<int>(T, 0));
    std::vector<std::vector<int>> n_tw(T, std::vector<int>(V, 0));
    std::vector<int> n_t(T, 0);
    for (std::size_t d = 0; d < D; ++d) {
        z[d].resize(words[d].size());
        for (std::size_t i = 0; i < words[d].size(); ++i) {
            const std::size_t t = rng.below(T);
            z[d][i] = t;
            ++n_dt[d][t];
            ++n_tw[t][words[d][i]];
            ++n_t[t];
        }
    }

    Eigen::MatrixXd theta_sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(T));
    Eigen::MatrixXd phi_sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(T), static_cast<Eigen::Index>(V));
    std::vector<double> weights(T);
    int samples = 0;
    for (int iter = 0; iter < cfg.gibbs_iters; ++iter) {
        for (std::size_t d = 0; d < D; ++d) {
            for (std::size_t i = 0; i < words[d].size(); ++i) {
                const std::size_t w = words[d][i];
                const std::size_t old = z[d][i];
                --n_dt[d][old];
                --n_tw[old][w];
                --n_t[old];
                double total = 0.0;
                for (std::size_t t = 0; t < T; ++t) {
                    weights[t] = (n_dt[d][t] + alpha) * (n_tw[t][w] + beta) / (n_t[t] + V * beta);
                    total += weights[t];
                }
                double u = rng.uniform() * total;
                std::size_t t = 0;
                for (; t + 1 < T; ++t) {
                    u -= weights[t];
                    if (u < 0.0) break;
                }
                z[d][i] = t;
                ++n_dt[d][t];
                ++n_tw[t][w];
                ++n_t[t];
            }
        }
        if (iter >= cfg.burn_in) {
            ++samples;
            for (std::size_t d = 0; d < D; ++d) {
                const double len = static_cast<double>(words[d].size());
                for (std::size_t t = 0; t < T; ++t)
                    theta_sum(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(t)) +=
                        (n_dt[d][t] + alpha) / (len + T * alpha);
            }
            for (std::size_t t = 0; t < T; ++t)
                for (std::size_t w = 0; w < V; ++w)
                    phi_sum(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(w)) +=
                        (n_tw[t][w] + beta) / (n_t[t] + V * beta);
        }
    }
    theta_sum /= samples;
    phi_sum /= samples;
    // Renormalise so rows are distributions to rounding.
    for (Eigen::Index d = 0; d < theta_sum.rows(); ++d) theta_sum.row(d) /= theta_sum.row(d).sum();
    for (Eigen::Index t = 0; t < phi_sum.rows(); ++t) phi_sum.row(t) /= phi_sum.row(t).sum();
    model.doc_topic = DenseMatrix::from_eigen(theta_sum);
    model.topic_word = DenseMatrix::from_eigen(phi_sum);
    model.topic_word.col_labels = model.vocabulary;
    return model;
}

namespace {

void check_distribution(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        if (!(v >= 0.0)) throw ValidationError("distribution has a negative or NaN entry");
        s += v;
    }
    if (std::abs(s - 1.0) > 1e-9) throw ValidationError("distribution does not sum to 1");
}

double kl_to_mixture(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0) continue;
        const double mix = 0.5 * (x[i] + y[i]);
        acc += x[i] * std::log2(x[i] / mix);
    }
    return acc;
}

}  // namespace

double js_divergence(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("distribution length mismatch");
    check_distribution(x);
    check_distribution(y);
    const double jsd = 0.5 * kl_to_mixture(x, y) + 0.5 * kl_to_mixture(y, x);
    return std::clamp(jsd, 0.0, 1.0);
}

double js_distance(std::span<const double> x, std::span<const double> y) {
    return std::sqrt(js_divergence(x, y));
}

bool TextualResult::covers(const NodeId& v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

double TextualResult::similarity(const NodeId& a, const NodeId& b) const {
    auto ia = std::lower_bound(nodes.begin(), nodes.end(), a);
    auto ib = std::lower_bound(nodes.begin(), nodes.end(), b);
    if (ia == nodes.end() || *ia != a || ib == nodes.end() || *ib != b) return 0.0;
    return affinity(static_cast<std::size_t>(ia - nodes.begin()),
                    static_cast<std::size_t>(ib - nodes.begin()));
}

TextualResult text_sim(const std::vector<NodeId>& candidates, const NetworkData& net,
                       const TextConfig& cfg) {
    cfg.validate();
    TextualResult res;
    res.tau = cfg.tau;

    std::vector<NodeId> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Tokenize the selected tweets once; IDF is taken over all of them.
    std::vector<std::pair<NodeId, std::vector<std::string>>> selected;
    std::vector<TokenCounts> all_tweets;
    for (const auto& v : sorted) {
        auto it = net.corpora().find(v);
        if (it == net.corpora().end() || it->second.empty()) {
            res.text_less.push_back(v);
            continue;
        }
        auto tweets = select_tweets(it->second, cfg, v);
        for (const auto& t : tweets) {
            auto d = preprocess(t, cfg);
            if (!d.empty()) all_tweets.push_back(std::move(d));
        }
        selected.emplace_back(v, std::move(tweets));
    }
    const IdfTable idf(all_tweets);

    std::vector<TokenCounts> pseudo_docs;
    for (const auto& [v, tweets] : selected) {
        auto agg = aggregate_node(tweets, cfg, &idf);
        if (agg.text_less) {
            res.text_less.push_back(v);
            continue;
        }
        res.nodes.push_back(v);
        pseudo_docs.push_back(std::move(agg.pseudo_document));
    }
    std::sort(res.text_less.begin(), res.text_less.end());
    if (res.nodes.size() < 2)
        throw ValidationError("text similarity needs at least two nodes with text");

    // Nodes with identical pseudo-documents share one LDA document, so equal
    // corpora always compare as identical.
    std::vector<TokenCounts> unique_docs;
    std::vector<std::size_t> doc_of(pseudo_docs.size());
    {
        std::map<TokenCounts, std::size_t> seen;
        for (std::size_t i = 0; i < pseudo_docs.size(); ++i) {
            auto [it, inserted] = seen.emplace(pseudo_docs[i], unique_docs.size());
            if (inserted) unique_docs.push_back(pseudo_docs[i]);
            doc_of[i] = it->second;
        }
    }
    res.model = fit_lda(unique_docs, cfg);

    const std::size_t m = res.nodes.size();
    const std::size_t T = res.model.doc_topic.cols();
    res.node_topics = DenseMatrix(m, T);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < T; ++t) res.node_topics(i, t) = res.model.doc_topic(doc_of[i], t);
    res.node_topics.row_labels = res.nodes;

    res.affinity = kernels::parallel::js_similarity(res.node_topics);
    res.affinity.row_labels = res.affinity.col_labels = res.nodes;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            NodePair key{res.nodes[i], res.nodes[j]};
            (res.affinity(i, j) >= cfg.tau ? res.related : res.unrelated).push_back(std::move(key));
        }
    return res;
}

}  // namespace mct
