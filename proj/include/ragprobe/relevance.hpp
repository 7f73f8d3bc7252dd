#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ragprobe/corpus.hpp"
#include "ragprobe/error.hpp"

namespace ragprobe {

// Token inventory shared by scorer implementations. Id 0 is a reserved
// neutral filler with a zero embedding (also used to pad partial triggers),
// id 1 is the unknown-token bucket; real tokens start at id 2 in sorted
// order so ids are reproducible for a given text collection.
class Vocabulary {
public:
    static constexpr int kPadId = 0;
    static constexpr int kUnkId = 1;
    static constexpr int kFirstRealId = 2;

    Vocabulary() = default;

    static Vocabulary build(const std::vector<std::string>& texts);

    std::size_t size() const { return tokens_.size(); }

    // strict=true throws on unknown tokens, otherwise they map to kUnkId.
    int id_of(const std::string& token, bool strict) const;
    const std::string& token(int id) const;

    std::vector<int> encode(std::string_view text, bool strict) const;
    std::string decode(const std::vector<int>& ids) const;  // pads are dropped

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

struct RankEntry {
    std::string doc_id;
    double score = 0.0;
};

// Ordered scoring result for one query: descending score, ties by ascending
// doc id, at most k entries.
struct RankedList {
    std::string query_id;
    std::vector<RankEntry> entries;
    std::size_t k = 0;

    // 1-based position of a doc id, 0 when absent.
    std::size_t position_of(const std::string& doc_id) const;
};

struct RetrievalConfig {
    std::size_t k = 3;
};

// Query/document relevance scoring contract shared by the hidden target
// retriever and the trained surrogate. Scores are pure functions of
// (parameters, query, doc); tokenization is deterministic.
class RelevanceModel {
public:
    virtual ~RelevanceModel() = default;

    virtual const Vocabulary& vocab() const = 0;
    virtual double score(const std::string& query, const std::string& doc) const = 0;

    // Score a query against an explicit document token-id sequence. Pad
    // tokens contribute a zero embedding but still count toward the mean
    // pool, which keeps padded prefix evaluations comparable.
    virtual double score_tokens(const std::string& query, const std::vector<int>& doc_ids) const = 0;

    // Gradient of score with respect to the embedding vector at each trigger
    // position, for positions [trig_begin, trig_end) of doc_ids.
    virtual bool has_trigger_gradient() const { return false; }
    virtual std::vector<std::vector<double>> trigger_grad(const std::string& query,
                                                          const std::vector<int>& doc_ids,
                                                          std::size_t trig_begin,
                                                          std::size_t trig_end) const;

    // Token embeddings back the gradient-guided candidate ranking and the
    // trigger/document consistency score; remote adapters may lack them.
    virtual bool has_token_embeddings() const { return false; }
    virtual std::size_t embedding_dim() const;
    virtual std::vector<double> token_embedding(int id) const;
};

// Bilinear mean-pooled bag-of-tokens scorer:
//   score(q, d) = pool(q)^T W pool(d),  pool = mean of token embeddings.
// Deterministic, differentiable and cheap; the desk-scale stand-in for a
// dense retrieval encoder.
class ToyEmbedScorer : public RelevanceModel {
public:
    ToyEmbedScorer(Vocabulary vocab, std::size_t dim);

    // Embeddings uniform in [-scale, scale]; rows for pad/unk stay zero.
    void init_random_embeddings(std::uint64_t seed, double scale);
    void init_w_zero();
    void init_w_random(std::uint64_t seed, double scale);
    // W = I + sigma * noise; keeps rankings correlated with token overlap.
    void init_w_identity_noise(std::uint64_t seed, double sigma);

    const Vocabulary& vocab() const override { return vocab_; }
    double score(const std::string& query, const std::string& doc) const override;
    double score_tokens(const std::string& query, const std::vector<int>& doc_ids) const override;

    bool has_trigger_gradient() const override { return true; }
    std::vector<std::vector<double>> trigger_grad(const std::string& query,
                                                  const std::vector<int>& doc_ids,
                                                  std::size_t trig_begin,
                                                  std::size_t trig_end) const override;

    bool has_token_embeddings() const override { return true; }
    std::size_t embedding_dim() const override { return dim_; }
    std::vector<double> token_embedding(int id) const override;

    bool strict_vocab() const { return strict_vocab_; }
    void set_strict_vocab(bool strict) { strict_vocab_ = strict; }

    std::vector<double> pool_text(const std::string& text) const;
    std::vector<double> pool_ids(const std::vector<int>& ids) const;

    // Mutable parameter access for the trainer.
    double* embedding_row(int id) { return emb_.data() + static_cast<std::size_t>(id) * dim_; }
    const double* embedding_row(int id) const { return emb_.data() + static_cast<std::size_t>(id) * dim_; }
    std::vector<double>& w() { return w_; }
    const std::vector<double>& w() const { return w_; }

    void save(const std::string& path) const;
    static ToyEmbedScorer load(const std::string& path);

private:
    Vocabulary vocab_;
    std::size_t dim_;
    std::vector<double> emb_;  // vocab.size() x dim, row-major
    std::vector<double> w_;    // dim x dim, row-major
    bool strict_vocab_ = false;
};

// The k highest-scoring docs for a query, RankedList invariants enforced.
RankedList rank_top_k(const RelevanceModel& model, const Topic& query,
                      const std::vector<Document>& docs, const RetrievalConfig& cfg);

// Full ordering over all candidates (k = docs.size()).
RankedList rank_all(const RelevanceModel& model, const Topic& query,
                    const std::vector<Document>& docs);

}  // namespace ragprobe
