#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ontorec {

/// Bounded global term dictionary: dense indexes in lexicographic term order.
class TermDictionary {
public:
    TermDictionary() = default;

    /// Keep the `capacity` terms with highest document frequency (ties broken
    /// lexicographically, smaller term wins); assign indexes in lexicographic
    /// term order. Throws DataError if capacity < 1.
    static std::shared_ptr<const TermDictionary> build(
        const std::vector<std::vector<std::string>>& corpus, std::size_t capacity);

    std::size_t size() const { return index_of_.size(); }
    std::size_t capacity() const { return capacity_; }

    /// Index of a term, or -1 if not in the dictionary.
    long index_of(const std::string& term) const;
    const std::string& term_at(std::size_t index) const { return terms_[index]; }

private:
    std::map<std::string, std::uint32_t> index_of_;
    std::vector<std::string> terms_;
    std::size_t capacity_ = 0;
};

/// Sparse term-frequency vector over a shared dictionary.
struct TermVector {
    std::map<std::uint32_t, double> weights;
    std::shared_ptr<const TermDictionary> dict;
};

/// Count in-dictionary term occurrences; out-of-dictionary tokens ignored.
TermVector vectorize(const std::vector<std::string>& tokens,
                     std::shared_ptr<const TermDictionary> dict);

/// Euclidean distance over all dictionary terms. Throws DataError when the
/// vectors reference different dictionaries.
double knn_distance(const TermVector& a, const TermVector& b);

struct TrainingExample {
    TermVector vec;
    std::string topic;  // topic path
};

struct TrainingSet {
    std::vector<TrainingExample> examples;
};

struct Classification {
    std::string topic;
    double confidence = 0.0;  // in [0,1]
};

/// Plain IBk: plurality vote of the k nearest training examples. Distance
/// ties break by example insertion order, label ties lexicographically.
Classification ibk_classify(const TermVector& q, const TrainingSet& ts, int k);

/// IBk with each neighbour's vote weighted by its example weight; reduces to
/// ibk_classify under a uniform distribution.
Classification ibk_classify_weighted(const TermVector& q, const TrainingSet& ts, int k,
                                     std::span<const double> weights);

struct BoostRound {
    std::vector<double> distribution;  // example weights the weak learner saw
    double error = 0.0;                // e_t
    double beta = 0.0;                 // e_t / (1 - e_t)
    double vote_weight = 0.0;          // log(1 / beta)
};

class BoostedClassifier {
public:
    BoostedClassifier(std::shared_ptr<const TrainingSet> ts, int k, int budget)
        : ts_(std::move(ts)), k_(k), budget_(budget) {}

    const std::vector<BoostRound>& iterations() const { return rounds_; }
    int k() const { return k_; }
    int budget() const { return budget_; }
    const TrainingSet& training_set() const { return *ts_; }

    Classification classify(const TermVector& q) const;

private:
    std::shared_ptr<const TrainingSet> ts_;
    int k_;
    int budget_;
    std::vector<BoostRound> rounds_;
    friend BoostedClassifier adaboost_train(std::shared_ptr<const TrainingSet>, int, int);
};

/// AdaBoostM1 over the distribution-aware IBk weak learner. Weights start at
/// 1/m over training examples; beta_t = e_t / (1 - e_t); correct examples are
/// scaled by beta_t and the distribution renormalized. Stops early on a
/// perfect round (beta clamped to 1e-10) or e_t >= 0.5 (round discarded).
BoostedClassifier adaboost_train(std::shared_ptr<const TrainingSet> ts, int k, int budget);

/// Argmax over classes of the summed vote weights, ties lexicographic;
/// confidence = winning vote mass / total vote mass.
Classification combine_votes(const std::vector<std::pair<std::string, double>>& votes);

/// Combined vote of all boosting iterations, per combine_votes.
Classification boosted_classify(const TermVector& q, const BoostedClassifier& c);

}  // namespace ontorec
