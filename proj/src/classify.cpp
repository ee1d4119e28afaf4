#include "ontorec/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ontorec/errors.hpp"

namespace ontorec {

std::shared_ptr<const TermDictionary> TermDictionary::build(
    const std::vector<std::vector<std::string>>& corpus, std::size_t capacity) {
    if (capacity < 1) throw DataError("dictionary capacity must be >= 1");
    std::map<std::string, std::size_t> doc_freq;
    for (const auto& doc : corpus) {
        std::set<std::string> seen(doc.begin(), doc.end());
        for (const auto& term : seen) ++doc_freq[term];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(doc_freq.begin(), doc_freq.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > capacity) ranked.resize(capacity);

    auto dict = std::make_shared<TermDictionary>();
    dict->capacity_ = capacity;
    for (const auto& [term, freq] : ranked) dict->terms_.push_back(term);
    std::sort(dict->terms_.begin(), dict->terms_.end());
    for (std::size_t i = 0; i < dict->terms_.size(); ++i) {
        dict->index_of_[dict->terms_[i]] = std::uint32_t(i);
    }
    return dict;
}

long TermDictionary::index_of(const std::string& term) const {
    auto it = index_of_.find(term);
    return it == index_of_.end() ? -1 : long(it->second);
}

TermVector vectorize(const std::vector<std::string>& tokens,
                     std::shared_ptr<const TermDictionary> dict) {
    TermVector v;
    v.dict = std::move(dict);
    for (const auto& t : tokens) {
        long idx = v.dict->index_of(t);
        if (idx >= 0) v.weights[std::uint32_t(idx)] += 1.0;
    }
    return v;
}

double knn_distance(const TermVector& a, const TermVector& b) {
    if (a.dict != b.dict) throw DataError("term vectors use different dictionaries");
    double sum = 0.0;
    auto ia = a.weights.begin(), ib = b.weights.begin();
    while (ia != a.weights.end() || ib != b.weights.end()) {
        double d;
        if (ib == b.weights.end() || (ia != a.weights.end() && ia->first < ib->first)) {
            d = ia->second;
            ++ia;
        } else if (ia == a.weights.end() || ib->first < ia->first) {
            d = ib->second;
            ++ib;
        } else {
            d = ia->second - ib->second;
            ++ia;
            ++ib;
        }
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

// Indexes of the k nearest training examples; distance ties keep insertion order.
std::vector<std::size_t> nearest(const TermVector& q, const TrainingSet& ts, int k) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(ts.examples.size());
    for (std::size_t i = 0; i < ts.examples.size(); ++i) {
        dist.emplace_back(knn_distance(q, ts.examples[i].vec), i);
    }
    std::sort(dist.begin(), dist.end());
    std::vector<std::size_t> idx;
    std::size_t n = std::min(std::size_t(k), dist.size());
    for (std::size_t i = 0; i < n; ++i) idx.push_back(dist[i].second);
    return idx;
}

Classification plurality(const TrainingSet& ts, const std::vector<std::size_t>& neighbours,
                         const double* weights) {
    std::map<std::string, double> votes;
    double total = 0.0;
    for (std::size_t i : neighbours) {
        double w = weights ? weights[i] : 1.0;
        votes[ts.examples[i].topic] += w;
        total += w;
    }
    Classification result;
    double best = -1.0;
    for (const auto& [label, mass] : votes) {  // ascending: first max wins ties
        if (mass > best) {
            best = mass;
            result.topic = label;
        }
    }
    result.confidence = total > 0.0 ? best / total : 0.0;
    return result;
}

}  // namespace

Classification ibk_classify(const TermVector& q, const TrainingSet& ts, int k) {
    if (ts.examples.empty()) throw StateError("training set is empty");
    if (k < 1) throw DataError("k must be >= 1");
    return plurality(ts, nearest(q, ts, k), nullptr);
}

Classification ibk_classify_weighted(const TermVector& q, const TrainingSet& ts, int k,
                                     std::span<const double> weights) {
    if (ts.examples.empty()) throw StateError("training set is empty");
    if (k < 1) throw DataError("k must be >= 1");
    if (weights.size() != ts.examples.size()) {
        throw DataError("weight vector does not match training set size");
    }
    return plurality(ts, nearest(q, ts, k), weights.data());
}

BoostedClassifier adaboost_train(std::shared_ptr<const TrainingSet> ts, int k, int budget) {
    if (!ts || ts->examples.empty()) throw StateError("training set is empty");
    if (budget < 1) throw DataError("iteration budget must be >= 1");
    constexpr double kEpsilon = 1e-10;

    BoostedClassifier c(ts, k, budget);
    const std::size_t m = ts->examples.size();
    std::vector<double> weights(m, 1.0 / double(m));

    for (int t = 0; t < budget; ++t) {
        double error = 0.0;
        std::vector<bool> correct(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto pred = ibk_classify_weighted(ts->examples[i].vec, *ts, k, weights);
            correct[i] = pred.topic == ts->examples[i].topic;
            if (!correct[i]) error += weights[i];
        }
        if (error >= 0.5) {
            if (c.rounds_.empty()) {
                throw StateError("weak learner is no better than chance on round 1");
            }
            break;  // round discarded
        }
        BoostRound round;
        round.distribution = weights;
        round.error = error;
        round.beta = error > 0.0 ? error / (1.0 - error) : kEpsilon;
        round.vote_weight = std::log(1.0 / round.beta);
        c.rounds_.push_back(std::move(round));
        if (error == 0.0) break;

        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (correct[i]) weights[i] *= c.rounds_.back().beta;
            sum += weights[i];
        }
        for (double& w : weights) w /= sum;
    }
    return c;
}

Classification combine_votes(const std::vector<std::pair<std::string, double>>& votes) {
    std::map<std::string, double> mass;
    double total = 0.0;
    for (const auto& [label, weight] : votes) {
        mass[label] += weight;
        total += weight;
    }
    Classification result;
    double best = -1.0;
    for (const auto& [label, m] : mass) {
        if (m > best) {
            best = m;
            result.topic = label;
        }
    }
    result.confidence = total > 0.0 ? best / total : 0.0;
    return result;
}

Classification BoostedClassifier::classify(const TermVector& q) const {
    if (rounds_.empty()) throw StateError("boosted classifier has no iterations");
    std::vector<std::pair<std::string, double>> votes;
    for (const auto& round : rounds_) {
        auto pred = ibk_classify_weighted(q, *ts_, k_, round.distribution);
        votes.emplace_back(pred.topic, round.vote_weight);
    }
    return combine_votes(votes);
}

Classification boosted_classify(const TermVector& q, const BoostedClassifier& c) {
    return c.classify(q);
}

}  // namespace ontorec
