#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontorec/classify.hpp"
#include "ontorec/recommend.hpp"

namespace ontorec {

struct CorpusDoc {
    std::string url;
    std::string file;
    std::vector<std::string> tokens;  // stop-listed and stemmed
};

struct Corpus {
    std::vector<CorpusDoc> docs;
};

/// Read the corpus directory through a manifest of {file, url} records
/// (one JSON object per line); each file is tokenized and stemmed.
Corpus load_corpus(const std::string& dir, const std::string& manifest_path,
                   const std::set<std::string>& stoplist);

/// Training-set persistence: {url, topic_path} records, one per line.
std::map<std::string, std::string> load_training_labels(const std::string& path);

struct ClassifierBundle {
    std::shared_ptr<const TermDictionary> dict;
    std::shared_ptr<const TrainingSet> training;
    std::optional<BoostedClassifier> model;
};

/// Build the dictionary over the whole corpus, vectorize the labelled docs
/// and train the boosted classifier.
ClassifierBundle train_pipeline(const Corpus& corpus,
                                const std::map<std::string, std::string>& labels,
                                std::size_t capacity, int k, int budget);

/// Classify every corpus document into the central paper database.
PaperDatabase classify_corpus(const Corpus& corpus, const ClassifierBundle& bundle);

}  // namespace ontorec
