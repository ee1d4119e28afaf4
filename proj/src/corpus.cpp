#include "ontorec/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ontorec/errors.hpp"
#include "ontorec/text.hpp"

namespace ontorec {

using nlohmann::json;

Corpus load_corpus(const std::string& dir, const std::string& manifest_path,
                   const std::set<std::string>& stoplist) {
    std::ifstream manifest(manifest_path);
    if (!manifest) throw DataError("cannot open manifest '" + manifest_path + "'");
    Corpus corpus;
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("file") || !j.contains("url")) {
            throw DataError("bad manifest record: " + line);
        }
        CorpusDoc doc;
        doc.file = j["file"].get<std::string>();
        doc.url = j["url"].get<std::string>();
        std::string path = dir.empty() ? doc.file : dir + "/" + doc.file;
        std::ifstream in(path);
        if (!in) throw DataError("cannot open corpus file '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        doc.tokens = tokenize_and_stem(text.str(), stoplist);
        corpus.docs.push_back(std::move(doc));
    }
    return corpus;
}

std::map<std::string, std::string> load_training_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open training-set file '" + path + "'");
    std::map<std::string, std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("url") || !j.contains("topic_path")) {
            throw DataError("bad training record: " + line);
        }
        labels[j["url"].get<std::string>()] = j["topic_path"].get<std::string>();
    }
    return labels;
}

ClassifierBundle train_pipeline(const Corpus& corpus,
                                const std::map<std::string, std::string>& labels,
                                std::size_t capacity, int k, int budget) {
    ClassifierBundle bundle;
    std::vector<std::vector<std::string>> token_lists;
    for (const auto& doc : corpus.docs) token_lists.push_back(doc.tokens);
    bundle.dict = TermDictionary::build(token_lists, capacity);

    auto ts = std::make_shared<TrainingSet>();
    for (const auto& doc : corpus.docs) {
        auto it = labels.find(doc.url);
        if (it == labels.end()) continue;
        ts->examples.push_back({vectorize(doc.tokens, bundle.dict), it->second});
    }
    if (ts->examples.empty()) throw StateError("no labelled documents in the corpus");
    bundle.training = ts;
    bundle.model = adaboost_train(ts, k, budget);
    return bundle;
}

PaperDatabase classify_corpus(const Corpus& corpus, const ClassifierBundle& bundle) {
    if (!bundle.model) throw StateError("classifier is not trained");
    PaperDatabase papers;
    for (const auto& doc : corpus.docs) {
        auto vec = vectorize(doc.tokens, bundle.dict);
        auto cls = bundle.model->classify(vec);
        papers[doc.url] = ClassifiedPaper{doc.url, cls.topic, cls.confidence};
    }
    return papers;
}

}  // namespace ontorec
