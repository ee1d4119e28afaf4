#include "ontorec/recommend.hpp"

#include <algorithm>

#include "ontorec/errors.hpp"
#include "ontorec/profile.hpp"

namespace ontorec {

std::vector<Recommendation> recommend(const InterestProfile& profile,
                                      const std::vector<ClassifiedPaper>& papers,
                                      const std::set<std::string>& browsed, int limit) {
    if (limit < 1) throw DataError("recommendation limit must be >= 1");
    auto topics = top_topics(profile, 3);
    std::set<std::string> wanted(topics.begin(), topics.end());

    std::vector<Recommendation> recs;
    for (const auto& paper : papers) {
        if (!wanted.count(paper.topic)) continue;
        if (browsed.count(paper.url)) continue;
        Recommendation r;
        r.url = paper.url;
        r.topic = paper.topic;
        r.recommendation_confidence =
            paper.classification_confidence * profile.entries.at(paper.topic);
        recs.push_back(std::move(r));
    }
    std::sort(recs.begin(), recs.end(), [](const Recommendation& a, const Recommendation& b) {
        if (a.recommendation_confidence != b.recommendation_confidence) {
            return a.recommendation_confidence > b.recommendation_confidence;
        }
        return a.url < b.url;
    });
    if (recs.size() > std::size_t(limit)) recs.resize(std::size_t(limit));
    return recs;
}

}  // namespace ontorec
