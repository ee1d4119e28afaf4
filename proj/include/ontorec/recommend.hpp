#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontorec/kb.hpp"

namespace ontorec {

struct ClassifiedPaper {
    std::string url;
    std::string topic;  // topic path
    double classification_confidence = 0.0;  // in [0,1]
};

/// Central database of classified papers, keyed by url.
using PaperDatabase = std::map<std::string, ClassifiedPaper>;

struct Recommendation {
    std::string url;
    std::string topic;
    double recommendation_confidence = 0.0;  // classification confidence * topic interest
};

/// Daily recommendation set: papers in the profile's top three interesting
/// topics, minus already-browsed URLs, scored by classification confidence
/// times topic interest, sorted descending (ties by url), truncated to limit.
std::vector<Recommendation> recommend(const InterestProfile& profile,
                                      const std::vector<ClassifiedPaper>& papers,
                                      const std::set<std::string>& browsed, int limit = 10);

}  // namespace ontorec
