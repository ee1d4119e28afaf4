#include "ontorec/bootstrap.hpp"

#include <algorithm>

#include "ontorec/errors.hpp"

namespace ontorec {

const char* to_string(CopConfidenceSource s) {
    return s == CopConfidenceSource::unit ? "unit" : "relevance";
}

CopConfidenceSource cop_confidence_source_from_string(const std::string& s) {
    if (s == "unit") return CopConfidenceSource::unit;
    if (s == "relevance") return CopConfidenceSource::relevance;
    throw DataError("unknown CoP confidence source: '" + s + "'");
}

int publication_age(int publication_year, int reference_year) {
    return std::max(1, reference_year - publication_year);
}

InterestProfile new_system_profile(const std::string& person,
                                   const std::vector<DatedTopic>& classified_pubs,
                                   const KnowledgeBase& kb, const BootstrapParams& params) {
    InterestProfile profile;
    profile.user = person;
    profile.as_of = params.reference_date;
    int reference_year = params.reference_date.year();
    for (const auto& pub : classified_pubs) {
        if (!kb.has_topic(pub.topic)) {
            throw DataError("publication topic '" + pub.topic + "' is not in the topic forest");
        }
        double v = 1.0 / double(publication_age(pub.year, reference_year));
        profile.add(pub.topic, v);
        double fraction = v;
        for (const auto& ancestor : kb.superclass_chain(pub.topic)) {
            fraction /= 2.0;
            profile.add(ancestor, fraction);
        }
    }
    return profile;
}

InterestProfile new_user_profile(const std::string& person,
                                 const std::vector<DatedTopic>& classified_pubs,
                                 const CopResult& cop,
                                 const std::map<std::string, InterestProfile>& similar_profiles,
                                 const KnowledgeBase& kb, const BootstrapParams& params) {
    if (params.gamma < 0.0) throw DataError("gamma must be >= 0");
    InterestProfile profile = new_system_profile(person, classified_pubs, kb, params);

    std::size_t n_similar = 0;
    for (const auto& [member, relevance] : cop) {
        if (similar_profiles.count(member)) ++n_similar;
    }
    if (n_similar == 0) return profile;

    double scale = params.gamma / double(n_similar);
    for (const auto& [member, relevance] : cop) {
        auto it = similar_profiles.find(member);
        if (it == similar_profiles.end()) continue;
        double confidence =
            params.cop_confidence_source == CopConfidenceSource::unit ? 1.0 : relevance;
        // similar users' profiles already carry their own inherited ancestor
        // entries, so no superclass inference here
        for (const auto& [topic, interest] : it->second.entries) {
            profile.add(topic, scale * interest * confidence);
        }
    }
    return profile;
}

void export_profiles(const std::vector<InterestProfile>& profiles, KnowledgeBase& kb) {
    for (const auto& p : profiles) {
        kb.assert_interest_profile(p.user, p, p.as_of);
    }
}

}  // namespace ontorec
