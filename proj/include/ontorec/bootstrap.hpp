#pragma once

#include <map>
#include <string>
#include <vector>

#include "ontorec/cop.hpp"
#include "ontorec/date.hpp"
#include "ontorec/kb.hpp"

namespace ontorec {

enum class CopConfidenceSource {
    unit,       // all confidences 1.0
    relevance,  // use the CoP relevance values
};

const char* to_string(CopConfidenceSource s);
CopConfidenceSource cop_confidence_source_from_string(const std::string& s);

struct BootstrapParams {
    double gamma = 2.5;
    Date reference_date;
    CopConfidenceSource cop_confidence_source = CopConfidenceSource::unit;
};

struct DatedTopic {
    std::string topic;  // topic path
    int year = 0;       // publication year
};

/// Publication age in whole years, floored at 1.
int publication_age(int publication_year, int reference_year);

/// Cold-start profile from the user's own publications: 1/age per
/// publication on its topic, with 1/2^level fractions inferred for every
/// superclass.
InterestProfile new_system_profile(const std::string& person,
                                   const std::vector<DatedTopic>& classified_pubs,
                                   const KnowledgeBase& kb, const BootstrapParams& params);

/// Cold-start profile for a user joining a running system: the publication
/// term of new_system_profile plus (gamma / N_similar) * sum of similar
/// users' interests scaled by their CoP confidence. Superclass inference
/// applies to the publication term only; N_similar counts CoP members with
/// a retrievable profile, and the CoP term is omitted when it is zero.
InterestProfile new_user_profile(const std::string& person,
                                 const std::vector<DatedTopic>& classified_pubs,
                                 const CopResult& cop,
                                 const std::map<std::string, InterestProfile>& similar_profiles,
                                 const KnowledgeBase& kb, const BootstrapParams& params);

/// Assert each profile into the knowledge base at its own as_of date.
void export_profiles(const std::vector<InterestProfile>& profiles, KnowledgeBase& kb);

}  // namespace ontorec
