#pragma once

#include <string>
#include <vector>

#include "ontorec/date.hpp"
#include "ontorec/kb.hpp"

namespace ontorec {

enum class EventType {
    paper_browsed,
    recommendation_followed,
    topic_rated_interesting,
    topic_rated_not_interesting,
};

const char* to_string(EventType t);
EventType event_type_from_string(const std::string& s);

/// Fixed interest values: browse 1, follow 2, rated interesting 10,
/// rated not interesting -10.
double event_interest_value(EventType t);

struct Event {
    std::string user;
    EventType etype = EventType::paper_browsed;
    std::string topic;  // topic path (browse/follow events carry the paper's class)
    Date date;
};

struct ProfileResult {
    InterestProfile profile;
    std::vector<Event> rejected;  // events naming topics outside the forest
};

/// Inverse-time-weighted interest per topic: each event contributes
/// value / max(1, days old), plus value/2^level to every ancestor topic.
/// Events with unknown topics are reported in `rejected`, the rest processed.
ProfileResult compute_profile(const std::string& user, const std::vector<Event>& events,
                              const KnowledgeBase& kb, const Date& as_of);

/// The at-most-n positive-interest topics, descending interest, ties
/// lexicographic by path.
std::vector<std::string> top_topics(const InterestProfile& p, int n);

}  // namespace ontorec
