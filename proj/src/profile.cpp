#include "ontorec/profile.hpp"

#include <algorithm>

#include "ontorec/errors.hpp"

namespace ontorec {

const char* to_string(EventType t) {
    switch (t) {
        case EventType::paper_browsed: return "paper_browsed";
        case EventType::recommendation_followed: return "recommendation_followed";
        case EventType::topic_rated_interesting: return "topic_rated_interesting";
        case EventType::topic_rated_not_interesting: return "topic_rated_not_interesting";
    }
    return "?";
}

EventType event_type_from_string(const std::string& s) {
    for (auto t : {EventType::paper_browsed, EventType::recommendation_followed,
                   EventType::topic_rated_interesting, EventType::topic_rated_not_interesting}) {
        if (s == to_string(t)) return t;
    }
    throw DataError("unknown event type: '" + s + "'");
}

double event_interest_value(EventType t) {
    switch (t) {
        case EventType::paper_browsed: return 1.0;
        case EventType::recommendation_followed: return 2.0;
        case EventType::topic_rated_interesting: return 10.0;
        case EventType::topic_rated_not_interesting: return -10.0;
    }
    return 0.0;
}

ProfileResult compute_profile(const std::string& user, const std::vector<Event>& events,
                              const KnowledgeBase& kb, const Date& as_of) {
    ProfileResult result;
    result.profile.user = user;
    result.profile.as_of = as_of;
    for (const auto& ev : events) {
        if (!kb.has_topic(ev.topic)) {
            result.rejected.push_back(ev);
            continue;
        }
        long days_old = std::max(1L, as_of.days_since(ev.date));
        double v = event_interest_value(ev.etype) / double(days_old);
        result.profile.add(ev.topic, v);
        double fraction = v;
        for (const auto& ancestor : kb.superclass_chain(ev.topic)) {
            fraction /= 2.0;
            result.profile.add(ancestor, fraction);
        }
    }
    return result;
}

std::vector<std::string> top_topics(const InterestProfile& p, int n) {
    if (n < 1) throw DataError("top_topics needs n >= 1");
    std::vector<std::pair<std::string, double>> positive;
    for (const auto& [topic, value] : p.entries) {
        if (value > 0.0) positive.emplace_back(topic, value);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (positive.size() > std::size_t(n)) positive.resize(std::size_t(n));
    std::vector<std::string> topics;
    for (const auto& [topic, value] : positive) topics.push_back(topic);
    return topics;
}

}  // namespace ontorec
