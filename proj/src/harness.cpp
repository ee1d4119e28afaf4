#include "ontorec/harness.hpp"

#include <algorithm>

#include "ontorec/errors.hpp"

namespace ontorec {

namespace {

struct Counts {
    std::size_t correct = 0;
    std::size_t missing = 0;
    std::size_t incorrect = 0;
};

Counts count_topics(const InterestProfile& current, const InterestProfile& benchmark) {
    Counts c;
    for (const auto& [topic, v] : current.entries) {
        if (benchmark.entries.count(topic)) {
            ++c.correct;
        } else {
            ++c.incorrect;
        }
    }
    for (const auto& [topic, v] : benchmark.entries) {
        if (!current.entries.count(topic)) ++c.missing;
    }
    return c;
}

void require_same_users(const std::map<std::string, InterestProfile>& current,
                        const std::map<std::string, InterestProfile>& benchmark) {
    if (current.size() != benchmark.size()) throw DataError("profile user sets differ");
    for (const auto& [user, p] : current) {
        if (!benchmark.count(user)) {
            throw DataError("user '" + user + "' missing from benchmark profiles");
        }
    }
}

}  // namespace

double profile_precision(const std::map<std::string, InterestProfile>& current,
                         const std::map<std::string, InterestProfile>& benchmark) {
    require_same_users(current, benchmark);
    if (current.empty()) throw DataError("no users to average over");
    double sum = 0.0;
    for (const auto& [user, p] : current) {
        Counts c = count_topics(p, benchmark.at(user));
        std::size_t denom = c.correct + c.missing;
        if (denom > 0) sum += double(c.correct) / double(denom);
    }
    return sum / double(current.size());
}

double profile_error_rate(const std::map<std::string, InterestProfile>& current,
                          const std::map<std::string, InterestProfile>& benchmark) {
    require_same_users(current, benchmark);
    if (current.empty()) throw DataError("no users to average over");
    double sum = 0.0;
    for (const auto& [user, p] : current) {
        Counts c = count_topics(p, benchmark.at(user));
        std::size_t denom = c.correct + c.incorrect + c.missing;
        if (denom > 0) sum += double(c.incorrect) / double(denom);
    }
    return sum / double(current.size());
}

std::vector<DatedTopic> classified_publications(const KnowledgeBase& kb,
                                                const std::string& person,
                                                const PaperDatabase& papers,
                                                std::vector<std::string>* warnings) {
    std::vector<DatedTopic> result;
    for (const auto& pub : kb.publications_of(person)) {
        std::string topic;
        if (pub.topic_label) {
            topic = *pub.topic_label;
        } else if (pub.url) {
            auto it = papers.find(*pub.url);
            if (it != papers.end()) topic = it->second.topic;
        }
        if (topic.empty()) {
            if (warnings) warnings->push_back("publication '" + pub.id + "' has no topic; skipped");
            continue;
        }
        if (!pub.year) {
            if (warnings) warnings->push_back("publication '" + pub.id + "' is undated; skipped");
            continue;
        }
        result.push_back({topic, *pub.year});
    }
    return result;
}

namespace {

void validate_split(const WeeklySplit& logs) {
    if (logs.weeks.empty()) throw DataError("weekly split has no segments");
    if (!logs.weeks[0].events.empty()) {
        throw DataError("week-0 segment must be empty");
    }
    for (std::size_t i = 0; i + 1 < logs.weeks.size(); ++i) {
        if (logs.weeks[i].events.empty() || logs.weeks[i + 1].events.empty()) continue;
        Date max_i = logs.weeks[i].events[0].date;
        Date min_next = logs.weeks[i + 1].events[0].date;
        for (const auto& e : logs.weeks[i].events) max_i = std::max(max_i, e.date);
        for (const auto& e : logs.weeks[i + 1].events) min_next = std::min(min_next, e.date);
        if (max_i > min_next) {
            throw DataError("segment " + std::to_string(i) + " has dates after segment " +
                            std::to_string(i + 1));
        }
    }
}

std::vector<Event> resolve_events(const std::vector<RawEvent>& raw, const std::string& user,
                                  const PaperDatabase& papers) {
    std::vector<Event> events;
    for (const auto& re : raw) {
        if (re.user != user) continue;
        Event ev;
        ev.user = re.user;
        ev.etype = re.etype;
        ev.date = re.date;
        if (re.etype == EventType::paper_browsed ||
            re.etype == EventType::recommendation_followed) {
            auto it = papers.find(re.ref);
            if (it == papers.end()) continue;  // unresolvable url, dropped
            ev.topic = it->second.topic;
        } else {
            ev.topic = re.ref;
        }
        events.push_back(std::move(ev));
    }
    return events;
}

InterestProfile merge(const InterestProfile& a, const InterestProfile& b) {
    InterestProfile out = a;
    for (const auto& [topic, v] : b.entries) out.add(topic, v);
    return out;
}

}  // namespace

std::vector<MetricsRow> replay_experiment(const KnowledgeBase& kb, const PaperDatabase& papers,
                                          const WeeklySplit& logs,
                                          const std::vector<std::string>& users,
                                          bool bootstrap_on, const BootstrapParams& params) {
    if (papers.empty()) {
        throw StateError("paper database is empty; the classifier has not been trained");
    }
    validate_split(logs);
    if (users.empty()) throw DataError("no users given");

    const std::size_t week_count = logs.weeks.size();

    // control profiles: cumulative behaviour only
    std::vector<std::map<std::string, InterestProfile>> control(week_count);
    for (const auto& user : users) {
        std::vector<Event> cumulative;
        for (std::size_t i = 0; i < week_count; ++i) {
            auto weekly = resolve_events(logs.weeks[i].events, user, papers);
            cumulative.insert(cumulative.end(), weekly.begin(), weekly.end());
            control[i][user] =
                compute_profile(user, cumulative, kb, logs.weeks[i].as_of).profile;
        }
    }
    const auto& benchmark = control.back();

    std::vector<MetricsRow> rows;
    for (std::size_t i = 0; i < week_count; ++i) {
        rows.push_back({int(i), profile_precision(control[i], benchmark),
                        profile_error_rate(control[i], benchmark), "control"});
    }

    if (bootstrap_on) {
        std::map<std::string, InterestProfile> boot;
        for (const auto& user : users) {
            auto pubs = classified_publications(kb, user, papers);
            boot[user] = new_system_profile(user, pubs, kb, params);
        }
        for (std::size_t i = 0; i < week_count; ++i) {
            std::map<std::string, InterestProfile> merged;
            for (const auto& user : users) merged[user] = merge(control[i].at(user), boot[user]);
            rows.push_back({int(i), profile_precision(merged, benchmark),
                            profile_error_rate(merged, benchmark), "bootstrap"});
        }
    }
    return rows;
}

MetricsRow new_user_evaluation(const KnowledgeBase& kb,
                               const std::map<std::string, InterestProfile>& final_profiles,
                               const std::map<std::string, CopResult>& cop_per_user,
                               const BootstrapParams& params) {
    if (final_profiles.size() < 2) throw DataError("new-user evaluation needs >= 2 users");
    double precision_sum = 0.0;
    double error_sum = 0.0;
    for (const auto& [user, final_profile] : final_profiles) {
        auto cop_it = cop_per_user.find(user);
        if (cop_it == cop_per_user.end()) {
            throw DataError("no community of practice for user '" + user + "'");
        }
        std::map<std::string, InterestProfile> others = final_profiles;
        others.erase(user);
        auto pubs = classified_publications(kb, user, {});
        InterestProfile rebuilt =
            new_user_profile(user, pubs, cop_it->second, others, kb, params);
        std::map<std::string, InterestProfile> cur{{user, rebuilt}};
        std::map<std::string, InterestProfile> bench{{user, final_profile}};
        precision_sum += profile_precision(cur, bench);
        error_sum += profile_error_rate(cur, bench);
    }
    MetricsRow row;
    row.week = 0;
    row.precision = precision_sum / double(final_profiles.size());
    row.error_rate = error_sum / double(final_profiles.size());
    row.run_label = "new-user";
    return row;
}

}  // namespace ontorec
