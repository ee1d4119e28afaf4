#pragma once

#include <map>
#include <string>
#include <vector>

#include "ontorec/bootstrap.hpp"
#include "ontorec/cop.hpp"
#include "ontorec/kb.hpp"
#include "ontorec/profile.hpp"
#include "ontorec/recommend.hpp"

namespace ontorec {

/// Log event as ingested: `ref` is a url for browse/follow events and a
/// topic path for rating events.
struct RawEvent {
    std::string user;
    EventType etype = EventType::paper_browsed;
    std::string ref;
    Date date;
};

struct WeekLog {
    std::vector<RawEvent> events;
    Date as_of;  // profile evaluation date for this week
};

/// Segment 0 must be empty (the very start of the trial); event dates in
/// segment i must precede segment i+1.
struct WeeklySplit {
    std::vector<WeekLog> weeks;
};

struct MetricsRow {
    int week = 0;
    double precision = 0.0;
    double error_rate = 0.0;
    std::string run_label;
};

/// Mean over users of N_correct / (N_correct + N_missing), where topic
/// membership means a nonzero profile entry. A user with an empty benchmark
/// profile contributes 0. User sets must match.
double profile_precision(const std::map<std::string, InterestProfile>& current,
                         const std::map<std::string, InterestProfile>& benchmark);

/// Mean over users of N_incorrect / (N_correct + N_incorrect + N_missing),
/// 0 when the denominator is empty.
double profile_error_rate(const std::map<std::string, InterestProfile>& current,
                          const std::map<std::string, InterestProfile>& benchmark);

/// Classified publications of a person, for the bootstrap algorithms: the
/// kb topic label when present, otherwise the paper database entry for the
/// publication's url. Undated or unclassifiable publications are skipped
/// and noted in `warnings` when given.
std::vector<DatedTopic> classified_publications(const KnowledgeBase& kb,
                                                const std::string& person,
                                                const PaperDatabase& papers,
                                                std::vector<std::string>* warnings = nullptr);

/// Replay the weekly logs: week i profiles come from segments 0..i, scored
/// against the control run's final-week profiles. Emits one row per week
/// for the control run and, when bootstrap_on, one per week for the
/// bootstrapped run (behaviour profile plus the week-0 new-system profile).
std::vector<MetricsRow> replay_experiment(const KnowledgeBase& kb, const PaperDatabase& papers,
                                          const WeeklySplit& logs,
                                          const std::vector<std::string>& users,
                                          bool bootstrap_on, const BootstrapParams& params);

/// Score the new-user bootstrap: each user's profile is rebuilt from the
/// other users' final-week profiles and that user's CoP, then compared with
/// the user's own final-week profile. Needs at least two users.
MetricsRow new_user_evaluation(const KnowledgeBase& kb,
                               const std::map<std::string, InterestProfile>& final_profiles,
                               const std::map<std::string, CopResult>& cop_per_user,
                               const BootstrapParams& params);

}  // namespace ontorec
