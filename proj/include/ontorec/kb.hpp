#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontorec/date.hpp"

namespace ontorec {

enum class EntityKind { person, publication, project, event, topic };

enum class RelType {
    authored,
    supervises,
    attended,
    member_of_project,
    has_research_interest,
};

const char* to_string(EntityKind k);
const char* to_string(RelType t);
EntityKind entity_kind_from_string(const std::string& s);
RelType rel_type_from_string(const std::string& s);

struct Entity {
    std::string id;
    EntityKind kind = EntityKind::person;
    std::map<std::string, std::string> attributes;
};

struct Relation {
    std::string source;
    RelType type = RelType::authored;
    std::string target;
    std::optional<double> value;  // interest strength, has_research_interest only
    std::optional<Date> date;
};

// Node of the research-topic is-a forest. Paths use '\' separated labels
// from the root, e.g. "AI\Agents\Recommender Systems".
struct TopicNode {
    std::string path;
    std::optional<std::string> parent;
};

struct Publication {
    std::string id;
    std::string title;
    std::optional<int> year;
    std::vector<std::string> authors;
    std::optional<std::string> topic_label;  // ground-truth class when supplied
    std::optional<std::string> url;
};

/// Interest profile of one user at one date. Entries with value exactly 0
/// are never stored; membership of a topic means a nonzero entry.
struct InterestProfile {
    std::string user;
    Date as_of;
    std::map<std::string, double> entries;  // topic path -> interest

    void add(const std::string& topic, double v) {
        auto it = entries.find(topic);
        if (it == entries.end()) {
            if (v != 0.0) entries.emplace(topic, v);
            return;
        }
        it->second += v;
        if (it->second == 0.0) entries.erase(it);
    }
};

std::vector<std::string> split_topic_path(const std::string& path);

/// The academic knowledge base: entities, typed weighted relations and the
/// research-topic is-a forest. Read-only after load except for
/// assert_interest_profile.
class KnowledgeBase {
public:
    /// Load from a stream of one JSON record per line. Entities are
    /// {id, kind, attributes}, relations {source, rel, target, value?, date?},
    /// topics {path, parent?}. Validates all referential and forest
    /// invariants; throws DataError naming the offending id or cycle.
    static KnowledgeBase load(std::istream& in);
    static KnowledgeBase load_file(const std::string& path);

    const Entity* find_entity(const std::string& id) const;
    const Entity& require_entity(const std::string& id, EntityKind kind) const;

    bool has_topic(const std::string& path) const;
    const std::map<std::string, TopicNode>& topics() const { return topics_; }

    /// Number of loaded entities, not counting the topic forest's own nodes.
    std::size_t entity_count() const;
    const std::map<std::string, Entity>& entities() const { return entities_; }
    const std::vector<Relation>& relations() const { return relations_; }

    /// Ancestors of a topic, nearest first: element i is i+1 levels up.
    std::vector<std::string> superclass_chain(const std::string& topic) const;

    /// Publications authored by a person, descending year then id.
    std::vector<Publication> publications_of(const std::string& person) const;

    /// Replace the person's has_research_interest relations for the given
    /// date with the profile's entries. Atomic: an unknown topic rejects the
    /// whole profile.
    void assert_interest_profile(const std::string& person, const InterestProfile& profile,
                                 const Date& date);

    /// Most recently asserted interest profile of a person (empty if none).
    InterestProfile asserted_profile_of(const std::string& person) const;

    /// Count of stored relations by type; absent types count 0.
    std::map<RelType, std::size_t> relation_frequency() const;

    /// Write the knowledge base back out as JSON records, one per line,
    /// in deterministic order.
    void save(std::ostream& out) const;

private:
    std::map<std::string, Entity> entities_;
    std::vector<Relation> relations_;
    std::map<std::string, TopicNode> topics_;

    friend struct KbLoader;
};

}  // namespace ontorec
