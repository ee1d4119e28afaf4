#include "ontorec/kb.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ontorec/errors.hpp"

namespace ontorec {

using nlohmann::json;

const char* to_string(EntityKind k) {
    switch (k) {
        case EntityKind::person: return "person";
        case EntityKind::publication: return "publication";
        case EntityKind::project: return "project";
        case EntityKind::event: return "event";
        case EntityKind::topic: return "topic";
    }
    return "?";
}

const char* to_string(RelType t) {
    switch (t) {
        case RelType::authored: return "authored";
        case RelType::supervises: return "supervises";
        case RelType::attended: return "attended";
        case RelType::member_of_project: return "member_of_project";
        case RelType::has_research_interest: return "has_research_interest";
    }
    return "?";
}

EntityKind entity_kind_from_string(const std::string& s) {
    for (auto k : {EntityKind::person, EntityKind::publication, EntityKind::project,
                   EntityKind::event, EntityKind::topic}) {
        if (s == to_string(k)) return k;
    }
    throw DataError("unknown entity kind: '" + s + "'");
}

RelType rel_type_from_string(const std::string& s) {
    for (auto t : {RelType::authored, RelType::supervises, RelType::attended,
                   RelType::member_of_project, RelType::has_research_interest}) {
        if (s == to_string(t)) return t;
    }
    throw DataError("unknown relation type: '" + s + "'");
}

std::vector<std::string> split_topic_path(const std::string& path) {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : path) {
        if (c == '\\') {
            labels.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    labels.push_back(cur);
    return labels;
}

namespace {

std::string get_string(const json& j, const char* field, const std::string& ctx) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw DataError("record missing string field '" + std::string(field) + "': " + ctx);
    }
    return j[field].get<std::string>();
}

}  // namespace

struct KbLoader {
    KnowledgeBase kb;

    void add_topic(const json& j, const std::string& line) {
        TopicNode node;
        node.path = get_string(j, "path", line);
        if (node.path.empty()) throw DataError("empty topic path");
        if (j.contains("parent") && !j["parent"].is_null()) {
            node.parent = j["parent"].get<std::string>();
        } else {
            auto labels = split_topic_path(node.path);
            if (labels.size() > 1) {
                std::string p = labels[0];
                for (std::size_t i = 1; i + 1 < labels.size(); ++i) p += "\\" + labels[i];
                node.parent = p;
            }
        }
        if (!kb.topics_.emplace(node.path, node).second) {
            throw DataError("duplicate topic path: '" + node.path + "'");
        }
        // topics double as entities so relations can reference them
        Entity e;
        e.id = node.path;
        e.kind = EntityKind::topic;
        if (!kb.entities_.emplace(e.id, e).second) {
            throw DataError("topic path collides with entity id: '" + node.path + "'");
        }
    }

    void add_entity(const json& j, const std::string& line) {
        Entity e;
        e.id = get_string(j, "id", line);
        e.kind = entity_kind_from_string(get_string(j, "kind", line));
        if (j.contains("attributes")) {
            for (auto& [k, v] : j["attributes"].items()) {
                e.attributes[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
        if (!kb.entities_.emplace(e.id, e).second) {
            throw DataError("duplicate entity id: '" + e.id + "'");
        }
    }

    void add_relation(const json& j, const std::string& line) {
        Relation r;
        r.source = get_string(j, "source", line);
        r.type = rel_type_from_string(get_string(j, "rel", line));
        r.target = get_string(j, "target", line);
        if (j.contains("value") && !j["value"].is_null()) r.value = j["value"].get<double>();
        if (j.contains("date") && !j["date"].is_null()) {
            r.date = Date::parse(j["date"].get<std::string>());
        }
        kb.relations_.push_back(std::move(r));
    }

    void finish() {
        validate_topics();
        validate_publications();
        validate_relations();
    }

    void validate_topics() const {
        for (const auto& [path, node] : kb.topics_) {
            if (!node.parent) continue;
            if (!kb.topics_.count(*node.parent)) {
                throw DataError("topic '" + path + "' has undeclared parent '" + *node.parent +
                                "'");
            }
            // walk the parent chain; a revisit is a cycle
            std::set<std::string> seen{path};
            std::string cycle = path;
            const TopicNode* cur = &node;
            while (cur->parent) {
                cycle += " -> " + *cur->parent;
                if (!seen.insert(*cur->parent).second) {
                    throw DataError("cyclic topic parentage: " + cycle);
                }
                cur = &kb.topics_.at(*cur->parent);
            }
            // path must extend the parent path by exactly one label
            auto labels = split_topic_path(path);
            auto parent_labels = split_topic_path(*node.parent);
            bool ok = labels.size() == parent_labels.size() + 1 &&
                      std::equal(parent_labels.begin(), parent_labels.end(), labels.begin());
            if (!ok) {
                throw DataError("topic '" + path + "' is not a direct child of its parent '" +
                                *node.parent + "'");
            }
        }
    }

    void validate_publications() const {
        for (const auto& [id, e] : kb.entities_) {
            if (e.kind != EntityKind::publication) continue;
            auto it = e.attributes.find("year");
            if (it != e.attributes.end()) {
                int year = 0;
                try {
                    year = std::stoi(it->second);
                } catch (const std::exception&) {
                    throw DataError("publication '" + id + "' has non-numeric year '" +
                                    it->second + "'");
                }
                if (year < 1900) {
                    throw DataError("publication '" + id + "' has year " +
                                    std::to_string(year) + " < 1900");
                }
            }
            auto topic = e.attributes.find("topic");
            if (topic != e.attributes.end() && !kb.topics_.count(topic->second)) {
                throw DataError("publication '" + id + "' labelled with unknown topic '" +
                                topic->second + "'");
            }
        }
    }

    void validate_relations() const {
        for (const auto& r : kb.relations_) {
            const Entity* src = kb.find_entity(r.source);
            const Entity* tgt = kb.find_entity(r.target);
            if (!src) throw DataError("relation references undefined id '" + r.source + "'");
            if (!tgt) throw DataError("relation references undefined id '" + r.target + "'");
            EntityKind want_src = EntityKind::person;
            EntityKind want_tgt;
            switch (r.type) {
                case RelType::authored: want_tgt = EntityKind::publication; break;
                case RelType::supervises: want_tgt = EntityKind::person; break;
                case RelType::attended: want_tgt = EntityKind::event; break;
                case RelType::member_of_project: want_tgt = EntityKind::project; break;
                case RelType::has_research_interest: want_tgt = EntityKind::topic; break;
            }
            if (src->kind != want_src || tgt->kind != want_tgt) {
                throw DataError(std::string("relation '") + to_string(r.type) + "' from '" +
                                r.source + "' to '" + r.target + "' has wrong endpoint kinds");
            }
            if (r.type == RelType::has_research_interest) {
                if (!r.value) {
                    throw DataError("has_research_interest '" + r.source + "' -> '" + r.target +
                                    "' is missing an interest value");
                }
            } else if (r.value) {
                throw DataError(std::string("relation type '") + to_string(r.type) +
                                "' must not carry a value ('" + r.source + "' -> '" + r.target +
                                "')");
            }
        }
    }
};

KnowledgeBase KnowledgeBase::load(std::istream& in) {
    KbLoader loader;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            if (j.contains("path")) {
                loader.add_topic(j, line);
            } else if (j.contains("rel")) {
                loader.add_relation(j, line);
            } else if (j.contains("id")) {
                loader.add_entity(j, line);
            } else {
                throw DataError("record is neither entity, relation nor topic");
            }
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    loader.finish();
    return std::move(loader.kb);
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open knowledge base file '" + path + "'");
    return load(in);
}

std::size_t KnowledgeBase::entity_count() const {
    std::size_t n = 0;
    for (const auto& [id, e] : entities_) {
        if (e.kind != EntityKind::topic) ++n;
    }
    return n;
}

const Entity* KnowledgeBase::find_entity(const std::string& id) const {
    auto it = entities_.find(id);
    return it == entities_.end() ? nullptr : &it->second;
}

const Entity& KnowledgeBase::require_entity(const std::string& id, EntityKind kind) const {
    const Entity* e = find_entity(id);
    if (!e || e->kind != kind) {
        throw NotFoundError(std::string("no ") + to_string(kind) + " with id '" + id + "'");
    }
    return *e;
}

bool KnowledgeBase::has_topic(const std::string& path) const {
    return topics_.count(path) != 0;
}

std::vector<std::string> KnowledgeBase::superclass_chain(const std::string& topic) const {
    auto it = topics_.find(topic);
    if (it == topics_.end()) throw NotFoundError("unknown topic '" + topic + "'");
    std::vector<std::string> chain;
    const TopicNode* cur = &it->second;
    while (cur->parent) {
        chain.push_back(*cur->parent);
        cur = &topics_.at(*cur->parent);
    }
    return chain;
}

std::vector<Publication> KnowledgeBase::publications_of(const std::string& person) const {
    require_entity(person, EntityKind::person);
    std::vector<Publication> pubs;
    for (const auto& r : relations_) {
        if (r.type != RelType::authored || r.source != person) continue;
        const Entity& pe = entities_.at(r.target);
        Publication p;
        p.id = pe.id;
        if (auto it = pe.attributes.find("title"); it != pe.attributes.end()) p.title = it->second;
        if (auto it = pe.attributes.find("year"); it != pe.attributes.end()) {
            p.year = std::stoi(it->second);
        }
        if (auto it = pe.attributes.find("topic"); it != pe.attributes.end()) {
            p.topic_label = it->second;
        }
        if (auto it = pe.attributes.find("url"); it != pe.attributes.end()) p.url = it->second;
        for (const auto& ar : relations_) {
            if (ar.type == RelType::authored && ar.target == pe.id) {
                p.authors.push_back(ar.source);
            }
        }
        std::sort(p.authors.begin(), p.authors.end());
        pubs.push_back(std::move(p));
    }
    std::sort(pubs.begin(), pubs.end(), [](const Publication& a, const Publication& b) {
        int ya = a.year.value_or(-1), yb = b.year.value_or(-1);
        if (ya != yb) return ya > yb;
        return a.id < b.id;
    });
    return pubs;
}

void KnowledgeBase::assert_interest_profile(const std::string& person,
                                            const InterestProfile& profile, const Date& date) {
    require_entity(person, EntityKind::person);
    for (const auto& [topic, value] : profile.entries) {
        if (!topics_.count(topic)) {
            throw DataError("profile for '" + person + "' names unknown topic '" + topic + "'");
        }
    }
    // replace, never duplicate: drop this person's assertions for the same date
    std::erase_if(relations_, [&](const Relation& r) {
        return r.type == RelType::has_research_interest && r.source == person && r.date &&
               *r.date == date;
    });
    for (const auto& [topic, value] : profile.entries) {
        Relation r;
        r.source = person;
        r.type = RelType::has_research_interest;
        r.target = topic;
        r.value = value;
        r.date = date;
        relations_.push_back(std::move(r));
    }
}

InterestProfile KnowledgeBase::asserted_profile_of(const std::string& person) const {
    require_entity(person, EntityKind::person);
    std::optional<Date> latest;
    for (const auto& r : relations_) {
        if (r.type != RelType::has_research_interest || r.source != person) continue;
        if (r.date && (!latest || *r.date > *latest)) latest = r.date;
    }
    InterestProfile p;
    p.user = person;
    if (!latest) return p;
    p.as_of = *latest;
    for (const auto& r : relations_) {
        if (r.type == RelType::has_research_interest && r.source == person && r.date &&
            *r.date == *latest) {
            p.add(r.target, *r.value);
        }
    }
    return p;
}

std::map<RelType, std::size_t> KnowledgeBase::relation_frequency() const {
    std::map<RelType, std::size_t> counts;
    for (auto t : {RelType::authored, RelType::supervises, RelType::attended,
                   RelType::member_of_project, RelType::has_research_interest}) {
        counts[t] = 0;
    }
    for (const auto& r : relations_) ++counts[r.type];
    return counts;
}

void KnowledgeBase::save(std::ostream& out) const {
    for (const auto& [path, node] : topics_) {
        json j;
        j["path"] = path;
        if (node.parent) j["parent"] = *node.parent;
        out << j.dump() << "\n";
    }
    for (const auto& [id, e] : entities_) {
        if (e.kind == EntityKind::topic) continue;  // implied by topic records
        json j;
        j["id"] = id;
        j["kind"] = to_string(e.kind);
        j["attributes"] = e.attributes;
        out << j.dump() << "\n";
    }
    for (const auto& r : relations_) {
        json j;
        j["source"] = r.source;
        j["rel"] = to_string(r.type);
        j["target"] = r.target;
        if (r.value) j["value"] = *r.value;
        if (r.date) j["date"] = r.date->to_string();
        out << j.dump() << "\n";
    }
}

}  // namespace ontorec
