#pragma once

#include <sstream>
#include <string>

#include "ontorec/kb.hpp"

namespace fixtures {

inline ontorec::KnowledgeBase kb_from_string(const std::string& jsonl) {
    std::istringstream in(jsonl);
    return ontorec::KnowledgeBase::load(in);
}

// The research-topic forest used across the golden tests.
inline std::string topic_records() {
    return R"({"path":"AI"}
{"path":"AI\\Agents"}
{"path":"AI\\Agents\\Recommender Systems"}
{"path":"AI\\Agents\\Mobile Agents"}
{"path":"AI\\Distributed Systems"}
{"path":"Knowledge Technology"}
{"path":"Knowledge Technology\\Knowledge Management"}
{"path":"Knowledge Technology\\Knowledge Management\\CoP"}
{"path":"Knowledge Technology\\Ontology"}
{"path":"Knowledge Technology\\Knowledge Acquisition"}
{"path":"Knowledge Technology\\Knowledge Devices"}
)";
}

// One person with six dated, topic-labelled publications.
inline std::string prolific_author_kb_records() {
    return topic_records() + R"({"id":"carver","kind":"person","attributes":{"name":"Carver"}}
{"id":"p1","kind":"publication","attributes":{"title":"Learning Reader Preferences","year":"2001","topic":"AI\\Agents\\Recommender Systems"}}
{"id":"p2","kind":"publication","attributes":{"title":"Knowledge Tools Survey","year":"2001","topic":"Knowledge Technology"}}
{"id":"p3","kind":"publication","attributes":{"title":"Ontology-Driven Acquisition","year":"2001","topic":"Knowledge Technology\\Ontology"}}
{"id":"p4","kind":"publication","attributes":{"title":"Certifying Rule Bases","year":"2000","topic":"Knowledge Technology\\Knowledge Management"}}
{"id":"p5","kind":"publication","attributes":{"title":"Focused Web Extraction","year":"2000","topic":"Knowledge Technology\\Knowledge Acquisition"}}
{"id":"p6","kind":"publication","attributes":{"title":"Engineering Shared Memory","year":"2000","topic":"Knowledge Technology\\Knowledge Management"}}
{"source":"carver","rel":"authored","target":"p1"}
{"source":"carver","rel":"authored","target":"p2"}
{"source":"carver","rel":"authored","target":"p3"}
{"source":"carver","rel":"authored","target":"p4"}
{"source":"carver","rel":"authored","target":"p5"}
{"source":"carver","rel":"authored","target":"p6"}
)";
}

}  // namespace fixtures
