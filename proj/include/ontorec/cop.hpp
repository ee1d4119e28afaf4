#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ontorec/kb.hpp"

namespace ontorec {

/// Traversal weight per relation type, each in [0,1]. Absent types are
/// excluded from traversal entirely.
using RelationWeights = std::map<RelType, double>;

/// Manually chosen default weights: attended 0.4, supervises 0.7,
/// authored 0.3, has_research_interest 0.8, member_of_project 0.5.
RelationWeights default_relation_weights();

/// Ranked community of practice: (person id, relevance), descending, top
/// person at exactly 1.0, seed excluded.
using CopResult = std::vector<std::pair<std::string, double>>;

/// Breadth-first spreading activation from the seed person over the
/// undirected relation graph. Crossing an edge propagates the expanding
/// node's activation times the relation weight; arriving activation sums;
/// each node expands only on first reach, up to max_depth hops. Non-person
/// entities relay activation but are omitted from the result, which is
/// normalized so the top person scores 1.0.
CopResult identify_cop(const KnowledgeBase& kb, const std::string& seed,
                       const RelationWeights& weights, int max_depth = 3);

/// weight(type) = count(type) / max count over present types.
RelationWeights auto_select_weights(const KnowledgeBase& kb);

}  // namespace ontorec
