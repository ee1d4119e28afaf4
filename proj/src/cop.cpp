#include "ontorec/cop.hpp"

#include <algorithm>
#include <set>

#include "ontorec/errors.hpp"

namespace ontorec {

RelationWeights default_relation_weights() {
    return {
        {RelType::attended, 0.4},
        {RelType::supervises, 0.7},
        {RelType::authored, 0.3},
        {RelType::has_research_interest, 0.8},
        {RelType::member_of_project, 0.5},
    };
}

CopResult identify_cop(const KnowledgeBase& kb, const std::string& seed,
                       const RelationWeights& weights, int max_depth) {
    kb.require_entity(seed, EntityKind::person);
    if (max_depth < 1) throw DataError("max_depth must be >= 1");
    for (const auto& [type, w] : weights) {
        if (w < 0.0 || w > 1.0) {
            throw DataError(std::string("relation weight for '") + to_string(type) +
                            "' outside [0,1]");
        }
    }

    // undirected adjacency over relations with nonzero weight
    std::map<std::string, std::vector<std::pair<std::string, double>>> adj;
    for (const auto& r : kb.relations()) {
        auto it = weights.find(r.type);
        if (it == weights.end() || it->second <= 0.0) continue;
        adj[r.source].emplace_back(r.target, it->second);
        adj[r.target].emplace_back(r.source, it->second);
    }

    std::map<std::string, double> activation;
    std::set<std::string> expanded;
    activation[seed] = 1.0;
    expanded.insert(seed);

    // frontier carries the activation snapshot each node expands with
    std::vector<std::pair<std::string, double>> frontier{{seed, 1.0}};
    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<std::string> reached;
        for (const auto& [node, act] : frontier) {
            auto it = adj.find(node);
            if (it == adj.end()) continue;
            for (const auto& [neighbour, weight] : it->second) {
                activation[neighbour] += act * weight;
                if (expanded.insert(neighbour).second) reached.push_back(neighbour);
            }
        }
        frontier.clear();
        for (const auto& node : reached) frontier.emplace_back(node, activation[node]);
    }

    CopResult result;
    double max_act = 0.0;
    for (const auto& [id, act] : activation) {
        if (id == seed || act <= 0.0) continue;
        const Entity* e = kb.find_entity(id);
        if (!e || e->kind != EntityKind::person) continue;
        result.emplace_back(id, act);
        max_act = std::max(max_act, act);
    }
    for (auto& [id, act] : result) act /= max_act;
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return result;
}

RelationWeights auto_select_weights(const KnowledgeBase& kb) {
    if (kb.relations().empty()) throw StateError("knowledge base has no relations");
    auto freq = kb.relation_frequency();
    std::size_t max_count = 0;
    for (const auto& [type, count] : freq) max_count = std::max(max_count, count);
    RelationWeights weights;
    for (const auto& [type, count] : freq) {
        if (count > 0) weights[type] = double(count) / double(max_count);
    }
    return weights;
}

}  // namespace ontorec
