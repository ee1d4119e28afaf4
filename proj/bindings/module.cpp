// Python bindings for the core operations. Profiles cross the boundary as
// plain {topic: interest} dicts; richer state stays on the C++ side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "ontorec/bootstrap.hpp"
#include "ontorec/cop.hpp"
#include "ontorec/errors.hpp"
#include "ontorec/harness.hpp"
#include "ontorec/kb.hpp"
#include "ontorec/profile.hpp"
#include "ontorec/recommend.hpp"
#include "ontorec/text.hpp"

namespace py = pybind11;
using namespace ontorec;

namespace {

InterestProfile profile_from_dict(const std::map<std::string, double>& entries) {
    InterestProfile p;
    for (const auto& [topic, v] : entries) p.add(topic, v);
    return p;
}

std::map<std::string, InterestProfile> profiles_from_dicts(
    const std::map<std::string, std::map<std::string, double>>& users) {
    std::map<std::string, InterestProfile> out;
    for (const auto& [user, entries] : users) out[user] = profile_from_dict(entries);
    return out;
}

RelationWeights weights_from_dict(const std::map<std::string, double>& weights) {
    RelationWeights w;
    for (const auto& [name, v] : weights) w[rel_type_from_string(name)] = v;
    return w;
}

BootstrapParams make_params(double gamma, const std::string& reference_date,
                            const std::string& confidence_source) {
    BootstrapParams params;
    params.gamma = gamma;
    params.reference_date = Date::parse(reference_date);
    params.cop_confidence_source = cop_confidence_source_from_string(confidence_source);
    return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ontology-backed research-paper recommender core";

    // translators run newest-first, so the NotFoundError subclass must be
    // registered after its DataError base
    py::register_exception<StateError>(m, "StateError");
    auto data_error = py::register_exception<DataError>(m, "DataError");
    py::register_exception<NotFoundError>(m, "NotFoundError", data_error.ptr());

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def_static("load_file", &KnowledgeBase::load_file, py::arg("path"))
        .def_static(
            "load_string",
            [](const std::string& records) {
                std::istringstream in(records);
                return KnowledgeBase::load(in);
            },
            py::arg("records"))
        .def("entity_count", &KnowledgeBase::entity_count)
        .def("topic_count", [](const KnowledgeBase& kb) { return kb.topics().size(); })
        .def("has_topic", &KnowledgeBase::has_topic, py::arg("path"))
        .def("superclass_chain", &KnowledgeBase::superclass_chain, py::arg("topic"))
        .def(
            "save_string",
            [](const KnowledgeBase& kb) {
                std::ostringstream out;
                kb.save(out);
                return out.str();
            })
        .def(
            "asserted_profile",
            [](const KnowledgeBase& kb, const std::string& person) {
                return kb.asserted_profile_of(person).entries;
            },
            py::arg("person"));

    m.def("porter_stem", &porter_stem, py::arg("word"));
    m.def("tokenize_and_stem", &tokenize_and_stem, py::arg("text"),
          py::arg("stoplist") = std::set<std::string>{});

    m.def(
        "compute_profile",
        [](const std::string& user,
           const std::vector<std::tuple<std::string, std::string, std::string>>& events,
           const KnowledgeBase& kb, const std::string& as_of) {
            std::vector<Event> evs;
            for (const auto& [etype, topic, date] : events) {
                evs.push_back({user, event_type_from_string(etype), topic, Date::parse(date)});
            }
            auto r = compute_profile(user, evs, kb, Date::parse(as_of));
            std::vector<std::string> rejected;
            for (const auto& e : r.rejected) rejected.push_back(e.topic);
            return py::make_tuple(r.profile.entries, rejected);
        },
        py::arg("user"), py::arg("events"), py::arg("kb"), py::arg("as_of"),
        "events are (etype, topic, date) tuples; returns (entries, rejected_topics)");

    m.def(
        "top_topics",
        [](const std::map<std::string, double>& entries, int n) {
            return top_topics(profile_from_dict(entries), n);
        },
        py::arg("profile"), py::arg("n") = 3);

    m.def(
        "recommend",
        [](const std::map<std::string, double>& entries,
           const std::vector<std::tuple<std::string, std::string, double>>& papers,
           const std::set<std::string>& browsed, int limit) {
            std::vector<ClassifiedPaper> pool;
            for (const auto& [url, topic, conf] : papers) pool.push_back({url, topic, conf});
            std::vector<std::tuple<std::string, std::string, double>> out;
            for (const auto& r : recommend(profile_from_dict(entries), pool, browsed, limit)) {
                out.emplace_back(r.url, r.topic, r.recommendation_confidence);
            }
            return out;
        },
        py::arg("profile"), py::arg("papers"), py::arg("browsed") = std::set<std::string>{},
        py::arg("limit") = 10,
        "papers are (url, topic, confidence) tuples; returns ranked tuples of the same shape");

    m.def("default_relation_weights", [] {
        std::map<std::string, double> out;
        for (const auto& [type, w] : default_relation_weights()) out[to_string(type)] = w;
        return out;
    });

    m.def(
        "identify_cop",
        [](const KnowledgeBase& kb, const std::string& seed,
           const std::map<std::string, double>& weights, int max_depth) {
            auto w = weights.empty() ? default_relation_weights() : weights_from_dict(weights);
            return identify_cop(kb, seed, w, max_depth);
        },
        py::arg("kb"), py::arg("seed"), py::arg("weights") = std::map<std::string, double>{},
        py::arg("max_depth") = 3);

    m.def(
        "new_system_profile",
        [](const std::string& person,
           const std::vector<std::pair<std::string, int>>& classified_pubs,
           const KnowledgeBase& kb, const std::string& reference_date) {
            std::vector<DatedTopic> pubs;
            for (const auto& [topic, year] : classified_pubs) pubs.push_back({topic, year});
            auto params = make_params(2.5, reference_date, "unit");
            return new_system_profile(person, pubs, kb, params).entries;
        },
        py::arg("person"), py::arg("classified_pubs"), py::arg("kb"), py::arg("reference_date"));

    m.def(
        "new_user_profile",
        [](const std::string& person,
           const std::vector<std::pair<std::string, int>>& classified_pubs,
           const std::vector<std::pair<std::string, double>>& cop,
           const std::map<std::string, std::map<std::string, double>>& similar_profiles,
           const KnowledgeBase& kb, const std::string& reference_date, double gamma,
           const std::string& confidence_source) {
            std::vector<DatedTopic> pubs;
            for (const auto& [topic, year] : classified_pubs) pubs.push_back({topic, year});
            auto params = make_params(gamma, reference_date, confidence_source);
            return new_user_profile(person, pubs, cop, profiles_from_dicts(similar_profiles), kb,
                                    params)
                .entries;
        },
        py::arg("person"), py::arg("classified_pubs"), py::arg("cop"),
        py::arg("similar_profiles"), py::arg("kb"), py::arg("reference_date"),
        py::arg("gamma") = 2.5, py::arg("confidence_source") = "unit");

    m.def(
        "profile_precision",
        [](const std::map<std::string, std::map<std::string, double>>& current,
           const std::map<std::string, std::map<std::string, double>>& benchmark) {
            return profile_precision(profiles_from_dicts(current), profiles_from_dicts(benchmark));
        },
        py::arg("current"), py::arg("benchmark"));

    m.def(
        "profile_error_rate",
        [](const std::map<std::string, std::map<std::string, double>>& current,
           const std::map<std::string, std::map<std::string, double>>& benchmark) {
            return profile_error_rate(profiles_from_dicts(current), profiles_from_dicts(benchmark));
        },
        py::arg("current"), py::arg("benchmark"));
}
