// Command-line entry point wiring all modules together.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 state error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontorec/bootstrap.hpp"
#include "ontorec/classify.hpp"
#include "ontorec/cop.hpp"
#include "ontorec/corpus.hpp"
#include "ontorec/errors.hpp"
#include "ontorec/harness.hpp"
#include "ontorec/kb.hpp"
#include "ontorec/profile.hpp"
#include "ontorec/recommend.hpp"
#include "ontorec/text.hpp"

using json = nlohmann::ordered_json;
using namespace ontorec;

namespace {

// Declarative defaults, loadable from a JSON config file; command-line
// options override individual fields.
struct Config {
    std::string kb_path;
    std::string corpus_dir;
    std::string manifest;
    std::string stoplist;
    std::string labels;
    std::string papers;
    std::string events;

    int k = 5;
    int budget = 10;
    std::size_t capacity = 15000;

    std::map<std::string, double> cop_weights;  // empty = built-in defaults
    int max_depth = 3;

    double gamma = 2.5;
    std::string reference_date;
    std::string confidence_source = "unit";
    int limit = 10;
};

Config load_config(const std::string& path) {
    Config c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file '" + path + "'");
    json j;
    in >> j;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("kb", c.kb_path);
    get("corpus_dir", c.corpus_dir);
    get("manifest", c.manifest);
    get("stoplist", c.stoplist);
    get("labels", c.labels);
    get("papers", c.papers);
    get("events", c.events);
    get("k", c.k);
    get("budget", c.budget);
    get("capacity", c.capacity);
    get("max_depth", c.max_depth);
    get("gamma", c.gamma);
    get("reference_date", c.reference_date);
    get("confidence_source", c.confidence_source);
    get("limit", c.limit);
    if (j.contains("cop_weights")) {
        for (const auto& [name, w] : j.at("cop_weights").items()) {
            c.cop_weights[name] = w.get<double>();
        }
    }
    return c;
}

std::vector<json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::vector<json> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            records.push_back(json::parse(line));
        } catch (const json::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

PaperDatabase load_papers(const std::string& path) {
    PaperDatabase papers;
    for (const auto& r : read_jsonl(path)) {
        ClassifiedPaper p;
        p.url = r.at("url").get<std::string>();
        p.topic = r.at("topic").get<std::string>();
        p.classification_confidence = r.at("confidence").get<double>();
        papers[p.url] = p;
    }
    return papers;
}

void write_paper_db(std::ostream& out, const PaperDatabase& papers) {
    for (const auto& [url, p] : papers) {
        json r{{"url", p.url}, {"topic", p.topic}, {"confidence", p.classification_confidence}};
        out << r.dump() << "\n";
    }
}

void write_profile(std::ostream& out, const InterestProfile& p) {
    for (const auto& [topic, interest] : p.entries) {
        json r{{"user", p.user},
               {"topic", topic},
               {"interest", interest},
               {"date", p.as_of.to_string()}};
        out << r.dump() << "\n";
    }
}

RawEvent parse_event(const json& r) {
    RawEvent e;
    e.user = r.at("user").get<std::string>();
    e.etype = event_type_from_string(r.at("etype").get<std::string>());
    e.ref = r.at("ref").get<std::string>();
    e.date = Date::parse(r.at("date").get<std::string>());
    return e;
}

RelationWeights resolve_weights(const Config& cfg, const KnowledgeBase& kb, bool auto_weights) {
    if (auto_weights) return auto_select_weights(kb);
    if (cfg.cop_weights.empty()) return default_relation_weights();
    RelationWeights w;
    for (const auto& [name, value] : cfg.cop_weights) {
        w[rel_type_from_string(name)] = value;
    }
    return w;
}

Date required_reference_date(const Config& cfg) {
    if (cfg.reference_date.empty()) {
        throw DataError("a reference date is required (--reference-date or config)");
    }
    return Date::parse(cfg.reference_date);
}

ClassifierBundle run_training(const Config& cfg) {
    if (cfg.corpus_dir.empty() || cfg.manifest.empty() || cfg.labels.empty()) {
        throw DataError("train needs --corpus-dir, --manifest and --labels");
    }
    std::set<std::string> stop;
    if (!cfg.stoplist.empty()) stop = load_stoplist(cfg.stoplist);
    auto corpus = load_corpus(cfg.corpus_dir, cfg.manifest, stop);
    auto labels = load_training_labels(cfg.labels);
    return train_pipeline(corpus, labels, cfg.capacity, cfg.k, cfg.budget);
}

// ---- subcommands ---------------------------------------------------------

int cmd_kb_load(const Config& cfg, const std::string& out_path) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    json summary{{"entities", kb.entity_count()},
                 {"relations", kb.relations().size()},
                 {"topics", kb.topics().size()}};
    std::cout << summary.dump() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw DataError("cannot write '" + out_path + "'");
        kb.save(out);
    }
    return 0;
}

int cmd_train(const Config& cfg, const std::string& papers_out) {
    auto bundle = run_training(cfg);
    std::set<std::string> stop;
    if (!cfg.stoplist.empty()) stop = load_stoplist(cfg.stoplist);
    auto corpus = load_corpus(cfg.corpus_dir, cfg.manifest, stop);
    json summary{{"documents", corpus.docs.size()},
                 {"training_examples", bundle.training->examples.size()},
                 {"dictionary_terms", bundle.dict->size()},
                 {"boosting_rounds", bundle.model ? bundle.model->iterations().size() : 0}};
    std::cout << summary.dump() << "\n";
    if (!papers_out.empty()) {
        std::ofstream out(papers_out);
        if (!out) throw DataError("cannot write '" + papers_out + "'");
        write_paper_db(out, classify_corpus(corpus, bundle));
    }
    return 0;
}

int cmd_classify(const Config& cfg) {
    auto bundle = run_training(cfg);
    std::set<std::string> stop;
    if (!cfg.stoplist.empty()) stop = load_stoplist(cfg.stoplist);
    auto corpus = load_corpus(cfg.corpus_dir, cfg.manifest, stop);
    write_paper_db(std::cout, classify_corpus(corpus, bundle));
    return 0;
}

int cmd_profile(const Config& cfg, const std::string& user, const std::string& as_of_str) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    PaperDatabase papers;
    if (!cfg.papers.empty()) papers = load_papers(cfg.papers);
    Date as_of = Date::parse(as_of_str);

    std::vector<Event> events;
    for (const auto& r : read_jsonl(cfg.events)) {
        RawEvent raw = parse_event(r);
        if (raw.user != user) continue;
        Event ev{raw.user, raw.etype, raw.ref, raw.date};
        if (raw.etype == EventType::paper_browsed ||
            raw.etype == EventType::recommendation_followed) {
            auto it = papers.find(raw.ref);
            if (it == papers.end()) {
                std::cerr << "warning: url '" << raw.ref << "' not in the paper database; skipped\n";
                continue;
            }
            ev.topic = it->second.topic;
        }
        events.push_back(std::move(ev));
    }

    auto result = compute_profile(user, events, kb, as_of);
    for (const auto& rej : result.rejected) {
        std::cerr << "warning: event names unknown topic '" << rej.topic << "'; skipped\n";
    }
    result.profile.user = user;
    result.profile.as_of = as_of;
    write_profile(std::cout, result.profile);
    return 0;
}

int cmd_recommend(const Config& cfg, const std::string& profile_path,
                  const std::string& browsed_path) {
    InterestProfile profile;
    for (const auto& r : read_jsonl(profile_path)) {
        std::string user = r.at("user").get<std::string>();
        if (profile.user.empty()) profile.user = user;
        if (user != profile.user) {
            throw DataError("profile file mixes users '" + profile.user + "' and '" + user + "'");
        }
        profile.add(r.at("topic").get<std::string>(), r.at("interest").get<double>());
    }
    auto papers = load_papers(cfg.papers);
    std::set<std::string> browsed;
    if (!browsed_path.empty()) {
        for (const auto& r : read_jsonl(browsed_path)) browsed.insert(r.at("url").get<std::string>());
    }
    std::vector<ClassifiedPaper> pool;
    pool.reserve(papers.size());
    for (const auto& [url, p] : papers) pool.push_back(p);

    int rank = 1;
    for (const auto& rec : recommend(profile, pool, browsed, cfg.limit)) {
        json r{{"user", profile.user},
               {"rank", rank++},
               {"url", rec.url},
               {"topic", rec.topic},
               {"confidence", rec.recommendation_confidence}};
        std::cout << r.dump() << "\n";
    }
    return 0;
}

int cmd_cop(const Config& cfg, const std::string& seed, bool auto_weights) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    auto weights = resolve_weights(cfg, kb, auto_weights);
    for (const auto& [person, relevance] : identify_cop(kb, seed, weights, cfg.max_depth)) {
        json r{{"person", person}, {"relevance", relevance}};
        std::cout << r.dump() << "\n";
    }
    return 0;
}

BootstrapParams bootstrap_params(const Config& cfg) {
    BootstrapParams params;
    params.gamma = cfg.gamma;
    params.reference_date = required_reference_date(cfg);
    params.cop_confidence_source = cop_confidence_source_from_string(cfg.confidence_source);
    return params;
}

int cmd_bootstrap_new_system(const Config& cfg, const std::string& user) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    PaperDatabase papers;
    if (!cfg.papers.empty()) papers = load_papers(cfg.papers);
    auto params = bootstrap_params(cfg);

    std::vector<std::string> warnings;
    auto pubs = classified_publications(kb, user, papers, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    auto profile = new_system_profile(user, pubs, kb, params);
    write_profile(std::cout, profile);
    return 0;
}

int cmd_bootstrap_new_user(const Config& cfg, const std::string& user, bool auto_weights) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    PaperDatabase papers;
    if (!cfg.papers.empty()) papers = load_papers(cfg.papers);
    auto params = bootstrap_params(cfg);

    auto weights = resolve_weights(cfg, kb, auto_weights);
    auto cop = identify_cop(kb, user, weights, cfg.max_depth);
    std::map<std::string, InterestProfile> similar;
    for (const auto& [member, relevance] : cop) {
        auto p = kb.asserted_profile_of(member);
        if (!p.entries.empty()) similar[member] = std::move(p);
    }

    std::vector<std::string> warnings;
    auto pubs = classified_publications(kb, user, papers, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    auto profile = new_user_profile(user, pubs, cop, similar, kb, params);
    write_profile(std::cout, profile);
    return 0;
}

int cmd_replay(const Config& cfg, const std::string& logs_path, const std::string& users_csv,
               bool bootstrap_on) {
    auto kb = KnowledgeBase::load_file(cfg.kb_path);
    if (cfg.papers.empty()) throw StateError("replay needs a trained paper database (--papers)");
    auto papers = load_papers(cfg.papers);

    // log records: {week, as_of} declares a segment, {week, user, etype, ref, date}
    // appends an event to it
    std::map<int, WeekLog> weeks;
    for (const auto& r : read_jsonl(logs_path)) {
        int week = r.at("week").get<int>();
        if (r.contains("as_of")) {
            weeks[week].as_of = Date::parse(r.at("as_of").get<std::string>());
        } else {
            weeks[week].events.push_back(parse_event(r));
        }
    }
    if (weeks.empty()) throw DataError("log file declares no weeks");
    WeeklySplit split;
    for (int w = 0; w <= weeks.rbegin()->first; ++w) {
        auto it = weeks.find(w);
        if (it == weeks.end()) throw DataError("week " + std::to_string(w) + " is not declared");
        split.weeks.push_back(it->second);
    }

    std::vector<std::string> users;
    std::stringstream ss(users_csv);
    std::string user;
    while (std::getline(ss, user, ',')) {
        if (!user.empty()) users.push_back(user);
    }

    auto rows = replay_experiment(kb, papers, split, users, bootstrap_on, bootstrap_params(cfg));
    std::cout << "week,run,precision,error_rate\n";
    for (const auto& row : rows) {
        std::cout << row.week << "," << row.run_label << "," << json(row.precision).dump() << ","
                  << json(row.error_rate).dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    // the config file must be known before option defaults are bound
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    }

    try {
        Config cfg = load_config(config_path);

        CLI::App app{"ontology-backed research-paper recommender"};
        app.require_subcommand(1);
        std::string ignored_config;
        app.add_option("--config", ignored_config, "JSON config file with defaults");

        std::string out_path, papers_out, user, as_of, profile_path, browsed_path, seed;
        std::string logs_path, users_csv, bootstrap_flag = "off";
        bool auto_weights = false;

        auto add_kb = [&](CLI::App* c) {
            c->add_option("--kb", cfg.kb_path, "knowledge-base record file");
        };
        auto add_corpus = [&](CLI::App* c) {
            c->add_option("--corpus-dir", cfg.corpus_dir, "directory of plain-text papers");
            c->add_option("--manifest", cfg.manifest, "file-to-url manifest (JSONL)");
            c->add_option("--stoplist", cfg.stoplist, "stop-word list, one word per line");
            c->add_option("--labels", cfg.labels, "training labels {url, topic_path} (JSONL)");
            c->add_option("--k", cfg.k, "nearest-neighbour count");
            c->add_option("--budget", cfg.budget, "boosting iteration budget");
            c->add_option("--capacity", cfg.capacity, "dictionary capacity");
        };
        auto add_bootstrap = [&](CLI::App* c) {
            c->add_option("--gamma", cfg.gamma, "community weighting constant");
            c->add_option("--reference-date", cfg.reference_date, "publication-age reference date");
            c->add_option("--confidence-source", cfg.confidence_source,
                          "community confidence: unit|relevance");
        };
        auto add_cop = [&](CLI::App* c) {
            c->add_option("--max-depth", cfg.max_depth, "traversal depth bound");
            c->add_flag("--auto-weights", auto_weights, "derive weights from relation frequency");
        };

        auto* kb_load = app.add_subcommand("kb-load", "load and validate a knowledge base");
        add_kb(kb_load);
        kb_load->add_option("--out", out_path, "write the normalized records here");

        auto* train = app.add_subcommand("train", "train the boosted paper classifier");
        add_corpus(train);
        train->add_option("--papers-out", papers_out, "write the classified paper database here");

        auto* classify = app.add_subcommand("classify", "classify the corpus to standard output");
        add_corpus(classify);

        auto* profile = app.add_subcommand("profile", "compute a user's interest profile");
        add_kb(profile);
        profile->add_option("--events", cfg.events, "event log (JSONL)");
        profile->add_option("--papers", cfg.papers, "classified paper database (JSONL)");
        profile->add_option("--user", user, "user id")->required();
        profile->add_option("--as-of", as_of, "profile date (YYYY-MM-DD)")->required();

        auto* rec = app.add_subcommand("recommend", "rank papers for a profile");
        rec->add_option("--profile", profile_path, "profile records (JSONL)")->required();
        rec->add_option("--papers", cfg.papers, "classified paper database (JSONL)");
        rec->add_option("--browsed", browsed_path, "already-browsed urls (JSONL)");
        rec->add_option("--limit", cfg.limit, "maximum recommendations");

        auto* cop = app.add_subcommand("cop", "rank a person's community of practice");
        add_kb(cop);
        cop->add_option("--seed", seed, "seed person id")->required();
        add_cop(cop);

        auto* bns = app.add_subcommand("bootstrap-new-system",
                                       "cold-start profile from own publications");
        add_kb(bns);
        bns->add_option("--papers", cfg.papers, "classified paper database (JSONL)");
        bns->add_option("--user", user, "user id")->required();
        add_bootstrap(bns);

        auto* bnu = app.add_subcommand("bootstrap-new-user",
                                       "cold-start profile from publications and community");
        add_kb(bnu);
        bnu->add_option("--papers", cfg.papers, "classified paper database (JSONL)");
        bnu->add_option("--user", user, "user id")->required();
        add_bootstrap(bnu);
        add_cop(bnu);

        auto* replay = app.add_subcommand("replay", "replay weekly logs and emit metrics");
        add_kb(replay);
        replay->add_option("--papers", cfg.papers, "classified paper database (JSONL)");
        replay->add_option("--logs", logs_path, "weekly log file (JSONL)")->required();
        replay->add_option("--users", users_csv, "comma-separated user ids")->required();
        replay->add_option("--bootstrap", bootstrap_flag, "on|off (default off)");
        add_bootstrap(replay);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 1;
        }

        if (kb_load->parsed()) return cmd_kb_load(cfg, out_path);
        if (train->parsed()) return cmd_train(cfg, papers_out);
        if (classify->parsed()) return cmd_classify(cfg);
        if (profile->parsed()) return cmd_profile(cfg, user, as_of);
        if (rec->parsed()) return cmd_recommend(cfg, profile_path, browsed_path);
        if (cop->parsed()) return cmd_cop(cfg, seed, auto_weights);
        if (bns->parsed()) return cmd_bootstrap_new_system(cfg, user);
        if (bnu->parsed()) return cmd_bootstrap_new_user(cfg, user, auto_weights);
        if (replay->parsed()) {
            if (bootstrap_flag != "on" && bootstrap_flag != "off") {
                throw DataError("--bootstrap must be 'on' or 'off'");
            }
            return cmd_replay(cfg, logs_path, users_csv, bootstrap_flag == "on");
        }
        return 1;
    } catch (const StateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
