#include "ontorec/text.hpp"

#include <cctype>
#include <fstream>

#include "ontorec/errors.hpp"

namespace ontorec {

std::vector<std::string> tokenize_and_stem(const std::string& text,
                                           const std::set<std::string>& stoplist) {
    std::vector<std::string> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            if (!stoplist.count(token)) out.push_back(porter_stem(token));
            token.clear();
        }
    };
    for (unsigned char c : text) {
        if (std::isalpha(c)) {
            token.push_back(char(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return out;
}

std::set<std::string> load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open stop-list file '" + path + "'");
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w;
        for (unsigned char c : line) {
            if (std::isalpha(c)) w.push_back(char(std::tolower(c)));
        }
        if (!w.empty()) words.insert(w);
    }
    return words;
}

}  // namespace ontorec
