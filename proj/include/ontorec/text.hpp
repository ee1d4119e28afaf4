#pragma once

#include <set>
#include <string>
#include <vector>

namespace ontorec {

/// Porter (1980) suffix-stripping stem of a lowercase word.
std::string porter_stem(const std::string& word);

/// Lowercase alphabetic tokens of `text`, stop-listed tokens removed,
/// each remaining token replaced by its Porter stem. Order preserved.
std::vector<std::string> tokenize_and_stem(const std::string& text,
                                           const std::set<std::string>& stoplist);

/// Load a stop-list file, one word per line, lowercased.
std::set<std::string> load_stoplist(const std::string& path);

}  // namespace ontorec
