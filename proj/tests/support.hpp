#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "alphadom/graph.hpp"

namespace testsupport {

struct CorpusFile {
    std::string name;
    std::string text;
    alphadom::Graph graph;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// All corpus graphs, sorted by filename; optionally capped at max_n vertices.
inline std::vector<CorpusFile> load_corpus(int max_n = 7) {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(CORPUS_DIR))
        if (entry.path().extension() == ".el") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());

    std::vector<CorpusFile> out;
    for (const auto& p : paths) {
        std::string text = read_file(p);
        alphadom::Graph g = alphadom::parse_edge_list(text);
        if (g.n() <= max_n)
            out.push_back({p.filename().string(), std::move(text), std::move(g)});
    }
    return out;
}

}  // namespace testsupport
