#include "bramble/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace bramble {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string exportDot(const InstanceDocument& doc) {
    const Digraph& d = doc.digraph;
    const int n = d.vertexCount();

    auto nameOf = [&](int v) {
        if (doc.vertexNames && v < static_cast<int>(doc.vertexNames->size()))
            return (*doc.vertexNames)[v];
        return std::to_string(v);
    };

    std::set<int> terminals;
    if (doc.terminals) {
        terminals.insert(doc.terminals->sources.begin(), doc.terminals->sources.end());
        terminals.insert(doc.terminals->sinks.begin(), doc.terminals->sinks.end());
    }

    std::map<int, int> occurrences;
    std::map<int, std::string> anchor;  // vertex -> node id used for edges
    const std::vector<std::vector<int>> bags =
        doc.bramble ? *doc.bramble : std::vector<std::vector<int>>{};
    for (const auto& bag : bags)
        for (int v : bag) ++occurrences[v];

    std::ostringstream out;
    out << "digraph instance {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=ellipse, fontsize=10];\n";

    for (std::size_t j = 0; j < bags.size(); ++j) {
        out << "  subgraph cluster_bag" << j << " {\n";
        out << "    label=" << quoted("bag " + std::to_string(j)) << ";\n";
        out << "    style=rounded;\n";
        for (int v : bags[j]) {
            std::string id = "b" + std::to_string(j) + "_" + std::to_string(v);
            std::string label = nameOf(v);
            if (occurrences[v] > 1) label += " [" + std::to_string(occurrences[v]) + " bags]";
            out << "    " << quoted(id) << " [label=" << quoted(label);
            if (terminals.count(v)) out << ", peripheries=2, style=bold";
            out << "];\n";
            if (!anchor.count(v)) anchor[v] = id;
        }
        out << "  }\n";
    }

    for (int v = 0; v < n; ++v) {
        if (anchor.count(v)) continue;
        std::string id = "v" + std::to_string(v);
        out << "  " << quoted(id) << " [label=" << quoted(nameOf(v));
        if (terminals.count(v)) out << ", peripheries=2, style=bold";
        out << "];\n";
        anchor[v] = id;
    }

    for (auto [u, v] : d.edges())
        out << "  " << quoted(anchor[u]) << " -> " << quoted(anchor[v]) << ";\n";

    out << "}\n";
    return out.str();
}

}  // namespace bramble
