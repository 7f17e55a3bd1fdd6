#include <sstream>
#include <vector>

#include "mma/scenario.hpp"

namespace mma {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

Frame select_view(const MmaState& m, const std::string& selector) {
    const auto parts = split(selector, ':');
    if (parts.empty()) throw DomainError("empty view selector");
    const std::string& kind = parts[0];
    auto need = [&](std::size_t n) {
        if (parts.size() != n + 1) {
            throw DomainError("view '" + kind + "' expects " + std::to_string(n) + " agent id(s)");
        }
    };
    if (kind == "global") {
        need(0);
        return m.global;
    }
    if (kind == "public") {
        need(0);
        return m.pub;
    }
    if (kind == "aware") {
        need(1);
        const AgentId e(parts[1]);
        if (!m.agents.count(e)) throw DomainError("unknown agent '" + e.str() + "'");
        return m.aware_of(e);
    }
    if (kind == "perceived") {
        need(2);
        return perceived(m, AgentId(parts[1]), AgentId(parts[2])).frame;
    }
    if (kind == "adjusted") {
        need(2);
        return adjusted_perceived(m, AgentId(parts[1]), AgentId(parts[2]));
    }
    if (kind == "public-model") {
        need(2);
        return public_model(m, AgentId(parts[1]), AgentId(parts[2]));
    }
    if (kind == "trust-adjusted") {
        need(1);
        const AgentId e(parts[1]);
        if (!m.agents.count(e)) throw DomainError("unknown agent '" + e.str() + "'");
        return trust_adjusted_public_frame(m, e);
    }
    throw DomainError("unknown view selector '" + selector + "'");
}

std::string export_graph(const MmaState& m, const std::string& selector,
                         const std::map<ArgumentId, ArgumentInfo>& arguments) {
    const Frame f = select_view(m, selector);
    std::ostringstream os;
    os << "digraph " << quote(selector) << " {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=ellipse];\n";

    auto node = [&](const ArgumentId& a, const std::string& indent) {
        std::string label = a.str();
        if (const auto it = arguments.find(a); it != arguments.end() && !it->second.label.empty()) {
            label += "\\n" + it->second.label;
        }
        os << indent << quote(a.str()) << " [label=" << quote(label);
        if (m.pub.contains(a)) os << ", style=filled, fillcolor=\"#ffd966\", class=\"public\"";
        os << "];\n";
    };

    ArgSet placed;
    for (const auto& [e, scope] : m.scope) {
        const ArgSet members = set_intersection(f.args(), scope.args());
        if (members.empty()) continue;
        os << "  subgraph " << quote("cluster_" + e.str()) << " {\n";
        os << "    label=" << quote(e.str()) << ";\n";
        for (const auto& a : members) {
            node(a, "    ");
            placed.insert(a);
        }
        os << "  }\n";
    }
    for (const auto& a : f.args()) {
        if (!placed.count(a)) node(a, "  ");
    }
    for (const auto& [from, to] : f.attacks()) {
        os << "  " << quote(from.str()) << " -> " << quote(to.str()) << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace mma
