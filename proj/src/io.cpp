#include "lcadag/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace lcadag {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

Dag parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "node") {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(lineno) +
                                     ": expected 'node <label>'",
                                 lineno);
            isolated.push_back(tokens[1]);
        } else if (tokens.size() == 2) {
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'parent child' or 'node <label>'",
                             lineno);
        }
    }
    try {
        return Dag::from_edge_list(edges, isolated);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string emit_edge_list(const Dag& g) {
    for (const auto& label : g.labels())
        if (label == "node")
            throw Error("label 'node' is reserved by the edge-list format");
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& [u, v] : g.edges()) lines.emplace_back(g.label(u), g.label(v));
    std::sort(lines.begin(), lines.end());
    std::vector<std::string> isolated;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0) isolated.push_back(g.label(v));
    std::sort(isolated.begin(), isolated.end());
    std::string out;
    for (const auto& [a, b] : lines) out += a + " " + b + "\n";
    for (const auto& label : isolated) out += "node " + label + "\n";
    return out;
}

namespace {

// Minimal tokenizer for the DOT subset: identifiers (quoted or bare),
// punctuation { } ; and the arrow.
struct DotLexer {
    std::istream& in;
    int lineno = 1;

    explicit DotLexer(std::istream& s) : in(s) {}

    std::optional<std::string> next() {
        char c;
        while (in.get(c)) {
            if (c == '\n') {
                ++lineno;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '{' || c == '}' || c == ';') return std::string(1, c);
            if (c == '-') {
                char d;
                if (in.get(d) && d == '>') return std::string("->");
                throw ParseError("line " + std::to_string(lineno) + ": stray '-'", lineno);
            }
            if (c == '"') {
                std::string s;
                while (in.get(c) && c != '"') {
                    if (c == '\n') ++lineno;
                    s += c;
                }
                if (c != '"')
                    throw ParseError("line " + std::to_string(lineno) + ": unterminated quote",
                                     lineno);
                return s;
            }
            std::string s(1, c);
            while (in.get(c)) {
                if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
                    c == ';' || c == '-') {
                    in.unget();
                    break;
                }
                s += c;
            }
            return s;
        }
        return std::nullopt;
    }
};

}  // namespace

Dag parse_dot(std::istream& in) {
    DotLexer lex(in);
    auto expect = [&](const char* what) {
        auto t = lex.next();
        if (!t)
            throw ParseError("line " + std::to_string(lex.lineno) + ": expected " +
                                 std::string(what),
                             lex.lineno);
        return *t;
    };
    std::string head = expect("'digraph'");
    if (head != "digraph")
        throw ParseError("line " + std::to_string(lex.lineno) + ": expected 'digraph'",
                         lex.lineno);
    std::string tok = expect("'{'");
    if (tok != "{") {
        // optional graph name
        tok = expect("'{'");
        if (tok != "{")
            throw ParseError("line " + std::to_string(lex.lineno) + ": expected '{'", lex.lineno);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> nodes;
    std::vector<std::string> in_edges_or_nodes;
    for (;;) {
        auto t = lex.next();
        if (!t) throw ParseError("unexpected end of input inside digraph", lex.lineno);
        if (*t == "}") break;
        if (*t == ";") continue;
        std::string first = *t;
        auto t2 = lex.next();
        if (!t2) throw ParseError("unexpected end of input inside digraph", lex.lineno);
        if (*t2 == "->") {
            std::string second = expect("identifier");
            if (second == "{" || second == "}" || second == ";" || second == "->")
                throw ParseError("line " + std::to_string(lex.lineno) + ": expected identifier",
                                 lex.lineno);
            edges.emplace_back(first, second);
        } else if (*t2 == ";") {
            nodes.push_back(first);
        } else if (*t2 == "}") {
            nodes.push_back(first);
            break;
        } else {
            throw ParseError("line " + std::to_string(lex.lineno) +
                                 ": expected '->' or ';' after identifier",
                             lex.lineno);
        }
    }
    // node statements for vertices that also occur in edges are harmless
    std::vector<std::string> isolated;
    auto mentioned = [&edges](const std::string& label) {
        for (const auto& [a, b] : edges)
            if (a == label || b == label) return true;
        return false;
    };
    for (const auto& label : nodes)
        if (!mentioned(label) &&
            std::find(isolated.begin(), isolated.end(), label) == isolated.end())
            isolated.push_back(label);
    try {
        return Dag::from_edge_list(edges, isolated);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string emit_dot(const Dag& g) {
    std::vector<std::string> node_lines, edge_lines;
    for (const auto& label : g.labels()) node_lines.push_back("  \"" + label + "\";\n");
    for (const auto& [u, v] : g.edges())
        edge_lines.push_back("  \"" + g.label(u) + "\" -> \"" + g.label(v) + "\";\n");
    std::sort(node_lines.begin(), node_lines.end());
    std::sort(edge_lines.begin(), edge_lines.end());
    std::string out = "digraph G {\n";
    for (const auto& l : node_lines) out += l;
    for (const auto& l : edge_lines) out += l;
    out += "}\n";
    return out;
}

Dag parse_graph_auto(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::istringstream replay_stream(text);
    if (text.compare(i, 7, "digraph") == 0) return parse_dot(replay_stream);
    return parse_edge_list(replay_stream);
}

std::string set_system_to_json(const SetSystem& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& member : s.canonical_labels()) arr.push_back(member);
    return arr.dump();
}

SetSystem set_system_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!arr.is_array()) throw ParseError("expected a JSON array of members", 0);
    SetSystem s;
    std::map<std::string, VertexId> index;
    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        VertexId id = static_cast<VertexId>(s.labels.size());
        s.labels.push_back(label);
        index.emplace(label, id);
        return id;
    };
    for (const auto& member : arr) {
        if (!member.is_array()) throw ParseError("expected each member to be an array", 0);
        std::vector<VertexId> ids;
        for (const auto& el : member) {
            if (!el.is_string()) throw ParseError("expected member elements to be strings", 0);
            ids.push_back(intern(el.get<std::string>()));
        }
        s.members.push_back(VertexSet::of(std::move(ids)));
    }
    std::vector<VertexId> all(s.labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    s.ground = VertexSet::of(std::move(all));
    return s;
}

std::string emit_trace(const ConstructionTrace& t) {
    std::string out = "origin " + t.origin + "\n";
    for (const auto& step : t.steps) {
        out += "leaf " + step.leaf + " <- {";
        for (std::size_t i = 0; i < step.parents.size(); ++i) {
            if (i) out += ',';
            out += step.parents[i];
        }
        out += "}\n";
    }
    return out;
}

ConstructionTrace parse_trace(std::istream& in) {
    ConstructionTrace t;
    std::string line;
    int lineno = 0;
    bool have_origin = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "origin") {
            if (have_origin || tokens.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad origin line", lineno);
            t.origin = tokens[1];
            have_origin = true;
        } else if (tokens[0] == "leaf") {
            if (!have_origin)
                throw ParseError("line " + std::to_string(lineno) + ": step before origin",
                                 lineno);
            if (tokens.size() != 4 || tokens[2] != "<-")
                throw ParseError("line " + std::to_string(lineno) +
                                     ": expected 'leaf <label> <- {p1,p2,...}'",
                                 lineno);
            const std::string& set = tokens[3];
            if (set.size() < 2 || set.front() != '{' || set.back() != '}')
                throw ParseError("line " + std::to_string(lineno) + ": bad parent set", lineno);
            TraceStep step;
            step.leaf = tokens[1];
            std::string body = set.substr(1, set.size() - 2);
            std::string cur;
            for (char c : body) {
                if (c == ',') {
                    if (cur.empty())
                        throw ParseError("line " + std::to_string(lineno) + ": empty parent",
                                         lineno);
                    step.parents.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) step.parents.push_back(cur);
            if (step.parents.empty())
                throw ParseError("line " + std::to_string(lineno) +
                                     ": a step needs at least one parent",
                                 lineno);
            t.steps.push_back(std::move(step));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" +
                                 tokens[0] + "'",
                             lineno);
        }
    }
    if (!have_origin) throw ParseError("trace has no origin line", 0);
    return t;
}

}  // namespace lcadag
