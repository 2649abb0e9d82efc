#pragma once

// ISOT v1 instance format and the partition witness format.
//
//   # comment
//   tree <n> | graph <n>
//   v <id> <omega> [<gamma>]
//   e <u> <v> <c>
//
// Rationals are written "p" or "p/q". Witnesses are one line per part:
// "part <i>: <id> <id> ...".

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isot/graph.hpp"
#include "isot/rational.hpp"

namespace isot {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

inline long long parse_id(const std::string& tok, int line_no, const char* what) {
    try {
        size_t pos = 0;
        const long long id = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return id;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("invalid ") + what + " '" + tok + "'");
    }
}

inline Rational parse_rational_tok(const std::string& tok, int line_no, const char* what) {
    try {
        return Rational::from_string(tok);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("invalid ") + what + " '" + tok + "'");
    }
}

}  // namespace detail

inline WeightedGraph parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false, declared_tree = false;
    long long n = 0;
    std::vector<Rational> omega, gamma;
    std::vector<char> seen_vertex;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = detail::tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (!have_header) {
            if ((toks[0] != "tree" && toks[0] != "graph") || toks.size() != 2)
                throw ParseError(line_no, "expected header 'tree <n>' or 'graph <n>'");
            declared_tree = toks[0] == "tree";
            n = detail::parse_id(toks[1], line_no, "vertex count");
            if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
            if (n > 50'000'000) throw ParseError(line_no, "vertex count too large");
            omega.assign(n, Rational(0));
            gamma.assign(n, Rational(0));
            seen_vertex.assign(n, 0);
            have_header = true;
            continue;
        }

        if (toks[0] == "v") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(line_no, "expected 'v <id> <omega> [<gamma>]'");
            const long long id = detail::parse_id(toks[1], line_no, "vertex id");
            if (id < 1 || id > n) throw ParseError(line_no, "vertex id out of range");
            if (seen_vertex[id - 1]) throw ParseError(line_no, "duplicate vertex line");
            seen_vertex[id - 1] = 1;
            omega[id - 1] = detail::parse_rational_tok(toks[2], line_no, "vertex weight");
            if (omega[id - 1].sign() <= 0)
                throw ParseError(line_no, "vertex weight must be positive");
            if (toks.size() == 4) {
                gamma[id - 1] = detail::parse_rational_tok(toks[3], line_no, "ground flow");
                if (gamma[id - 1].sign() < 0)
                    throw ParseError(line_no, "ground flow must be nonnegative");
            }
        } else if (toks[0] == "e") {
            if (toks.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <c>'");
            const long long u = detail::parse_id(toks[1], line_no, "vertex id");
            const long long v = detail::parse_id(toks[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range");
            const Rational c = detail::parse_rational_tok(toks[3], line_no, "edge weight");
            if (c.sign() <= 0) throw ParseError(line_no, "edge weight must be positive");
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), c});
        } else {
            throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    for (long long i = 0; i < n; ++i)
        if (!seen_vertex[i])
            throw ParseError(line_no, "missing vertex line for id " + std::to_string(i + 1));
    try {
        return WeightedGraph::create(static_cast<int>(n), std::move(omega), std::move(gamma),
                                     std::move(edges), declared_tree);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

inline WeightedGraph parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

inline std::string serialize_instance(const WeightedGraph& g) {
    std::string out;
    out += g.is_tree() ? "tree " : "graph ";
    out += std::to_string(g.size());
    out += '\n';
    for (VertexId v = 1; v <= g.size(); ++v) {
        out += "v " + std::to_string(v) + " " + g.omega(v).to_string();
        if (!g.gamma(v).is_zero()) out += " " + g.gamma(v).to_string();
        out += '\n';
    }
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               e.c.to_string() + '\n';
    }
    return out;
}

inline std::string format_witness(const Subpartition& sp) {
    std::string out;
    for (size_t i = 0; i < sp.parts.size(); ++i) {
        out += "part " + std::to_string(i + 1) + ":";
        for (VertexId v : sp.parts[i].ids) out += " " + std::to_string(v);
        out += '\n';
    }
    return out;
}

// Parses the witness format; part indices must be 1..k, each exactly once.
inline Subpartition parse_witness(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<long long, VertexSet>> numbered;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] != "part" || toks.size() < 3)
            throw ParseError(line_no, "expected 'part <i>: <id> <id> ...'");
        std::string idx_tok = toks[1];
        if (!idx_tok.empty() && idx_tok.back() == ':') idx_tok.pop_back();
        const long long idx = detail::parse_id(idx_tok, line_no, "part index");
        std::vector<VertexId> ids;
        for (size_t t = 2; t < toks.size(); ++t) {
            std::string tok = toks[t];
            if (t == 2 && tok == ":") continue;
            ids.push_back(static_cast<VertexId>(detail::parse_id(tok, line_no, "vertex id")));
        }
        if (ids.empty()) throw ParseError(line_no, "empty part");
        numbered.emplace_back(idx, VertexSet(std::move(ids)));
    }
    std::sort(numbered.begin(), numbered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Subpartition sp;
    for (size_t i = 0; i < numbered.size(); ++i) {
        if (numbered[i].first != static_cast<long long>(i + 1))
            throw ParseError(0, "part indices must be 1..k exactly once");
        sp.parts.push_back(std::move(numbered[i].second));
    }
    if (sp.parts.empty()) throw ParseError(0, "witness has no parts");
    return sp;
}

inline Subpartition parse_witness(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_witness(in);
}

}  // namespace isot
