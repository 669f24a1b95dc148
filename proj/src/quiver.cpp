#include "qhilb/quiver.hpp"

#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

std::size_t parse_count(const std::string& tok, std::size_t line) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok[0] == '-')
        throw ParseError("line " + std::to_string(line) + ": expected a positive integer, got '" +
                         tok + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : r_(vertex_count), arrows_(std::move(arrows)) {
    if (r_ == 0) throw ParseError("quiver needs at least one vertex");

    std::set<std::string> names;
    for (const auto& a : arrows_) {
        if (a.tail >= r_ || a.head >= r_)
            throw ParseError("arrow " + a.name + " has an endpoint outside 1.." + std::to_string(r_));
        if (a.name.empty() || a.name.find('*') != std::string::npos)
            throw ParseError("arrow name '" + a.name + "' is empty or contains '*'");
        if (!names.insert(a.name).second) throw DuplicateArrowName("duplicate arrow name " + a.name);
    }

    // Kahn's algorithm; a loop counts as a cycle.
    std::vector<std::size_t> indeg(r_, 0);
    std::vector<std::vector<std::size_t>> out(r_), und(r_);
    for (const auto& a : arrows_) {
        out[a.tail].push_back(a.head);
        ++indeg[a.head];
        und[a.tail].push_back(a.head);
        und[a.head].push_back(a.tail);
    }
    std::queue<std::size_t> ready;
    for (std::size_t v = 0; v < r_; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.front();
        ready.pop();
        ++seen;
        for (auto w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (seen != r_) throw CycleError("quiver contains a directed cycle");

    std::vector<bool> reached(r_, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    reached[0] = true;
    while (!bfs.empty()) {
        auto v = bfs.front();
        bfs.pop();
        for (auto w : und[v])
            if (!reached[w]) {
                reached[w] = true;
                bfs.push(w);
            }
    }
    for (std::size_t v = 0; v < r_; ++v)
        if (!reached[v])
            throw DisconnectedError("quiver is disconnected (vertex " + std::to_string(v + 1) +
                                    " unreachable from vertex 1)");
}

Quiver Quiver::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::size_t r = 0;
    std::vector<Arrow> arrows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::vector<std::string> w;
        for (std::string t; toks >> t;) w.push_back(t);
        if (w.empty()) continue;
        const auto where = "line " + std::to_string(lineno) + ": ";
        if (w[0] == "vertices") {
            if (w.size() != 2) throw ParseError(where + "expected 'vertices <r>'");
            if (r != 0) throw ParseError(where + "'vertices' given twice");
            r = parse_count(w[1], lineno);
            if (r == 0) throw ParseError(where + "vertex count must be positive");
        } else if (w[0] == "arrow") {
            if (r == 0) throw ParseError(where + "'arrow' before 'vertices'");
            if (w.size() != 4) throw ParseError(where + "expected 'arrow <name> <tail> <head>'");
            auto tail = parse_count(w[2], lineno);
            auto head = parse_count(w[3], lineno);
            if (tail < 1 || tail > r || head < 1 || head > r)
                throw ParseError(where + "vertex out of range 1.." + std::to_string(r));
            arrows.push_back({w[1], tail - 1, head - 1});
        } else {
            throw ParseError(where + "unknown directive '" + w[0] + "'");
        }
    }
    if (r == 0) throw ParseError("missing 'vertices' line");
    return Quiver(r, std::move(arrows));
}

Quiver Quiver::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open quiver file " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str());
}

IntMatrix Quiver::arrow_matrix() const {
    IntMatrix v(r_);
    for (const auto& a : arrows_) v(a.tail, a.head) += 1;
    return v;
}

IntMatrix Quiver::adjacency() const {
    auto v = arrow_matrix();
    return v + v.transpose();
}

Quiver Quiver::with_reversed(std::size_t index) const {
    auto arrows = arrows_;
    std::swap(arrows.at(index).tail, arrows.at(index).head);
    return Quiver(r_, std::move(arrows));
}

std::string Quiver::to_text() const {
    std::string s = "vertices " + std::to_string(r_) + "\n";
    for (const auto& a : arrows_)
        s += "arrow " + a.name + " " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) +
             "\n";
    return s;
}

DoubleQuiver double_quiver(const Quiver& q) {
    DoubleQuiver d;
    d.vertex_count = q.vertex_count();
    const auto m = q.arrows().size();
    d.arrows.reserve(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& a = q.arrows()[k];
        d.arrows.push_back({a.name, a.tail, a.head, m + k, false});
    }
    for (std::size_t k = 0; k < m; ++k) {
        const auto& a = q.arrows()[k];
        d.arrows.push_back({a.name + "*", a.head, a.tail, k, true});
    }
    d.arrow_matrix = q.arrow_matrix();
    d.adjacency = q.adjacency();
    return d;
}

}  // namespace qhilb
