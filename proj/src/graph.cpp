#include "alphadom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "alphadom/rng.hpp"

namespace alphadom {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    int dups = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());

    Graph g;
    g.n_ = n;
    g.duplicates_collapsed_ = dups;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_ = std::move(edges);
    g.min_degree_ = n > 0 ? g.degree(0) : 0;
    g.max_degree_ = g.min_degree_;
    for (int v = 1; v < n; ++v) {
        g.min_degree_ = std::min(g.min_degree_, g.degree(v));
        g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

// --- parsing ---------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

// Calls fn(line, line_no) for every line of text, line_no starting at 1.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
        ++line_no;
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text, int base) {
    if (base != 0 && base != 1) throw std::invalid_argument("base must be 0 or 1");
    long long declared_n = -1;
    bool seen_data = false;
    long long max_index = -1;
    std::vector<std::pair<int, int>> edges;

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto toks = split_tokens(line);
        if (toks.empty() || toks[0][0] == '#') return;
        if (!seen_data && toks[0] == "n") {
            if (toks.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
            declared_n = parse_int(toks[1], line_no);
            seen_data = true;
            return;
        }
        seen_data = true;
        if (toks.size() != 2)
            throw ParseError(line_no, "expected 'u v', got " + std::to_string(toks.size()) + " tokens");
        long long u = parse_int(toks[0], line_no) - base;
        long long v = parse_int(toks[1], line_no) - base;
        if (u < 0 || v < 0)
            throw ParseError(line_no, "vertex index below " + std::to_string(base) +
                                          " with base " + std::to_string(base));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    });

    if (!seen_data) throw ParseError(1, "no graph data found");
    long long n = declared_n >= 0 ? declared_n : max_index + 1;
    if (n < 1) throw ParseError(1, "graph needs at least one vertex");
    if (max_index >= n)
        throw std::invalid_argument("edge endpoint " + std::to_string(max_index) +
                                    " exceeds declared n = " + std::to_string(n));
    return Graph::build(static_cast<int>(n), std::move(edges));
}

Graph parse_dimacs(std::string_view text) {
    long long declared_n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto toks = split_tokens(line);
        if (toks.empty() || toks[0] == "c") return;
        if (toks[0] == "p") {
            if (declared_n >= 0) throw ParseError(line_no, "duplicate p-line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(line_no, "p-line must be 'p edge <n> <m>'");
            declared_n = parse_int(toks[2], line_no);
            declared_m = parse_int(toks[3], line_no);
            if (declared_n < 1) throw ParseError(line_no, "declared n must be positive");
            return;
        }
        if (toks[0] == "e") {
            if (declared_n < 0) throw ParseError(line_no, "edge before p-line");
            if (toks.size() != 3) throw ParseError(line_no, "edge line must be 'e u v'");
            long long u = parse_int(toks[1], line_no);
            long long v = parse_int(toks[2], line_no);
            if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                throw ParseError(line_no, "vertex out of range [1, " + std::to_string(declared_n) + "]");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            return;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    });

    if (declared_n < 0) throw ParseError(1, "missing p-line");
    Graph g = Graph::build(static_cast<int>(declared_n), std::move(edges));
    if (g.m() != declared_m)
        throw std::invalid_argument("edge count mismatch: declared " + std::to_string(declared_m) +
                                    ", found " + std::to_string(g.m()) + " distinct");
    return g;
}

Graph parse_auto(std::string_view text) {
    bool dimacs = false;
    bool decided = false;
    for_each_line(text, [&](std::string_view line, int) {
        if (decided) return;
        auto toks = split_tokens(line);
        if (toks.empty()) return;
        decided = true;
        dimacs = (toks[0] == "p" || toks[0] == "c" || toks[0] == "e");
    });
    return dimacs ? parse_dimacs(text) : parse_edge_list(text, 0);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// --- generators -------------------------------------------------------------

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, std::move(edges));
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, std::move(edges));
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph gen_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::build(10, std::move(edges));
}

Graph gen_circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    std::set<int> seen;
    for (int s : offsets) {
        if (s < 1 || 2 * s > n)
            throw std::invalid_argument("offset " + std::to_string(s) + " out of range [1, " +
                                        std::to_string(n / 2) + "]");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate offset " + std::to_string(s));
    }
    std::vector<std::pair<int, int>> edges;
    for (int s : offsets) {
        if (2 * s == n) {
            for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + s);
        } else {
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + s) % n);
        }
    }
    return Graph::build(n, std::move(edges));
}

Graph gen_gnp(int n, double prob, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
    if (prob < 0.0 || prob > 1.0) throw std::invalid_argument("gnp probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < prob) edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("infeasible regular parameters: need 0 <= d < n and n*d even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        std::set<std::pair<int, int>> used;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) simple = false;
            else if (!used.emplace(std::min(u, v), std::max(u, v)).second) simple = false;
        }
        if (simple)
            return Graph::build(n, {used.begin(), used.end()});
    }
    throw std::runtime_error("random regular graph: resampling cap (10^4) exceeded");
}

}  // namespace alphadom
