#include "treemorph/graphx.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace treemorph {

namespace {

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::string hex(const std::string& s) {
    static const char* d = "0123456789abcdef";
    std::string out;
    for (unsigned char c : s) {
        out.push_back(d[c >> 4]);
        out.push_back(d[c & 15]);
    }
    return out;
}

// Runs body(i) for i in [0, count) over worker threads.
template <class F>
void parallel_for(int count, int threads, F&& body) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            try {
                for (int i; (i = next.fetch_add(1)) < count;) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

long convex_tree_count(int n) {
    if (n < 2) return n == 1 ? 1 : 0;
    // C(3n-3, n-1) / (2n-1), exact in 64 bits for the sizes used here.
    unsigned long long c = 1;
    int top = 3 * n - 3, k = n - 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned long long>(top - k + i) / static_cast<unsigned long long>(i);
    return static_cast<long>(c / static_cast<unsigned long long>(2 * n - 1));
}

std::vector<Tree> enumerate_trees(const PointSet& ps, bool labeled, const GraphLimits& lim) {
    int n = ps.n();
    if (n < 2) return {Tree(n, {})};
    int h = ps.hull().front();
    std::unordered_map<std::string, int> seen;
    std::vector<Tree> out;
    std::deque<Tree> queue;
    Tree s = star(n, h);
    seen.emplace(canonical_key(s), 0);
    out.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
        Tree t = std::move(queue.front());
        queue.pop_front();
        for (const auto& m : enumerate_neighbors(ps, t, Kind::exchange)) {
            Tree u = apply_move(ps, t, m);
            auto key = canonical_key(u);
            if (seen.count(key)) continue;
            if (static_cast<long>(out.size()) >= lim.enum_cap)
                throw CapExceeded("enumeration exceeds the cap of " + std::to_string(lim.enum_cap) + " trees",
                                  static_cast<long>(out.size()));
            seen.emplace(std::move(key), static_cast<int>(out.size()));
            out.push_back(u);
            queue.push_back(std::move(u));
        }
    }
    if (labeled) {
        long total = static_cast<long>(out.size()) * factorial(n - 1);
        if (total > lim.enum_cap)
            throw CapExceeded("labeled enumeration needs " + std::to_string(total) + " trees, cap is " + std::to_string(lim.enum_cap),
                              total);
        std::vector<Tree> lab;
        lab.reserve(static_cast<std::size_t>(total));
        for (const auto& t : out) {
            std::vector<int> labels(n - 1);
            std::iota(labels.begin(), labels.end(), 1);
            do lab.push_back(t.with_labels(labels));
            while (std::next_permutation(labels.begin(), labels.end()));
        }
        out = std::move(lab);
    }
    std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) { return canonical_key(a) < canonical_key(b); });
    return out;
}

std::string describe(const GraphSpec& s) {
    std::string d = s.simultaneous ? "simultaneous " : "";
    if (s.restricted) d += "restricted ";
    d += to_string(s.kind);
    if (s.labeled) d += " labeled";
    return d;
}

long TransitionGraph::edge_count() const {
    long e = 0;
    for (const auto& a : adj) e += static_cast<long>(a.size());
    return e / 2;
}

int TransitionGraph::find(const Tree& t) const {
    auto it = index.find(canonical_key(t));
    return it == index.end() ? -1 : it->second;
}

TransitionGraph build_transition_graph(const PointSet& ps, const GraphSpec& spec, const GraphLimits& lim) {
    return build_transition_graph(ps, enumerate_trees(ps, spec.labeled, lim), spec, lim);
}

TransitionGraph build_transition_graph(const PointSet& ps, std::vector<Tree> nodes, const GraphSpec& spec, const GraphLimits& lim) {
    TransitionGraph g;
    g.spec = spec;
    g.nodes = std::move(nodes);
    int N = g.size();
    for (int i = 0; i < N; ++i) g.index.emplace(canonical_key(g.nodes[i]), i);
    g.adj.assign(N, {});
    int threads = worker_count();
    if (!spec.simultaneous) {
        parallel_for(N, threads, [&](int i) {
            auto& a = g.adj[i];
            for (const auto& m : enumerate_neighbors(ps, g.nodes[i], spec.kind)) {
                int j = g.find(apply_move(ps, g.nodes[i], m));
                if (j < 0) throw std::logic_error("build_transition_graph: neighbor outside the node set");
                a.push_back(j);
            }
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        });
        return g;
    }
    long pairs = static_cast<long>(N) * (N - 1) / 2;
    if (pairs > lim.pair_cap)
        throw CapExceeded("simultaneous graph needs " + std::to_string(pairs) + " pair tests, cap is " + std::to_string(lim.pair_cap), pairs);
    // Row i tests j > i; symmetric edges are merged afterwards.
    std::vector<std::vector<int>> upper(N);
    std::atomic<bool> unknown{false};
    parallel_for(N, threads, [&](int i) {
        for (int j = i + 1; j < N; ++j) {
            auto r = validate_simultaneous(ps, g.nodes[i], g.nodes[j], spec.kind, spec.restricted);
            if (r.status == SimStatus::unknown) unknown = true;
            if (r) upper[i].push_back(j);
        }
    });
    if (unknown) throw std::runtime_error("build_transition_graph: restricted slide search ran out of budget");
    for (int i = 0; i < N; ++i)
        for (int j : upper[i]) {
            g.adj[i].push_back(j);
            g.adj[j].push_back(i);
        }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<int> bfs_distances(const TransitionGraph& g, int src) {
    std::vector<int> dist(g.size(), -1);
    std::vector<int> q{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int distance(const TransitionGraph& g, int a, int b) {
    if (a < 0 || b < 0 || a >= g.size() || b >= g.size()) throw std::out_of_range("distance: node out of range");
    return bfs_distances(g, a)[b];
}

DiameterResult diameter(const TransitionGraph& g, int threads) {
    DiameterResult res;
    int N = g.size();
    if (N == 0) return res;
    auto d0 = bfs_distances(g, 0);
    if (std::count(d0.begin(), d0.end(), -1) > 0) {
        res.connected = false;
        std::vector<int> comp(N, -1);
        for (int s = 0; s < N; ++s) {
            if (comp[s] >= 0) continue;
            auto d = bfs_distances(g, s);
            int size = 0;
            for (int v = 0; v < N; ++v)
                if (d[v] >= 0) {
                    comp[v] = s;
                    ++size;
                }
            res.component_sizes.push_back(size);
        }
        return res;
    }
    std::mutex mu;
    parallel_for(N, worker_count(threads), [&](int s) {
        auto d = bfs_distances(g, s);
        int far = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
        std::lock_guard<std::mutex> lock(mu);
        if (d[far] > res.diameter || (d[far] == res.diameter && std::make_pair(s, far) < std::make_pair(res.a, res.b))) {
            res.diameter = d[far];
            res.a = s;
            res.b = far;
        }
    });
    return res;
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TREEMORPH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool is_subgraph(const TransitionGraph& sub, const TransitionGraph& super) {
    if (sub.size() != super.size()) return false;
    for (int i = 0; i < sub.size(); ++i)
        if (!std::includes(super.adj[i].begin(), super.adj[i].end(), sub.adj[i].begin(), sub.adj[i].end())) return false;
    return true;
}

std::string diameter_csv_header() { return "n,position,kind,simultaneous,restricted,labeled,nodes,diameter,witness_a,witness_b"; }

std::string diameter_csv_row(const PointSet& ps, const TransitionGraph& g, const DiameterResult& d) {
    std::ostringstream os;
    os << ps.n() << ',' << to_string(ps.position()) << ',' << to_string(g.spec.kind) << ',' << (g.spec.simultaneous ? 1 : 0) << ','
       << (g.spec.restricted ? 1 : 0) << ',' << (g.spec.labeled ? 1 : 0) << ',' << g.size() << ',';
    if (!d.connected) os << "disconnected,,";
    else os << d.diameter << ',' << hex(canonical_key(g.nodes[d.a])) << ',' << hex(canonical_key(g.nodes[d.b]));
    return os.str();
}

}  // namespace treemorph
