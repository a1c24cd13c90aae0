#include "bramble/ddp.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "bramble/errors.hpp"

namespace bramble {

void validateDdpInstance(const DdpInstance& inst) {
    if (inst.sources.empty()) throw InputError("ddp instance needs at least one terminal pair");
    if (inst.sources.size() != inst.sinks.size())
        throw InputError("ddp instance has " + std::to_string(inst.sources.size()) +
                         " sources but " + std::to_string(inst.sinks.size()) + " sinks");
    if (inst.budget < 1) throw InputError("ddp budget must be >= 1");
    int n = inst.d.vertexCount();
    for (int s : inst.sources)
        if (s < 0 || s >= n) throw InputError("source " + std::to_string(s) + " out of range");
    for (int t : inst.sinks)
        if (t < 0 || t >= n) throw InputError("sink " + std::to_string(t) + " out of range");
}

std::vector<int> loadMap(const Digraph& d, const DdpSolution& sol) {
    std::vector<int> load(d.vertexCount(), 0);
    for (const auto& p : sol.paths)
        for (int v : p.vertices) {
            if (v < 0 || v >= d.vertexCount())
                throw InputError("solution path vertex " + std::to_string(v) + " out of range");
            ++load[v];
        }
    return load;
}

SolutionReport verifySolution(const DdpInstance& inst, const DdpSolution& sol) {
    SolutionReport rep;
    validateDdpInstance(inst);
    if (sol.paths.size() != inst.sources.size()) {
        rep.message = "expected " + std::to_string(inst.sources.size()) + " paths, got " +
                      std::to_string(sol.paths.size());
        return rep;
    }
    for (std::size_t i = 0; i < sol.paths.size(); ++i) {
        std::string why;
        if (!sol.paths[i].validIn(inst.d, &why)) {
            rep.message = "path " + std::to_string(i) + " invalid: " + why;
            return rep;
        }
        if (sol.paths[i].first() != inst.sources[i]) {
            rep.message = "path " + std::to_string(i) + " starts at " +
                          std::to_string(sol.paths[i].first()) + ", not source " +
                          std::to_string(inst.sources[i]);
            return rep;
        }
        if (sol.paths[i].last() != inst.sinks[i]) {
            rep.message = "path " + std::to_string(i) + " ends at " +
                          std::to_string(sol.paths[i].last()) + ", not sink " +
                          std::to_string(inst.sinks[i]);
            return rep;
        }
    }
    auto load = loadMap(inst.d, sol);
    for (int v = 0; v < inst.d.vertexCount(); ++v)
        if (load[v] > inst.budget) {
            rep.message = "vertex " + std::to_string(v) + " carries " + std::to_string(load[v]) +
                          " paths, budget " + std::to_string(inst.budget);
            return rep;
        }
    rep.ok = true;
    rep.message = "solution verifies";
    return rep;
}

namespace {

// one shortest path per pair, ignoring loads; valid whenever budget >= k
std::optional<VertexPath> bfsPath(const Digraph& d, int s, int t) {
    if (s == t) return VertexPath({s});
    std::vector<int> prev(d.vertexCount(), -2);
    std::queue<int> q;
    prev[s] = -1;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : d.outNeighbors(v)) {
            if (prev[w] != -2) continue;
            prev[w] = v;
            if (w == t) {
                std::vector<int> vs;
                for (int x = t; x != -1; x = prev[x]) vs.push_back(x);
                std::reverse(vs.begin(), vs.end());
                return VertexPath(std::move(vs));
            }
            q.push(w);
        }
    }
    return std::nullopt;
}

constexpr int kFar = std::numeric_limits<int>::max();

// hop distance from every vertex to t, ignoring loads
std::vector<int> distancesTo(const Digraph& d, int t) {
    std::vector<int> dist(d.vertexCount(), kFar);
    std::queue<int> q;
    dist[t] = 0;
    q.push(t);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : d.inNeighbors(v))
            if (dist[w] == kFar) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

struct BacktrackSolver {
    const DdpInstance& inst;
    long long nodeCap;
    long long nodes = 0;
    bool capHit = false;
    std::vector<int> load;
    std::vector<bool> onPath;
    std::vector<VertexPath> built;
    // static per-pair distances steer the search toward the sink first; the
    // search stays exhaustive, only the branch order changes
    std::vector<std::vector<int>> distToSink;
    // scratch for the reachability prune
    std::vector<int> mark;
    int markStamp = 0;

    BacktrackSolver(const DdpInstance& i, long long cap)
        : inst(i), nodeCap(cap), load(i.d.vertexCount(), 0), onPath(i.d.vertexCount(), false),
          mark(i.d.vertexCount(), 0) {
        distToSink.reserve(i.sinks.size());
        for (int t : i.sinks) distToSink.push_back(distancesTo(i.d, t));
    }

    // can the sink still be reached from v through vertices with spare budget
    // that are not already on the path being grown?
    bool sinkReachable(int v, int sink) {
        if (v == sink) return true;
        ++markStamp;
        std::queue<int> q;
        mark[v] = markStamp;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : inst.d.outNeighbors(x)) {
                if (mark[w] == markStamp) continue;
                if (w == sink) return load[w] < inst.budget;
                if (onPath[w] || load[w] >= inst.budget) continue;
                mark[w] = markStamp;
                q.push(w);
            }
        }
        return false;
    }

    bool routePair(std::size_t i) {
        if (i == inst.sources.size()) return true;
        std::vector<int> path;
        return extend(i, inst.sources[i], path);
    }

    // place v as the next vertex of path i, then either finish the pair or
    // branch on out-neighbours; unwinds its own state on failure
    bool extend(std::size_t i, int v, std::vector<int>& path) {
        if (capHit) return false;
        if (++nodes > nodeCap) {
            capHit = true;
            return false;
        }
        if (load[v] >= inst.budget || onPath[v]) return false;
        int sink = inst.sinks[i];
        if (v != sink && !sinkReachable(v, sink)) return false;
        load[v] += 1;
        onPath[v] = true;
        path.push_back(v);
        bool done = false;
        if (v == sink) {
            // a simple path that touches the sink must end there
            built.push_back(VertexPath(path));
            std::vector<bool> savedOnPath = onPath;
            std::fill(onPath.begin(), onPath.end(), false);
            done = routePair(i + 1);
            if (!done) {
                built.pop_back();
                onPath = savedOnPath;
            }
        } else {
            const auto& dist = distToSink[i];
            std::vector<int> order = inst.d.outNeighbors(v);
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return dist[x] != dist[y] ? dist[x] < dist[y] : x < y;
            });
            for (int w : order) {
                if (extend(i, w, path)) {
                    done = true;
                    break;
                }
                if (capHit) break;
            }
        }
        if (!done) {
            path.pop_back();
            onPath[v] = false;
            load[v] -= 1;
        }
        return done;
    }
};

}  // namespace

SolveResult solveExact(const DdpInstance& inst, long long nodeCap) {
    validateDdpInstance(inst);
    if (nodeCap < 0) throw InputError("nodeCap must be >= 0");
    SolveResult res;
    std::size_t k = inst.sources.size();

    if (inst.budget >= static_cast<int>(k)) {
        // no load conflict is possible: route each pair independently
        for (std::size_t i = 0; i < k; ++i) {
            auto p = bfsPath(inst.d, inst.sources[i], inst.sinks[i]);
            if (!p) {
                res.status = SolveStatus::Infeasible;
                return res;
            }
            res.solution.paths.push_back(std::move(*p));
        }
        res.status = SolveStatus::Solved;
        return res;
    }

    BacktrackSolver solver(inst, nodeCap);
    bool done = solver.routePair(0);
    res.nodesExpanded = solver.nodes;
    if (solver.capHit) {
        res.status = SolveStatus::CapExceeded;
        return res;
    }
    if (done) {
        res.status = SolveStatus::Solved;
        res.solution.paths = std::move(solver.built);
        return res;
    }
    res.status = SolveStatus::Infeasible;
    return res;
}

DichotomyResult dichotomyCheck(const Digraph& d, const Bramble& bags, const std::vector<int>& S,
                               const std::vector<int>& T, int k) {
    if (k < 1) throw InputError("dichotomy needs k >= 1");
    if (bags.empty()) throw InputError("dichotomy needs a nonempty bag family");
    int n = d.vertexCount();
    std::set<int> su(S.begin(), S.end()), tu(T.begin(), T.end());
    if (su.empty() || tu.empty()) throw InputError("dichotomy needs nonempty terminal sets");
    for (int v : su)
        if (v < 0 || v >= n) throw InputError("source " + std::to_string(v) + " out of range");
    for (int v : tu)
        if (v < 0 || v >= n) throw InputError("sink " + std::to_string(v) + " out of range");

    DichotomyResult res;
    std::set<int> unionSet;
    for (const auto& bag : bags.bags()) {
        for (int v : bag) {
            if (v < 0 || v >= n) throw InputError("bag vertex " + std::to_string(v) + " out of range");
            unionSet.insert(v);
        }
    }
    res.bagUnion.assign(unionSet.begin(), unionSet.end());
    std::vector<int> sVec(su.begin(), su.end()), tVec(tu.begin(), tu.end());

    // S == U gives |S| >= k zero-length paths, so the source side is linked
    // without a flow computation (and the flow routine rejects equal sets)
    if (!(su == unionSet)) {
        auto cert = mengerPathsAndSeparator(d, sVec, res.bagUnion);
        if (static_cast<int>(cert.paths.size()) < k) {
            res.linked = false;
            res.side = DichotomySide::SourceSide;
            res.evidence = std::move(cert);
            return res;
        }
    }
    if (!(unionSet == tu)) {
        auto cert = mengerPathsAndSeparator(d, res.bagUnion, tVec);
        if (static_cast<int>(cert.paths.size()) < k) {
            res.linked = false;
            res.side = DichotomySide::SinkSide;
            res.evidence = std::move(cert);
            return res;
        }
    }
    res.linked = true;
    return res;
}

}  // namespace bramble
