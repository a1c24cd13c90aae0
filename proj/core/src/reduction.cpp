#include "bramble/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bramble/errors.hpp"
#include "bramble/menger.hpp"

namespace bramble {

namespace {

void checkTerminals(const Digraph& d, const std::vector<int>& S, const std::vector<int>& T) {
    if (S.empty() || S.size() != T.size())
        throw InputError("terminal lists must be nonempty and of equal size");
    for (int v : S)
        if (v < 0 || v >= d.vertexCount())
            throw InputError("source " + std::to_string(v) + " out of range");
    for (int v : T)
        if (v < 0 || v >= d.vertexCount())
            throw InputError("sink " + std::to_string(v) + " out of range");
}

void checkBagsAgainstHost(const Digraph& d, const Bramble& bags) {
    if (bags.empty()) throw InputError("bag family must be nonempty");
    for (const auto& bag : bags.bags())
        for (int v : bag)
            if (v >= d.vertexCount())
                throw InputError("bag vertex " + std::to_string(v) + " out of range");
}

}  // namespace

ReducedInstance buildReducedInstance(const Digraph& d, const Bramble& bags,
                                     const std::vector<int>& S, const std::vector<int>& T) {
    checkBagsAgainstHost(d, bags);
    checkTerminals(d, S, T);
    int n = d.vertexCount();

    // growable adjacency; arcs are only ever added, and copies wire into the
    // graph as it stands when their original is processed
    std::vector<std::set<int>> out(n), in(n);
    for (auto [u, v] : d.edges()) {
        out[u].insert(v);
        in[v].insert(u);
    }

    ReducedInstance r;
    r.backMap.resize(n);
    std::iota(r.backMap.begin(), r.backMap.end(), 0);

    auto oc = occurrenceCounts(bags);
    for (const auto& [v, count] : oc) {
        if (count < 3) continue;
        int members = (count + 1) / 2;
        std::vector<int> cls{v};
        const std::set<int> snapOut = out[v];
        const std::set<int> snapIn = in[v];
        for (int j = 1; j < members; ++j) {
            int id = static_cast<int>(out.size());
            out.push_back(snapOut);
            in.push_back(snapIn);
            for (int w : snapOut) in[w].insert(id);
            for (int w : snapIn) out[w].insert(id);
            r.backMap.push_back(v);
            cls.push_back(id);
        }
        for (int x : cls)
            for (int y : cls)
                if (x != y) {
                    out[x].insert(y);
                    in[y].insert(x);
                }
        r.copyClasses[v] = std::move(cls);
    }

    // reassign bag occurrences: the j-th bag of v (ascending bag index) goes
    // to class member j/2, giving every member at most two bags
    std::vector<std::vector<int>> rawPrime = bags.bags();
    std::map<int, int> seen;
    for (auto& bag : rawPrime)
        for (auto& vertex : bag) {
            auto it = r.copyClasses.find(vertex);
            if (it == r.copyClasses.end()) continue;
            int occ = seen[vertex]++;
            vertex = it->second[occ / 2];
        }
    r.bagsPrime = Bramble(rawPrime);
    r.sigma.resize(bags.size());
    std::iota(r.sigma.begin(), r.sigma.end(), std::size_t{0});

    for (std::size_t i = 0; i < S.size(); ++i) {
        auto it = r.copyClasses.find(S[i]);
        if (it == r.copyClasses.end()) {
            r.sourcesPrime.push_back(S[i]);
        } else {
            int id = static_cast<int>(out.size());
            out.emplace_back();
            in.emplace_back();
            for (int m : it->second) {
                out[id].insert(m);
                in[m].insert(id);
            }
            r.backMap.push_back(S[i]);
            r.sourcesPrime.push_back(id);
        }
    }
    for (std::size_t i = 0; i < T.size(); ++i) {
        auto it = r.copyClasses.find(T[i]);
        if (it == r.copyClasses.end()) {
            r.sinksPrime.push_back(T[i]);
        } else {
            int id = static_cast<int>(out.size());
            out.emplace_back();
            in.emplace_back();
            for (int m : it->second) {
                out[m].insert(id);
                in[id].insert(m);
            }
            r.backMap.push_back(T[i]);
            r.sinksPrime.push_back(id);
        }
    }

    Digraph dp(static_cast<int>(out.size()));
    for (std::size_t u = 0; u < out.size(); ++u)
        for (int w : out[u]) dp.addEdge(static_cast<int>(u), w);
    r.dPrime = std::move(dp);

    auto rep = validateReducedInstance(d, bags, S, T, r);
    if (!rep.ok) throw InternalError("reduction self-check failed: " + rep.message);
    return r;
}

ReductionReport validateReducedInstance(const Digraph& d, const Bramble& bags,
                                        const std::vector<int>& S, const std::vector<int>& T,
                                        const ReducedInstance& r) {
    ReductionReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.message = std::move(msg);
        return rep;
    };
    int n = d.vertexCount();
    int np = r.dPrime.vertexCount();
    if (np < n) return fail("reduced digraph lost vertices");
    if (r.backMap.size() != static_cast<std::size_t>(np)) return fail("backMap has wrong size");
    for (int v = 0; v < n; ++v)
        if (r.backMap[v] != v) return fail("backMap must fix original vertex " + std::to_string(v));
    for (int v = n; v < np; ++v)
        if (r.backMap[v] < 0 || r.backMap[v] >= n)
            return fail("backMap of fresh vertex " + std::to_string(v) + " out of range");

    // originals keep exactly their old adjacency among themselves
    for (int u = 0; u < n; ++u) {
        for (int w : d.outNeighbors(u))
            if (!r.dPrime.hasEdge(u, w))
                return fail("original arc " + std::to_string(u) + "->" + std::to_string(w) +
                            " missing from the reduced digraph");
        for (int w : r.dPrime.outNeighbors(u)) {
            if (w >= n) continue;
            if (!d.hasEdge(u, w))
                return fail("reduced digraph invents original arc " + std::to_string(u) + "->" +
                            std::to_string(w));
        }
    }

    if (r.bagsPrime.size() != bags.size()) return fail("bag family changed size");
    if (congestion(r.bagsPrime) > 2) return fail("reduced congestion exceeds 2");

    auto oc = occurrenceCounts(bags);
    std::set<int> allMembers;
    for (const auto& [v, cls] : r.copyClasses) {
        auto it = oc.find(v);
        if (it == oc.end() || it->second < 3)
            return fail("copy class for vertex " + std::to_string(v) +
                        " which sits in fewer than 3 bags");
        if (static_cast<int>(cls.size()) != (it->second + 1) / 2)
            return fail("copy class of " + std::to_string(v) + " has wrong size");
        if (cls.empty() || cls.front() != v)
            return fail("copy class of " + std::to_string(v) + " must start with the original");
        for (std::size_t j = 0; j < cls.size(); ++j) {
            int m = cls[j];
            if (m < 0 || m >= np) return fail("copy class member out of range");
            if (j > 0 && cls[j] <= cls[j - 1])
                return fail("copy class of " + std::to_string(v) + " not ascending");
            if (r.backMap[m] != v)
                return fail("class member " + std::to_string(m) + " maps back to " +
                            std::to_string(r.backMap[m]) + ", not " + std::to_string(v));
            if (!allMembers.insert(m).second)
                return fail("vertex " + std::to_string(m) + " appears in two copy classes");
        }
        for (int x : cls)
            for (int y : cls)
                if (x != y && !r.dPrime.hasEdge(x, y))
                    return fail("copy class of " + std::to_string(v) +
                                " is not a bidirectional clique");
    }
    for (const auto& [v, count] : oc)
        if (count >= 3 && !r.copyClasses.count(v))
            return fail("vertex " + std::to_string(v) + " sits in " + std::to_string(count) +
                        " bags but has no copy class");

    if (r.sigma.size() != bags.size()) return fail("sigma has wrong size");
    std::vector<bool> hit(bags.size(), false);
    for (std::size_t i = 0; i < r.sigma.size(); ++i) {
        std::size_t img = r.sigma[i];
        if (img >= bags.size()) return fail("sigma image out of range");
        if (hit[img]) return fail("sigma is not a permutation");
        hit[img] = true;
        const auto& src = bags.bags()[i];
        for (int u : r.bagsPrime.bags()[img]) {
            if (u < 0 || u >= np) return fail("reduced bag vertex out of range");
            if (u >= n && !allMembers.count(u))
                return fail("reduced bag contains non-class fresh vertex " + std::to_string(u));
            if (!std::binary_search(src.begin(), src.end(), r.backMap[u]))
                return fail("bag " + std::to_string(img) + " gained vertex " + std::to_string(u) +
                            " outside its source bag");
        }
    }

    if (r.sourcesPrime.size() != S.size() || r.sinksPrime.size() != T.size())
        return fail("terminal lists changed size");
    for (std::size_t i = 0; i < S.size(); ++i) {
        int sp = r.sourcesPrime[i];
        auto it = r.copyClasses.find(S[i]);
        if (it == r.copyClasses.end()) {
            if (sp != S[i]) return fail("uncopied source " + std::to_string(S[i]) + " was moved");
            continue;
        }
        if (sp < n) return fail("copied source " + std::to_string(S[i]) + " needs a fresh gadget");
        if (r.backMap[sp] != S[i]) return fail("source gadget maps back to the wrong vertex");
        if (!r.dPrime.inNeighbors(sp).empty())
            return fail("source gadget " + std::to_string(sp) + " has incoming arcs");
        if (r.dPrime.outNeighbors(sp) != it->second)
            return fail("source gadget " + std::to_string(sp) +
                        " must feed exactly the copy class");
    }
    for (std::size_t i = 0; i < T.size(); ++i) {
        int tp = r.sinksPrime[i];
        auto it = r.copyClasses.find(T[i]);
        if (it == r.copyClasses.end()) {
            if (tp != T[i]) return fail("uncopied sink " + std::to_string(T[i]) + " was moved");
            continue;
        }
        if (tp < n) return fail("copied sink " + std::to_string(T[i]) + " needs a fresh gadget");
        if (r.backMap[tp] != T[i]) return fail("sink gadget maps back to the wrong vertex");
        if (!r.dPrime.outNeighbors(tp).empty())
            return fail("sink gadget " + std::to_string(tp) + " has outgoing arcs");
        if (r.dPrime.inNeighbors(tp) != it->second)
            return fail("sink gadget " + std::to_string(tp) + " must drain exactly the copy class");
    }

    // only brambles are promised to stay brambles
    if (verifyBramble(d, bags).ok) {
        auto prime = verifyBramble(r.dPrime, r.bagsPrime);
        if (!prime.ok) return fail("reduction broke the bramble: " + prime.message);
    }

    rep.ok = true;
    rep.message = "reduced instance verifies";
    return rep;
}

DdpSolution translateSolution(const ReducedInstance& r, const DdpSolution& pathsPrime) {
    DdpInstance inst;
    inst.d = r.dPrime;
    inst.sources = r.sourcesPrime;
    inst.sinks = r.sinksPrime;
    inst.budget = 2;
    auto rep = verifySolution(inst, pathsPrime);
    if (!rep.ok) throw InputError("reduced solution does not verify: " + rep.message);

    int np = r.dPrime.vertexCount();
    std::vector<int> classOf(np, -1);
    int maxClass = 1;
    for (const auto& [v, cls] : r.copyClasses) {
        for (int m : cls) classOf[m] = v;
        maxClass = std::max(maxClass, static_cast<int>(cls.size()));
    }

    DdpSolution out;
    for (std::size_t i = 0; i < pathsPrime.paths.size(); ++i) {
        std::vector<int> vs = pathsPrime.paths[i].vertices;

        // shortcut past repeated copy classes: keep the earliest visit, jump
        // straight to the successor of the last one
        while (true) {
            std::size_t p = vs.size(), q = 0;
            std::map<int, std::size_t> lastOfClass;
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (classOf[vs[j]] != -1) lastOfClass[classOf[vs[j]]] = j;
            for (std::size_t j = 0; j < vs.size(); ++j) {
                int c = classOf[vs[j]];
                if (c != -1 && lastOfClass[c] > j) {
                    p = j;
                    q = lastOfClass[c];
                    break;
                }
            }
            if (p == vs.size()) break;
            if (q + 1 >= vs.size())
                throw InternalError("copy class at the end of a reduced path");
            int z = vs[q + 1];
            if (!r.dPrime.hasEdge(vs[p], z))
                throw InternalError("shortcut arc " + std::to_string(vs[p]) + "->" +
                                    std::to_string(z) + " missing; snapshot wiring is broken");
            vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                     vs.begin() + static_cast<std::ptrdiff_t>(q) + 1);
        }

        // strip gadget endpoints, then collapse everything through backMap
        if (r.sourcesPrime[i] != r.backMap[r.sourcesPrime[i]]) vs.erase(vs.begin());
        if (r.sinksPrime[i] != r.backMap[r.sinksPrime[i]]) vs.pop_back();
        if (vs.empty()) throw InternalError("reduced path vanished during translation");
        for (int& v : vs) v = r.backMap[v];

        out.paths.emplace_back(std::move(vs));
        if (out.paths.back().first() != r.backMap[r.sourcesPrime[i]])
            throw InternalError("translated path " + std::to_string(i) +
                                " starts at the wrong vertex");
        if (out.paths.back().last() != r.backMap[r.sinksPrime[i]])
            throw InternalError("translated path " + std::to_string(i) +
                                " ends at the wrong vertex");
    }

    // per-vertex load cannot exceed twice the class size
    std::map<int, int> load;
    for (const auto& p : out.paths)
        for (int v : p.vertices) ++load[v];
    for (const auto& [v, l] : load) {
        auto it = r.copyClasses.find(v);
        int cap = 2 * (it == r.copyClasses.end() ? 1 : static_cast<int>(it->second.size()));
        if (l > cap)
            throw InternalError("translated load " + std::to_string(l) + " on vertex " +
                                std::to_string(v) + " exceeds " + std::to_string(cap));
    }
    return out;
}

long long routeSizeThreshold(int k) {
    if (k < 1) throw InputError("k must be >= 1");
    long long kk = k;
    return 4 * kk * kk + 2 * (kk - 1);
}

RouteResult routeViaBramble(const Digraph& d, const Bramble& bags, const std::vector<int>& S,
                            const std::vector<int>& T, int c, const RouteOptions& opts) {
    checkBagsAgainstHost(d, bags);
    checkTerminals(d, S, T);
    if (c < 1) throw InputError("congestion parameter c must be >= 1");
    int k = static_cast<int>(S.size());

    if (!opts.skipSizeCheck && static_cast<long long>(bags.size()) < routeSizeThreshold(k))
        throw InputError("bag family has " + std::to_string(bags.size()) + " bags; routing k=" +
                         std::to_string(k) + " pairs needs at least " +
                         std::to_string(routeSizeThreshold(k)));
    if (!opts.skipBrambleCheck) {
        auto rep = verifyBramble(d, bags);
        if (!rep.ok) throw InputError("bag family is not a bramble: " + rep.message);
        int cg = congestion(bags);
        if (cg > c)
            throw InputError("bramble congestion " + std::to_string(cg) +
                             " exceeds the declared bound " + std::to_string(c));
    }
    if (!opts.skipKStrongCheck && !isKStrong(d, k))
        throw InputError("host digraph is not " + std::to_string(k) + "-strong");

    RouteResult out;
    out.loadBound = 2 * ((c + 1) / 2);
    out.reduced = buildReducedInstance(d, bags, S, T);

    DdpInstance inst;
    inst.d = out.reduced.dPrime;
    inst.sources = out.reduced.sourcesPrime;
    inst.sinks = out.reduced.sinksPrime;
    inst.budget = 2;
    auto res = solveExact(inst, opts.nodeCap);
    out.nodesExpanded = res.nodesExpanded;

    switch (res.status) {
        case SolveStatus::Solved: {
            out.status = RouteStatus::Routed;
            out.solution = translateSolution(out.reduced, res.solution);
            if (!opts.skipBrambleCheck) {
                auto lm = loadMap(d, out.solution);
                for (int v = 0; v < d.vertexCount(); ++v)
                    if (lm[v] > out.loadBound)
                        throw InternalError("translated load " + std::to_string(lm[v]) +
                                            " on vertex " + std::to_string(v) +
                                            " exceeds the 2*ceil(c/2) bound");
            }
            break;
        }
        case SolveStatus::Infeasible: {
            out.status = RouteStatus::Infeasible;
            out.evidence = dichotomyCheck(out.reduced.dPrime, out.reduced.bagsPrime,
                                          out.reduced.sourcesPrime, out.reduced.sinksPrime, k);
            break;
        }
        case SolveStatus::CapExceeded: {
            out.status = RouteStatus::CapExceeded;
            break;
        }
    }
    return out;
}

}  // namespace bramble
