#include "bramble/certificates.hpp"

#include <algorithm>
#include <set>

#include "bramble/errors.hpp"

namespace bramble {

Bramble::Bramble(const std::vector<std::vector<int>>& bags) {
    std::set<std::vector<int>> seen;
    for (const auto& raw : bags) {
        if (raw.empty()) throw InputError("bramble: bags must be non-empty");
        std::vector<int> bag(raw.begin(), raw.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        if (bag.front() < 0) throw InputError("bramble: negative vertex index");
        if (seen.insert(bag).second) bags_.push_back(std::move(bag));
    }
}

namespace {

void checkBagsInRange(const Digraph& d, const Bramble& bags) {
    if (bags.empty()) throw InputError("bramble: family must be non-empty");
    for (const auto& bag : bags.bags())
        if (bag.back() >= d.vertexCount())
            throw InputError("bramble: bag vertex " + std::to_string(bag.back()) +
                             " out of range");
}

bool bagsIntersect(const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return true;
        (x[i] < y[j]) ? ++i : ++j;
    }
    return false;
}

bool arcBetween(const Digraph& d, const std::vector<int>& from, const std::vector<int>& to) {
    for (int u : from)
        for (int v : to)
            if (d.hasEdge(u, v)) return true;
    return false;
}

}  // namespace

BrambleReport verifyBramble(const Digraph& d, const Bramble& bags) {
    checkBagsInRange(d, bags);
    BrambleReport rep;
    const auto& all = bags.bags();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (!isStronglyConnectedSubset(d, all[i])) {
            rep.message = "bag " + std::to_string(i) + " does not induce a strong subgraph";
            rep.bagA = static_cast<int>(i);
            return rep;
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (bagsIntersect(all[i], all[j])) continue;
            if (arcBetween(d, all[i], all[j]) && arcBetween(d, all[j], all[i])) continue;
            rep.message = "bags " + std::to_string(i) + " and " + std::to_string(j) +
                          " neither intersect nor have arcs both ways";
            rep.bagA = static_cast<int>(i);
            rep.bagB = static_cast<int>(j);
            return rep;
        }
    rep.ok = true;
    return rep;
}

std::map<int, int> occurrenceCounts(const Bramble& bags) {
    std::map<int, int> oc;
    for (const auto& bag : bags.bags())
        for (int v : bag) ++oc[v];
    return oc;
}

int congestion(const Bramble& bags) {
    int best = 0;
    for (const auto& [v, c] : occurrenceCounts(bags)) best = std::max(best, c);
    return best;
}

namespace {

struct HittingSearch {
    const std::vector<std::vector<int>>& bags;
    int best;  // strictly better solutions only
    std::vector<int> chosen, bestSet;

    // greedy count of pairwise disjoint unhit bags: any hitting set needs one
    // vertex per member of such a packing
    int lowerBound(const std::set<int>& hit) const {
        std::set<int> blocked;
        int packed = 0;
        for (const auto& bag : bags) {
            bool isHit = false, overlaps = false;
            for (int v : bag) {
                if (hit.count(v)) isHit = true;
                if (blocked.count(v)) overlaps = true;
            }
            if (isHit || overlaps) continue;
            ++packed;
            blocked.insert(bag.begin(), bag.end());
        }
        return packed;
    }

    void run(std::set<int>& hit) {
        if (static_cast<int>(chosen.size()) + lowerBound(hit) >= best) return;
        const std::vector<int>* firstUnhit = nullptr;
        for (const auto& bag : bags) {
            bool isHit = false;
            for (int v : bag)
                if (hit.count(v)) { isHit = true; break; }
            if (!isHit) { firstUnhit = &bag; break; }
        }
        if (!firstUnhit) {
            best = static_cast<int>(chosen.size());
            bestSet = chosen;
            return;
        }
        for (int v : *firstUnhit) {
            bool fresh = hit.insert(v).second;
            chosen.push_back(v);
            run(hit);
            chosen.pop_back();
            if (fresh) hit.erase(v);
        }
    }
};

}  // namespace

OrderResult brambleOrderExact(const Digraph& d, const Bramble& bags, int sizeCap) {
    checkBagsInRange(d, bags);
    if (sizeCap < 0) throw InputError("brambleOrderExact: sizeCap must be nonnegative");
    if (bags.size() > 20)
        throw GuardError("brambleOrderExact: exhaustive search guarded to 20 bags, got " +
                         std::to_string(bags.size()));

    HittingSearch search{bags.bags(), sizeCap + 1, {}, {}};
    std::set<int> hit;
    search.run(hit);

    OrderResult res;
    if (search.best > sizeCap) {
        res.capExceeded = true;
        return res;
    }
    res.order = search.best;
    res.hittingSet = search.bestSet;
    std::sort(res.hittingSet.begin(), res.hittingSet.end());
    int c = congestion(bags);
    if (c > 0 && static_cast<long long>(res.order) * c < static_cast<long long>(bags.size()))
        throw InternalError("brambleOrderExact: order fell below size/congestion bound");
    return res;
}

namespace {

void checkVertexSet(const Digraph& d, const std::vector<int>& a, const char* what) {
    if (a.empty()) throw InputError(std::string(what) + ": set must be non-empty");
    std::set<int> seen;
    for (int v : a) {
        if (v < 0 || v >= d.vertexCount())
            throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                             " out of range");
        if (!seen.insert(v).second)
            throw InputError(std::string(what) + ": repeated vertex " + std::to_string(v));
    }
}

}  // namespace

WellLinkedReport isWellLinkedReport(const Digraph& d, const std::vector<int>& a) {
    checkVertexSet(d, a, "isWellLinked");
    if (a.size() > 8)
        throw GuardError("isWellLinked: enumeration guarded to 8 vertices, got " +
                         std::to_string(a.size()));
    WellLinkedReport rep;
    int m = static_cast<int>(a.size());
    std::vector<int> label(m, 0);  // 0 = unused, 1 = X, 2 = Y
    while (true) {
        std::vector<int> x, y;
        for (int i = 0; i < m; ++i) {
            if (label[i] == 1) x.push_back(a[i]);
            if (label[i] == 2) y.push_back(a[i]);
        }
        if (!x.empty() && x.size() == y.size()) {
            auto cert = mengerPathsAndSeparator(d, x, y);
            if (cert.paths.size() < x.size()) {
                rep.x = x;
                rep.y = y;
                rep.linkageSize = static_cast<int>(cert.paths.size());
                return rep;
            }
        }
        int i = 0;
        while (i < m && label[i] == 2) label[i++] = 0;
        if (i == m) break;
        ++label[i];
    }
    rep.ok = true;
    return rep;
}

bool isWellLinked(const Digraph& d, const std::vector<int>& a) {
    return isWellLinkedReport(d, a).ok;
}

PathSystemReport verifyPathSystem(const Digraph& d, const PathSystem& ps) {
    PathSystemReport rep;
    auto fail = [&](const std::string& msg) {
        rep.message = msg;
        return rep;
    };
    if (ps.a < 1 || ps.b < 1) return fail("path system needs a >= 1 and b >= 1");
    auto na = static_cast<std::size_t>(ps.a);
    if (ps.spinePaths.size() != na || ps.inSets.size() != na || ps.outSets.size() != na)
        return fail("spine path or terminal set count does not match a");

    std::set<int> allSpine;
    for (int i = 0; i < ps.a; ++i) {
        std::string why;
        if (!ps.spinePaths[i].validIn(d, &why))
            return fail("spine path " + std::to_string(i) + ": " + why);
        for (int v : ps.spinePaths[i].vertices)
            if (!allSpine.insert(v).second)
                return fail("spine paths share vertex " + std::to_string(v));
    }

    for (int i = 0; i < ps.a; ++i) {
        const auto& spine = ps.spinePaths[i].vertices;
        std::map<int, int> pos;
        for (std::size_t p = 0; p < spine.size(); ++p) pos[spine[p]] = static_cast<int>(p);
        for (const auto* setp : {&ps.inSets[i], &ps.outSets[i]}) {
            if (setp->size() != static_cast<std::size_t>(ps.b))
                return fail("terminal set size differs from b on spine " + std::to_string(i));
            std::set<int> dedup(setp->begin(), setp->end());
            if (dedup.size() != setp->size())
                return fail("terminal set repeats a vertex on spine " + std::to_string(i));
            for (int v : *setp)
                if (!pos.count(v))
                    return fail("terminal vertex " + std::to_string(v) +
                                " is not on spine path " + std::to_string(i));
        }
        int lastIn = -1, firstOut = static_cast<int>(spine.size());
        for (int v : ps.inSets[i]) lastIn = std::max(lastIn, pos[v]);
        for (int v : ps.outSets[i]) firstOut = std::min(firstOut, pos[v]);
        if (lastIn >= firstOut)
            return fail("in-set does not precede out-set on spine " + std::to_string(i));
    }

    // exactly the ordered pairs i != j, each a b-sized disjoint linkage
    for (const auto& [key, lk] : ps.linkages) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= ps.a || j >= ps.a || i == j)
            return fail("linkage keyed by invalid pair");
        (void)lk;
    }
    for (int i = 0; i < ps.a; ++i)
        for (int j = 0; j < ps.a; ++j) {
            if (i == j) continue;
            auto it = ps.linkages.find({i, j});
            if (it == ps.linkages.end())
                return fail("missing linkage " + std::to_string(i) + "->" + std::to_string(j));
            const Linkage& lk = it->second;
            std::set<int> src(ps.outSets[i].begin(), ps.outSets[i].end());
            std::set<int> dst(ps.inSets[j].begin(), ps.inSets[j].end());
            if (std::set<int>(lk.sourceSet.begin(), lk.sourceSet.end()) != src ||
                std::set<int>(lk.sinkSet.begin(), lk.sinkSet.end()) != dst)
                return fail("linkage " + std::to_string(i) + "->" + std::to_string(j) +
                            " endpoints sets differ from the spine sets");
            if (lk.paths.size() != static_cast<std::size_t>(ps.b))
                return fail("linkage " + std::to_string(i) + "->" + std::to_string(j) +
                            " does not have b paths");
            std::set<int> used;
            for (const auto& p : lk.paths) {
                std::string why;
                if (!p.validIn(d, &why))
                    return fail("linkage " + std::to_string(i) + "->" + std::to_string(j) +
                                ": " + why);
                if (!src.count(p.first()) || !dst.count(p.last()))
                    return fail("linkage " + std::to_string(i) + "->" + std::to_string(j) +
                                " path has endpoints outside the terminal sets");
                for (int v : p.vertices)
                    if (!used.insert(v).second)
                        return fail("linkage " + std::to_string(i) + "->" + std::to_string(j) +
                                    " paths share vertex " + std::to_string(v));
            }
        }

    for (int i = 0; i < ps.a; ++i) {
        for (const auto* setp : {&ps.inSets[i], &ps.outSets[i]}) {
            if (setp->size() > 8) {
                rep.warnings.push_back("well-linkedness of a size-" +
                                       std::to_string(setp->size()) +
                                       " terminal set skipped (guard is 8)");
                continue;
            }
            if (!isWellLinked(d, *setp))
                return fail("terminal set on spine " + std::to_string(i) +
                            " is not well-linked");
        }
    }

    rep.ok = true;
    return rep;
}

PathSystem buildPathSystem(const Digraph& d, int k, const BuildPathSystemOptions& opts) {
    if (k < 1) throw InputError("buildPathSystem: k must be positive");
    int need = 2 * k * k;
    if (!opts.skipPreconditionChecks && !isKStrong(d, need))
        throw InputError("buildPathSystem: host is not " + std::to_string(need) + "-strong");

    // grow a maximal path from vertex 0, always extending to the
    // smallest-index unused out-neighbour
    if (d.vertexCount() == 0) throw InputError("buildPathSystem: empty digraph");
    std::vector<bool> used(d.vertexCount(), false);
    std::vector<int> walk{0};
    used[0] = true;
    while (true) {
        int ext = -1;
        for (int w : d.outNeighbors(walk.back()))
            if (!used[w]) { ext = w; break; }
        if (ext == -1) break;
        walk.push_back(ext);
        used[ext] = true;
    }
    if (static_cast<int>(walk.size()) < need)
        throw InputError("buildPathSystem: maximal path has " + std::to_string(walk.size()) +
                         " vertices, need " + std::to_string(need) +
                         " (host too weakly connected)");
    walk.resize(need);

    PathSystem ps;
    ps.a = k;
    ps.b = k;
    for (int i = 0; i < k; ++i) {
        auto first = walk.begin() + 2 * k * i;
        ps.spinePaths.push_back(VertexPath(std::vector<int>(first, first + 2 * k)));
        ps.inSets.push_back(std::vector<int>(first, first + k));
        ps.outSets.push_back(std::vector<int>(first + k, first + 2 * k));
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto cert = mengerPathsAndSeparator(d, ps.outSets[i], ps.inSets[j]);
            if (static_cast<int>(cert.paths.size()) < k)
                throw InputError("buildPathSystem: only " + std::to_string(cert.paths.size()) +
                                 " disjoint paths from block " + std::to_string(i) +
                                 " to block " + std::to_string(j) +
                                 " (host too weakly connected)");
            Linkage lk;
            lk.sourceSet = ps.outSets[i];
            lk.sinkSet = ps.inSets[j];
            lk.paths = std::move(cert.paths);
            ps.linkages[{i, j}] = std::move(lk);
        }

    auto rep = verifyPathSystem(d, ps);
    if (!rep.ok) throw InternalError("buildPathSystem: self-check failed: " + rep.message);
    return ps;
}

}  // namespace bramble
