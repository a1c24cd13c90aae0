#include "bramble/documents.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "params_internal.hpp"

namespace bramble {

using json = nlohmann::ordered_json;

namespace {

// --- strict readers ---------------------------------------------------------

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw DocumentError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
    return *it;
}

void onlyKeys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) bad(path, "unknown field '" + it.key() + "'");
    }
}

void needObject(const json& j, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
}

int asInt(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        bad(path, "integer out of range");
    return static_cast<int>(v);
}

long long asLong(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long long>();
}

std::uint64_t asU64(const json& j, const std::string& path) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                   j.get<long long>() < 0))
        bad(path, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

double asDouble(const json& j, const std::string& path) {
    if (!j.is_number()) bad(path, "expected a number");
    return j.get<double>();
}

std::string asString(const json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

bool asBool(const json& j, const std::string& path) {
    if (!j.is_boolean()) bad(path, "expected a boolean");
    return j.get<bool>();
}

std::vector<int> asIntArray(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(asInt(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<int>> asIntMatrix(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(asIntArray(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::pair<int, int>> asPairArray(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) bad(at, "expected a pair [a, b]");
        out.emplace_back(asInt(j[i][0], at + "[0]"), asInt(j[i][1], at + "[1]"));
    }
    return out;
}

// --- graph blocks -----------------------------------------------------------

json edgesToJson(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

json digraphToJson(const Digraph& d) {
    json j;
    j["n"] = d.vertexCount();
    j["edges"] = edgesToJson(d.edges());
    return j;
}

Digraph digraphFromJson(const json& j, const std::string& path) {
    needObject(j, path);
    onlyKeys(j, path, {"n", "edges"});
    int n = asInt(field(j, "n", path), path + ".n");
    if (n < 0) bad(path + ".n", "vertex count must be nonnegative");
    auto edges = asPairArray(field(j, "edges", path), path + ".edges");
    Digraph d(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            bad(path + ".edges[" + std::to_string(i) + "]", "endpoint out of range");
        d.addEdge(u, v);
    }
    return d;
}

json ugraphToJson(const Ugraph& g) {
    json j;
    j["n"] = g.vertexCount();
    j["edges"] = edgesToJson(g.edges());
    return j;
}

Ugraph ugraphFromJson(const json& j, const std::string& path) {
    needObject(j, path);
    onlyKeys(j, path, {"n", "edges"});
    int n = asInt(field(j, "n", path), path + ".n");
    if (n < 0) bad(path + ".n", "vertex count must be nonnegative");
    auto edges = asPairArray(field(j, "edges", path), path + ".edges");
    Ugraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            bad(path + ".edges[" + std::to_string(i) + "]", "endpoint out of range");
        g.addEdge(u, v);
    }
    return g;
}

json parseText(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("document is not valid JSON: ") + e.what());
    }
}

void checkSchemaVersion(const json& j, const std::string& path) {
    int v = asInt(field(j, "schemaVersion", path), path + ".schemaVersion");
    if (v != kSchemaVersion)
        bad(path + ".schemaVersion",
            "unsupported version " + std::to_string(v) + ", expected " +
                std::to_string(kSchemaVersion));
}

std::string dumpCanonical(const json& j) { return j.dump(2) + "\n"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw DocumentError("failed writing '" + path + "'");
}

}  // namespace

// --- instance documents -----------------------------------------------------

bool InstanceDocument::operator==(const InstanceDocument& other) const {
    return schemaVersion == other.schemaVersion && digraph == other.digraph &&
           bramble == other.bramble && terminals == other.terminals &&
           vertexNames == other.vertexNames;
}

std::string serializeInstance(const InstanceDocument& doc) {
    json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["digraph"] = digraphToJson(doc.digraph);
    if (doc.bramble) j["bramble"] = *doc.bramble;
    if (doc.terminals) {
        json t;
        t["sources"] = doc.terminals->sources;
        t["sinks"] = doc.terminals->sinks;
        t["budget"] = doc.terminals->budget;
        j["terminals"] = t;
    }
    if (doc.vertexNames) j["vertexNames"] = *doc.vertexNames;
    return dumpCanonical(j);
}

InstanceDocument parseInstance(const std::string& text) {
    json j = parseText(text);
    const std::string path = "$";
    needObject(j, path);
    onlyKeys(j, path, {"schemaVersion", "digraph", "bramble", "terminals", "vertexNames"});
    checkSchemaVersion(j, path);

    InstanceDocument doc;
    doc.digraph = digraphFromJson(field(j, "digraph", path), path + ".digraph");
    int n = doc.digraph.vertexCount();

    if (j.contains("bramble")) {
        auto bags = asIntMatrix(j["bramble"], path + ".bramble");
        for (std::size_t i = 0; i < bags.size(); ++i)
            for (int v : bags[i])
                if (v < 0 || v >= n)
                    bad(path + ".bramble[" + std::to_string(i) + "]",
                        "vertex " + std::to_string(v) + " out of range");
        doc.bramble = std::move(bags);
    }
    if (j.contains("terminals")) {
        const json& t = j["terminals"];
        const std::string tp = path + ".terminals";
        needObject(t, tp);
        onlyKeys(t, tp, {"sources", "sinks", "budget"});
        TerminalsBlock tb;
        tb.sources = asIntArray(field(t, "sources", tp), tp + ".sources");
        tb.sinks = asIntArray(field(t, "sinks", tp), tp + ".sinks");
        tb.budget = asInt(field(t, "budget", tp), tp + ".budget");
        if (tb.budget < 1) bad(tp + ".budget", "budget must be >= 1");
        for (int v : tb.sources)
            if (v < 0 || v >= n) bad(tp + ".sources", "vertex " + std::to_string(v) + " out of range");
        for (int v : tb.sinks)
            if (v < 0 || v >= n) bad(tp + ".sinks", "vertex " + std::to_string(v) + " out of range");
        doc.terminals = std::move(tb);
    }
    if (j.contains("vertexNames")) {
        const json& names = j["vertexNames"];
        const std::string np = path + ".vertexNames";
        if (!names.is_array()) bad(np, "expected an array");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < names.size(); ++i)
            out.push_back(asString(names[i], np + "[" + std::to_string(i) + "]"));
        if (out.size() != static_cast<std::size_t>(n))
            bad(np, "got " + std::to_string(out.size()) + " names for " + std::to_string(n) +
                        " vertices");
        doc.vertexNames = std::move(out);
    }
    return doc;
}

InstanceDocument loadInstanceFile(const std::string& path) { return parseInstance(slurp(path)); }

void saveInstanceFile(const std::string& path, const InstanceDocument& doc) {
    spill(path, serializeInstance(doc));
}

// --- certificate documents ---------------------------------------------------

std::string certificateKind(const CertificatePayload& payload) {
    struct Namer {
        std::string operator()(const BrambleCertificate&) const { return "bramble"; }
        std::string operator()(const PathSystemCertificate&) const { return "pathSystem"; }
        std::string operator()(const DdpSolutionCertificate&) const { return "ddpSolution"; }
        std::string operator()(const SeparatorEvidenceCertificate&) const { return "separator"; }
        std::string operator()(const RainbowSelectionCertificate&) const {
            return "rainbowSelection";
        }
        std::string operator()(const ParametersCertificate&) const { return "parameters"; }
    };
    return std::visit(Namer{}, payload);
}

namespace {

json pathsToJson(const std::vector<VertexPath>& paths) {
    json arr = json::array();
    for (const auto& p : paths) arr.push_back(p.vertices);
    return arr;
}

std::vector<VertexPath> pathsFromJson(const json& j, const std::string& path) {
    auto raw = asIntMatrix(j, path);
    std::vector<VertexPath> out;
    out.reserve(raw.size());
    for (auto& vs : raw) out.emplace_back(std::move(vs));
    return out;
}

json payloadToJson(const CertificatePayload& payload) {
    struct Writer {
        json operator()(const BrambleCertificate& c) const {
            json j;
            j["digraph"] = digraphToJson(c.d);
            j["bags"] = c.bags;
            return j;
        }
        json operator()(const PathSystemCertificate& c) const {
            json j;
            j["digraph"] = digraphToJson(c.d);
            json s;
            s["a"] = c.system.a;
            s["b"] = c.system.b;
            s["spinePaths"] = pathsToJson(c.system.spinePaths);
            s["inSets"] = c.system.inSets;
            s["outSets"] = c.system.outSets;
            json links = json::array();
            for (const auto& [key, lk] : c.system.linkages) {
                json l;
                l["from"] = key.first;
                l["to"] = key.second;
                l["sourceSet"] = lk.sourceSet;
                l["sinkSet"] = lk.sinkSet;
                l["paths"] = pathsToJson(lk.paths);
                links.push_back(l);
            }
            s["linkages"] = links;
            j["system"] = s;
            return j;
        }
        json operator()(const DdpSolutionCertificate& c) const {
            json j;
            j["digraph"] = digraphToJson(c.d);
            j["sources"] = c.sources;
            j["sinks"] = c.sinks;
            j["budget"] = c.budget;
            j["paths"] = c.paths;
            return j;
        }
        json operator()(const SeparatorEvidenceCertificate& c) const {
            json j;
            j["digraph"] = digraphToJson(c.d);
            j["sourceSet"] = c.sourceSet;
            j["sinkSet"] = c.sinkSet;
            j["paths"] = pathsToJson(c.certificate.paths);
            j["separator"] = c.certificate.separator;
            j["blockedSide"] = c.blockedSide;
            return j;
        }
        json operator()(const RainbowSelectionCertificate& c) const {
            json j;
            j["graph"] = ugraphToJson(c.graph);
            j["parts"] = c.parts;
            j["degeneracyBound"] = c.degeneracyBound;
            j["selection"] = c.selection;
            j["resamples"] = c.resamples;
            return j;
        }
        json operator()(const ParametersCertificate& c) const {
            const PipelineParameters& p = c.params;
            json j;
            j["k"] = p.k;
            j["alpha"] = p.alpha;
            j["eps"] = p.eps;
            j["cA"] = p.cA;
            j["cT"] = p.cT;
            j["logBase"] = p.logBase;
            j["precisionDigits"] = p.precisionDigits;
            j["a"] = p.a;
            j["d3"] = p.d3;
            j["d2"] = p.d2;
            j["d1"] = p.d1;
            j["b"] = p.b;
            j["x"] = p.x;
            j["d"] = p.d;
            j["chainSlack"] = p.chainSlack;
            j["chainOk"] = p.chainOk;
            return j;
        }
    };
    return std::visit(Writer{}, payload);
}

CertificatePayload payloadFromJson(const std::string& kind, const json& j,
                                   const std::string& path) {
    needObject(j, path);
    if (kind == "bramble") {
        onlyKeys(j, path, {"digraph", "bags"});
        BrambleCertificate c;
        c.d = digraphFromJson(field(j, "digraph", path), path + ".digraph");
        c.bags = asIntMatrix(field(j, "bags", path), path + ".bags");
        return c;
    }
    if (kind == "pathSystem") {
        onlyKeys(j, path, {"digraph", "system"});
        PathSystemCertificate c;
        c.d = digraphFromJson(field(j, "digraph", path), path + ".digraph");
        const json& s = field(j, "system", path);
        const std::string sp = path + ".system";
        needObject(s, sp);
        onlyKeys(s, sp, {"a", "b", "spinePaths", "inSets", "outSets", "linkages"});
        c.system.a = asInt(field(s, "a", sp), sp + ".a");
        c.system.b = asInt(field(s, "b", sp), sp + ".b");
        c.system.spinePaths = pathsFromJson(field(s, "spinePaths", sp), sp + ".spinePaths");
        c.system.inSets = asIntMatrix(field(s, "inSets", sp), sp + ".inSets");
        c.system.outSets = asIntMatrix(field(s, "outSets", sp), sp + ".outSets");
        const json& links = field(s, "linkages", sp);
        const std::string lp = sp + ".linkages";
        if (!links.is_array()) bad(lp, "expected an array");
        for (std::size_t i = 0; i < links.size(); ++i) {
            const json& l = links[i];
            const std::string at = lp + "[" + std::to_string(i) + "]";
            needObject(l, at);
            onlyKeys(l, at, {"from", "to", "sourceSet", "sinkSet", "paths"});
            int from = asInt(field(l, "from", at), at + ".from");
            int to = asInt(field(l, "to", at), at + ".to");
            Linkage lk;
            lk.sourceSet = asIntArray(field(l, "sourceSet", at), at + ".sourceSet");
            lk.sinkSet = asIntArray(field(l, "sinkSet", at), at + ".sinkSet");
            lk.paths = pathsFromJson(field(l, "paths", at), at + ".paths");
            if (!c.system.linkages.emplace(std::make_pair(from, to), std::move(lk)).second)
                bad(at, "duplicate linkage key");
        }
        return c;
    }
    if (kind == "ddpSolution") {
        onlyKeys(j, path, {"digraph", "sources", "sinks", "budget", "paths"});
        DdpSolutionCertificate c;
        c.d = digraphFromJson(field(j, "digraph", path), path + ".digraph");
        c.sources = asIntArray(field(j, "sources", path), path + ".sources");
        c.sinks = asIntArray(field(j, "sinks", path), path + ".sinks");
        c.budget = asInt(field(j, "budget", path), path + ".budget");
        c.paths = asIntMatrix(field(j, "paths", path), path + ".paths");
        return c;
    }
    if (kind == "separator") {
        onlyKeys(j, path, {"digraph", "sourceSet", "sinkSet", "paths", "separator", "blockedSide"});
        SeparatorEvidenceCertificate c;
        c.d = digraphFromJson(field(j, "digraph", path), path + ".digraph");
        c.sourceSet = asIntArray(field(j, "sourceSet", path), path + ".sourceSet");
        c.sinkSet = asIntArray(field(j, "sinkSet", path), path + ".sinkSet");
        c.certificate.paths = pathsFromJson(field(j, "paths", path), path + ".paths");
        c.certificate.separator = asIntArray(field(j, "separator", path), path + ".separator");
        c.blockedSide = asString(field(j, "blockedSide", path), path + ".blockedSide");
        if (c.blockedSide != "" && c.blockedSide != "source" && c.blockedSide != "sink")
            bad(path + ".blockedSide", "expected \"\", \"source\" or \"sink\"");
        return c;
    }
    if (kind == "rainbowSelection") {
        onlyKeys(j, path, {"graph", "parts", "degeneracyBound", "selection", "resamples"});
        RainbowSelectionCertificate c;
        c.graph = ugraphFromJson(field(j, "graph", path), path + ".graph");
        c.parts = asIntMatrix(field(j, "parts", path), path + ".parts");
        c.degeneracyBound = asDouble(field(j, "degeneracyBound", path), path + ".degeneracyBound");
        c.selection = asIntArray(field(j, "selection", path), path + ".selection");
        c.resamples = asLong(field(j, "resamples", path), path + ".resamples");
        return c;
    }
    if (kind == "parameters") {
        onlyKeys(j, path,
                 {"k", "alpha", "eps", "cA", "cT", "logBase", "precisionDigits", "a", "d3", "d2",
                  "d1", "b", "x", "d", "chainSlack", "chainOk"});
        ParametersCertificate c;
        PipelineParameters& p = c.params;
        p.k = asInt(field(j, "k", path), path + ".k");
        p.alpha = asDouble(field(j, "alpha", path), path + ".alpha");
        p.eps = asDouble(field(j, "eps", path), path + ".eps");
        p.cA = asDouble(field(j, "cA", path), path + ".cA");
        p.cT = asDouble(field(j, "cT", path), path + ".cT");
        p.logBase = asDouble(field(j, "logBase", path), path + ".logBase");
        long long digits = asLong(field(j, "precisionDigits", path), path + ".precisionDigits");
        if (digits < 0) bad(path + ".precisionDigits", "expected a nonnegative integer");
        p.precisionDigits = static_cast<unsigned>(digits);
        p.a = asString(field(j, "a", path), path + ".a");
        p.d3 = asString(field(j, "d3", path), path + ".d3");
        p.d2 = asString(field(j, "d2", path), path + ".d2");
        p.d1 = asString(field(j, "d1", path), path + ".d1");
        p.b = asString(field(j, "b", path), path + ".b");
        p.x = asString(field(j, "x", path), path + ".x");
        p.d = asString(field(j, "d", path), path + ".d");
        p.chainSlack = asString(field(j, "chainSlack", path), path + ".chainSlack");
        p.chainOk = asBool(field(j, "chainOk", path), path + ".chainOk");
        return c;
    }
    bad(path, "unknown certificate kind '" + kind + "'");
}

}  // namespace

std::string serializeCertificate(const CertificateDocument& doc) {
    json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["kind"] = doc.kind;
    j["payload"] = payloadToJson(doc.payload);
    json prov;
    prov["command"] = doc.provenance.command;
    if (doc.provenance.seed) prov["seed"] = *doc.provenance.seed;
    prov["toolVersion"] = doc.provenance.toolVersion;
    j["provenance"] = prov;
    j["verified"] = doc.verified;
    return dumpCanonical(j);
}

CertificateDocument parseCertificate(const std::string& text) {
    json j = parseText(text);
    const std::string path = "$";
    needObject(j, path);
    onlyKeys(j, path, {"schemaVersion", "kind", "payload", "provenance", "verified"});
    checkSchemaVersion(j, path);

    CertificateDocument doc;
    doc.kind = asString(field(j, "kind", path), path + ".kind");
    doc.payload = payloadFromJson(doc.kind, field(j, "payload", path), path + ".payload");

    const json& prov = field(j, "provenance", path);
    const std::string pp = path + ".provenance";
    needObject(prov, pp);
    onlyKeys(prov, pp, {"command", "seed", "toolVersion"});
    doc.provenance.command = asString(field(prov, "command", pp), pp + ".command");
    if (prov.contains("seed")) doc.provenance.seed = asU64(prov["seed"], pp + ".seed");
    doc.provenance.toolVersion = asString(field(prov, "toolVersion", pp), pp + ".toolVersion");

    doc.verified = asBool(field(j, "verified", path), path + ".verified");
    return doc;
}

CertificateDocument loadCertificateFile(const std::string& path) {
    return parseCertificate(slurp(path));
}

void saveCertificateFile(const std::string& path, const CertificateDocument& doc) {
    spill(path, serializeCertificate(doc));
}

// --- re-verification ---------------------------------------------------------

namespace {

VerifyOutcome outcome(bool ok, std::string message) {
    VerifyOutcome o;
    o.ok = ok;
    o.message = std::move(message);
    return o;
}

struct Reverifier {
    VerifyOutcome operator()(const BrambleCertificate& c) const {
        try {
            auto rep = verifyBramble(c.d, Bramble(c.bags));
            return outcome(rep.ok, rep.ok ? "bramble verifies" : rep.message);
        } catch (const InputError& e) {
            return outcome(false, e.what());
        }
    }
    VerifyOutcome operator()(const PathSystemCertificate& c) const {
        try {
            auto rep = verifyPathSystem(c.d, c.system);
            return outcome(rep.ok, rep.ok ? "path system verifies" : rep.message);
        } catch (const InputError& e) {
            return outcome(false, e.what());
        }
    }
    VerifyOutcome operator()(const DdpSolutionCertificate& c) const {
        try {
            DdpInstance inst;
            inst.d = c.d;
            inst.sources = c.sources;
            inst.sinks = c.sinks;
            inst.budget = c.budget;
            DdpSolution sol;
            for (const auto& p : c.paths) sol.paths.emplace_back(p);
            auto rep = verifySolution(inst, sol);
            return outcome(rep.ok, rep.ok ? "solution verifies" : rep.message);
        } catch (const InputError& e) {
            return outcome(false, e.what());
        }
    }
    VerifyOutcome operator()(const SeparatorEvidenceCertificate& c) const {
        if (c.blockedSide != "" && c.blockedSide != "source" && c.blockedSide != "sink")
            return outcome(false, "blockedSide must be \"\", \"source\" or \"sink\"");
        try {
            std::string why;
            bool ok = verifySeparatorCertificate(c.d, c.sourceSet, c.sinkSet, c.certificate, &why);
            return outcome(ok, ok ? "separator certificate verifies" : why);
        } catch (const InputError& e) {
            return outcome(false, e.what());
        }
    }
    VerifyOutcome operator()(const RainbowSelectionCertificate& c) const {
        PartitionedConflictGraph pcg;
        pcg.graph = c.graph;
        pcg.parts = c.parts;
        pcg.degeneracyBound = c.degeneracyBound;
        try {
            auto rep = validatePartitionedConflictGraph(pcg);
            if (!rep.ok) return outcome(false, rep.message);
        } catch (const InputError& e) {
            return outcome(false, e.what());
        }
        if (c.resamples < 0) return outcome(false, "resamples must be nonnegative");
        if (c.selection.size() != c.parts.size())
            return outcome(false, "selection must pick one vertex per part");
        for (std::size_t i = 0; i < c.parts.size(); ++i) {
            const auto& part = c.parts[i];
            if (std::find(part.begin(), part.end(), c.selection[i]) == part.end())
                return outcome(false, "selected vertex " + std::to_string(c.selection[i]) +
                                          " is not in part " + std::to_string(i));
        }
        for (std::size_t i = 0; i < c.selection.size(); ++i)
            for (std::size_t q = i + 1; q < c.selection.size(); ++q)
                if (c.graph.hasEdge(c.selection[i], c.selection[q]))
                    return outcome(false, "selection hits conflict edge {" +
                                              std::to_string(c.selection[i]) + "," +
                                              std::to_string(c.selection[q]) + "}");
        return outcome(true, "selection is an independent transversal");
    }
    VerifyOutcome operator()(const ParametersCertificate& c) const {
        const PipelineParameters& p = c.params;
        PipelineParameters q;
        try {
            q = detail::computeParametersAt(p.k, p.alpha, p.eps, p.cA, p.cT, p.logBase,
                                            p.precisionDigits);
        } catch (const InputError& e) {
            return outcome(false, std::string("recorded inputs no longer evaluate: ") + e.what());
        } catch (const GuardError& e) {
            return outcome(false, std::string("recorded inputs no longer evaluate: ") + e.what());
        }
        auto diff = [](const char* name, const std::string& got, const std::string& want) {
            return std::string("field ") + name + " does not re-derive: certificate has " + got +
                   ", evaluation gives " + want;
        };
        if (p.a != q.a) return outcome(false, diff("a", p.a, q.a));
        if (p.d3 != q.d3) return outcome(false, diff("d3", p.d3, q.d3));
        if (p.d2 != q.d2) return outcome(false, diff("d2", p.d2, q.d2));
        if (p.d1 != q.d1) return outcome(false, diff("d1", p.d1, q.d1));
        if (p.b != q.b) return outcome(false, diff("b", p.b, q.b));
        if (p.x != q.x) return outcome(false, diff("x", p.x, q.x));
        if (p.d != q.d) return outcome(false, diff("d", p.d, q.d));
        if (p.chainSlack != q.chainSlack)
            return outcome(false, diff("chainSlack", p.chainSlack, q.chainSlack));
        if (p.chainOk != q.chainOk) return outcome(false, "field chainOk does not re-derive");
        return outcome(true, "parameter chain re-derives exactly");
    }
};

}  // namespace

VerifyOutcome reverifyCertificate(const CertificateDocument& doc) {
    if (doc.kind != certificateKind(doc.payload))
        return outcome(false, "kind '" + doc.kind + "' does not match the payload");
    return std::visit(Reverifier{}, doc.payload);
}

// --- auxiliary documents ------------------------------------------------------

std::string serializePathFamilies(const PathFamiliesDocument& doc) {
    json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["families"] = doc.families;
    return dumpCanonical(j);
}

PathFamiliesDocument parsePathFamilies(const std::string& text) {
    json j = parseText(text);
    const std::string path = "$";
    needObject(j, path);
    onlyKeys(j, path, {"schemaVersion", "families"});
    checkSchemaVersion(j, path);
    const json& fams = field(j, "families", path);
    if (!fams.is_array()) bad(path + ".families", "expected an array");
    PathFamiliesDocument doc;
    for (std::size_t i = 0; i < fams.size(); ++i)
        doc.families.push_back(
            asIntMatrix(fams[i], path + ".families[" + std::to_string(i) + "]"));
    return doc;
}

std::string serializeConflictGraph(const ConflictGraphDocument& doc) {
    json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["graph"] = ugraphToJson(doc.pcg.graph);
    j["parts"] = doc.pcg.parts;
    j["degeneracyBound"] = doc.pcg.degeneracyBound;
    return dumpCanonical(j);
}

ConflictGraphDocument parseConflictGraph(const std::string& text) {
    json j = parseText(text);
    const std::string path = "$";
    needObject(j, path);
    onlyKeys(j, path, {"schemaVersion", "graph", "parts", "degeneracyBound"});
    checkSchemaVersion(j, path);
    ConflictGraphDocument doc;
    doc.pcg.graph = ugraphFromJson(field(j, "graph", path), path + ".graph");
    doc.pcg.parts = asIntMatrix(field(j, "parts", path), path + ".parts");
    doc.pcg.degeneracyBound =
        asDouble(field(j, "degeneracyBound", path), path + ".degeneracyBound");
    return doc;
}

std::string serializeCaseInput(const CaseInputDocument& doc) {
    json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["pairs"] = edgesToJson(doc.pairs);
    j["z"] = doc.z;
    j["h1"] = ugraphToJson(doc.h1);
    j["h2"] = ugraphToJson(doc.h2);
    return dumpCanonical(j);
}

CaseInputDocument parseCaseInput(const std::string& text) {
    json j = parseText(text);
    const std::string path = "$";
    needObject(j, path);
    onlyKeys(j, path, {"schemaVersion", "pairs", "z", "h1", "h2"});
    checkSchemaVersion(j, path);
    CaseInputDocument doc;
    doc.pairs = asPairArray(field(j, "pairs", path), path + ".pairs");
    doc.z = asIntArray(field(j, "z", path), path + ".z");
    doc.h1 = ugraphFromJson(field(j, "h1", path), path + ".h1");
    doc.h2 = ugraphFromJson(field(j, "h2", path), path + ".h2");
    return doc;
}

}  // namespace bramble
