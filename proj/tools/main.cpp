// bramble: command-line surface over the core library. Every subcommand is a
// thin shell over exactly one library operation, reading and writing the
// canonical document formats.
//
// Exit codes: 0 verified success, 1 certified negative (failed verification,
// infeasibility, separator evidence), 2 input error, 3 cap or guard exceeded,
// 4 internal invariant failure (a library bug).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bramble/certificates.hpp"
#include "bramble/ddp.hpp"
#include "bramble/digraph.hpp"
#include "bramble/documents.hpp"
#include "bramble/dot.hpp"
#include "bramble/errors.hpp"
#include "bramble/generators.hpp"
#include "bramble/lll.hpp"
#include "bramble/menger.hpp"
#include "bramble/params.hpp"
#include "bramble/reduction.hpp"
#include "bramble/ugraph.hpp"
#include "bramble/version.hpp"

using namespace bramble;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

Bramble requireBramble(const InstanceDocument& doc) {
    if (!doc.bramble) throw InputError("instance has no bramble block");
    return Bramble(*doc.bramble);
}

const TerminalsBlock& requireTerminals(const InstanceDocument& doc) {
    if (!doc.terminals) throw InputError("instance has no terminals block");
    return *doc.terminals;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot open '" + path + "' for writing");
    out << text;
}

void emitCertificate(const std::string& path, CertificatePayload payload,
                     const std::string& command, std::optional<std::uint64_t> seed,
                     bool verified) {
    if (path.empty()) return;
    CertificateDocument doc;
    doc.kind = certificateKind(payload);
    doc.payload = std::move(payload);
    doc.provenance.command = command;
    doc.provenance.seed = seed;
    doc.provenance.toolVersion = kToolVersion;
    doc.verified = verified;
    saveCertificateFile(path, doc);
    std::cout << "wrote " << doc.kind << " certificate to " << path << "\n";
}

std::string joinInts(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed-bramble toolkit: obstructions, congestion reduction, routing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string input, output;
    std::uint64_t seed = 0;
    long long cap = 50'000'000;
    int k = 2, c = 1, n = 0, bagCount = 0, r = 2;
    long long t = 1;
    double alpha = 1.66, eps = 0.248, cA = 1.0, cT = 1.0, logBase = 0.0, p = 0.3, b = 0.0;
    bool skipChecks = false;
    std::string kind = "complete";

    int exitCode = kExitVerified;

    auto* verifyBrambleCmd = app.add_subcommand("verify-bramble", "check the bramble property");
    verifyBrambleCmd->add_option("--input", input, "instance document")->required();
    verifyBrambleCmd->add_option("--output", output, "write a bramble certificate here");
    verifyBrambleCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        Bramble bags = requireBramble(doc);
        auto rep = verifyBramble(doc.digraph, bags);
        if (!rep.ok) {
            std::cout << "not a bramble: " << rep.message << " (bags " << rep.bagA << ", "
                      << rep.bagB << ")\n";
            exitCode = kExitNegative;
            return;
        }
        std::cout << "bramble verifies: " << bags.size() << " bags, congestion "
                  << congestion(bags) << "\n";
        BrambleCertificate cert;
        cert.d = doc.digraph;
        cert.bags = bags.bags();
        emitCertificate(output, cert, "verify-bramble", std::nullopt, true);
    });

    auto* orderCmd = app.add_subcommand("order", "exact bramble order (minimum hitting set)");
    orderCmd->add_option("--input", input, "instance document")->required();
    orderCmd->add_option("--cap", cap, "largest hitting-set size to try")->default_val(20);
    orderCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        Bramble bags = requireBramble(doc);
        auto res = brambleOrderExact(doc.digraph, bags, static_cast<int>(cap));
        if (res.capExceeded) {
            std::cout << "no hitting set of size <= " << cap << "\n";
            exitCode = kExitCap;
            return;
        }
        std::cout << "order " << res.order << ", hitting set: " << joinInts(res.hittingSet)
                  << "\n";
    });

    auto* pathSysCmd = app.add_subcommand("build-path-system", "grow a (k,k)-path system");
    pathSysCmd->add_option("--input", input, "instance document")->required();
    pathSysCmd->add_option("--k", k, "system parameter")->required();
    pathSysCmd->add_flag("--skip-precondition-checks", skipChecks,
                         "waive the 2k^2-strongness check");
    pathSysCmd->add_option("--output", output, "write a pathSystem certificate here");
    pathSysCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        BuildPathSystemOptions opts;
        opts.skipPreconditionChecks = skipChecks;
        auto ps = buildPathSystem(doc.digraph, k, opts);
        std::cout << "(" << ps.a << "," << ps.b << ")-path system: " << ps.spinePaths.size()
                  << " spine paths, " << ps.linkages.size() << " linkages\n";
        PathSystemCertificate cert;
        cert.d = doc.digraph;
        cert.system = ps;
        emitCertificate(output, cert, "build-path-system", std::nullopt, true);
    });

    auto* reduceCmd = app.add_subcommand("reduce-congestion",
                                         "rebuild the instance with bag congestion <= 2");
    reduceCmd->add_option("--input", input, "instance document")->required();
    reduceCmd->add_option("--output", output, "write the reduced instance here");
    reduceCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        Bramble bags = requireBramble(doc);
        const auto& tb = requireTerminals(doc);
        auto red = buildReducedInstance(doc.digraph, bags, tb.sources, tb.sinks);
        std::cout << "reduced: " << red.dPrime.vertexCount() << " vertices ("
                  << doc.digraph.vertexCount() << " original), " << red.copyClasses.size()
                  << " copy classes, congestion " << congestion(red.bagsPrime) << "\n";
        if (!output.empty()) {
            InstanceDocument out;
            out.digraph = red.dPrime;
            out.bramble = red.bagsPrime.bags();
            TerminalsBlock tbOut;
            tbOut.sources = red.sourcesPrime;
            tbOut.sinks = red.sinksPrime;
            tbOut.budget = 2;
            out.terminals = tbOut;
            saveInstanceFile(output, out);
            std::cout << "wrote reduced instance to " << output << "\n";
        }
    });

    auto* routeCmd = app.add_subcommand("route", "congestion-bounded routing through a bramble");
    routeCmd->add_option("--input", input, "instance document")->required();
    routeCmd->add_option("--c", c, "declared bramble congestion")->required();
    routeCmd->add_option("--cap", cap, "search node cap");
    routeCmd->add_flag("--skip-precondition-checks", skipChecks,
                       "waive size, bramble and k-strongness checks");
    routeCmd->add_option("--output", output, "write a ddpSolution certificate here");
    routeCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        Bramble bags = requireBramble(doc);
        const auto& tb = requireTerminals(doc);
        RouteOptions opts;
        opts.nodeCap = cap;
        opts.skipKStrongCheck = opts.skipBrambleCheck = opts.skipSizeCheck = skipChecks;
        auto res = routeViaBramble(doc.digraph, bags, tb.sources, tb.sinks, c, opts);
        if (res.status == RouteStatus::CapExceeded) {
            std::cout << "node cap exceeded after " << res.nodesExpanded << " nodes\n";
            exitCode = kExitCap;
            return;
        }
        if (res.status == RouteStatus::Infeasible) {
            std::cout << "infeasible on the reduced instance";
            if (res.evidence && !res.evidence->linked && res.evidence->evidence) {
                const char* side =
                    res.evidence->side == DichotomySide::SourceSide ? "source" : "sink";
                std::cout << "; " << side << " side blocked by separator {"
                          << joinInts(res.evidence->evidence->separator) << "}";
            } else {
                std::cout << "; terminals and bramble are linked (deep obstruction)";
            }
            std::cout << "\n";
            exitCode = kExitNegative;
            return;
        }
        std::cout << "routed " << res.solution.paths.size() << " pairs, per-vertex load <= "
                  << res.loadBound << ", " << res.nodesExpanded << " nodes\n";
        DdpSolutionCertificate cert;
        cert.d = doc.digraph;
        cert.sources = tb.sources;
        cert.sinks = tb.sinks;
        cert.budget = res.loadBound;
        for (const auto& path : res.solution.paths) cert.paths.push_back(path.vertices);
        emitCertificate(output, cert, "route", std::nullopt, true);
    });

    auto* solveCmd = app.add_subcommand("solve-ddp", "exact disjoint-path search");
    solveCmd->add_option("--input", input, "instance document with terminals")->required();
    solveCmd->add_option("--cap", cap, "search node cap");
    solveCmd->add_option("--output", output, "write a ddpSolution certificate here");
    solveCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        const auto& tb = requireTerminals(doc);
        DdpInstance inst;
        inst.d = doc.digraph;
        inst.sources = tb.sources;
        inst.sinks = tb.sinks;
        inst.budget = tb.budget;
        auto res = solveExact(inst, cap);
        if (res.status == SolveStatus::CapExceeded) {
            std::cout << "node cap exceeded after " << res.nodesExpanded << " nodes\n";
            exitCode = kExitCap;
            return;
        }
        if (res.status == SolveStatus::Infeasible) {
            std::cout << "infeasible at budget " << tb.budget << " (" << res.nodesExpanded
                      << " nodes)\n";
            exitCode = kExitNegative;
            return;
        }
        std::cout << "solved " << res.solution.paths.size() << " pairs at budget " << tb.budget
                  << " (" << res.nodesExpanded << " nodes)\n";
        DdpSolutionCertificate cert;
        cert.d = doc.digraph;
        cert.sources = tb.sources;
        cert.sinks = tb.sinks;
        cert.budget = tb.budget;
        for (const auto& path : res.solution.paths) cert.paths.push_back(path.vertices);
        emitCertificate(output, cert, "solve-ddp", std::nullopt, true);
    });

    auto* dichotomyCmd =
        app.add_subcommand("dichotomy", "Menger dichotomy between terminals and bramble");
    dichotomyCmd->add_option("--input", input, "instance document")->required();
    dichotomyCmd->add_option("--k", k, "required linkage size")->required();
    dichotomyCmd->add_option("--output", output, "write a separator certificate here");
    dichotomyCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        Bramble bags = requireBramble(doc);
        const auto& tb = requireTerminals(doc);
        auto res = dichotomyCheck(doc.digraph, bags, tb.sources, tb.sinks, k);
        if (res.linked) {
            std::cout << "linked: >= " << k << " disjoint paths on both sides of the bag union\n";
            return;
        }
        const char* side = res.side == DichotomySide::SourceSide ? "source" : "sink";
        std::cout << side << " side blocked: separator {" << joinInts(res.evidence->separator)
                  << "} of size " << res.evidence->separator.size() << " < " << k << "\n";
        SeparatorEvidenceCertificate cert;
        cert.d = doc.digraph;
        if (res.side == DichotomySide::SourceSide) {
            cert.sourceSet = tb.sources;
            cert.sinkSet = res.bagUnion;
        } else {
            cert.sourceSet = res.bagUnion;
            cert.sinkSet = tb.sinks;
        }
        cert.certificate = *res.evidence;
        cert.blockedSide = side;
        emitCertificate(output, cert, "dichotomy", std::nullopt, true);
        exitCode = kExitNegative;
    });

    auto* degenCmd = app.add_subcommand("degeneracy", "degeneracy and elimination order");
    degenCmd->add_option("--input", input, "conflict-graph document")->required();
    degenCmd->callback([&] {
        auto doc = parseConflictGraph(readFile(input));
        auto res = degeneracy(doc.pcg.graph);
        std::cout << "degeneracy " << res.degeneracy << ", elimination order: "
                  << joinInts(res.order) << "\n";
    });

    auto* intersectCmd =
        app.add_subcommand("intersect", "intersection graph of path families");
    intersectCmd->add_option("--input", input, "path-families document")->required();
    intersectCmd->add_option("--output", output, "write a conflict-graph document here");
    intersectCmd->callback([&] {
        auto fams = parsePathFamilies(readFile(input));
        std::vector<std::vector<VertexPath>> families;
        for (const auto& f : fams.families) {
            families.emplace_back();
            for (const auto& path : f) families.back().emplace_back(path);
        }
        auto ig = buildIntersectionGraph(families);
        std::cout << "intersection graph: " << ig.graph.vertexCount() << " members, "
                  << ig.graph.edgeCount() << " conflicts, degeneracy "
                  << degeneracy(ig.graph).degeneracy << "\n";
        if (!output.empty()) {
            ConflictGraphDocument out;
            out.pcg.graph = ig.graph;
            out.pcg.parts.resize(families.size());
            for (std::size_t v = 0; v < ig.members.size(); ++v)
                out.pcg.parts[ig.members[v].first].push_back(static_cast<int>(v));
            out.pcg.degeneracyBound = degeneracy(ig.graph).degeneracy;
            writeFile(output, serializeConflictGraph(out));
            std::cout << "wrote conflict graph to " << output << "\n";
        }
    });

    auto* risCmd = app.add_subcommand("lll-ris", "seeded rainbow independent set resampler");
    risCmd->add_option("--input", input, "conflict-graph document")->required();
    risCmd->add_option("--seed", seed, "resampler seed")->default_val(0);
    risCmd->add_option("--cap", cap, "resample cap")->default_val(100000);
    risCmd->add_option("--eps", eps, "epsilon for the poly-LLL condition")->default_val(0.2);
    risCmd->add_flag("--skip-precondition-checks", skipChecks, "skip the condition check");
    risCmd->add_option("--output", output, "write a rainbowSelection certificate here");
    risCmd->callback([&] {
        auto doc = parseConflictGraph(readFile(input));
        RisOptions opts;
        opts.checkCondition = !skipChecks;
        opts.eps = eps;
        auto res = rainbowIndependentSet(doc.pcg, seed, cap, opts);
        if (res.status == RisStatus::CapExceeded) {
            std::cout << "resample cap " << cap << " exceeded\n";
            exitCode = kExitCap;
            return;
        }
        std::cout << "independent transversal after " << res.resamples << " resamples: "
                  << joinInts(res.selection) << "\n";
        RainbowSelectionCertificate cert;
        cert.graph = doc.pcg.graph;
        cert.parts = doc.pcg.parts;
        cert.degeneracyBound = doc.pcg.degeneracyBound;
        cert.selection = res.selection;
        cert.resamples = res.resamples;
        emitCertificate(output, cert, "lll-ris", seed, true);
    });

    auto* lllCheckCmd = app.add_subcommand("lll-check", "poly-LLL condition test");
    lllCheckCmd->add_option("--t", t, "part size")->required();
    lllCheckCmd->add_option("--b", b, "pairwise degeneracy bound")->required();
    lllCheckCmd->add_option("--r", r, "part count")->required();
    lllCheckCmd->add_option("--eps", eps, "epsilon")->required();
    lllCheckCmd->callback([&] {
        auto res = checkPolyLllCondition(t, b, r, eps);
        std::cout << (res.pass ? "pass" : "fail") << ": slack ratio " << res.slackDecimal
                  << "; classical threshold " << classicalLllThreshold(b, r) << "\n";
        if (!res.pass) exitCode = kExitNegative;
    });

    auto* paramsCmd = app.add_subcommand("params", "evaluate the pipeline parameter chain");
    paramsCmd->add_option("--k", k, "pipeline k")->required();
    paramsCmd->add_option("--alpha", alpha, "exponent alpha")->required();
    paramsCmd->add_option("--eps", eps, "epsilon")->required();
    paramsCmd->add_option("--cA", cA, "lemma constant stand-in for a");
    paramsCmd->add_option("--cT", cT, "lemma constant stand-in for d3");
    paramsCmd->add_option("--log-base", logBase, "log base, 0 = natural");
    paramsCmd->add_option("--output", output, "write a parameters certificate here");
    paramsCmd->callback([&] {
        auto res = computeParameters(k, alpha, eps, cA, cT, logBase);
        std::cout << "a=" << res.a << " d3=" << res.d3 << " d2=" << res.d2 << " d1=" << res.d1
                  << "\nb=" << res.b << "\nx=" << res.x << " d=" << res.d
                  << "\nchain slack " << res.chainSlack << " at " << res.precisionDigits
                  << " digits, chainOk=" << (res.chainOk ? "true" : "false") << "\n";
        ParametersCertificate cert;
        cert.params = res;
        emitCertificate(output, cert, "params", std::nullopt, true);
    });

    auto* classifyCmd = app.add_subcommand("classify-case", "three-case matching classifier");
    classifyCmd->add_option("--input", input, "case-input document")->required();
    classifyCmd->callback([&] {
        auto doc = parseCaseInput(readFile(input));
        auto rep = classifyCase(doc.pairs, doc.z, doc.h1, doc.h2);
        std::cout << "case " << rep.verdict << " holds with " << rep.witness.size() << "/"
                  << doc.pairs.size() << " members (|M1|=" << rep.m1.size()
                  << ", |M2|=" << rep.m2.size() << ")\n";
    });

    auto* genCmd = app.add_subcommand("gen", "instance generators");
    genCmd->add_option("--kind", kind, "complete | random | planted")
        ->check(CLI::IsMember({"complete", "random", "planted"}));
    genCmd->add_option("--n", n, "vertex count (complete, random)");
    genCmd->add_option("--p", p, "edge probability (random)");
    genCmd->add_option("--k", k, "terminal pairs (planted)");
    genCmd->add_option("--c", c, "target congestion (planted)");
    genCmd->add_option("--bags", bagCount, "bag count (planted)");
    genCmd->add_option("--seed", seed, "generator seed")->default_val(0);
    genCmd->add_option("--output", output, "write the instance here")->required();
    genCmd->callback([&] {
        InstanceDocument doc;
        if (kind == "complete") {
            doc.digraph = genComplete(n);
        } else if (kind == "random") {
            doc.digraph = genRandomDigraph(n, p, seed);
        } else {
            doc = genPlantedBrambleInstance(k, c, bagCount, seed);
        }
        saveInstanceFile(output, doc);
        std::cout << "wrote " << kind << " instance (" << doc.digraph.vertexCount()
                  << " vertices, " << doc.digraph.edgeCount() << " arcs) to " << output << "\n";
    });

    auto* dotCmd = app.add_subcommand("export-dot", "Graphviz rendering of an instance");
    dotCmd->add_option("--input", input, "instance document")->required();
    dotCmd->add_option("--output", output, "write the .dot file here");
    dotCmd->callback([&] {
        auto doc = loadInstanceFile(input);
        std::string dot = exportDot(doc);
        if (output.empty()) {
            std::cout << dot;
        } else {
            writeFile(output, dot);
            std::cout << "wrote DOT to " << output << "\n";
        }
    });

    auto* verifyCertCmd =
        app.add_subcommand("verify-cert", "re-verify a certificate document from disk");
    verifyCertCmd->add_option("--input", input, "certificate document")->required();
    verifyCertCmd->callback([&] {
        auto doc = loadCertificateFile(input);
        auto outcome = reverifyCertificate(doc);
        std::cout << doc.kind << ": " << (outcome.ok ? "verified" : "REJECTED") << " ("
                  << outcome.message << ")\n";
        if (!outcome.ok) exitCode = kExitNegative;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const DocumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GuardError& e) {
        std::cerr << "guard tripped: " << e.what() << "\n";
        return kExitCap;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant failed: " << e.what() << "\n";
        return kExitInternal;
    }
    return exitCode;
}
