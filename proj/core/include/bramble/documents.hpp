#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bramble/certificates.hpp"
#include "bramble/ddp.hpp"
#include "bramble/errors.hpp"
#include "bramble/lll.hpp"
#include "bramble/menger.hpp"
#include "bramble/params.hpp"

namespace bramble {

/// A document failed to parse or violated its schema. The message carries the
/// JSON location (byte offset or field path) of the problem.
class DocumentError : public InputError {
public:
    explicit DocumentError(const std::string& what) : InputError(what) {}
};

inline constexpr int kSchemaVersion = 1;

struct TerminalsBlock {
    std::vector<int> sources;
    std::vector<int> sinks;
    int budget = 1;

    bool operator==(const TerminalsBlock&) const = default;
};

/// Portable instance container: a digraph plus optional bag family, terminal
/// block, and display names. Serialization is canonical (fixed field order,
/// two-space indent, trailing newline) so equal documents have equal bytes.
struct InstanceDocument {
    int schemaVersion = kSchemaVersion;
    Digraph digraph;
    std::optional<std::vector<std::vector<int>>> bramble;
    std::optional<TerminalsBlock> terminals;
    std::optional<std::vector<std::string>> vertexNames;

    bool operator==(const InstanceDocument& other) const;
};

std::string serializeInstance(const InstanceDocument& doc);
InstanceDocument parseInstance(const std::string& text);
InstanceDocument loadInstanceFile(const std::string& path);
void saveInstanceFile(const std::string& path, const InstanceDocument& doc);

// --- certificate payloads -------------------------------------------------

struct BrambleCertificate {
    Digraph d;
    std::vector<std::vector<int>> bags;
};

struct PathSystemCertificate {
    Digraph d;
    PathSystem system;
};

struct DdpSolutionCertificate {
    Digraph d;
    std::vector<int> sources, sinks;
    int budget = 1;
    std::vector<std::vector<int>> paths;
};

struct SeparatorEvidenceCertificate {
    Digraph d;
    std::vector<int> sourceSet, sinkSet;
    SeparatorCertificate certificate;
    std::string blockedSide;  // "", "source" or "sink"
};

struct RainbowSelectionCertificate {
    Ugraph graph;
    std::vector<std::vector<int>> parts;
    double degeneracyBound = 0.0;
    std::vector<int> selection;
    long long resamples = 0;
};

struct ParametersCertificate {
    PipelineParameters params;
};

using CertificatePayload =
    std::variant<BrambleCertificate, PathSystemCertificate, DdpSolutionCertificate,
                 SeparatorEvidenceCertificate, RainbowSelectionCertificate, ParametersCertificate>;

struct Provenance {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::string toolVersion;
};

/// Self-contained, re-verifiable result document. `kind` is one of: bramble,
/// pathSystem, ddpSolution, separator, rainbowSelection, parameters; it is
/// derived from the payload alternative. verified is set true only when the
/// matching verifier passed at emit time.
struct CertificateDocument {
    int schemaVersion = kSchemaVersion;
    std::string kind;
    CertificatePayload payload;
    Provenance provenance;
    bool verified = false;
};

/// kind string for a payload alternative.
std::string certificateKind(const CertificatePayload& payload);

std::string serializeCertificate(const CertificateDocument& doc);
CertificateDocument parseCertificate(const std::string& text);
CertificateDocument loadCertificateFile(const std::string& path);
void saveCertificateFile(const std::string& path, const CertificateDocument& doc);

struct VerifyOutcome {
    bool ok = false;
    std::string message;
};

/// Re-runs the verifier matching the certificate kind on the payload alone
/// (certificates are self-contained). parameters certificates are re-derived
/// from their recorded inputs and compared field by field.
VerifyOutcome reverifyCertificate(const CertificateDocument& doc);

// --- auxiliary input documents for the CLI ---------------------------------

/// Families of paths over an implicit host vertex universe, input to
/// intersection-graph construction.
struct PathFamiliesDocument {
    int schemaVersion = kSchemaVersion;
    std::vector<std::vector<std::vector<int>>> families;
};

std::string serializePathFamilies(const PathFamiliesDocument& doc);
PathFamiliesDocument parsePathFamilies(const std::string& text);

/// Partitioned conflict graph input for the resampler.
struct ConflictGraphDocument {
    int schemaVersion = kSchemaVersion;
    PartitionedConflictGraph pcg;
};

std::string serializeConflictGraph(const ConflictGraphDocument& doc);
ConflictGraphDocument parseConflictGraph(const std::string& text);

/// Input to the three-case classifier: pair labels, Z indices and the two
/// conflict graphs on |pairs| vertices.
struct CaseInputDocument {
    int schemaVersion = kSchemaVersion;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> z;
    Ugraph h1, h2;
};

std::string serializeCaseInput(const CaseInputDocument& doc);
CaseInputDocument parseCaseInput(const std::string& text);

}  // namespace bramble
