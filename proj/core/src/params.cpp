#include "bramble/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "bigfloat.hpp"
#include "bramble/errors.hpp"
#include "bramble/lll.hpp"
#include "bramble/matching.hpp"
#include "params_internal.hpp"

namespace bramble {

double boundaryEps(double alpha) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InputError("alpha must be > 1");
    return std::nextafter((alpha - 1.0) / (alpha + 1.0), 0.0);
}

namespace detail {

namespace {

// a double argument denotes the decimal literal the caller wrote, so it
// enters the chain through its shortest round-trip decimal form: 1.001 is
// lifted to the decimal 1.001, not to its binary image (the exponent tower
// amplifies that 1e-16 gap into visible drift in the integer stages)
Big liftDecimal(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return Big(std::string(buf, res.ptr));
}

}  // namespace

PipelineParameters computeParametersAt(int k, double alpha, double eps, double cA, double cT,
                                       double logBase, unsigned digits) {
    if (k < 2) throw InputError("k must be >= 2");
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InputError("alpha must be > 1");
    if (!(eps > 0.0) || !(eps < 1.0)) throw InputError("eps must lie strictly in (0,1)");
    if (!(cA > 0.0) || !std::isfinite(cA)) throw InputError("cA must be > 0");
    if (!(cT > 0.0) || !std::isfinite(cT)) throw InputError("cT must be > 0");
    if (logBase != 0.0 && (!(logBase > 1.0) || !std::isfinite(logBase)))
        throw InputError("logBase must be 0 (natural log) or > 1");
    digits = std::max(digits, kMinPrecisionDigits);
    if (digits > kMaxPrecisionDigits)
        throw GuardError("precision overflow: " + std::to_string(digits) +
                         " digits exceed the supported ceiling");

    {
        // eligibility is decided exactly: doubles convert losslessly and the
        // expression needs well under 80 digits
        PrecisionGuard guard(80);
        Big av(alpha), ev(eps);
        if (!(av * (1 - ev) >= 1 + ev))
            throw InputError("alpha(1-eps) >= 1+eps fails for alpha=" + std::to_string(alpha) +
                             ", eps=" + std::to_string(eps));
    }

    PipelineParameters out;
    out.k = k;
    out.alpha = alpha;
    out.eps = eps;
    out.cA = cA;
    out.cT = cT;
    out.logBase = logBase;
    out.precisionDigits = digits;

    PrecisionGuard guard(digits);
    Big e = exp(Big(1));
    Big al = liftDecimal(alpha);
    Big lk = log(Big(k));
    if (logBase != 0.0) lk /= log(liftDecimal(logBase));
    BigInt a = ceilToInt(liftDecimal(cA) * k * k * sqrt(1 + lk));
    BigInt d3 = ceilToInt(liftDecimal(cT) * k * sqrt(lk));
    Big coeff = e * 4 * Big(a) * Big(a);
    BigInt d2 = ceilToInt(2560 * pow(coeff * Big(d3), al));
    BigInt d1 = ceilToInt(2560 * pow(coeff * Big(d2), al));
    BigInt b = ceilToInt(pow(coeff * Big(d1) * Big(d1), al));
    Big x = pow(coeff * Big(d1), al) + 1;
    Big dd = pow(Big(d1), al) / 2560;
    Big slack = Big(b) - (x * dd + (dd - 1));

    out.a = a.str();
    out.d3 = d3.str();
    out.d2 = d2.str();
    out.d1 = d1.str();
    out.b = b.str();
    out.x = fixedSixDigits(x);
    out.d = fixedSixDigits(dd);
    out.chainSlack = slack >= 0 ? fixedSixDigits(slack) : "-" + fixedSixDigits(-slack);
    out.chainOk = d1 > d2 && d2 > d3 && slack >= 0;
    return out;
}

namespace {

// decimal-digit magnitude of the largest chain value, from a double-log dry
// run; only used to pick the working precision
double estimateMagnitude(int k, double alpha, double cA, double cT, double logBase) {
    double lk = std::log(static_cast<double>(k));
    if (logBase != 0.0) lk /= std::log(logBase);
    double la = std::log10(std::max(1.0, cA * k * static_cast<double>(k) * std::sqrt(1.0 + lk)));
    double lcoeff = std::log10(4.0 * std::exp(1.0)) + 2.0 * la;
    double ld3 = std::log10(std::max(1.0, cT * k * std::sqrt(lk)));
    double l2560 = std::log10(2560.0);
    double ld2 = l2560 + alpha * (lcoeff + ld3);
    double ld1 = l2560 + alpha * (lcoeff + std::max(0.0, ld2));
    return alpha * (lcoeff + 2.0 * std::max(0.0, ld1));
}

}  // namespace

}  // namespace detail

PipelineParameters computeParameters(int k, double alpha, double eps, double cA, double cT,
                                     double logBase) {
    if (k < 2) throw InputError("k must be >= 2");
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InputError("alpha must be > 1");
    if (!(cA > 0.0) || !(cT > 0.0)) throw InputError("cA and cT must be > 0");
    if (logBase != 0.0 && (!(logBase > 1.0) || !std::isfinite(logBase)))
        throw InputError("logBase must be 0 (natural log) or > 1");
    double magnitude = detail::estimateMagnitude(k, alpha, cA, cT, logBase);
    if (!std::isfinite(magnitude) ||
        magnitude + 80.0 > static_cast<double>(detail::kMaxPrecisionDigits))
        throw GuardError("precision overflow: the chain for k=" + std::to_string(k) +
                         " needs more digits than the supported ceiling");
    unsigned digits = std::max(detail::envPrecisionDigits(),
                               static_cast<unsigned>(std::ceil(magnitude + 80.0)));
    auto out = detail::computeParametersAt(k, alpha, eps, cA, cT, logBase, digits);
    if (!out.chainOk)
        throw InternalError("parameter chain violated at k=" + std::to_string(k) +
                            ", alpha=" + std::to_string(alpha) + ": d1=" + out.d1 +
                            ", d2=" + out.d2 + ", d3=" + out.d3 + ", slack=" + out.chainSlack);
    return out;
}

std::pair<Ugraph, Ugraph> buildConflictGraphs(const std::vector<std::vector<VertexPath>>& families,
                                              long long d1, long long d2) {
    if (d2 < 0) throw InputError("degeneracy thresholds must be >= 0");
    if (d1 < d2) throw InputError("d1 must be >= d2 so the conflict graphs nest");
    int nf = static_cast<int>(families.size());
    Ugraph h1(nf), h2(nf);
    for (int p = 0; p < nf; ++p)
        for (int q = p + 1; q < nf; ++q) {
            std::vector<std::vector<VertexPath>> both{families[p], families[q]};
            int deg = degeneracy(buildIntersectionGraph(both).graph).degeneracy;
            if (deg > d1) h1.addEdge(p, q);
            if (deg > d2) h2.addEdge(p, q);
        }
    return {h1, h2};
}

CaseReport classifyCase(const std::vector<std::pair<int, int>>& pairLabels,
                        const std::vector<int>& z, const Ugraph& h1, const Ugraph& h2) {
    int n = static_cast<int>(pairLabels.size());
    if (h1.vertexCount() != n || h2.vertexCount() != n)
        throw InputError("conflict graphs must have exactly one vertex per pair label");
    std::vector<bool> inZ(n, false);
    for (int v : z) {
        if (v < 0 || v >= n) throw InputError("z index " + std::to_string(v) + " out of range");
        if (inZ[v]) throw InputError("duplicate z index " + std::to_string(v));
        inZ[v] = true;
    }

    CaseReport rep;
    rep.pairLabels = pairLabels;
    rep.z = z;

    Ugraph h1z(n);
    for (auto [u, v] : h1.edges())
        if (!inZ[u] && !inZ[v]) h1z.addEdge(u, v);
    rep.m1 = maximumMatching(h1z);
    std::vector<bool> inM1(n, false);
    for (auto [u, v] : rep.m1) inM1[u] = inM1[v] = true;

    Ugraph h2r(n);
    for (auto [u, v] : h2.edges()) {
        if (inM1[u] || inM1[v]) continue;
        if (inZ[u] && inZ[v]) continue;
        h2r.addEdge(u, v);
    }
    rep.m2 = maximumMatching(h2r);
    std::vector<bool> inM2(n, false);
    for (auto [u, v] : rep.m2) inM2[u] = inM2[v] = true;

    auto collect = [&](auto pred) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (pred(v)) out.push_back(v);
        return out;
    };
    std::vector<std::vector<int>> sets{
        collect([&](int v) { return !inM1[v] && !inZ[v]; }),
        collect([&](int v) { return inM1[v] || inM2[v] || inZ[v]; }),
        collect([&](int v) { return !inM2[v]; }),
    };
    for (int c = 0; c < 3; ++c) {
        if (10 * static_cast<long long>(sets[c].size()) >= 6 * static_cast<long long>(n)) {
            rep.verdict = c + 1;
            rep.witness = std::move(sets[c]);
            return rep;
        }
    }
    throw InternalError("no classification case reached the 60% threshold");
}

}  // namespace bramble
