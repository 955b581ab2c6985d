#pragma once
// Checkers for the lattice computations on the iterated double cover K3 X and
// its quotient X'. Each checker produces one report entry; run_all chains
// them in dependency order and never throws on a failed check.

#include "evenlat/curveconfig.hpp"
#include "evenlat/io.hpp"
#include "evenlat/reconstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace evenlat {

enum class Status { Pass, Fail, ReportOnly, Skipped };

std::string to_string(Status s);

struct ReportEntry {
    std::string id;
    std::string title;
    Status status = Status::Pass;
    io::Json witnesses = io::Json::object(); ///< computed values
    io::Json expected = io::Json::object();  ///< reference values
    std::vector<std::string> notes;
    std::string mismatch;                    ///< first failing coordinate or reason
};

struct VerificationReport {
    int tier = 0;
    io::Json census = io::Json::object();
    std::vector<ReportEntry> entries;
    bool guard_exceeded = false; ///< some checker (returned or not) hit the order guard

    /// No entry failed or was skipped.
    bool ok() const;
    const ReportEntry* find(const std::string& id) const;
};

struct VerifyInputs {
    /// Reference Q Gram; replaced to inject faults.
    IntMat q_gram;
    /// 0: escalate as needed, 1 or 2: run only up to that tier.
    int tier_policy = 0;
    /// Use this 24-curve configuration instead of reconstructing one.
    std::optional<CurveConfig> x24;
    VerifyInputs();
};

/// Ids in run order.
const std::vector<std::string>& result_ids();

/// Runs every checker. `only`, when nonempty, restricts the returned
/// entries (prerequisites still run).
VerificationReport run_all(const VerifyInputs& in = {}, const std::vector<std::string>& only = {});

io::Json report_json(const VerificationReport& r);
std::string report_markdown(const VerificationReport& r);

// Individual checkers. Configuration-dependent ones take the 24-curve
// configuration explicitly so the census can run them per solution.

/// Census entry; `selected` receives the solution downstream checkers use.
ReportEntry check_reconstruction(const VerifyInputs& in, int& tier, io::Json& census,
                                 std::optional<CurveConfig>& selected);
/// Gram of the Q basis vectors inside a 24-curve configuration.
IntMat q_gram_of(const CurveConfig& x24);
bool q_orthogonal_to_s(const CurveConfig& x24);
ReportEntry check_q_lattice(const CurveConfig& x24, const IntMat& q_expected);
ReportEntry check_q_discriminant(const IntMat& q_gram);
ReportEntry check_q_isotropic(const IntMat& q_gram);
ReportEntry check_ns_certificates(const CurveConfig& x24);
ReportEntry check_tx_candidate(const IntMat& q_gram);
ReportEntry check_mobius();
ReportEntry check_km_embedding();
ReportEntry check_z23_obstruction();
ReportEntry check_xprime_lattice(const CurveConfig& x24);
ReportEntry check_xprime_embedding();
ReportEntry check_geometric_claims();

} // namespace evenlat
