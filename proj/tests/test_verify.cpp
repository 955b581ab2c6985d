#include <doctest.h>

#include "evenlat/refdata.hpp"
#include "evenlat/verify.hpp"

#include "support.hpp"

using namespace evenlat;

namespace {

const VerificationReport& full()
{
    static VerificationReport r = run_all();
    return r;
}

} // namespace

TEST_CASE("full run passes with only report-only extras")
{
    const auto& r = full();
    CHECK(r.ok());
    CHECK(r.tier == 2);
    CHECK(r.entries.size() == result_ids().size());
    for (const auto& e : r.entries) {
        INFO(e.id << ": " << e.mismatch);
        if (e.id == "reconstruction" || e.id == "geometric_claims")
            CHECK(e.status == Status::ReportOnly);
        else
            CHECK(e.status == Status::Pass);
    }
    CHECK(r.census["tier2_count"] == 2);
    CHECK(r.census["validated"] == 1);
}

TEST_CASE("entries appear in dependency order")
{
    const auto& r = full();
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        CHECK(r.entries[i].id == result_ids()[i]);
}

namespace {

// Discriminant form tables: q on the diagonal lives in Q/2Z, b in Q/Z.
bool same_form(const io::Json& a, const io::Json& b)
{
    RatMat x = io::rat_matrix_from_json(a), y = io::rat_matrix_from_json(b);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (mod_into(x(i, j) - y(i, j), i == j ? 2 : 1) != 0)
                return false;
    return true;
}

} // namespace

TEST_CASE("witnesses equal the reference values")
{
    const auto& r = full();
    for (const auto& e : r.entries) {
        if (e.status != Status::Pass)
            continue;
        for (const auto& [k, v] : e.expected.items())
            if (e.witnesses.contains(k)) {
                INFO(e.id << "." << k);
                if (k == "block_form")
                    CHECK(same_form(e.witnesses[k], v));
                else
                    CHECK(e.witnesses[k] == v);
            }
    }
    const ReportEntry* q = r.find("q_isotropic");
    REQUIRE(q);
    CHECK(q->witnesses["pairing_table"][0][0] == -5);
    CHECK(q->witnesses["pairing_table"][2][3] == "-5/4");
}

TEST_CASE("restricting the result set keeps prerequisites")
{
    VerificationReport r = run_all({}, {"tx_candidate"});
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].id == "tx_candidate");
    CHECK(r.entries[0].status == Status::Pass);
}

TEST_CASE("fault in Q Gram entry (1,5) is located")
{
    VerifyInputs in;
    in.q_gram(0, 4) = 3;
    in.q_gram(4, 0) = 3;
    VerificationReport r = run_all(in);
    CHECK(!r.ok());
    const ReportEntry* e = r.find("q_lattice");
    REQUIRE(e);
    CHECK(e->status == Status::Fail);
    CHECK(e->mismatch.find("(1,5)") != std::string::npos);
    // downstream checks do not run on a failed prerequisite
    CHECK(r.find("q_discriminant")->status == Status::Skipped);
}

TEST_CASE("tier 1 policy reports tier 1 and cannot validate")
{
    VerifyInputs in;
    in.tier_policy = 1;
    VerificationReport r = run_all(in, {"reconstruction", "q_lattice"});
    CHECK(r.tier == 1);
    CHECK(!r.ok());
}

TEST_CASE("supplied configuration with a broken curve relation fails")
{
    VerifyInputs in;
    for (const auto& s : reconstruct_24().solutions)
        if (!q_orthogonal_to_s(s))
            in.x24 = s;
    REQUIRE(in.x24);
    VerificationReport r = run_all(in);
    CHECK(r.find("reconstruction")->status == Status::Fail);
    CHECK(!r.ok());
}

TEST_CASE("property: any single-entry fault in the Q Gram fails some entry")
{
    const IntMat ref_q = ref::q_gram();
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(16000 + t);
        std::size_t i = evt::uniform(0, 5), j = evt::uniform(0, 5);
        long delta = evt::uniform(-3, 3);
        if (delta == 0)
            continue;
        VerifyInputs in;
        in.q_gram(i, j) += delta;
        if (evt::uniform(0, 1))
            in.q_gram(j, i) = in.q_gram(i, j); // keep it symmetric half the time
        INFO("case " << t << " entry (" << i + 1 << "," << j + 1 << ") += " << delta);
        VerificationReport r = run_all(in, {"q_lattice", "q_discriminant", "q_isotropic", "tx_candidate"});
        bool failed = false;
        for (const auto& e : r.entries)
            failed = failed || e.status == Status::Fail;
        CHECK(failed);
        ++checked;
    }
}

TEST_CASE("reports serialize")
{
    const auto& r = full();
    io::Json j = report_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["entries"].size() == r.entries.size());
    std::string md = report_markdown(r);
    CHECK(md.find("# Verification report") == 0);
    CHECK(md.find("| q_isotropic | pass |") != std::string::npos);
    // deterministic
    CHECK(report_json(run_all()).dump() == j.dump());
}
