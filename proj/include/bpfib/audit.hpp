#pragma once

/**
 * @file audit.hpp
 * @brief Grid sweeps that check every closed form and identity against the
 *        brute-force oracles, plus the errata findings for statements that
 *        only hold after a sign or transpose fix.
 *
 * Status meanings:
 *   PASS                  – the statement held at every checked point
 *   FAIL                  – it did not, and no documented fix applies
 *   PASS-WITH-CORRECTION  – the statement as usually printed fails, the
 *                           corrected one holds everywhere; counterexamples
 *                           show the printed version failing
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpfib/json_io.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/sequences.hpp"

namespace bpfib::audit {

struct ParamGrid {
    std::vector<Rational> a_values;
    std::vector<Rational> b_values;
    std::int64_t n_max = 40;
    std::int64_t m_max = 25;
    std::vector<Rational> x_values;

    /// a, b ∈ {1, 2, 3, 1/2, −1}, n_max 40, m_max 25, x ∈ {1, 2}.
    static ParamGrid defaults();
    /// {"a": ["1", ...], "b": [...], "nMax": 40, "mMax": 25, "x": ["1", "2"]};
    /// missing keys keep their defaults.
    static ParamGrid from_json(const Json& j);
    Json to_json() const;

    /// Throws UsageError for an empty grid or a zero a/b value.
    void validate() const;
    std::vector<ParamSet> params() const;
};

enum class Suite {
    closed_forms,
    determinants,
    cassini,
    bridge,
    addition,
    binet,
    matrix_recurrence,
    hadamard,
    spectra,
    errata,
};

std::string_view suite_name(Suite s);
/// Throws UsageError for an unknown name.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();
/// "all" or a comma-separated list of suite names.
std::vector<Suite> parse_suite_list(std::string_view text);

enum class Status { pass, fail, pass_with_correction };
std::string_view status_name(Status s);

struct Counterexample {
    std::string a;
    std::string b;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> m;
    std::optional<std::string> x; // "sym" for symbolic checks
    std::string quantity;         // which value disagreed, e.g. "trace"
    std::string expected;         // the statement's value
    std::string actual;           // the exact computed value
};

struct AuditReport {
    std::string identity_id;
    Suite suite = Suite::closed_forms;
    std::string statement;
    Status status = Status::pass;
    std::size_t checked_points = 0;
    std::size_t failed_points = 0;
    std::size_t skipped_points = 0;
    std::vector<Counterexample> counterexamples; // first failure per (a, b)
    std::string notes;
};

/// Runs the requested suites, sorted by identity id. When every suite is
/// requested a completeness self-check is appended if an expected id is
/// missing. Throws UsageError on an empty grid or empty suite list.
std::vector<AuditReport> run_audit(const ParamGrid& grid, const std::vector<Suite>& suites);

/// Every identity id that a full run must produce.
std::vector<std::string> required_identity_ids();

bool any_fail(const std::vector<AuditReport>& reports);

Json to_json(const AuditReport& r);
Json to_json(const std::vector<AuditReport>& reports);
std::string format_text(const std::vector<AuditReport>& reports);

} // namespace bpfib::audit
