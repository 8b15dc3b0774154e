#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrr/exponent.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// Parameters for an identity row.  Unused fields are ignored by rows that do
/// not consume them; validation happens inside each row.
struct IdParams {
    int m = 1;
    int n = 1;
    int sigma = 0;
    int i = 1;
    int k = 0;
    int j = 0;
    int r = 1;
    int delta = 1;
    /// Added to the modulus of the product side; a nonzero value is a
    /// deliberate negative control and must produce an early mismatch.
    int kappa_perturb = 0;

    std::map<std::string, int> as_map() const;
};

/// Description of one verifiable identity: both sides as truncated series.
struct IdentityRow {
    std::string id;
    std::string description;
    std::vector<std::string> params;  ///< names of the parameters consumed
};

struct VerificationReport {
    std::string id;
    std::map<std::string, int> params;
    Exponent order{};
    bool match = false;
    bool error = false;
    std::optional<Exponent> first_mismatch;
    std::string lhs_sample;
    std::string rhs_sample;
    long long elapsed_ms_lhs = 0;
    long long elapsed_ms_rhs = 0;
    std::string notes;

    std::string to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
    static std::string csv_header();
};

/// All registered identity rows in catalogue order.
const std::vector<IdentityRow>& identity_catalogue();

/// Compute both sides of a row.  Throws UnknownIdentity / BadParams etc.
std::pair<Series, Series> identity_sides(const std::string& id, const IdParams& p,
                                         Exponent order);

/// Compute both sides, compare, and wrap the outcome.  Exceptions from the
/// computation are captured into an error report rather than propagated.
VerificationReport verify_identity(const std::string& id, const IdParams& p,
                                   Exponent order);

struct SuiteRequest {
    std::string id;
    IdParams params;
    Exponent order{};
};

/// Run each request independently; a failure in one row does not stop others.
std::vector<VerificationReport> run_suite(const std::vector<SuiteRequest>& reqs);

/// Parse a line-oriented suite file: `id key=value ... order=N`, `#` comments.
std::vector<SuiteRequest> parse_suite(const std::string& text);

/// Parse "12" or "7/2" into an exponent; only halves are representable.
Exponent parse_exponent(const std::string& text);

}  // namespace qrr
