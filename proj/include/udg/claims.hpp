#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace udg {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Verdict { Verified, VerifiedSampled, Refuted, UndecidedAtDeskScale };

std::string_view verdict_name(Verdict v);

struct Evidence {
    std::string kind;
    std::string ref;
    nlohmann::ordered_json numbers = nlohmann::ordered_json::object();
};

struct ClaimVerdict {
    std::string id;
    std::string statement;
    std::string method;
    Verdict verdict = Verdict::UndecidedAtDeskScale;
    Evidence evidence;
    // Validity of the argument offered for the statement, when it differs
    // from the statement's own verdict.
    std::optional<std::string> proof_status;
    std::optional<std::string> annotation;
    // Per-instance verdicts for universal statements checked on examples.
    std::vector<std::pair<std::string, Verdict>> instances;
};

struct OutOfScopeClaim {
    std::string id;
    std::string statement;
    std::string reason;
};

struct ClaimsConfig {
    std::uint64_t seed = 0;
    std::uint64_t hex_samples = 1'000'000;
};

struct ClaimsReport {
    std::vector<ClaimVerdict> claims;
    std::vector<OutOfScopeClaim> out_of_scope;
    std::vector<std::string> consistency_failures;
    std::uint64_t seed = 0;

    bool consistent() const { return consistency_failures.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

// "C1".."C6".
const std::vector<std::string>& claim_ids();

// Re-runs the computation behind one claim.  Throws UnknownClaim.
ClaimVerdict evaluate_claim(std::string_view id, const ClaimsConfig& config = {});

// All claims (evaluated concurrently, merged in id order), the out-of-scope
// entries, and the cross-module consistency check.
ClaimsReport evaluate_all(const ClaimsConfig& config = {});

// Single-claim report with the same layout as evaluate_all.
ClaimsReport evaluate_one(std::string_view id, const ClaimsConfig& config = {});

// Checks the verdicts against independent recomputation of the module
// invariants they rely on; returns human-readable failures.
std::vector<std::string> check_consistency(const std::vector<ClaimVerdict>& claims);

} // namespace udg
