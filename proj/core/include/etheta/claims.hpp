#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace etheta {

class Universe;

enum class ClaimTier { Core, Audit };
enum class ClaimStatus { Confirmed, Refuted, ExhaustedNoWitness };

const char* to_string(ClaimTier tier);
const char* to_string(ClaimStatus status);

struct ClaimBounds {
  int max_points = 4;      // space enumeration bound, 1..5
  int max_map_points = 3;  // carrier size for map ensembles, 1..4
  int workers = 0;         // 0 = hardware concurrency
  std::uint64_t budget_instances = 0;  // 0 = unlimited; budgeted runs are sequential
};

// Enough structured data to re-evaluate a counterexample through the
// public APIs: serialized space documents plus claim-specific fields.
struct Witness {
  std::string summary;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct ClaimReport {
  std::string id;
  ClaimTier tier = ClaimTier::Audit;
  ClaimStatus status = ClaimStatus::Confirmed;
  std::string domain;
  std::uint64_t total = 0;        // instances examined
  std::uint64_t substantive = 0;  // hypothesis held
  std::uint64_t vacuous = 0;      // hypothesis failed
  std::optional<Witness> witness;
  std::string error;  // per-claim evaluation error, empty normally
  double wall_ms = 0; // excluded from serialized reports
};

struct ClaimSpec {
  std::string id;
  ClaimTier tier = ClaimTier::Audit;
  bool search = false;  // searches report ExhaustedNoWitness instead of Confirmed
  std::string statement;
  std::string domain;  // quantifier domain description
};

const std::vector<ClaimSpec>& claim_catalog();  // sorted by id
const ClaimSpec* find_claim(const std::string& id);

// Resumable scan position for budgeted runs.
struct ClaimCursor {
  std::string claim_id;
  int max_points = 0;
  int max_map_points = 0;
  std::uint64_t next_outer = 0;
  std::uint64_t total = 0, substantive = 0, vacuous = 0;
  std::optional<Witness> witness;
};

std::string serialize_cursor(const ClaimCursor& cursor);
ClaimCursor parse_cursor(const std::string& text);

struct RunOutcome {
  std::optional<ClaimReport> report;  // set when the domain was exhausted
  std::optional<ClaimCursor> cursor;  // set when the budget ran out first
};

RunOutcome run_claim(const std::string& id, const ClaimBounds& bounds, Universe& universe,
                     const ClaimCursor* resume = nullptr);

// Full catalog in id order; per-claim errors land in the report's error
// field instead of aborting the run.
std::vector<ClaimReport> run_suite(const ClaimBounds& bounds, Universe& universe);

// The open-question search over map ensembles (claim Q5.1-open-question).
RunOutcome search_question(const ClaimBounds& bounds, Universe& universe,
                           const ClaimCursor* resume = nullptr);

bool core_tier_failed(const std::vector<ClaimReport>& reports);

std::string serialize_report(const ClaimReport& report);  // stable json line

}  // namespace etheta
