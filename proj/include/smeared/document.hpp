#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "smeared/smeared_ring.hpp"

namespace smeared::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitQueryError = 1;
inline constexpr int kExitInvalid = 2;

/// Malformed problem or result file; `where` names the offending JSON location.
class ProblemError : public Error {
 public:
  ProblemError(std::string where, const std::string& message)
      : Error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct Problem {
  RingPtr ring;
  SmearedRingConfig config;
  bool check_radical = false;
  /// Query entries as written; compact strings are normalized when the query runs.
  std::vector<json> queries;
};

/// Problem file layout (format 1):
///
///   { "format": 1,
///     "ring": { "variables": ["x", "y"], "order": "grevlex" },
///     "ideals": [ { "generators": ["x"], "radical": true }, ["x - 1"], ... ],
///     "check_radical": false,
///     "queries": [ "verdict", { "query": "member", "poly": "x*y" }, "chain 1 25", ... ] }
///
/// Queries are objects or the compact strings "validate", "dims", "verdict",
/// "member <poly>", "eval <poly> <i>", "partition <i>", "chain <i> <L>", "locus <c1> ...",
/// "basis <d>". Ideal indices are 1-based. Throws ProblemError.
Problem parse_problem(const json& doc);
Problem load_problem(const std::string& path);
/// Reads a JSON file, reporting the byte offset of syntax errors as a ProblemError.
json load_json(const std::string& path);

/// Compact query string -> normalized query object. Throws ProblemError.
json parse_query_string(const std::string& text, const std::string& where);

struct RunOptions {
  bool strict = false;
};

struct RunOutcome {
  json document;
  int exit_code = kExitOk;
};

/// Validates and executes the queries in order. Every certificate is re-checked with
/// verify_result() before it is emitted. Timing lives only in "elapsed_ms" fields.
RunOutcome run_problem(const Problem& problem, const RunOptions& options = {});

struct VerifyOutcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Re-checks a result document against its problem: cofactor identities, evaluations and
/// linear independence are checked directly; claims that need a normal form (non-membership,
/// dimensions, verdicts) are recomputed.
VerifyOutcome verify_document(const json& result, const Problem& problem);

/// Serialization with stable layout (2-space indent, trailing newline).
std::string dump(const json& doc);

/// Removes every "elapsed_ms" field (for determinism comparisons).
json strip_timing(json doc);

}  // namespace smeared::cli
