#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "a2m/minor.hpp"

namespace a2m::cli {

enum class Format { Csv, Json };

struct Options {
    bool half = false;             // ceil(n/2) form instead of the chromatic form
    std::optional<int> ell;        // empty: every admissible ell
    std::string emit_dir;          // empty: no certificate files
    int jobs = 1;
    std::uint64_t seed = 0;
    int cap = 14;                  // brute-force oracle order cap
    Format format = Format::Csv;
};

struct InputLine {
    int number = 0;  // 1-based
    std::string text;
};

struct Failure {
    int line = 0;  // 0 when the graph did not come from an input stream
    std::string graph6;
    int ell = 0;   // 0 when the failure is not tied to one ell
    std::string reason;
};

struct RunReport {
    int processed = 0, succeeded = 0, failed = 0, skipped = 0;
    std::vector<Failure> failures;
    std::vector<std::pair<std::string, double>> timing;  // seconds per phase
};

/// One CSV row of a sweep. ell == 0 is the per-n total row.
struct SweepRow {
    int n = 0, ell = 0;
    int graphs = 0, constructed = 0, construct_failed = 0, construct_skipped = 0;
    int iff_checked = 0, iff_mismatch = 0, iff_exception = 0;
    int odd_packing_checked = 0, odd_packing_failed = 0;
    std::vector<std::string> failing_graph6;
};

/// Per-ell outcome text for verify, in input order.
struct VerifyRow {
    int line = 0;
    std::string graph6;
    int ell = 0;
    std::string status;  // ok | failed | skipped
    std::string detail;
};

std::vector<InputLine> read_lines(std::istream& in);

RunReport cmd_verify(const std::vector<InputLine>& input, const Options& options, std::vector<VerifyRow>* rows = nullptr);
RunReport cmd_sweep(int n_lo, int n_hi, const Options& options, std::vector<SweepRow>* rows = nullptr);
/// With no target, every admissible ell's construction target is checked.
RunReport cmd_oracle_check(const std::vector<InputLine>& input, const std::optional<MinorTarget>& target,
                           const Options& options, std::vector<VerifyRow>* rows = nullptr);

/// "K4", "K_4", "K^2_{2,3}" or "2,3".
MinorTarget parse_target(const std::string& text);
/// "5" or "5..8".
std::pair<int, int> parse_range(const std::string& text);

std::string render_verify(const RunReport& report, const std::vector<VerifyRow>& rows, Format format);
std::string render_sweep(const RunReport& report, const std::vector<SweepRow>& rows, Format format);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string content_hash(const std::string& text);

}  // namespace a2m::cli
