#ifndef IDEALZETA_REPORT_HPP_
#define IDEALZETA_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace idealzeta {

inline constexpr std::string_view schema_version = "idealzeta/1";

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(std::string_view s);

/// Process exit codes.
namespace exit_code {
inline constexpr int success = 0;
inline constexpr int oracle_disagreement = 2;
inline constexpr int resource_cap = 3;
inline constexpr int input_error = 4;
} // namespace exit_code

struct RunConfig {
    std::string poly = "t";
    std::vector<std::uint64_t> primes = {2, 3, 5};
    std::uint64_t max_index = 10;
    unsigned max_exponent = 3;
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::json;
    std::uint64_t resource_cap = 100'000'000;
    bool paper_mode = false;
    std::vector<unsigned> exponents; ///< volume: b_1..b_n
    unsigned lemma_n = 5;            ///< lemma-check: largest n
    unsigned lemma_order = 6;        ///< lemma-check: truncation order

    /// Throws InputError on violated invariants.
    void validate() const;
};

/// A command's outcome: the JSON document is authoritative; the table and
/// notes drive the CSV and text renderings.
struct CommandResult {
    nlohmann::ordered_json doc;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    int exit_code = exit_code::success;

    std::string render(OutputFormat format) const;
};

CommandResult cmd_count(RunConfig const& cfg);
CommandResult cmd_series(RunConfig const& cfg);
CommandResult cmd_local(RunConfig const& cfg);
CommandResult cmd_volume(RunConfig const& cfg);
CommandResult cmd_compare(RunConfig const& cfg);
CommandResult cmd_asymptote(RunConfig const& cfg);
CommandResult cmd_lemma_check(RunConfig const& cfg);

/// Dispatch by subcommand name; throws InputError for unknown names.
CommandResult run_command(std::string_view name, RunConfig const& cfg);

/// Formats a ratio for reports: fixed, 9 decimals.
std::string format_ratio(double r);

} // namespace idealzeta

#endif /* IDEALZETA_REPORT_HPP_ */
