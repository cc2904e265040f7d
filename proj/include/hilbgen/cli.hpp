#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hilbgen/catalog.hpp"

namespace hilbgen::cli {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& text);

struct RunConfig {
    std::size_t truncation_order = 200;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;
    unsigned long seed = 0;
    double tolerance = 1e-8;

    void validate() const;
};

// Subcommand bodies. Each writes a complete report to `out` and returns the
// process exit code: 0 all checks passed, 1 a check failed, 2 a module error
// (already rendered as an error envelope by the caller).

int cmd_table1(const RunConfig& cfg, std::optional<int> row_filter,
               std::ostream& out);

int cmd_table2(const RunConfig& cfg, long dmax, long hmax, bool check_reference,
               std::ostream& out);

int cmd_classify(const RunConfig& cfg, GroupTag group, std::ostream& out);

int cmd_derive_local(const RunConfig& cfg, long search_bound, std::ostream& out);

int cmd_modular_check(const RunConfig& cfg, std::optional<int> row_filter,
                      std::size_t samples, long entry_bound, long terms,
                      std::ostream& out);

int cmd_hyperelliptic(const RunConfig& cfg, long dmax, bool verify,
                      std::ostream& out);

int cmd_expand(const RunConfig& cfg, const std::string& eta_text, long level,
               bool invert, long qpower, std::ostream& out);

/// Renders a module error as a machine-readable envelope on `out` and
/// returns exit code 2.
int render_error(const RunConfig& cfg, const Error& e, std::ostream& out);

} // namespace hilbgen::cli
