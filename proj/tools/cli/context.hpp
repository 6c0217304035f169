#pragma once

#include "pwl/json_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace pwl::cli {

/// Shared flags and the action chosen by the parser.
struct Context {
    std::string inline_json;
    std::string in_file;
    std::string out_file;
    bool use_float = false;
    std::uint64_t seed = 1;
    int max_rank = kDefaultMaxRank;
    int degree_bound = kDefaultDegreeBound;

    std::function<json()> action;

    /// Input document from --json or --in; throws UsageError when neither is given.
    const json& input();

private:
    std::optional<json> input_;
};

/// Missing or contradictory arguments detected after parsing; exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Register a subverb whose action is `fn`.
CLI::App* leaf(CLI::App* verb, Context& ctx, const std::string& name, const std::string& help,
               std::function<json()> fn);

/// Certificates report "status": "ok" or "violation"; a violation exits with code 3.
json status(bool ok);

Label family_of(const std::string& s);
/// Strict numbering unless the rank is a small coincidence the caller allows.
RootSystem system_of(const std::string& family, int rank);
PropagationPair pair_of(const std::string& family, int from, int to);
std::vector<int> parse_ints(const std::string& csv);
QVec parse_point(const std::string& csv);

void add_describe(CLI::App& app, Context& ctx);
void add_weyl(CLI::App& app, Context& ctx);
void add_invariants(CLI::App& app, Context& ctx);
void add_pw(CLI::App& app, Context& ctx);
void add_fourier(CLI::App& app, Context& ctx);
void add_omega(CLI::App& app, Context& ctx);
void add_limits(CLI::App& app, Context& ctx);
void add_verify(CLI::App& app, Context& ctx);

}  // namespace pwl::cli
