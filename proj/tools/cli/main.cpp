#include "context.hpp"

#include "pwl/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pwl::cli {

const json& Context::input() {
    if (input_) return *input_;
    if (!inline_json.empty() && !in_file.empty()) throw UsageError("give either --json or --in, not both");
    if (!inline_json.empty()) {
        input_ = json::parse(inline_json);
    } else if (!in_file.empty()) {
        std::ifstream f(in_file);
        if (!f) throw DomainError("cannot open " + in_file);
        input_ = json::parse(f);
    } else {
        throw UsageError("this command reads a JSON document from --json or --in");
    }
    return *input_;
}

CLI::App* leaf(CLI::App* verb, Context& ctx, const std::string& name, const std::string& help,
               std::function<json()> fn) {
    CLI::App* sub = verb->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&ctx, fn = std::move(fn)] { ctx.action = fn; });
    return sub;
}

json status(bool ok) { return ok ? "ok" : "violation"; }

Label family_of(const std::string& s) { return parse_label(s); }

RootSystem system_of(const std::string& family, int rank) { return build_root_system_any(family_of(family), rank); }

PropagationPair pair_of(const std::string& family, int from, int to) {
    if (from > to) throw DomainError("--from must not exceed --to");
    return propagate(build_root_system({family_of(family), from}), to);
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + csv);
        }
    }
    return out;
}

QVec parse_point(const std::string& csv) {
    QVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

}  // namespace pwl::cli

namespace {

int emit(const pwl::json& j, const std::string& out_file) {
    std::string text = j.dump() + "\n";
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_file);
        if (!f) {
            std::cout << pwl::json{{"error_kind", "io"}, {"message", "cannot write " + out_file}}.dump() << "\n";
            return 1;
        }
        f << text;
    }
    return 0;
}

int fail(const std::string& kind, const std::string& message, int code) {
    std::cout << pwl::json{{"error_kind", kind}, {"message", message}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pwl::cli;
    Context ctx;
    CLI::App app{"Exact root-system, Paley-Wiener and direct-limit computations"};
    app.require_subcommand(1);
    app.add_option("--json", ctx.inline_json, "Inline JSON input");
    app.add_option("--in", ctx.in_file, "JSON input file");
    app.add_option("--out", ctx.out_file, "Write output to a file");
    app.add_flag("--float", ctx.use_float, "Print rationals as floating point");
    app.add_option("--seed", ctx.seed, "Seed for randomized suites");
    app.add_option("--max-rank", ctx.max_rank, "Largest rank for exhaustive enumeration");
    app.add_option("--degree-bound", ctx.degree_bound, "Degree bound for linear algebra in invariants");

    add_describe(app, ctx);
    add_weyl(app, ctx);
    add_invariants(app, ctx);
    add_pw(app, ctx);
    add_fourier(app, ctx);
    add_omega(app, ctx);
    add_limits(app, ctx);
    add_verify(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }
    if (!ctx.action) return fail("usage", "missing subcommand", 2);
    pwl::set_float_output(ctx.use_float);
    try {
        pwl::json out = ctx.action();
        int code = emit(out, ctx.out_file);
        if (code != 0) return code;
        if (out.is_object() && out.value("status", std::string()) == "violation") return 3;
        return 0;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const pwl::TheoremViolation& e) {
        return fail("theorem_violation", e.what(), 3);
    } catch (const pwl::ResourceError& e) {
        return fail("resource", e.what(), 1);
    } catch (const pwl::DomainError& e) {
        return fail("domain", e.what(), 1);
    } catch (const pwl::json::exception& e) {
        return fail("domain", std::string("bad JSON input: ") + e.what(), 1);
    }
}
