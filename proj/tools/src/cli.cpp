#include "zerosum/cli/job.hpp"

#include "zerosum/builders.hpp"
#include "zerosum/canonical.hpp"
#include "zerosum/cli/cache.hpp"
#include "zerosum/cli/theorem_suite.hpp"
#include "zerosum/decompose.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"
#include "zerosum/family.hpp"
#include "zerosum/search.hpp"
#include "zerosum/shape.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>

#ifndef ZEROSUM_VERSION
#define ZEROSUM_VERSION "0.0.0"
#endif

namespace zerosum::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json terms_json(std::span<const Value> terms) { return std::vector<Value>(terms.begin(), terms.end()); }

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return exit_usage;
    case ErrorKind::DomainRejected:
    case ErrorKind::NotExtremal: return exit_rejected;
    case ErrorKind::CharacterizationViolated:
    case ErrorKind::Internal: return exit_internal;
    }
    return exit_internal;
}

SearchBudget budget_of(const JobSpec& job) {
    return {job.max_nodes, std::chrono::milliseconds(job.max_time_ms)};
}

/// What a command hands back besides its exit code.
struct Outcome {
    json result = json::object();
    json statement = nullptr;
    json timing = json::object();
    int exit_code = exit_ok;
};

Family family_for(const WeightSet& w) {
    if (auto f = family_of(w)) return *f;
    fail(ErrorKind::DomainRejected, "weights '" + w.describe() + "' are not one of one, units, units^2, units^3");
}

std::vector<Seq> parse_sequences(const JobSpec& job) {
    require(!job.sequences.empty(), "no sequence given (use --seq or --seq-file)");
    std::vector<Seq> out;
    for (const auto& text : job.sequences) out.push_back(parse_seq(job.n, text));
    return out;
}

/// The constant for (n, A): the closed form where one exists, otherwise a search.
struct ResolvedConstant {
    std::optional<std::uint64_t> value;
    std::optional<KnownConstant> formula;
};

ResolvedConstant resolve_constant(const ZnContext& ctx, const WeightSet& w, const JobSpec& job) {
    if (auto k = known_constant(w, ctx)) return {k->value, k};
    const auto report = compute_constant(ctx, w, budget_of(job));
    if (report.status == SearchStatus::Exact) return {report.constant, std::nullopt};
    return {};
}

Outcome run_constant(const JobSpec& job, const ZnContext& ctx, const WeightSet& w) {
    Outcome out;
    const auto formula = known_constant(w, ctx);
    if (formula) out.statement = formula->statement;

    std::optional<ResultCache> cache;
    if (auto path = resolve_cache_path(job.cache_path)) cache.emplace(*path);

    std::optional<std::uint64_t> constant;
    std::uint64_t lower_bound = 1;
    Seq witness;
    if (cache) {
        if (auto entry = cache->find(ctx.modulus(), w.describe())) {
            const Seq s(ctx.modulus(), entry->witness);
            if (entry->constant >= 1 && s.size() + 1 == entry->constant && !has_zero_window(s, w)) {
                constant = entry->constant;
                lower_bound = entry->constant;
                witness = s;
                out.timing["cache"] = "hit";
            } else {
                out.timing["cache"] = "stale";
            }
        } else {
            out.timing["cache"] = "miss";
        }
        if (cache->skipped_lines() > 0) out.timing["cache_skipped_lines"] = cache->skipped_lines();
    }
    if (!constant) {
        const auto report = compute_constant(ctx, w, budget_of(job));
        out.timing["nodes_visited"] = report.nodes_visited;
        lower_bound = report.lower_bound;
        witness = report.witness;
        if (report.status == SearchStatus::Exact) {
            constant = report.constant;
            if (cache)
                cache->append({ctx.modulus(), w.describe(), report.constant,
                               std::vector<Value>(witness.terms().begin(), witness.terms().end()), utc_timestamp(),
                               ZEROSUM_VERSION});
        }
    }

    out.result["status"] = constant ? "exact" : "unknown";
    out.result["constant"] = constant ? json(*constant) : json(nullptr);
    out.result["lower_bound"] = lower_bound;
    out.result["witness"] = terms_json(witness.terms());
    if (formula) {
        out.result["formula"] = formula->value;
        out.result["formula_agrees"] = constant ? json(*constant == formula->value) : json(nullptr);
    }
    if (!constant) out.exit_code = exit_budget;
    return out;
}

Outcome run_check(const JobSpec& job, const ZnContext& ctx, const WeightSet& w) {
    Outcome out;
    const auto constant = resolve_constant(ctx, w, job);
    if (constant.formula) out.statement = constant.formula->statement;
    json items = json::array();
    for (const Seq& s : parse_sequences(job)) {
        json item;
        item["sequence"] = terms_json(s.terms());
        item["length"] = s.size();
        const auto window = s.empty() ? std::nullopt : has_zero_window(s, w);
        item["zero_window"] = window ? json{{"start", window->start + 1}, {"end", window->end + 1}} : json(nullptr);
        item["zero_window_free"] = !window.has_value();
        if (constant.value)
            item["extremal"] = !window && s.size() + 1 == *constant.value;
        else
            item["extremal"] = nullptr;
        items.push_back(std::move(item));
    }
    out.result = items.size() == 1 ? items[0] : json{{"results", items}};
    if (!constant.value) out.exit_code = exit_budget;
    return out;
}

Outcome run_enumerate(const JobSpec& job, const ZnContext& ctx, const WeightSet& w) {
    Outcome out;
    const auto constant = resolve_constant(ctx, w, job);
    if (!constant.value) {
        out.result["status"] = "unknown";
        out.exit_code = exit_budget;
        return out;
    }
    if (constant.formula) out.statement = constant.formula->statement;
    EnumerateOptions options;
    options.up_to_equivalence = job.up_to_equivalence;
    options.count_only = job.count_only;
    options.max_sequences = job.max_sequences;
    options.budget = budget_of(job);
    const auto e = enumerate_extremal(ctx, w, *constant.value, options);
    out.result["constant"] = *constant.value;
    out.result["length"] = *constant.value - 1;
    out.result["up_to_equivalence"] = job.up_to_equivalence;
    out.result["count"] = e.count;
    out.result["complete"] = e.complete;
    if (!job.count_only) {
        out.result["truncated"] = e.truncated;
        json list = json::array();
        for (const auto& s : e.sequences) list.push_back(terms_json(s.terms()));
        out.result["sequences"] = std::move(list);
    }
    if (!e.complete) out.exit_code = exit_budget;
    return out;
}

Outcome run_construct(const JobSpec& job, const ZnContext& ctx, const WeightSet& w) {
    Outcome out;
    const Family family = family_for(w);
    BuildRecipe recipe;
    if (job.recipe) {
        recipe = parse_recipe(*job.recipe);
        require(recipe.family == family && recipe.n == ctx.modulus(), "recipe does not match --n/--weights");
    } else if (job.seed) {
        recipe = random_recipe(family, ctx, *job.seed);
    } else {
        recipe = default_recipe(family, ctx);
    }
    const Seq s = build(recipe);
    const auto formula = known_constant(family, ctx);
    if (formula) out.statement = formula->statement;
    const bool extremal = formula && is_extremal(s, w, formula->value);
    if (!extremal) fail(ErrorKind::Internal, "built sequence " + to_string(s) + " failed verification");
    out.result["sequence"] = terms_json(s.terms());
    out.result["length"] = s.size();
    out.result["recipe"] = to_string(recipe);
    out.result["extremal"] = extremal;
    return out;
}

Outcome run_decompose(const JobSpec& job, const ZnContext& ctx, const WeightSet& w) {
    Outcome out;
    const Family family = family_for(w);
    const auto seqs = parse_sequences(job);
    require(seqs.size() == 1, "decompose takes exactly one sequence");
    const auto cert = decompose(seqs[0], family, ctx);
    const auto check = check_certificate(cert);
    if (!check.ok) fail(ErrorKind::CharacterizationViolated, "certificate failed re-validation: " + check.reason);
    if (auto k = known_constant(family, ctx)) out.statement = k->statement;
    out.result["certificate"] = json::parse(to_json(cert));
    out.result["certificate_valid"] = check.ok;
    if (shape_applies(family, ctx)) {
        const auto shape = validate_shape(seqs[0], family, ctx);
        json coefficients = json::object();
        for (const auto& c : shape.coefficients) coefficients[c.name] = c.values;
        out.result["shape"] = json{{"form", shape.form}, {"primes", shape.primes}, {"coefficients", coefficients}};
    }
    return out;
}

Outcome run_canon(const JobSpec& job, const ZnContext&, const WeightSet& w) {
    Outcome out;
    json items = json::array();
    for (const Seq& s : parse_sequences(job)) {
        const auto cls = canonicalize(s, w);
        items.push_back(json{{"sequence", terms_json(s.terms())},
                             {"canonical", terms_json(cls.canonical.terms())},
                             {"orbit_size", cls.orbit_size}});
    }
    out.result = items.size() == 1 ? items[0] : json{{"results", items}};
    return out;
}

Outcome run_verify(const JobSpec& job) {
    Outcome out;
    json rows = json::array();
    json checked = json::array();
    bool failed = false;
    for (const auto& r : verify_theorems(job.scope, budget_of(job))) {
        rows.push_back(json{{"statement", r.statement}, {"verdict", to_string(r.verdict)}, {"cases", r.cases},
                            {"detail", r.detail}});
        if (r.verdict == Verdict::Passed) checked.push_back(r.statement);
        failed = failed || r.verdict == Verdict::Failed;
    }
    out.result["scope"] = job.scope;
    out.result["statements"] = std::move(rows);
    out.statement = std::move(checked);
    if (failed) out.exit_code = exit_rejected;
    return out;
}

json inputs_of(const JobSpec& job) {
    json in;
    if (job.command == "verify-theorems") {
        in["scope"] = job.scope;
    } else {
        in["n"] = job.n;
        in["weights"] = job.weights;
    }
    if (!job.sequences.empty()) in["sequences"] = job.sequences;
    if (job.recipe) in["recipe"] = *job.recipe;
    if (job.seed) in["seed"] = *job.seed;
    if (job.command == "enumerate") {
        in["count_only"] = job.count_only;
        in["up_to_equivalence"] = job.up_to_equivalence;
        in["max_sequences"] = job.max_sequences;
    }
    in["max_nodes"] = job.max_nodes;
    in["max_time_ms"] = job.max_time_ms;
    return in;
}

} // namespace

RunResult run(const JobSpec& job) {
    json doc;
    doc["command"] = job.command;
    doc["inputs"] = inputs_of(job);
    const auto start = Clock::now();
    Outcome out;
    try {
        if (job.command == "verify-theorems") {
            out = run_verify(job);
        } else {
            require(job.n >= 2, "--n must be at least 2");
            const ZnContext ctx(job.n);
            require(!job.weights.empty(), "--weights is required");
            const auto w = parse_weight_set(ctx, job.weights);
            if (job.command == "constant") out = run_constant(job, ctx, w);
            else if (job.command == "check") out = run_check(job, ctx, w);
            else if (job.command == "enumerate") out = run_enumerate(job, ctx, w);
            else if (job.command == "construct") out = run_construct(job, ctx, w);
            else if (job.command == "decompose") out = run_decompose(job, ctx, w);
            else if (job.command == "canon") out = run_canon(job, ctx, w);
            else fail(ErrorKind::InvalidArgument, "unknown command '" + job.command + "'");
        }
    } catch (const Error& e) {
        out = Outcome{};
        out.result = json{{"error", json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
        out.exit_code = exit_code_for(e.kind());
    }
    doc["result"] = std::move(out.result);
    doc["provenance"] = json{{"paper_statement_checked", std::move(out.statement)}};
    if (job.timing) {
        out.timing["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        doc["timing"] = std::move(out.timing);
    } else {
        doc["timing"] = nullptr;
    }
    return {out.exit_code, doc.dump(2) + "\n"};
}

std::optional<JobSpec> parse_command_line(int argc, const char* const* argv, std::string& out) {
    CLI::App app{"Weighted zero-sum constants, extremal sequences and certificates over Z_n", "zerosum"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", ZEROSUM_VERSION);

    JobSpec job;
    std::string seq;
    std::string seq_file;
    std::optional<std::string> cache;

    auto common = [&](CLI::App* sub, bool needs_seq) {
        sub->add_option("--n", job.n, "modulus n >= 2")->required()->check(CLI::Range(2u, 1u << 20));
        sub->add_option("--weights", job.weights, "one, units, units^j, nonzero or set:a,b,...")->required();
        sub->add_option("--max-nodes", job.max_nodes, "search node budget (0 = unlimited)");
        sub->add_option("--max-time-ms", job.max_time_ms, "search time budget in ms (0 = unlimited)");
        sub->add_flag("--timing,!--no-timing", job.timing, "omit the timing block for byte-stable output");
        sub->add_option("--output", job.output, "write the JSON document to this file");
        if (needs_seq) {
            auto* group = sub->add_option_group("sequence");
            group->add_option("--seq", seq, "comma-separated residues, e.g. 10,4,20");
            group->add_option("--seq-file", seq_file, "file with one sequence per line")->check(CLI::ExistingFile);
            group->require_option(1);
        }
    };

    auto* constant = app.add_subcommand("constant", "compute C_A(n) by exhaustive search");
    common(constant, false);
    constant->add_option("--cache", cache, "JSON-lines cache file (default: $ZEROSUM_CACHE)");

    auto* check = app.add_subcommand("check", "zero-window and extremality check");
    common(check, true);

    auto* enumerate = app.add_subcommand("enumerate", "list or count extremal sequences");
    common(enumerate, false);
    enumerate->add_flag("--count-only", job.count_only, "only count");
    enumerate->add_flag("--up-to-equivalence", job.up_to_equivalence, "one representative per A-equivalence class");
    enumerate->add_option("--max-sequences", job.max_sequences, "stop listing after this many (0 = all)");

    auto* construct = app.add_subcommand("construct", "build an extremal sequence recursively");
    common(construct, false);
    construct->add_option("--seed", job.seed, "random recipe seed");
    construct->add_option("--recipe", job.recipe, "rebuild from a recipe string");

    auto* decompose_cmd = app.add_subcommand("decompose", "certificate for an extremal sequence");
    common(decompose_cmd, true);

    auto* canon = app.add_subcommand("canon", "canonical A-equivalence representative");
    common(canon, true);

    auto* verify = app.add_subcommand("verify-theorems", "run the statement suite up to a modulus bound");
    verify->add_option("--scope", job.scope, "largest modulus to exercise")->required();
    verify->add_option("--max-nodes", job.max_nodes, "search node budget per statement (0 = unlimited)");
    verify->add_option("--max-time-ms", job.max_time_ms, "time budget per statement in ms (0 = unlimited)");
    verify->add_flag("--timing,!--no-timing", job.timing, "omit the timing block");
    verify->add_option("--output", job.output, "write the JSON document to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out = app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp& e) {
        out = app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::CallForVersion& e) {
        out = std::string(ZEROSUM_VERSION) + "\n";
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        fail(ErrorKind::InvalidArgument, std::string(e.what()) + "\n\n" + sub->help());
    }

    job.command = app.get_subcommands().front()->get_name();
    job.cache_path = cache;
    if (!seq.empty()) job.sequences.push_back(seq);
    if (!seq_file.empty()) {
        std::ifstream in(seq_file);
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = line.find_last_not_of(" \t\r");
            job.sequences.push_back(line.substr(first, last - first + 1));
        }
        require(!job.sequences.empty(), "sequence file " + seq_file + " has no sequences");
    }
    return job;
}

} // namespace zerosum::cli
