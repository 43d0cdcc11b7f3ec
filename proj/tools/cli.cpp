#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bsac/detour.hpp"
#include "bsac/errors.hpp"
#include "bsac/io.hpp"
#include "bsac/bound_audit.hpp"
#include "bsac/metric.hpp"
#include "bsac/witness.hpp"

namespace bsac::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::int64_t p = 2;
    std::optional<json> generators;  // list of {num, exp, c}; standard set when absent
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
    std::int64_t max_radius = 64;
    std::string output_format = "csv";
};

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw UsageError("config must be a JSON object");
    Config cfg;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "p") {
                cfg.p = value.get<std::int64_t>();
            } else if (key == "generators") {
                if (!value.is_array() || value.empty()) throw UsageError("generators must be a nonempty list");
                cfg.generators = value;
            } else if (key == "memory_budget_bytes") {
                if (value.get<std::int64_t>() <= 0) throw UsageError("memory_budget_bytes must be positive");
                cfg.memory_budget_bytes = value.get<std::uint64_t>();
            } else if (key == "max_radius") {
                cfg.max_radius = value.get<std::int64_t>();
                if (cfg.max_radius <= 0) throw UsageError("max_radius must be positive");
            } else if (key == "output_format") {
                cfg.output_format = value.get<std::string>();
            } else {
                throw UsageError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw UsageError("bad config value: " + std::string(e.what()));
    }
    return cfg;
}

struct Context {
    BaseP p;
    GeneratingSet gens;
    std::uint64_t budget;
    std::int64_t max_radius;
    bool as_json;
    unsigned workers;

    void check_radius(const char* flag, std::int64_t v) const {
        if (v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
        if (v > max_radius) {
            throw UsageError(std::string(flag) + " " + std::to_string(v) + " exceeds max_radius " +
                             std::to_string(max_radius));
        }
    }

    json header(const char* command) const {
        return {{"schema", io::kSchemaVersion}, {"command", command}, {"p", p.value()}};
    }
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

GeneratingSet make_generators(const Config& cfg, const BaseP& p) {
    if (!cfg.generators) return standard_generators(p);
    std::vector<GroupElement> raw;
    try {
        for (const auto& g : *cfg.generators) raw.push_back(io::element_from_json(g, p));
    } catch (const json::exception& e) {
        throw UsageError("bad generator: " + std::string(e.what()));
    }
    return validate_generating_set(p, raw, ValidationOptions{.memory_budget_bytes = cfg.memory_budget_bytes});
}

int cmd_ball(const Context& ctx, std::int64_t n, std::ostream& out) {
    ctx.check_radius("--n", n);
    const Ball B = ball(n, ctx.gens, BallOptions{ctx.budget});
    if (!ctx.as_json) {
        io::write_ball_csv(out, B);
        return kOk;
    }
    json doc = ctx.header("ball");
    json elems = json::array();
    for (std::uint32_t i : B.canonical_indices()) {
        json e = io::to_json(B.element(i));
        e["length"] = B.length(i);
        elems.push_back(std::move(e));
    }
    doc["n"] = n;
    doc["size"] = B.size();
    doc["elements"] = std::move(elems);
    emit(out, doc);
    return kOk;
}

int cmd_len(const Context& ctx, const std::string& element, std::int64_t max_r, std::ostream& out) {
    ctx.check_radius("--max-r", max_r);
    GroupElement g;
    try {
        g = io::parse_element_flag(element, ctx.p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const WordMetric metric(ctx.gens, (max_r + 1) / 2, BallOptions{ctx.budget});
    const WordLength len = metric.length(g, max_r);
    if (!ctx.as_json) {
        io::write_word_length_csv(out, g, len);
        return kOk;
    }
    json doc = ctx.header("len");
    doc["element"] = io::to_json(g);
    doc["word_length"] = io::to_json(len);
    emit(out, doc);
    return kOk;
}

int cmd_ac_table(const Context& ctx, std::int64_t n, std::int64_t k, std::ostream& out, std::ostream& err) {
    ctx.check_radius("--n", n);
    if (k < 0) throw UsageError("--k must be nonnegative");
    const DetourTable table = ac_table(n, k, ctx.gens, DetourOptions{ctx.budget, ctx.workers});
    if (!ctx.as_json) {
        io::write_detour_csv(out, table.rows);
    } else {
        json doc = ctx.header("ac-table");
        json rows = json::array();
        for (const auto& row : table.rows) rows.push_back(io::to_json(row));
        doc["n_max"] = n;
        doc["k"] = k;
        doc["rows"] = std::move(rows);
        doc["budget_limited_at"] = table.budget_limited_at ? json(*table.budget_limited_at) : json(nullptr);
        emit(out, doc);
    }
    if (table.budget_limited_at) {
        err << json{{"error", "budget"},
                    {"message", "memory budget reached"},
                    {"completed_radius", *table.budget_limited_at}}
                   .dump()
            << '\n';
        return kBudget;
    }
    return kOk;
}

int cmd_size_bound(const Context& ctx, std::int64_t n, std::ostream& out, std::ostream& err) {
    ctx.check_radius("--n", n);
    const Constants K = derived_constants(ctx.gens);
    const Ball B = ball(n, ctx.gens, BallOptions{ctx.budget});
    std::vector<SizeBoundReport> reports;
    for (std::int64_t m = 0; m <= n; ++m) reports.push_back(audit_size_bound(m, K, B));
    if (!ctx.as_json) {
        io::write_size_bound_csv(out, reports);
    } else {
        json doc = ctx.header("lemma1");
        doc["M"] = io::rational(K.M);
        json list = json::array();
        for (const auto& r : reports) list.push_back(io::to_json(r));
        doc["reports"] = std::move(list);
        emit(out, doc);
    }
    for (const auto& r : reports) {
        if (!r.passed()) {
            err << json{{"error", "audit_violation"}, {"message", "size bound violated"}, {"n", r.n}}.dump() << '\n';
            return kAuditViolation;
        }
    }
    return kOk;
}

int cmd_lipschitz(const Context& ctx, std::int64_t r, std::int64_t n, std::ostream& out, std::ostream& err) {
    ctx.check_radius("--n", n);
    ctx.check_radius("--r", r);
    const Constants K = derived_constants(ctx.gens);
    const BallOptions opts{ctx.budget};
    const Ball B = ball(std::max(n, r), ctx.gens, opts);
    std::optional<Ball> inner;
    if (n < r) inner.emplace(ball(n, ctx.gens, opts));
    const LipschitzReport report = audit_lipschitz(r, K, inner ? *inner : B, B);
    if (!ctx.as_json) {
        io::write_lipschitz_csv(out, report);
    } else {
        json doc = ctx.header("lemma2");
        doc["M"] = io::rational(K.M);
        doc["report"] = io::to_json(report);
        emit(out, doc);
    }
    if (!report.passed()) {
        err << json{{"error", "audit_violation"}, {"message", "Lipschitz bound violated"}, {"r", r}}.dump() << '\n';
        return kAuditViolation;
    }
    return kOk;
}

int cmd_witness(const Context& ctx, std::int64_t k, std::int64_t j, std::ostream& out, std::ostream& err) {
    WitnessFamily W = build_witnesses(k, j, ctx.gens);
    ctx.check_radius("witness radius", W.radius);
    const Constants K = derived_constants(ctx.gens);
    const WitnessReport report = witness_audit(W, ctx.gens, K, WitnessAuditOptions{.memory_budget_bytes = ctx.budget});
    if (!ctx.as_json) {
        io::write_witness_csv(out, report);
    } else {
        json doc = ctx.header("witness");
        doc["report"] = io::to_json(report, ctx.gens);
        doc["certificate"] = io::to_json(certify_growth(k, choose_j(K), K));
        emit(out, doc);
    }
    if (report.completed_radius < W.radius) {
        err << json{{"error", "budget"}, {"message", report.note}, {"completed_radius", report.completed_radius}}.dump()
            << '\n';
        return kBudget;
    }
    return kOk;
}

int cmd_constants(const Context& ctx, std::ostream& out) {
    const Constants K = derived_constants(ctx.gens);
    if (!ctx.as_json) {
        io::write_constants_csv(out, K);
        return kOk;
    }
    json doc = ctx.header("constants");
    doc["generating_set"] = io::to_json(ctx.gens);
    doc["constants"] = io::to_json(K);
    emit(out, doc);
    return kOk;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

void diagnose(std::ostream& err, const char* kind, const std::string& message) {
    err << json{{"error", kind}, {"message", one_line(message)}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word-metric audits for the groups B(1,p) = Z[1/p] x| Z", "bsac"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::int64_t> p_flag;
    std::optional<std::string> format_flag;
    std::optional<std::uint64_t> budget_flag;
    unsigned workers = 1;
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--p", p_flag, "base p (overrides config)");
    app.add_option("--format", format_flag, "csv or json (overrides config)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--memory-budget", budget_flag, "memory budget in bytes (overrides config)")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "worker threads for ac-table")->check(CLI::Range(1u, 256u));

    std::int64_t n = 0, k = 2, j = 2, r = 1, max_r = 20;
    std::string element;

    auto* c_ball = app.add_subcommand("ball", "list B(n) with word lengths");
    c_ball->add_option("--n", n, "radius")->required();
    auto* c_len = app.add_subcommand("len", "word length of one element");
    c_len->add_option("--element", element, "element num/exp:c")->required();
    c_len->add_option("--max-r", max_r, "search radius");
    auto* c_table = app.add_subcommand("ac-table", "detour table N(n,k) for n = 0..n");
    c_table->add_option("--n", n, "largest radius")->required();
    c_table->add_option("--k", k, "pair distance");
    auto* c_l1 = app.add_subcommand("lemma1", "size-bound audit for radii 0..n");
    c_l1->add_option("--n", n, "radius")->required();
    auto* c_l2 = app.add_subcommand("lemma2", "Lipschitz audit of horocyclic pairs in B(n)");
    c_l2->add_option("--r", r, "pair distance")->required();
    c_l2->add_option("--n", n, "radius")->required();
    auto* c_wit = app.add_subcommand("witness", "witness family audit");
    c_wit->add_option("--k", k, "level")->required();
    c_wit->add_option("--j", j, "offset (k > j >= 1)");
    auto* c_const = app.add_subcommand("constants", "derived constants");
    for (auto* sub : {c_ball, c_len, c_table, c_l1, c_l2, c_wit, c_const}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        diagnose(err, "usage", e.what());
        return kUsage;
    }

    try {
        Config cfg = config_path.empty() ? Config{} : load_config(config_path);
        if (p_flag) cfg.p = *p_flag;
        if (format_flag) cfg.output_format = *format_flag;
        if (budget_flag) cfg.memory_budget_bytes = *budget_flag;
        if (cfg.output_format != "csv" && cfg.output_format != "json") {
            throw UsageError("output_format must be csv or json");
        }
        std::optional<BaseP> p;
        try {
            p.emplace(cfg.p);
        } catch (const std::invalid_argument&) {
            throw UsageError("|p| must be at least 2");
        }
        const Context ctx{*p, make_generators(cfg, *p), cfg.memory_budget_bytes, cfg.max_radius,
                          cfg.output_format == "json", workers};

        // Reports are buffered so a failure never leaves half a document.
        std::ostringstream buf;
        int code = kOk;
        if (c_ball->parsed()) code = cmd_ball(ctx, n, buf);
        else if (c_len->parsed()) code = cmd_len(ctx, element, max_r, buf);
        else if (c_table->parsed()) code = cmd_ac_table(ctx, n, k, buf, err);
        else if (c_l1->parsed()) code = cmd_size_bound(ctx, n, buf, err);
        else if (c_l2->parsed()) code = cmd_lipschitz(ctx, r, n, buf, err);
        else if (c_wit->parsed()) code = cmd_witness(ctx, k, j, buf, err);
        else code = cmd_constants(ctx, buf);
        out << buf.str();
        return code;
    } catch (const UsageError& e) {
        diagnose(err, "usage", e.what());
        return kUsage;
    } catch (const GenerationError& e) {
        diagnose(err, "config", e.what());
        return kUsage;
    } catch (const PreconditionError& e) {
        diagnose(err, "usage", e.what());
        return kUsage;
    } catch (const AuditViolation& e) {
        diagnose(err, "audit_violation", e.what());
        return kAuditViolation;
    } catch (const BudgetExceeded& e) {
        err << json{{"error", "budget"}, {"message", one_line(e.what())}, {"completed_radius", e.completed_radius()}}
                   .dump()
            << '\n';
        return kBudget;
    }
}

}  // namespace bsac::cli
