#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hopfring/verify.hpp"

using nlohmann::json;
using namespace hopfring;

namespace {

constexpr int kMaxVars = 3;
constexpr int kMaxD = 5;
constexpr int kMaxN = 4;
constexpr int kMaxR = 3;

struct CommonArgs {
    std::string ring_path;
    int vars = 0;
    std::string format = "json";
    bool force = false;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
    auto* ring = cmd->add_option("--ring", c.ring_path,
                                 "Ring description file (JSON: {\"vars\": N, \"relations\": [..]})");
    auto* vars = cmd->add_option("--vars", c.vars, "Free polynomial ring on this many variables")
                     ->check(CLI::PositiveNumber);
    ring->excludes(vars);
    vars->excludes(ring);
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--force", c.force, "Bypass the built-in size limits");
}

// Fills `ring` and its JSON description; returns 0 or the process exit code.
int resolve_ring(const CommonArgs& c, int default_vars, std::optional<GradedRing>& ring,
                 json& desc) {
    int vars = c.vars;
    std::vector<std::string> texts;
    if (!c.ring_path.empty()) {
        std::ifstream in(c.ring_path);
        if (!in) {
            std::cerr << "error: cannot open ring file: " << c.ring_path << "\n";
            return 2;
        }
        json spec;
        try {
            spec = json::parse(in);
        } catch (const json::parse_error& e) {
            std::cerr << "error: ring file is not valid JSON: " << e.what() << "\n";
            return 2;
        }
        if (!spec.is_object() || !spec.contains("vars") || !spec["vars"].is_number_integer()) {
            std::cerr << "error: ring file needs an integer \"vars\" field\n";
            return 2;
        }
        vars = spec["vars"].get<int>();
        if (spec.contains("relations")) {
            if (!spec["relations"].is_array()) {
                std::cerr << "error: \"relations\" must be an array of strings\n";
                return 2;
            }
            for (const auto& item : spec["relations"]) {
                if (!item.is_string()) {
                    std::cerr << "error: \"relations\" must be an array of strings\n";
                    return 2;
                }
                texts.push_back(item.get<std::string>());
            }
        }
    } else if (vars == 0) {
        if (default_vars == 0) {
            std::cerr << "error: provide --ring or --vars\n";
            return 2;
        }
        vars = default_vars;
    }
    if (vars < 1) {
        std::cerr << "error: the ring needs at least one variable\n";
        return 2;
    }

    std::vector<Polynomial> relations;
    std::vector<std::string> canonical;
    for (const auto& text : texts) {
        try {
            relations.push_back(parse_poly(text, vars));
        } catch (const ParseError& e) {
            std::cerr << "error: relation \"" << text << "\": " << e.what() << " at position "
                      << e.pos << "\n";
            return 2;
        }
        canonical.push_back(to_string(relations.back()));
    }
    try {
        ring.emplace(vars, std::move(relations));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    desc = json{{"relations", canonical}, {"vars", vars}};
    return 0;
}

// Returns 0, or 3 when a limit is exceeded and --force is absent.
int check_limits(bool force, std::initializer_list<std::tuple<const char*, long long, long long>> limits) {
    for (const auto& [name, value, cap] : limits) {
        if (value <= cap) continue;
        if (force) continue;
        std::cerr << "error: " << name << "=" << value << " exceeds the supported limit " << cap
                  << " (pass --force to run anyway)\n";
        return 3;
    }
    return 0;
}

void emit(const std::string& format, const json& doc, const std::vector<std::string>& csv) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& line : csv) std::cout << line << "\n";
    }
}

struct DimsArgs : CommonArgs {
    int r = 1;
    int d = 0;
    int d_max = 0;
    int n_max = 4;
    bool d_set = false;
    bool d_max_set = false;
};

int run_dims(const DimsArgs& a) {
    std::optional<GradedRing> ring;
    json ring_desc;
    if (int rc = resolve_ring(a, 0, ring, ring_desc)) return rc;
    if (!a.d_set && !a.d_max_set) {
        std::cerr << "error: dims requires --d or --d-max\n";
        return 2;
    }
    int d_hi = a.d_set ? a.d : a.d_max;
    if (int rc = check_limits(a.force, {{"vars", ring->vars(), kMaxVars},
                                        {"r", a.r, kMaxR},
                                        {a.d_set ? "d" : "d-max", d_hi, kMaxD},
                                        {"n-max", a.n_max, kMaxN}}))
        return rc;

    SecantIdeal ideal(*ring, a.r);
    json rows = json::array();
    std::vector<std::string> csv = {"d,n,dim"};
    long long total = 0;
    for (int d = a.d_set ? a.d : 1; d <= d_hi; ++d)
        for (int n = 1; n <= a.n_max; ++n) {
            long long dim = ideal.piece(d, n).rows;
            total += dim;
            rows.push_back(json{{"d", d}, {"dim", dim}, {"n", n}});
            csv.push_back(std::to_string(d) + "," + std::to_string(n) + "," + std::to_string(dim));
        }

    json params{{"n_max", a.n_max}, {"r", a.r}};
    params[a.d_set ? "d" : "d_max"] = d_hi;
    json doc{{"command", "dims"},
             {"params", params},
             {"ring", ring_desc},
             {"rows", rows},
             {"summary", json{{"total", total}}}};
    emit(a.format, doc, csv);
    return 0;
}

struct ProfileArgs : CommonArgs {
    int r = 1;
    int d = 0;
    int d_max = 0;
    int n_max = 4;
    std::string mode = "ordinary";
    bool d_set = false;
    bool d_max_set = false;
};

int run_profile(const ProfileArgs& a) {
    std::optional<GradedRing> ring;
    json ring_desc;
    if (int rc = resolve_ring(a, 0, ring, ring_desc)) return rc;
    if (a.mode == "ordinary" && !a.d_set) {
        std::cerr << "error: profile --mode ordinary requires --d\n";
        return 2;
    }
    if (a.mode == "di" && !a.d_max_set) {
        std::cerr << "error: profile --mode di requires --d-max\n";
        return 2;
    }
    int d_hi = a.mode == "ordinary" ? a.d : a.d_max;
    if (int rc = check_limits(a.force, {{"vars", ring->vars(), kMaxVars},
                                        {"r", a.r, kMaxR},
                                        {a.mode == "ordinary" ? "d" : "d-max", d_hi, kMaxD},
                                        {"n-max", a.n_max, kMaxN}}))
        return rc;

    GeneratorProfile profile = a.mode == "ordinary"
                                   ? ordinary_generator_profile(*ring, a.r, a.d, a.n_max)
                                   : di_generator_profile(*ring, a.r, a.d_max, a.n_max);

    json rows = json::array();
    std::vector<std::string> csv = {"d,n,dim,generated,new"};
    for (const auto& row : profile.rows) {
        rows.push_back(json{{"d", row.d},
                            {"dim", row.dim},
                            {"generated", row.generated},
                            {"n", row.n},
                            {"new", row.new_gens}});
        csv.push_back(std::to_string(row.d) + "," + std::to_string(row.n) + "," +
                      std::to_string(row.dim) + "," + std::to_string(row.generated) + "," +
                      std::to_string(row.new_gens));
    }

    json params{{"mode", a.mode}, {"n_max", a.n_max}, {"r", a.r}};
    params[a.mode == "ordinary" ? "d" : "d_max"] = d_hi;
    json doc{{"command", "profile"},
             {"params", params},
             {"ring", ring_desc},
             {"rows", rows},
             {"summary", json{{"max_new_n", profile.max_new_n()}}}};
    emit(a.format, doc, csv);
    return 0;
}

struct VerifyArgs : CommonArgs {
    int d_max = 3;
    int n_max = 3;
    std::uint64_t seed = 42;
    long long trials = 100;
};

int run_verify(const VerifyArgs& a) {
    std::optional<GradedRing> ring;
    json ring_desc;
    if (int rc = resolve_ring(a, 2, ring, ring_desc)) return rc;
    if (int rc = check_limits(a.force, {{"vars", ring->vars(), kMaxVars},
                                        {"d-max", a.d_max, kMaxD},
                                        {"n-max", a.n_max, kMaxN}}))
        return rc;

    verify::Options opt;
    opt.ring = &*ring;
    opt.d_max = a.d_max;
    opt.n_max = a.n_max;
    opt.seed = a.seed;
    opt.trials = a.trials;
    auto results = verify::run_all(opt);

    json rows = json::array();
    std::vector<std::string> csv = {"suite,checks,failures"};
    long long pass = 0, fail = 0;
    for (const auto& r : results) {
        (r.pass() ? pass : fail) += 1;
        rows.push_back(json{{"checks", r.checks}, {"failures", r.failures}, {"suite", r.name}});
        csv.push_back(r.name + "," + std::to_string(r.checks) + "," + std::to_string(r.failures));
    }

    json doc{{"command", "verify"},
             {"params", json{{"d_max", a.d_max},
                             {"n_max", a.n_max},
                             {"seed", a.seed},
                             {"trials", a.trials}}},
             {"ring", ring_desc},
             {"rows", rows},
             {"summary", json{{"fail", fail}, {"pass", pass}}}};
    emit(a.format, doc, csv);
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact shuffle-algebra computations for secant ideals of Veronese embeddings"};
    app.require_subcommand(1);

    DimsArgs dims_args;
    auto* dims = app.add_subcommand("dims", "Bigraded dimensions of a secant ideal");
    add_common(dims, dims_args);
    dims->add_option("--r", dims_args.r, "Secant order (1 is the Veronese ideal)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* dims_d = dims->add_option("--d", dims_args.d, "Fixed inner degree")
                       ->check(CLI::PositiveNumber);
    auto* dims_dm = dims->add_option("--d-max", dims_args.d_max, "Inner degrees 1..d-max")
                        ->check(CLI::PositiveNumber);
    dims_d->excludes(dims_dm);
    dims_dm->excludes(dims_d);
    dims->add_option("--n-max", dims_args.n_max, "Outer degrees 1..n-max")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    ProfileArgs profile_args;
    auto* profile = app.add_subcommand("profile", "Generator profile of a secant ideal");
    add_common(profile, profile_args);
    profile->add_option("--r", profile_args.r, "Secant order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    profile->add_option("--mode", profile_args.mode,
                        "ordinary: new generators per outer degree at fixed d; "
                        "di: new generators over the full bidegree grid")
        ->check(CLI::IsMember({"ordinary", "di"}))
        ->capture_default_str();
    auto* prof_d = profile->add_option("--d", profile_args.d, "Fixed inner degree (ordinary mode)")
                       ->check(CLI::PositiveNumber);
    auto* prof_dm = profile->add_option("--d-max", profile_args.d_max,
                                        "Inner degrees 1..d-max (di mode)")
                        ->check(CLI::PositiveNumber);
    prof_d->excludes(prof_dm);
    prof_dm->excludes(prof_d);
    profile->add_option("--n-max", profile_args.n_max, "Outer degrees up to n-max")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Randomized and exhaustive identity suites");
    add_common(ver, verify_args);
    ver->add_option("--d-max", verify_args.d_max, "Inner degree bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver->add_option("--n-max", verify_args.n_max, "Outer degree bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    ver->add_option("--seed", verify_args.seed, "Seed for the deterministic generator")
        ->capture_default_str();
    ver->add_option("--trials", verify_args.trials, "Trials per randomized suite")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    dims_args.d_set = dims->count("--d") > 0;
    dims_args.d_max_set = dims->count("--d-max") > 0;
    profile_args.d_set = profile->count("--d") > 0;
    profile_args.d_max_set = profile->count("--d-max") > 0;

    try {
        if (dims->parsed()) return run_dims(dims_args);
        if (profile->parsed()) return run_profile(profile_args);
        if (ver->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
