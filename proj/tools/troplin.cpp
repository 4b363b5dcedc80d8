// troplin: command-line front end for the tropical linear space library.
//
// Exit status: 0 success, 1 invalid input (failed validation, point outside the
// required region, exceeded limits), 2 usage error or malformed JSON, 3 internal error.

#include <troplin/troplin.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using troplin::io::Json;
using troplin::io::to_json;

enum class Format { json, text, dot };

struct RunConfig {
    Format format = Format::json;
    troplin::EnumerationLimits limits;
    std::string input;
    std::string point;
    std::string point_file;
    std::string x;
    std::string x_file;
    std::string basis;
    int n = 0;
    int m = 0;
    std::uint64_t seed = troplin::SelfTestOptions{}.seed;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw troplin::FormatError("<root>", std::string("malformed JSON in ") + path + ": " + ex.what());
    }
}

troplin::PlueckerVector read_plucker(const RunConfig& cfg) { return troplin::io::plucker_from_json(read_json(cfg.input)); }

troplin::PlueckerVector read_valid_plucker(const RunConfig& cfg) {
    auto p = read_plucker(cfg);
    const auto report = troplin::validate(p);
    if (!report.valid()) {
        std::string why = report.failures.empty() ? (report.exchange_failure ? report.exchange_failure->str() : "empty support")
                                                  : report.failures.front().str();
        throw troplin::InvalidArgument("input is not a tropical Plücker vector: " + why);
    }
    return troplin::PlueckerVector::validated(std::move(p));
}

/// Flag text wins over the JSON file; the file holds an array of rationals.
troplin::Point read_point(const std::string& flag, const std::string& file, const char* name) {
    if (!flag.empty()) {
        try {
            return troplin::parse_point(flag);
        } catch (const troplin::InvalidArgument& ex) {
            throw UsageError(std::string("--") + name + ": " + ex.what());
        }
    }
    if (!file.empty()) return troplin::io::point_from_json(read_json(file), name);
    throw UsageError(std::string("missing --") + name + " or --" + name + "-file");
}

troplin::Subset read_basis(const std::string& flag, const troplin::PlueckerVector& p) {
    std::vector<int> elements;
    std::stringstream in(flag);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int e = std::stoi(token, &used);
            if (used != token.size() && token.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(token);
            elements.push_back(e);
        } catch (const std::logic_error&) {
            throw UsageError("--basis: cannot parse '" + token + "'");
        }
    }
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) throw UsageError("--basis: repeated element");
    for (int e : elements) {
        if (e < 1 || e > p.n()) throw UsageError("--basis: element " + std::to_string(e) + " outside 1.." + std::to_string(p.n()));
    }
    const auto b = troplin::Subset::from_elements(elements);
    if (b.size() != p.m()) throw UsageError("--basis: needs exactly m = " + std::to_string(p.m()) + " elements");
    return b;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
    if (cfg.format == Format::text) {
        std::cout << text;
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

void require_not_dot(const RunConfig& cfg, const char* command) {
    if (cfg.format == Format::dot) throw UsageError(std::string(command) + ": dot output is not available");
}

std::string big(const troplin::BigInt& x) { return x.str(); }

std::string fvector_text(const troplin::FVector& f) {
    std::ostringstream out;
    for (int i = 1; i <= f.rank(); ++i) out << "  i=" << i << ": total " << f.at(i).total << ", bounded " << f.at(i).bounded << '\n';
    return out.str();
}

std::string cells_text(const std::vector<troplin::Cell>& cells) {
    std::ostringstream out;
    for (const auto& c : cells) {
        out << "dim " << c.dim << (c.bounded ? " bounded  " : " unbounded") << "  " << c.face.str() << "  witness "
            << troplin::format_point(c.witness) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg) {
    require_not_dot(cfg, "validate");
    const auto p = read_plucker(cfg);
    const auto report = troplin::validate(p);
    std::ostringstream text;
    text << (report.valid() ? "valid" : "invalid") << '\n';
    if (!report.support_nonempty) text << "  support is empty\n";
    for (const auto& f : report.failures) text << "  " << f.str() << '\n';
    if (report.exchange_failure) text << "  " << report.exchange_failure->str() << '\n';
    emit(cfg, to_json(report), text.str());
    return report.valid() ? 0 : 1;
}

int cmd_circuits(const RunConfig& cfg) {
    require_not_dot(cfg, "circuits");
    const auto circuits = troplin::all_circuits(read_valid_plucker(cfg));
    std::ostringstream text;
    for (const auto& c : circuits) text << c.support().str() << "  " << c.vector.str() << '\n';
    emit(cfg, to_json(circuits), text.str());
    return 0;
}

int cmd_member(const RunConfig& cfg) {
    require_not_dot(cfg, "member");
    const auto p = read_valid_plucker(cfg);
    const auto v = read_point(cfg.point, cfg.point_file, "point");
    troplin::detail::require_length(p, v.size(), "member");
    const bool inside = troplin::contains(p, v);
    const auto mv = troplin::matroid_at(p, v);
    Json j{{"point", to_json(v)}, {"member", inside}, {"matroid", to_json(mv)}, {"loops", to_json(troplin::loops(mv))}};
    emit(cfg, j, std::string(inside ? "member" : "not a member") + "\n  M_v " + mv.str() + "\n");
    return 0;
}

int cmd_project(const RunConfig& cfg) {
    require_not_dot(cfg, "project");
    const auto p = read_valid_plucker(cfg);
    const auto y = read_point(cfg.point, cfg.point_file, "point");
    troplin::detail::require_length(p, y.size(), "project");
    const auto basis = cfg.basis.empty() ? troplin::projection_basis(p, y) : read_basis(cfg.basis, p);
    const troplin::LocalContext ctx(p, basis);
    const auto pi = troplin::project(ctx, y);
    Json j{{"basis", to_json(basis)}, {"point", to_json(y)}, {"projection", to_json(pi)}};
    emit(cfg, j, "B " + basis.str() + "\n" + troplin::format_point(pi) + "\n");
    return 0;
}

int cmd_chart(const RunConfig& cfg) {
    require_not_dot(cfg, "chart");
    const auto p = read_valid_plucker(cfg);
    if (cfg.basis.empty()) throw UsageError("chart: --basis is required");
    const troplin::LocalContext ctx(p, read_basis(cfg.basis, p));
    const auto x = read_point(cfg.x, cfg.x_file, "x");
    const auto v = troplin::chart(ctx, x);
    Json j{{"basis", to_json(ctx.basis())}, {"x", to_json(x)}, {"point", to_json(v)}};
    emit(cfg, j, troplin::format_point(v) + "\n");
    return 0;
}

Json bounds_json(const troplin::FVector& f, int n, int m, bool local) {
    Json rows = Json::object();
    for (int i = 1; i <= m; ++i) {
        Json row{{"bounded", f.at(i).bounded},
                 {"bound_bounded", big(troplin::bound_bounded(n, m, i))},
                 {"total", f.at(i).total},
                 {"bound_total", big(troplin::bound_total(n, m, i))}};
        if (local) {
            row["mixed_interior"] = big(troplin::mixed_interior_count(n - m, m, m - i));
            row["mixed_total"] = big(troplin::mixed_total_count(n - m, m, m - i));
        }
        rows[std::to_string(i)] = row;
    }
    return rows;
}

std::string bounds_text(const Json& rows) {
    std::ostringstream out;
    for (const auto& [i, row] : rows.items()) {
        out << "  i=" << i << ": bounded " << row["bounded"] << " (bound " << row["bound_bounded"].get<std::string>() << "), total "
            << row["total"] << " (bound " << row["bound_total"].get<std::string>() << ")";
        if (row.contains("mixed_total")) {
            out << ", fine mixed " << row["mixed_interior"].get<std::string>() << "/" << row["mixed_total"].get<std::string>();
        }
        out << '\n';
    }
    return out.str();
}

int cmd_local(const RunConfig& cfg) {
    require_not_dot(cfg, "local");
    const auto p = read_valid_plucker(cfg);
    if (cfg.basis.empty()) throw UsageError("local: --basis is required");
    const troplin::LocalContext ctx(p, read_basis(cfg.basis, p));
    const auto cells = troplin::enumerate_local_cells(ctx, cfg.limits);
    const auto f = troplin::f_vector(cells, p.m());
    const Json rows = bounds_json(f, p.n(), p.m(), true);
    Json j = to_json(cells);
    j["basis"] = to_json(ctx.basis());
    j["fvector"] = to_json(f)["fvector"];
    j["bounds"] = rows;
    emit(cfg, j, "B " + ctx.basis().str() + ", " + std::to_string(cells.size()) + " cells\n" + cells_text(cells) + bounds_text(rows));
    return 0;
}

int cmd_cells(const RunConfig& cfg) {
    const auto p = read_valid_plucker(cfg);
    const auto cells = troplin::enumerate_cells(p, cfg.limits);
    if (cfg.format == Format::dot) {
        std::cout << troplin::cell_adjacency_dot(cells);
        return 0;
    }
    emit(cfg, to_json(cells), std::to_string(cells.size()) + " cells\n" + cells_text(cells));
    return 0;
}

int cmd_fvector(const RunConfig& cfg) {
    require_not_dot(cfg, "fvector");
    const auto p = read_valid_plucker(cfg);
    const auto cells = troplin::enumerate_cells(p, cfg.limits);
    const auto f = troplin::f_vector(cells, p.m());
    Json j = to_json(f);
    const Json rows = bounds_json(f, p.n(), p.m(), false);
    j["bounds"] = rows;
    std::ostringstream text;
    text << fvector_text(f) << bounds_text(rows);
    if (p.support().size() == troplin::detail::small_binomial(p.n(), p.m())) {
        const auto bound = troplin::binomial(p.n() - 2, p.m() - 1);
        j["facets"] = f.at(1).total;
        j["facet_bound"] = big(bound);
        text << "  facets " << f.at(1).total << " (bound " << bound << ")\n";
    }
    emit(cfg, j, text.str());
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    require_not_dot(cfg, "bounds");
    if (cfg.n < 1 || cfg.m < 1 || cfg.m > cfg.n) throw UsageError("bounds: need 1 <= m <= n");
    Json rows = Json::object();
    std::ostringstream text;
    text << "n=" << cfg.n << " m=" << cfg.m << '\n';
    for (int i = 1; i <= cfg.m; ++i) {
        const long k = cfg.m - i;
        Json row{{"bound_bounded", big(troplin::bound_bounded(cfg.n, cfg.m, i))},
                 {"bound_total", big(troplin::bound_total(cfg.n, cfg.m, i))},
                 {"mixed_interior", big(troplin::mixed_interior_count(cfg.n - cfg.m, cfg.m, k))},
                 {"mixed_total", big(troplin::mixed_total_count(cfg.n - cfg.m, cfg.m, k))}};
        text << "  i=" << i << ": bounded " << row["bound_bounded"].get<std::string>() << ", total "
             << row["bound_total"].get<std::string>() << ", fine mixed " << row["mixed_interior"].get<std::string>() << "/"
             << row["mixed_total"].get<std::string>() << '\n';
        rows[std::to_string(i)] = row;
    }
    emit(cfg, Json{{"n", cfg.n}, {"m", cfg.m}, {"bounds", rows}}, text.str());
    return 0;
}

int cmd_conical(const RunConfig& cfg) {
    require_not_dot(cfg, "conical");
    const auto p = read_valid_plucker(cfg);
    const auto report = troplin::is_conical(p, cfg.limits);
    Json j{{"conical", report.conical}, {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)}};
    emit(cfg, j, report.conical ? "conical, witness " + report.witness->str() + "\n" : std::string("not conical\n"));
    return 0;
}

int cmd_tree(const RunConfig& cfg) {
    const auto p = read_valid_plucker(cfg);
    const auto tree = troplin::build_tree(p, cfg.limits);
    switch (cfg.format) {
        case Format::dot: std::cout << troplin::to_dot(tree); break;
        case Format::text:
            std::cout << troplin::to_text(tree) << "caterpillar: " << (troplin::is_caterpillar(tree) ? "yes" : "no") << '\n';
            break;
        case Format::json: std::cout << to_json(tree).dump(2) << '\n'; break;
    }
    return 0;
}

int cmd_tau(const RunConfig& cfg) {
    require_not_dot(cfg, "tau");
    const auto v = troplin::io::heights_from_json(read_json(cfg.input));
    const auto p = troplin::tau(v);
    std::ostringstream text;
    for (auto s : p.support()) text << s.compact() << ' ' << p[s].str() << '\n';
    emit(cfg, to_json(p), text.str());
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    require_not_dot(cfg, "selftest");
    troplin::SelfTestOptions opt;
    opt.seed = cfg.seed;
    opt.limits = cfg.limits;
    const auto results = troplin::run_selftest(opt);
    Json checks = Json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed();
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed()}, {"trials", r.trials}, {"failures", r.failures}, {"detail", r.detail}});
        text << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.failures << " failures in " << r.trials << " trials";
        if (!r.detail.empty()) text << " (" << r.detail << ")";
        text << '\n';
    }
    emit(cfg, Json{{"seed", cfg.seed}, {"passed", ok}, {"checks", checks}}, text.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical linear spaces: Plücker vectors, valuated circuits, local charts and cell complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}))->capture_default_str();
    app.add_option("--threads", cfg.limits.threads, "Worker threads for cell enumeration")->capture_default_str();
    app.add_option("--max-n", cfg.limits.max_n, "Largest ground set accepted by enumeration")->capture_default_str();
    app.add_option("--max-patterns", cfg.limits.max_patterns, "Tie-pattern budget per enumeration")->capture_default_str();

    std::function<int(const RunConfig&)> handler;
    auto command = [&](const char* name, const char* help, int (*fn)(const RunConfig&), bool takes_input = true) {
        auto* sub = app.add_subcommand(name, help);
        if (takes_input) sub->add_option("input", cfg.input, "Input JSON file")->required();
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    command("validate", "Check the tropical Plücker relations", cmd_validate);
    command("circuits", "List the valuated circuits", cmd_circuits);
    auto* member = command("member", "Test membership of a point in L(p)", cmd_member);
    member->add_option("--point", cfg.point, "Comma-separated rationals");
    member->add_option("--point-file", cfg.point_file, "JSON array of rationals");
    auto* project = command("project", "Tropical projection onto L(p)", cmd_project);
    project->add_option("--basis", cfg.basis, "Comma-separated basis (default: least basis of M_y)");
    project->add_option("--point", cfg.point, "Comma-separated rationals");
    project->add_option("--point-file", cfg.point_file, "JSON array of rationals");
    auto* chart = command("chart", "Evaluate the local chart", cmd_chart);
    chart->add_option("--basis", cfg.basis, "Comma-separated basis");
    chart->add_option("--x", cfg.x, "Comma-separated rationals, one per basis element");
    chart->add_option("--x-file", cfg.x_file, "JSON array of rationals");
    auto* local = command("local", "Cells, f-vector and bounds of a local space", cmd_local);
    local->add_option("--basis", cfg.basis, "Comma-separated basis");
    command("cells", "Cells of L(p)", cmd_cells);
    command("fvector", "f-vector of L(p) with bound columns", cmd_fvector);
    auto* bounds = command("bounds", "Bound tables and fine mixed subdivision counts", cmd_bounds, false);
    bounds->add_option("--n", cfg.n, "Ground set size")->required();
    bounds->add_option("--m", cfg.m, "Rank")->required();
    command("conical", "Test whether all bounded cells share a basis", cmd_conical);
    command("tree", "Tree of a rank-2 tropical linear space", cmd_tree);
    command("tau", "Plücker vector of a height matrix", cmd_tau);
    auto* selftest = command("selftest", "Randomized property suite", cmd_selftest, false);
    selftest->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }
    cfg.format = format == "text" ? Format::text : format == "dot" ? Format::dot : Format::json;

    try {
        return handler(cfg);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const troplin::FormatError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const troplin::InternalError& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return 3;
    } catch (const troplin::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
