// schurkit: structure, tensor squares and exponent bounds of small polycyclic groups.
//
// Exit codes: 0 ok, 1 red alert or failed check, 2 validation or usage error,
// 3 missing or unreadable file, 4 unknown lemma id, 5 budget or size limit.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "schurkit/catalog.hpp"
#include "schurkit/conjectures.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/identity.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/report.hpp"

namespace fs = std::filesystem;
using namespace schurkit;

namespace {

enum Exit { ok = 0, red_alert = 1, invalid = 2, missing = 3, unknown_lemma = 4, budget = 5 };

struct Globals {
    std::uint64_t seed = 1;
    bool verbose = false;
};

Globals globals;

void log(const std::string& msg) {
    if (globals.verbose) std::cerr << "schurkit: " << msg << "\n";
}

bool is_catalog(const std::string& s) { return s.rfind("catalog:", 0) == 0; }

PcPresentation load(const std::string& input) {
    if (is_catalog(input)) return catalog_group(std::string_view(input));
    return read_pc_file(input);
}

void dump_overlaps(const InconsistentPresentation& e) {
    std::cerr << "inconsistent presentation: " << e.report().failures.size() << " failed overlap(s)\n";
    for (const auto& f : e.report().failures) {
        std::cerr << "  " << f.kind;
        for (int g : f.gens) std::cerr << " g" << g;
        std::cerr << ": [";
        for (std::size_t i = 0; i < f.lhs.size(); ++i) std::cerr << (i ? " " : "") << f.lhs[i];
        std::cerr << "] != [";
        for (std::size_t i = 0; i < f.rhs.size(); ++i) std::cerr << (i ? " " : "") << f.rhs[i];
        std::cerr << "]\n";
    }
}

// File output when a path is given, stdout otherwise.
void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

// "0..6", "1,3,5" or a mix such as "0..3,9"
std::vector<long> parse_points(const std::string& spec) {
    std::vector<long> pts;
    std::stringstream ss(spec);
    std::string item;
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) throw ValidationError("bad point list: " + spec);
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            pts.push_back(number(item));
            continue;
        }
        const long lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
        if (hi < lo || hi - lo > 10'000) throw ValidationError("bad point range: " + item);
        for (long n = lo; n <= hi; ++n) pts.push_back(n);
    }
    if (pts.empty()) throw ValidationError("empty point list");
    return pts;
}

std::string data_dir() {
    if (const char* d = std::getenv("SCHURKIT_DATA")) return d;
    return SCHURKIT_DATA_DIR;
}

const std::map<std::string, std::string>& lemma_files() {
    static const std::map<std::string, std::string> m = {
        {"4.1", "power_of_product.id"},
        {"4.2i", "conjugate_by_power.id"},
        {"4.2ii", "commutator_of_power.id"},
        {"1.1", "commutator_expansion.id"},
    };
    return m;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string input, format = "json", output;
};

int cmd_analyze(const AnalyzeArgs& a) {
    const PcGroup g(load(a.input));
    log("analyzing " + a.input + ", order " + std::to_string(g.order()));
    const StructureReport s = structure(g);
    if (a.format == "text") {
        std::string text = structure_text(s);
        text += "classes             ";
        for (const auto& id : classify(s)) text += id + " ";
        emit(text + "\n", a.output);
        return ok;
    }
    Json j;
    j["schema"] = structure_schema;
    j["input"] = a.input;
    j["presentation"] = serialize(g.presentation());
    j["structure"] = to_json(s);
    j["classes"] = classify(s);
    emit(dump(j), a.output);
    return ok;
}

struct IdentityArgs {
    std::string lemma, points, file, format = "text";
};

int cmd_verify_identities(const IdentityArgs& a) {
    std::string path = a.file;
    if (path.empty()) {
        const auto it = lemma_files().find(a.lemma);
        if (it == lemma_files().end()) {
            std::cerr << "unknown lemma id '" << a.lemma << "'; known ids: 4.1 4.2i 4.2ii 1.1\n";
            return unknown_lemma;
        }
        path = (fs::path(data_dir()) / "identities" / it->second).string();
    }
    const auto templates = read_identity_file(path);
    std::optional<std::vector<long>> pts;
    if (!a.points.empty()) pts = parse_points(a.points);

    bool all = true;
    Json reports = Json::array();
    std::string text;
    for (const auto& t : templates) {
        log("verifying " + t.label + " at class " + std::to_string(t.nil_class));
        const VerificationReport r = pts && t.uses_parameter() ? verify_identity(t, *pts) : verify_identity(t);
        all = all && r.all_equal;
        reports.push_back(to_json(r));
        text += format_report(r);
    }
    if (a.format == "json") {
        Json j;
        j["schema"] = identity_schema;
        j["source"] = a.file.empty() ? "lemma " + a.lemma : a.file;
        j["reports"] = reports;
        j["all_equal"] = all;
        std::cout << dump(j);
    } else {
        std::cout << text << (all ? "PASS\n" : "FAIL\n");
    }
    return all ? ok : red_alert;
}

struct TensorArgs {
    std::string input, format = "json", output, dump_table, tier = "auto";
    std::uint32_t budget = 0;
    bool extended = false, full_relations = false, micro = false;
};

int cmd_tensor(const TensorArgs& a) {
    const PcGroup g(load(a.input));
    TensorOptions opts;
    opts.budget = a.budget ? a.budget : default_budget();
    opts.extended = a.extended;
    opts.full_relations = a.full_relations;
    opts.keep_table = !a.dump_table.empty();
    opts.tier = a.tier == "tensor" ? TierMode::tensor : a.tier == "exterior" ? TierMode::exterior : TierMode::automatic;
    log("tensor square of " + a.input + ", budget " + std::to_string(opts.budget));
    TensorSquareResult r = tensor_square(g, opts);
    if (r.complete() && a.micro) {
        const StructureReport s = structure(g);
        CheckOptions co;
        co.seed = globals.seed;
        for (auto& c : micro_lemma_checks(s, r, co)) r.checks.push_back(std::move(c));
    }
    if (r.table) emit(r.table->dump(), a.dump_table);
    if (a.format == "text") {
        emit(tensor_text(r), a.output);
    } else {
        Json j;
        j["schema"] = tensor_schema;
        j["input"] = a.input;
        j["budget"] = opts.budget;
        j["seed"] = globals.seed;
        j["result"] = to_json(r);
        emit(dump(j), a.output);
    }
    if (!r.complete()) {
        std::cerr << "coset budget of " << opts.budget << " exhausted\n";
        return budget;
    }
    return r.checks_passed() ? ok : red_alert;
}

struct ScanArgs {
    std::vector<std::string> inputs;
    std::string format = "json", report;
    std::uint32_t budget = 0;
    bool no_micro = false;
};

// Presentation files of a directory in name order; unreadable or malformed
// files become rejected rows.
void collect_dir(const fs::path& dir, std::vector<ScanInput>& out) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pc") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        ScanInput in;
        in.source = f.filename().string();
        try {
            in.pcp = read_pc_file(f.string());
        } catch (const Error& e) {
            in.error = e.what();
        }
        out.push_back(std::move(in));
    }
}

int cmd_scan(const ScanArgs& a) {
    std::vector<ScanInput> inputs;
    for (const auto& src : a.inputs) {
        if (src == "catalog:default" || src == "catalog:") {
            for (const auto& spec : default_catalog()) inputs.push_back({"catalog:" + spec, catalog_group(spec), ""});
        } else if (is_catalog(src)) {
            inputs.push_back({src, catalog_group(std::string_view(src)), ""});
        } else if (fs::is_directory(src)) {
            collect_dir(src, inputs);
        } else if (fs::exists(src)) {
            ScanInput in;
            in.source = fs::path(src).filename().string();
            try {
                in.pcp = read_pc_file(src);
            } catch (const Error& e) {
                in.error = e.what();
            }
            inputs.push_back(std::move(in));
        } else {
            throw IoError("no such file or directory: " + src);
        }
    }
    ScanOptions opts;
    opts.budget = a.budget ? a.budget : default_budget();
    opts.seed = globals.seed;
    opts.micro_checks = !a.no_micro;
    ScanReport rep;
    rep.seed = opts.seed;
    rep.budget = opts.budget;
    for (const auto& in : inputs) {
        log("scanning " + in.source);
        rep.rows.push_back(scan_one(in, opts));
        const ScanRow& r = rep.rows.back();
        if (r.status != "ok") log("  " + r.status + (r.error.empty() ? "" : ": " + r.error));
        if (r.red_alert()) std::cerr << "RED ALERT in " << r.source << "\n";
    }
    std::string out = a.format == "csv" ? scan_csv(rep) : a.format == "text" ? scan_text(rep) : dump(to_json(rep));
    emit(out, a.report);
    if (rep.red_alerts() > 0 || rep.check_failures() > 0) return red_alert;
    if (rep.rejected() > 0) return invalid;
    return ok;
}

struct OracleArgs {
    std::string input;
    std::uint32_t budget = 0;
};

int cmd_oracle(const OracleArgs& a) {
    const PcGroup g(load(a.input));
    const std::uint32_t b = a.budget ? a.budget : default_budget();
    Json j;
    j["schema"] = "schurkit.oracle/1";
    j["input"] = a.input;
    j["order"] = g.order();
    const AssociativityResult as = check_associativity(g, 8'000'000, 100'000, globals.seed);
    j["associativity"] = {{"associative", as.associative}, {"exhaustive", as.exhaustive}, {"triples", as.triples}};
    const StructureReport s = structure(g);
    j["abelian"] = s.is_abelian();
    if (s.is_abelian()) {
        j["abelian_invariants"] = s.abelianization;
        j["abelian_tensor_order"] = abelian_tensor_order(s.abelianization);
        j["abelian_multiplier_invariants"] = abelian_exterior_square(s.abelianization);
    }
    if (g.order() <= 32) {
        log("enumerating the defining tensor presentation");
        const auto t = tensor_order_by_definition(g, b);
        j["tensor_order_by_definition"] = t ? Json(*t) : Json(nullptr);
    } else {
        j["tensor_order_by_definition"] = nullptr;
    }
    std::cout << dump(j);
    return as.associative ? ok : red_alert;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"schurkit: Schur multipliers and exponent bounds of small polycyclic groups"};
    app.require_subcommand(1);
    app.add_option("--seed", globals.seed, "seed for sampled property checks");
    app.add_flag("--verbose", globals.verbose, "log progress to stderr");
    const std::vector<std::string> formats{"json", "text"};
    const std::vector<std::string> scan_formats{"json", "csv", "text"};

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "structure report of a presentation");
    analyze->add_option("input", an.input, "PC-FILE path or catalog:family:params")->required();
    analyze->add_option("--format", an.format)->check(CLI::IsMember(formats));
    analyze->add_option("--output", an.output, "write to a file instead of stdout");

    IdentityArgs id;
    auto* verify = app.add_subcommand("verify-identities", "check commutator identities by collection");
    auto* lemma = verify->add_option("--lemma", id.lemma, "4.1, 4.2i, 4.2ii or 1.1");
    auto* file = verify->add_option("--file", id.file, "identity template file");
    lemma->excludes(file);
    verify->add_option("--points", id.points, "parameter values, e.g. 0..6 or 0,2,5");
    verify->add_option("--format", id.format)->check(CLI::IsMember(formats));

    TensorArgs te;
    auto* tensor = app.add_subcommand("tensor", "nonabelian tensor square and Schur multiplier");
    tensor->add_option("input", te.input, "PC-FILE path or catalog:family:params")->required();
    tensor->add_option("--budget", te.budget, "coset budget (default SCHURKIT_BUDGET or 2000000)");
    tensor->add_option("--dump-table", te.dump_table, "write the final coset table to a file");
    tensor->add_option("--tier", te.tier, "auto, exterior or tensor")
        ->check(CLI::IsMember(std::vector<std::string>{"auto", "exterior", "tensor"}));
    tensor->add_flag("--extended", te.extended, "allow groups up to order 243");
    tensor->add_flag("--full-relations", te.full_relations, "instantiate relations on all triples (|G| <= 16)");
    tensor->add_flag("--checks", te.micro, "also run the weight and power identities inside nu(G)");
    tensor->add_option("--format", te.format)->check(CLI::IsMember(formats));
    tensor->add_option("--output", te.output, "write to a file instead of stdout");

    ScanArgs sc;
    auto* scan = app.add_subcommand("scan", "batch report over catalog groups or presentation files");
    scan->add_option("inputs", sc.inputs, "directories, PC-FILEs, catalog:default or catalog:family:params")
        ->required();
    scan->add_option("--report", sc.report, "write the report to a file instead of stdout");
    scan->add_option("--format", sc.format)->check(CLI::IsMember(scan_formats));
    scan->add_option("--budget", sc.budget, "coset budget per group");
    scan->add_flag("--no-checks", sc.no_micro, "skip the element-level identity checks");

    OracleArgs orc;
    auto* oracle = app.add_subcommand("oracle", "independent cross-check computations");
    oracle->add_option("input", orc.input, "PC-FILE path or catalog:family:params")->required();
    oracle->add_option("--budget", orc.budget, "coset budget for the defining presentation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : invalid;
    }

    try {
        if (*analyze) return cmd_analyze(an);
        if (*verify) {
            if (id.lemma.empty() && id.file.empty()) {
                std::cerr << "verify-identities needs --lemma or --file\n";
                return invalid;
            }
            return cmd_verify_identities(id);
        }
        if (*tensor) return cmd_tensor(te);
        if (*scan) return cmd_scan(sc);
        if (*oracle) return cmd_oracle(orc);
    } catch (const InconsistentPresentation& e) {
        dump_overlaps(e);
        return invalid;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return missing;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return invalid;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return invalid;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return budget;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return red_alert;
    }
    return ok;
}
