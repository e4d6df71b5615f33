#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"
#include "chaincodes/polynomial.hpp"
#include "chaincodes/serialize.hpp"
#include "chaincodes/verification.hpp"

namespace chaincodes::cli {

namespace {

constexpr const char* kCertificateSchema = "chaincodes/search-certificate/1";

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string output;
    unsigned workers = 1;
    unsigned budget = 30;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    cmd->add_option("--output", c.output, "Write the artifact to this file instead of stdout");
    cmd->add_option("--workers", c.workers, "Worker threads for scans")->check(CLI::Range(1u, 256u))->capture_default_str();
    cmd->add_option("--budget", c.budget, "log2 of the largest scan or enumeration allowed")
        ->envname("CHAINCODES_BUDGET")
        ->check(CLI::Range(1u, 62u))
        ->capture_default_str();
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw Error(ErrorKind::InvalidParameter, "cannot open output file " + c.output);
    f << text;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidParameter, "cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

Json certificate(const SearchReport& r, bool timing) {
    Json j;
    j["schema"] = kCertificateSchema;
    j["report"] = to_json(r, timing);
    return j;
}

std::string search_text(const SearchReport& r) {
    std::ostringstream s;
    s << r.group_spec << " over " << r.ring_spec << "\n"
      << "  candidates scanned:          " << r.candidates_scanned << "\n"
      << "  idempotents:                 " << r.idempotent_count << "\n"
      << "  self-orthogonal idempotents: " << r.self_orthogonal_idempotents << "\n"
      << "  distinct codes C0:           " << r.codes.size() << "\n"
      << "  best d_H:                    " << r.best_distance << "\n"
      << "  best d_H (self-dual):        " << r.best_self_dual_distance << "\n"
      << "  optimal chains:              " << r.optimal_count << "\n";
    for (const auto& w : r.optimal)
        s << "  witness e = " << format_element(w.idempotent) << "  dim C0 = " << w.chain.codes.front().dim()
          << "  self-dual = " << (w.self_dual ? "yes" : "no") << "\n";
    return s.str();
}

// --- search-selfdual ---------------------------------------------------------

struct SearchArgs {
    Common common;
    std::string group;
    std::string ring = "Z:2^2";
    std::string checkpoint;
    std::string recheck;
    std::size_t witnesses = 4;
    bool timing = false;
};

SearchOptions search_options(const Common& c, const std::string& checkpoint, std::size_t witnesses) {
    SearchOptions o;
    o.scan.budget_log2 = c.budget;
    o.scan.workers = c.workers;
    o.scan.checkpoint_path = checkpoint;
    o.distance.workers = c.workers;
    o.max_witnesses = witnesses;
    return o;
}

std::size_t dihedral_order(const std::string& group_spec, const std::string& ring_spec) {
    const GroupPtr g = parse_group_spec(group_spec);
    if (g->family() != GroupFamily::Dihedral)
        throw Error(ErrorKind::InvalidParameter, "search-selfdual needs a dihedral group");
    const ChainRingSpec rs = parse_ring_spec(ring_spec);
    if (!(rs == ChainRingSpec{2, 2, RingFlavor::IntegerResidue}))
        throw Error(ErrorKind::UnsupportedRing, "the self-dual search runs over Z:2^2 only");
    return g->order();
}

int recheck_certificate(const SearchArgs& a, std::ostream& out) {
    const Json cert = read_json_file(a.recheck);
    if (!cert.contains("schema") || cert.at("schema") != kCertificateSchema || !cert.contains("report"))
        throw Error(ErrorKind::Parse, "not a search certificate");
    const Json& report = cert.at("report");
    const auto best = report.at("best_distance").get<std::size_t>();
    std::size_t checked = 0;
    Json failures = Json::array();
    for (const auto& wj : report.at("optimal")) {
        const SearchWitness w = witness_from_json(wj);
        if (!recheck_witness(w)) failures.push_back(format_element(w.idempotent));
        else if (w.distance != best) failures.push_back(format_element(w.idempotent) + ": distance differs from best");
        ++checked;
    }
    if (checked == 0) failures.push_back("certificate carries no witness");
    Json j{{"certificate", a.recheck}, {"witnesses", checked}, {"verified", failures.empty()}, {"failures", failures}};
    emit(a.common, out, a.common.format == "json" ? j.dump(2) + "\n"
                        : std::string(failures.empty() ? "verified" : "FAILED") + ": " + std::to_string(checked) +
                              " witness(es) from " + a.recheck + "\n");
    if (!failures.empty()) throw VerificationFailure("certificate re-verification failed");
    return kOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    if (!a.recheck.empty()) return recheck_certificate(a, out);
    if (a.group.empty()) throw Error(ErrorKind::InvalidParameter, "--group is required");
    const std::size_t order = dihedral_order(a.group, a.ring);
    const SearchReport r = search_selfdual_dihedral_z4(order, search_options(a.common, a.checkpoint, a.witnesses));
    if (a.common.format == "json") emit(a.common, out, certificate(r, a.timing).dump(2) + "\n");
    else if (a.common.format == "csv") emit(a.common, out, std::string(kTableCsvHeader) + "\n" + table_csv_row(r) + "\n");
    else emit(a.common, out, search_text(r));
    return kOk;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
    Common common;
    std::size_t from = 10;
    std::size_t to = 24;
    std::string ring = "Z:2^2";
    std::string certificate_dir;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.from % 2 || a.to % 2 || a.from < 2 || a.from > a.to)
        throw Error(ErrorKind::InvalidParameter, "--from and --to must be even with 2 <= from <= to");
    if (!a.certificate_dir.empty()) std::filesystem::create_directories(a.certificate_dir);
    std::ostringstream csv, text;
    Json reports = Json::array();
    csv << kTableCsvHeader << "\n";
    text << "2n    d_H  d_H(self-dual)\n";
    for (std::size_t n = a.from; n <= a.to; n += 2) {
        const std::string group = "dihedral:" + std::to_string(n);
        dihedral_order(group, a.ring);
        const SearchReport r = search_selfdual_dihedral_z4(n, search_options(a.common, "", 4));
        csv << table_csv_row(r) << "\n";
        text << std::left << std::setw(6) << n << std::setw(5) << r.best_distance << r.best_self_dual_distance << "\n";
        reports.push_back(to_json(r));
        if (!a.certificate_dir.empty()) {
            std::ofstream f(std::filesystem::path(a.certificate_dir) / ("dihedral_" + std::to_string(n) + ".json"));
            f << certificate(r, false).dump(2) << "\n";
        }
    }
    if (a.common.format == "json") emit(a.common, out, reports.dump(2) + "\n");
    else if (a.common.format == "csv") emit(a.common, out, csv.str());
    else emit(a.common, out, text.str());
    return kOk;
}

// --- lift --------------------------------------------------------------------

struct LiftArgs {
    Common common;
    std::string ring;
    std::string group;
    std::string idempotent;
};

int cmd_lift(const LiftArgs& a, std::ostream& out) {
    const GroupPtr group = parse_group_spec(a.group);
    const RingPtr ring = make_ring(parse_ring_spec(a.ring));
    const FAlgebraElement e = parse_element(a.idempotent, group, ring->p());
    const LiftResult lr = lift_idempotent(e, ring);
    const bool verified = lr.value.is_idempotent() && lr.value.reduce() == e;
    if (a.common.format == "json") {
        Json j{{"group", group->spec()}, {"ring", ring->spec().to_string()}, {"idempotent", format_element(e)},
               {"lift", format_element(lr.value)}, {"iterations", lr.iterations}, {"verified", verified}};
        emit(a.common, out, j.dump(2) + "\n");
    } else {
        emit(a.common, out, format_element(lr.value) + "\nverified: " + (verified ? "true" : "false") +
                                "\niterations: " + std::to_string(lr.iterations) + "\n");
    }
    if (!verified) throw VerificationFailure("lift failed verification");
    return kOk;
}

// --- min-distance ------------------------------------------------------------

struct DistanceArgs {
    Common common;
    std::string code;
    std::string mode = "auto";
};

int cmd_min_distance(const DistanceArgs& a, std::ostream& out) {
    const Json j = read_json_file(a.code);
    Json result;
    if (j.contains("ring")) {
        const RCode c = r_code_from_json(j);
        std::optional<std::size_t> d;
        std::string method = a.mode;
        if (a.mode == "theorem") {
            d = min_hamming_r(c, HammingMode::Theorem, a.common.budget);
        } else if (a.mode == "exhaustive") {
            d = min_hamming_r(c, HammingMode::Exhaustive, a.common.budget);
        } else {
            const auto verdict = decide_relative_projective(c);
            if (std::holds_alternative<VerdictYes>(verdict)) {
                d = min_hamming_r(c, HammingMode::Theorem, a.common.budget);
                method = "theorem";
            } else {
                d = min_hamming_support_scan(c);
                method = "support-scan";
            }
        }
        result = {{"ring", c.ring().spec().to_string()}, {"group", c.group().spec()}, {"log_p_size", c.log_size()},
                  {"method", method}, {"distance", d ? Json(*d) : Json(nullptr)}};
    } else {
        const GroupCodeF c = f_code_from_json(j);
        DistanceOptions opts;
        opts.workers = a.common.workers;
        opts.cutoff_log2 = a.common.budget;
        const auto d = min_hamming_distance_f(c, opts);
        result = {{"p", c.p()}, {"group", c.group().spec()}, {"dim", c.dim()}, {"method", "field"},
                  {"distance", d ? Json(*d) : Json(nullptr)}};
    }
    if (a.common.format == "json") emit(a.common, out, result.dump(2) + "\n");
    else emit(a.common, out, "d_H = " + (result["distance"].is_null() ? std::string("none (zero code)")
                                                                       : std::to_string(result["distance"].get<std::size_t>())) +
                                 " (" + result["method"].get<std::string>() + ")\n");
    return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::string suite;
    std::string group;
    std::string ring;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const GroupPtr group = parse_group_spec(a.group);
    const RingPtr ring = make_ring(parse_ring_spec(a.ring));
    ScanOptions scan;
    scan.budget_log2 = a.common.budget;
    scan.workers = a.common.workers;
    SuiteResult r;
    if (a.suite == "lifting") {
        r = verify_lifting(group, ring);
    } else {
        const ChainUniverse u = build_chain_universe(group, ring, scan);
        if (a.suite == "roundtrip") r = verify_roundtrip(u);
        else if (a.suite == "duality") r = verify_duality(u);
        else if (a.suite == "distance") r = verify_distance(u);
        else if (a.suite == "euclidean") r = verify_euclidean(u);
        else r = verify_parity(u);
    }
    if (a.common.format == "json") {
        Json j{{"suite", r.suite}, {"group", group->spec()}, {"ring", ring->spec().to_string()}, {"passed", r.passed},
               {"checked", r.checked}, {"indeterminate", r.indeterminate}, {"notes", r.notes}};
        emit(a.common, out, j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << r.suite << " " << group->spec() << " " << ring->spec().to_string() << ": " << (r.passed ? "PASS" : "FAIL")
          << " (checked " << r.checked << ", indeterminate " << r.indeterminate << ")\n";
        for (const auto& n : r.notes) s << n << "\n";
        emit(a.common, out, s.str());
    }
    if (!r.passed) throw VerificationFailure("suite " + r.suite + " failed");
    return kOk;
}

// --- factor ------------------------------------------------------------------

struct FactorArgs {
    Common common;
    std::uint32_t p = 2;
    std::size_t n = 1;
};

int cmd_factor(const FactorArgs& a, std::ostream& out) {
    const auto factors = factor_xn_minus_1(a.n, a.p);
    const bool coprime = std::gcd(a.n, static_cast<std::size_t>(a.p)) == 1;
    Json list = Json::array();
    for (const auto& f : factors) list.push_back(f.to_string());
    if (a.common.format == "json") {
        Json j{{"p", a.p}, {"n", a.n}, {"factors", list}};
        if (coprime) j["idempotents"] = std::uint64_t{1} << factors.size();
        emit(a.common, out, j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "x^" << a.n << " - 1 over F_" << a.p << ":\n";
        for (const auto& f : factors) s << "  " << f.to_string() << "\n";
        if (coprime) s << "idempotents of F_" << a.p << "C_" << a.n << ": " << (std::uint64_t{1} << factors.size()) << "\n";
        emit(a.common, out, s.str());
    }
    return kOk;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidParameter:
            return kUsage;
        case ErrorKind::BudgetExceeded:
            return kBudget;
        default:
            return kFailure;
    }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group codes over finite chain rings"};
    app.name("chaincodes");
    app.require_subcommand(1);

    SearchArgs search;
    auto* s = app.add_subcommand("search-selfdual", "Best self-dual-shaped Z/4 dihedral codes by idempotent search");
    add_common(s, search.common, "text");
    s->add_option("--group", search.group, "dihedral:N");
    s->add_option("--ring", search.ring, "Chain ring (Z:2^2)")->capture_default_str();
    s->add_option("--checkpoint", search.checkpoint, "Checkpoint file for resumable scans");
    s->add_option("--max-witnesses", search.witnesses, "Optimal witnesses to keep")->capture_default_str();
    s->add_option("--recheck", search.recheck, "Re-verify a certificate file and exit");
    s->add_flag("--timing", search.timing, "Include wall time in JSON output");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Distance table over 2n = from, from+2, ..., to");
    add_common(t, table.common, "csv");
    t->add_option("--from", table.from)->capture_default_str();
    t->add_option("--to", table.to)->capture_default_str();
    t->add_option("--ring", table.ring)->capture_default_str();
    t->add_option("--certificate-dir", table.certificate_dir, "Write one search certificate per row here");

    LiftArgs lift;
    auto* l = app.add_subcommand("lift", "Lift an idempotent of F_p G to RG");
    add_common(l, lift.common, "text");
    l->add_option("--ring", lift.ring)->required();
    l->add_option("--group", lift.group)->required();
    l->add_option("--idempotent", lift.idempotent)->required();

    DistanceArgs dist;
    auto* d = app.add_subcommand("min-distance", "Minimum Hamming distance of a code stored as JSON");
    add_common(d, dist.common, "text");
    d->add_option("--code", dist.code)->required()->check(CLI::ExistingFile);
    d->add_option("--mode", dist.mode)->check(CLI::IsMember({"auto", "theorem", "exhaustive"}))->capture_default_str();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run a verification suite over every chain of projective codes");
    add_common(v, verify.common, "text");
    v->add_option("--suite", verify.suite)
        ->required()
        ->check(CLI::IsMember({"roundtrip", "duality", "distance", "euclidean", "parity", "lifting"}));
    v->add_option("--group", verify.group)->required();
    v->add_option("--ring", verify.ring)->required();

    FactorArgs factor;
    auto* f = app.add_subcommand("factor", "Factor x^n - 1 over F_p");
    add_common(f, factor.common, "text");
    f->add_option("--p", factor.p)->required();
    f->add_option("--n", factor.n)->required()->check(CLI::PositiveNumber);

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
        report_error(err, "parse", e.what());
        return kUsage;
    }

    try {
        if (*s) return cmd_search(search, out);
        if (*t) return cmd_table(table, out);
        if (*l) return cmd_lift(lift, out);
        if (*d) return cmd_min_distance(dist, out);
        if (*v) return cmd_verify(verify, out);
        return cmd_factor(factor, out);
    } catch (const VerificationFailure& e) {
        report_error(err, "verification-failed", e.what());
        return kVerificationFailed;
    } catch (const Error& e) {
        report_error(err, to_string(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return kFailure;
    }
}

}  // namespace chaincodes::cli
