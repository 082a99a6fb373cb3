#include <umemura/umemura.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using namespace umemura;

enum exit_code : int { ok = 0, verdict_failed = 1, invalid_input = 2, io_error = 3, internal_error = 4 };

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string &text, const std::string &out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!std::cout) {
            throw io_failure("cannot write to stdout");
        }
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        throw io_failure("cannot open '" + out + "' for writing");
    }
    f << text;
    if (!f) {
        throw io_failure("write to '" + out + "' failed");
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw io_failure("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

// Largest ground-set weight n + 2m accepted by compute; beyond it the
// expansions are no longer practical.
constexpr int max_weight = 24;

struct compute_opts {
    std::optional<int> pos_n, pos_m, pos_k;
    std::optional<int> n, m, k;
    std::string format = "text";
    std::string out;
};

int run_compute(const compute_opts &o)
{
    auto pick = [](const std::optional<int> &flag, const std::optional<int> &pos, const char *name) {
        if (flag && pos && *flag != *pos) {
            throw usage_error(std::string("conflicting values for ") + name);
        }
        if (flag) {
            return *flag;
        }
        if (pos) {
            return *pos;
        }
        throw usage_error(std::string("missing ") + name);
    };
    const int n = pick(o.n, o.pos_n, "n");
    const int m = pick(o.m, o.pos_m, "m");
    const int k = o.k || o.pos_k ? pick(o.k, o.pos_k, "k") : 0;
    check_k(n, m, k);
    if (n + 2 * m > max_weight) {
        throw usage_error("n + 2m must not exceed " + std::to_string(max_weight));
    }
    const mpoly u = u_gen(n, m, k);
    if (o.format == "text") {
        emit(to_canonical_text(u) + "\n", o.out);
    } else if (o.format == "latex") {
        emit(u_gen_latex(n, m, k) + "\n", o.out);
    } else {
        nlohmann::json j{{"schema", 1},
                         {"n", n},
                         {"m", m},
                         {"k", k},
                         {"variables", {"z", "w", "a", "b"}},
                         {"text", to_canonical_text(u)},
                         {"polynomial", to_json(u)}};
        emit(dump(j), o.out);
    }
    return ok;
}

std::string report_line(const identity_report &r, const std::vector<known_discrepancy> &known)
{
    std::string verdict;
    if (r.status == check_status::pass) {
        verdict = "PASS";
    } else if (r.status == check_status::conditional_pass) {
        verdict = "PASS*";
    } else {
        verdict = is_known(r, known) ? "KNOWN" : "FAIL";
    }
    std::string line = verdict + "  " + r.id + " " + r.params.dump();
    if (!r.ok() && !r.witness_text.empty()) {
        std::string w = r.witness_text;
        if (w.size() > 160) {
            w = w.substr(0, 157) + "...";
        }
        line += "  witness: " + w;
    }
    return line + "\n";
}

struct verify_opts {
    std::vector<std::string> ids;
    std::optional<int> max_n, max_m;
    std::string known_file;
    std::string format = "text";
    std::string out;
    bool no_timing = false;
};

int run_verify(const verify_opts &o)
{
    for (const auto &id : o.ids) {
        if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
            throw usage_error("unknown identity id '" + id + "'");
        }
    }
    suite_bounds b;
    if (o.max_n) {
        const int n = *o.max_n;
        if (n < 0) {
            throw usage_error("--max-n must be nonnegative");
        }
        b.recurrence_max_n = n;
        b.reduction_max_n = n;
        b.ratio_max_k = n;
        b.factorization_max = n + o.max_m.value_or(b.recurrence_max_m);
    }
    if (o.max_m) {
        const int m = *o.max_m;
        if (m < 0) {
            throw usage_error("--max-m must be nonnegative");
        }
        b.recurrence_max_m = m;
        b.reduction_max_m = m;
        b.b1_shift_max_m = m;
        b.conjecture_max_m = m;
        b.ratio_max_m = m;
        b.vanishing_max_m = m;
    }
    if (o.max_n || o.max_m) {
        const int weight = o.max_n.value_or(b.recurrence_max_n) + 2 * o.max_m.value_or(b.recurrence_max_m);
        b.residue_max_weight = std::min(b.residue_max_weight, weight);
        b.integrality_max_weight = std::min(b.integrality_max_weight, weight);
    }
    std::vector<known_discrepancy> known = default_known_discrepancies();
    if (!o.known_file.empty()) {
        const std::string text = read_file(o.known_file);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw usage_error("known-discrepancy file is not valid JSON: " + std::string(e.what()));
        }
        known = known_discrepancies_from_json(j);
    }
    const auto reports = run_suite(b, o.ids);
    const auto s = summarize(reports, known);
    if (o.format == "json") {
        emit(dump(suite_to_json(reports, known, !o.no_timing)), o.out);
    } else {
        std::string text;
        for (const auto &r : reports) {
            text += report_line(r, known);
        }
        text += "summary: " + std::to_string(reports.size()) + " checks, " + std::to_string(s.passed) + " passed, " +
                std::to_string(s.failed_known) + " known discrepancies, " + std::to_string(s.failed_unexpected) + " unexpected failures\n";
        emit(text, o.out);
    }
    return s.failed_unexpected == 0 ? ok : verdict_failed;
}

struct conjecture_opts {
    int max_m = 6;
    std::string format = "text";
    std::string out;
    bool no_timing = false;
};

int run_scan_conjecture(const conjecture_opts &o)
{
    if (o.max_m < 1) {
        throw usage_error("--max-m must be at least 1");
    }
    std::vector<identity_report> reports;
    for (int m = 1; m <= o.max_m; ++m) {
        reports.push_back(check_conjecture(m, conjecture_form::negative_b));
        reports.push_back(check_conjecture(m, conjecture_form::positive_b));
    }
    if (o.format == "json") {
        emit(dump(suite_to_json(reports, {}, !o.no_timing)), o.out);
    } else {
        std::string text;
        for (const auto &r : reports) {
            text += report_line(r, {});
        }
        emit(text, o.out);
    }
    return ok;
}

struct residual_opts {
    std::string case_id;
    std::vector<double> ts;
    double b1 = 0.3, b2 = 0.2;
    int n = 1, m = 0;
    std::string param = "half-angle";
    std::string format = "text";
    std::string out;
};

int run_residual(const residual_opts &o)
{
    const auto &cases = residual_cases();
    if (std::find(cases.begin(), cases.end(), o.case_id) == cases.end()) {
        throw usage_error("unknown residual case '" + o.case_id + "'");
    }
    if (o.n < 0 || o.m < 0 || o.n + 2 * o.m > max_weight) {
        throw usage_error("n and m must be nonnegative with n + 2m <= " + std::to_string(max_weight));
    }
    residual_request rq;
    rq.n = o.n;
    rq.m = o.m;
    rq.b1 = o.b1;
    rq.b2 = o.b2;
    if (!o.ts.empty()) {
        rq.ts.assign(o.ts.begin(), o.ts.end());
    }
    rq.param = o.param == "full-angle" ? parametrization::full_angle : parametrization::half_angle;
    const auto rows = residual_table(o.case_id, rq);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : rows) {
            arr.push_back(r.to_json());
        }
        emit(dump({{"schema", 1}, {"parametrization", to_string(rq.param)}, {"rows", arr}}), o.out);
    } else {
        std::ostringstream s;
        s << std::setprecision(6) << std::scientific;
        s << "case t linear_bracket squared_bracket squared_relative\n";
        for (const auto &r : rows) {
            s << r.case_id << " " << static_cast<double>(r.t);
            if (!r.error.empty()) {
                s << " error: " << r.error << "\n";
                continue;
            }
            for (const auto &v : {r.linear_bracket, r.squared_bracket, r.squared_relative}) {
                s << " " << (v ? static_cast<double>(*v) : 0.0);
            }
            s << "\n";
        }
        emit(s.str(), o.out);
    }
    return ok;
}

struct resolve_opts {
    int max_index = 5;
    std::string format = "json";
    std::string out;
};

int run_resolve(const resolve_opts &o)
{
    if (o.max_index < 1 || o.max_index > 6) {
        throw usage_error("--max-index must be between 1 and 6");
    }
    resolve_bounds b;
    b.max_index = o.max_index;
    auto j = resolve_conventions(b).to_json();
    if (o.format == "json") {
        nlohmann::json out{{"schema", 1}};
        out.update(j);
        emit(dump(out), o.out);
    } else {
        std::string text = "status: " + j["status"].get<std::string>() + "\n";
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "status") {
                text += it.key() + ": " + it.value().dump() + "\n";
            }
        }
        emit(text, o.out);
    }
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact generalized Umemura polynomials and identity checks"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "latex", "json"};
    const std::vector<std::string> report_formats{"text", "json"};

    compute_opts co;
    auto *compute = app.add_subcommand("compute", "expand U_{n,m}^{(k)}(z, w; a, b)");
    compute->add_option("N", co.pos_n, "n (or --n)");
    compute->add_option("M", co.pos_m, "m (or --m)");
    compute->add_option("K", co.pos_k, "k (or --k), default 0");
    compute->add_option("--n", co.n, "n");
    compute->add_option("--m", co.m, "m");
    compute->add_option("--k", co.k, "k (default 0)");
    compute->add_option("--format", co.format)->check(CLI::IsMember(formats));
    compute->add_option("--out", co.out, "output file (default stdout)");

    verify_opts vo;
    auto *verify = app.add_subcommand("verify", "run identity checks; exits 1 on unexpected failures");
    verify->add_option("ids", vo.ids, "identity ids (default all)");
    verify->add_option("--max-n", vo.max_n);
    verify->add_option("--max-m", vo.max_m);
    verify->add_option("--known-discrepancies", vo.known_file, "JSON list of tolerated failures");
    verify->add_option("--format", vo.format)->check(CLI::IsMember(report_formats));
    verify->add_option("--out", vo.out);
    verify->add_flag("--no-timing", vo.no_timing, "write 0 for wall_time_ms");

    conjecture_opts so;
    auto *scan = app.add_subcommand("scan-conjecture", "test the bilinear identity in both sign forms");
    scan->add_option("--max-m", so.max_m);
    scan->add_option("--format", so.format)->check(CLI::IsMember(report_formats));
    scan->add_option("--out", so.out);
    scan->add_flag("--no-timing", so.no_timing);

    residual_opts ro;
    auto *residual = app.add_subcommand("residual", "numeric residual table for a Painleve case");
    std::string cases_help;
    for (const auto &c : residual_cases()) {
        cases_help += (cases_help.empty() ? "" : ", ") + c;
    }
    residual->add_option("case", ro.case_id, cases_help)->required();
    residual->add_option("--t", ro.ts, "sample point, t > 1 (repeatable)");
    residual->add_option("--b1", ro.b1);
    residual->add_option("--b2", ro.b2);
    residual->add_option("--n", ro.n);
    residual->add_option("--m", ro.m);
    residual->add_option("--parametrization", ro.param)->check(CLI::IsMember({"half-angle", "full-angle"}));
    residual->add_option("--format", ro.format)->check(CLI::IsMember(report_formats));
    residual->add_option("--out", ro.out);

    resolve_opts rso;
    auto *resolve = app.add_subcommand("resolve", "search index conventions making the three family definitions agree");
    resolve->add_option("--max-index", rso.max_index);
    resolve->add_option("--format", rso.format)->check(CLI::IsMember(report_formats));
    resolve->add_option("--out", rso.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return invalid_input;
    }

    try {
        if (*compute) {
            return run_compute(co);
        }
        if (*verify) {
            return run_verify(vo);
        }
        if (*scan) {
            return run_scan_conjecture(so);
        }
        if (*residual) {
            return run_residual(ro);
        }
        if (*resolve) {
            return run_resolve(rso);
        }
    } catch (const io_failure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const branch_domain &e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::invalid_argument &e) {
        // usage_error, invalid_k, parse_error and malformed known-discrepancy files
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return internal_error;
}
