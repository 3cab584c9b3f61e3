#include "bpfib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "bpfib/audit.hpp"
#include "bpfib/errors.hpp"
#include "bpfib/genmatrix.hpp"
#include "bpfib/json_io.hpp"
#include "bpfib/oracle.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/sequences.hpp"
#include "bpfib/spectral.hpp"

namespace bpfib::cli {

namespace {

const CLI::Validator kRational(
    [](std::string& s) -> std::string {
        try {
            Rational::parse(s);
            return {};
        } catch (const ParseError&) {
            return "'" + s + "' is not a rational number (expected [-]digits[/digits])";
        }
    },
    "RATIONAL");

const CLI::Validator kRationalOrSym(
    [](std::string& s) -> std::string {
        if (s == "sym") return {};
        try {
            Rational::parse(s);
            return {};
        } catch (const ParseError&) {
            return "'" + s + "' is neither a rational number nor 'sym'";
        }
    },
    "RATIONAL|sym");

struct Common {
    std::string a;
    std::string b;
    ParamSet params() const { return ParamSet(Rational::parse(a), Rational::parse(b)); }
};

void add_params(CLI::App* cmd, Common& c) {
    cmd->add_option("--a", c.a, "parameter a (nonzero rational)")->required()->check(kRational);
    cmd->add_option("--b", c.b, "parameter b (nonzero rational)")->required()->check(kRational);
}

template <class T>
std::string matrix_text(const Mat2<T>& m, std::string (*cell)(const T&)) {
    return "[[" + cell(m.e11) + ", " + cell(m.e12) + "], [" + cell(m.e21) + ", " + cell(m.e22) + "]]";
}

std::string cell_rational(const Rational& r) { return r.to_string(); }
std::string cell_poly(const Poly& p) { return p.to_pretty(); }

std::string vec_text(const RationalVec& v) { return "[" + v[0].to_string() + ", " + v[1].to_string() + "]"; }

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// ---------------------------------------------------------------- commands

struct TermArgs {
    Common p;
    std::string kind = "q";
    std::int64_t n = 0;
    bool json = false;
};

void cmd_term(const TermArgs& t, std::ostream& out) {
    const ParamSet p = t.p.params();
    if (t.kind == "qpoly") {
        Poly poly = bp_fib_poly(t.n, p);
        if (t.json)
            out << Json{{"kind", t.kind}, {"n", t.n}, {"a", p.a().to_string()}, {"b", p.b().to_string()},
                        {"value", to_json(poly)}}
                       .dump()
                << "\n";
        else
            out << poly.to_pretty() << "\n";
        return;
    }
    Rational v = t.kind == "q" ? bp_fib(t.n, p) : bp_lucas(t.n, p);
    if (t.json)
        out << Json{{"kind", t.kind}, {"n", t.n}, {"a", p.a().to_string()}, {"b", p.b().to_string()},
                    {"value", to_json(v)}}
                   .dump()
            << "\n";
    else
        out << v << "\n";
}

struct TableArgs {
    Common p;
    std::string kind = "q";
    std::int64_t from = 0;
    std::int64_t to = 10;
    std::string format = "csv";
};

void cmd_table(const TableArgs& t, std::ostream& out) {
    if (t.from > t.to) throw UsageError("--from must not exceed --to");
    const ParamSet p = t.p.params();
    Json rows = Json::array();
    if (t.format == "csv") out << "n,value\n";
    for (std::int64_t n = t.from; n <= t.to; ++n) {
        Rational v = t.kind == "q" ? bp_fib(n, p) : bp_lucas(n, p);
        if (t.format == "csv")
            out << n << "," << v << "\n";
        else
            rows.push_back(Json{{"n", n}, {"value", to_json(v)}});
    }
    if (t.format == "json") out << rows.dump() << "\n";
}

struct MatrixArgs {
    Common p;
    std::string which = "qq";
    std::int64_t n = 1;
    std::string x = "1";
    std::string method = "closed";
    bool json = false;
    bool x_given = false;
};

template <class T>
void emit_matrix(const Mat2<T>& m, bool json, std::string (*cell)(const T&), std::ostream& out) {
    T det = mat_det(m);
    T trace = mat_trace(m);
    if (json) {
        out << Json{{"matrix", to_json(m)}, {"det", to_json(det)}, {"trace", to_json(trace)}}.dump() << "\n";
        return;
    }
    out << matrix_text(m, cell) << "\n";
    out << "det: " << cell(det) << "\n";
    out << "trace: " << cell(trace) << "\n";
}

void cmd_matrix(const MatrixArgs& t, std::ostream& out) {
    const ParamSet p = t.p.params();
    const bool pow = t.method == "pow";
    if (t.which == "ql") {
        if (t.x_given) throw UsageError("--x applies to --which qq only");
        Mat2<Rational> m;
        if (t.n < 0) p.require_nondegenerate("negative powers of Q_l (Q_l is singular when ab = -4)");
        if (pow)
            m = mat_pow(mat_ql(p), t.n);
        else
            m = t.n >= 0 ? ql_pow_closed(t.n, p) : mat_inverse(ql_pow_closed(-t.n, p));
        emit_matrix(m, t.json, cell_rational, out);
        return;
    }
    if (t.x == "sym") {
        Mat2<Poly> m = pow ? mat_pow(mat_qq_symbolic(p), t.n) : qq_pow_closed_symbolic(t.n, p);
        emit_matrix(m, t.json, cell_poly, out);
        return;
    }
    const Rational x = Rational::parse(t.x);
    Mat2<Rational> m = pow ? mat_pow(mat_qq(p, x), t.n) : qq_pow_closed(t.n, p, x);
    emit_matrix(m, t.json, cell_rational, out);
}

struct HadamardArgs {
    Common p;
    std::string which = "q";
    std::int64_t n = 1;
    bool spectrum = false;
    bool json = false;
};

void cmd_hadamard(const HadamardArgs& t, std::ostream& out) {
    const ParamSet p = t.p.params();
    const Family family = t.which == "q" ? Family::q : Family::l;
    Mat2<Rational> h = family == Family::q ? hadamard_q(t.n, p) : hadamard_l(t.n, p);
    std::optional<HadamardSpectrum> s;
    if (t.spectrum) s = hadamard_spectrum(family, t.n, p);
    if (t.json) {
        Json j{{"matrix", to_json(h)}};
        if (s) j["spectrum"] = to_json(*s);
        out << j.dump() << "\n";
        return;
    }
    out << "H: " << matrix_text(h, cell_rational) << "\n";
    if (!s) return;
    out << "det: " << s->determinant << "\n";
    out << "trace: " << s->trace << "\n";
    out << "eigenvalues: " << vec_text(s->eigenvalues) << "\n";
    out << "eigenvectors: " << vec_text(s->eigenvectors[0]) << ", " << vec_text(s->eigenvectors[1]) << "\n";
    out << "inverse: " << (s->inverse ? matrix_text(*s->inverse, cell_rational) : std::string("none (singular)"))
        << "\n";
}

struct BinetArgs {
    Common p;
    std::int64_t n = 0;
    std::string x = "1";
    bool as_float = false;
};

void cmd_binet(const BinetArgs& t, std::ostream& out) {
    const ParamSet p = t.p.params();
    const Rational x = Rational::parse(t.x);
    if (t.as_float)
        out << format_double(binet_q_float(t.n, p, x)) << "\n";
    else
        out << binet_q(t.n, p, x) << "\n";
}

struct VerifyArgs {
    std::string suite = "all";
    std::string grid_path;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& t, std::ostream& out) {
    audit::ParamGrid grid = audit::ParamGrid::defaults();
    if (!t.grid_path.empty()) {
        std::ifstream in(t.grid_path);
        if (!in) throw UsageError("cannot read grid file '" + t.grid_path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw UsageError("grid file '" + t.grid_path + "' is not valid JSON: " + e.what());
        }
        try {
            grid = audit::ParamGrid::from_json(j);
        } catch (const ParseError& e) {
            throw UsageError(std::string("grid file: ") + e.what());
        }
    }
    auto reports = audit::run_audit(grid, audit::parse_suite_list(t.suite));
    if (t.format == "json")
        out << audit::to_json(reports).dump(2) << "\n";
    else
        out << audit::format_text(reports);
    return audit::any_fail(reports) ? exit_parameter : exit_ok;
}

struct BenchArgs {
    Common p;
    std::int64_t n = 0;
    std::string method = "matpow";
    int repeat = 3;
    std::optional<std::uint64_t> modulus;
};

Rational bench_matpow(std::int64_t n, const ParamSet& p) {
    Mat2<Rational> m = mat_pow(mat_qq(p, Rational{1}), n);
    return m.e21 * p.ratio().reciprocal().pow(floor_half(n));
}

std::size_t decimal_digits(const mpz_class& z) {
    std::string s = mpz_class(abs(z)).get_str();
    return s == "0" ? 1 : s.size();
}

void cmd_bench(const BenchArgs& t, std::ostream& out) {
    const ParamSet p = t.p.params();
    if (t.method == "binet-float" && t.modulus) throw UsageError("--mod needs an exact method (naive or matpow)");
    if (t.modulus && t.n < 0) throw UsageError("--mod needs --n >= 0");

    std::vector<double> seconds;
    std::optional<Rational> exact;
    double approx = 0.0;
    for (int r = 0; r < t.repeat; ++r) {
        auto start = std::chrono::steady_clock::now();
        if (t.method == "naive")
            exact = oracle::naive_fib(t.n, p.a(), p.b());
        else if (t.method == "matpow")
            exact = bench_matpow(t.n, p);
        else
            approx = binet_q_float(t.n, p, Rational{1});
        seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    std::vector<double> sorted = seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    const double median = sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;

    Json j{{"method", t.method},     {"n", t.n},           {"a", p.a().to_string()}, {"b", p.b().to_string()},
           {"repeat", t.repeat},     {"seconds", seconds}, {"medianSeconds", median}};
    if (exact) {
        j["digits"] = decimal_digits(exact->numerator());
        j["denominatorDigits"] = decimal_digits(exact->denominator());
        if (j["digits"].get<std::size_t>() <= 60 && exact->denominator() == 1) j["value"] = exact->to_string();
    } else {
        j["value"] = std::isfinite(approx) ? Json(approx) : Json(format_double(approx));
        j["digits"] = nullptr;
    }
    if (t.modulus) {
        const std::uint64_t m = *t.modulus;
        const std::uint64_t residue = oracle::reduce_mod(*exact, m);
        const std::uint64_t oracle_residue = oracle::naive_fib_mod(static_cast<std::uint64_t>(t.n), p.a(), p.b(), m);
        j["mod"] = m;
        j["residue"] = residue;
        j["oracleResidue"] = oracle_residue;
        j["agree"] = residue == oracle_residue;
    }
    out << j.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bi-periodic Fibonacci and Lucas computations", "bpfib"};
    app.require_subcommand(1);

    TermArgs term;
    auto* c_term = app.add_subcommand("term", "one sequence term (exact)");
    add_params(c_term, term.p);
    c_term->add_option("--kind", term.kind, "q, l or qpoly")->check(CLI::IsMember({"q", "l", "qpoly"}));
    c_term->add_option("--n", term.n, "index")->required();
    c_term->add_flag("--json", term.json, "emit JSON");

    TableArgs table;
    auto* c_table = app.add_subcommand("table", "consecutive terms");
    add_params(c_table, table.p);
    c_table->add_option("--kind", table.kind, "q or l")->check(CLI::IsMember({"q", "l"}));
    c_table->add_option("--from", table.from, "first index")->required();
    c_table->add_option("--to", table.to, "last index")->required();
    c_table->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    MatrixArgs matrix;
    auto* c_matrix = app.add_subcommand("matrix", "power of a generating matrix with det and trace");
    add_params(c_matrix, matrix.p);
    c_matrix->add_option("--which", matrix.which, "qq or ql")->check(CLI::IsMember({"qq", "ql"}));
    c_matrix->add_option("--n", matrix.n, "exponent (may be negative)")->required();
    auto* x_opt = c_matrix->add_option("--x", matrix.x, "evaluation point, or 'sym' for polynomial entries")
                      ->check(kRationalOrSym);
    c_matrix->add_option("--method", matrix.method, "pow (binary exponentiation) or closed")
        ->check(CLI::IsMember({"pow", "closed"}));
    c_matrix->add_flag("--json", matrix.json, "emit JSON");

    HadamardArgs hadamard;
    auto* c_hadamard = app.add_subcommand("hadamard", "entrywise product Q^n o Q^-n");
    add_params(c_hadamard, hadamard.p);
    c_hadamard->add_option("--which", hadamard.which, "q or l")->check(CLI::IsMember({"q", "l"}));
    c_hadamard->add_option("--n", hadamard.n, "exponent (>= 0; >= 1 with --spectrum)")->required();
    c_hadamard->add_flag("--spectrum", hadamard.spectrum, "also print det, trace, eigenpairs and inverse");
    c_hadamard->add_flag("--json", hadamard.json, "emit JSON");

    BinetArgs binet;
    auto* c_binet = app.add_subcommand("binet", "q(n)(x) from the Binet formula");
    add_params(c_binet, binet.p);
    c_binet->add_option("--n", binet.n, "index")->required();
    c_binet->add_option("--x", binet.x, "evaluation point (default 1)")->check(kRational);
    c_binet->add_flag("--float", binet.as_float, "double-precision evaluation");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "audit the identities over a parameter grid");
    c_verify->add_option("--suite", verify.suite, "'all' or a comma-separated list of suites");
    c_verify->add_option("--grid", verify.grid_path, "JSON grid file");
    c_verify->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    BenchArgs bench;
    std::uint64_t modulus = 0;
    auto* c_bench = app.add_subcommand("bench", "time one q(n) computation");
    add_params(c_bench, bench.p);
    c_bench->add_option("--n", bench.n, "index")->required();
    c_bench->add_option("--method", bench.method, "naive, matpow or binet-float")
        ->check(CLI::IsMember({"naive", "matpow", "binet-float"}));
    c_bench->add_option("--repeat", bench.repeat, "repetitions (median is reported)")->check(CLI::Range(1, 1000));
    auto* mod_opt = c_bench->add_option("--mod", modulus, "cross-check q(n) mod M against the O(n) modular oracle")
                        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return exit_usage;
    }

    try {
        if (c_term->parsed()) {
            cmd_term(term, out);
        } else if (c_table->parsed()) {
            cmd_table(table, out);
        } else if (c_matrix->parsed()) {
            matrix.x_given = x_opt->count() > 0;
            cmd_matrix(matrix, out);
        } else if (c_hadamard->parsed()) {
            cmd_hadamard(hadamard, out);
        } else if (c_binet->parsed()) {
            cmd_binet(binet, out);
        } else if (c_verify->parsed()) {
            return cmd_verify(verify, out);
        } else if (c_bench->parsed()) {
            if (mod_opt->count() > 0) bench.modulus = modulus;
            cmd_bench(bench, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parameter;
    }
    return exit_ok;
}

} // namespace bpfib::cli
