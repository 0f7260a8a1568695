#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "szegoq/eigsolve.hpp"
#include "szegoq/quadrature.hpp"
#include "szegoq/rs_reference.hpp"
#include "szegoq/serialize.hpp"

namespace {

using namespace szegoq;

int max_n_cap() {
    if (const char* env = std::getenv("SZEGOQ_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 512;
}

Complex parse_u(const std::string& text) {
    if (text.rfind("angle:", 0) == 0) {
        double theta = std::stod(text.substr(6));
        return std::polar(1.0, theta);
    }
    double re = 0.0, im = 0.0;
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        re = std::stod(text);
    } else {
        re = std::stod(text.substr(0, comma));
        im = std::stod(text.substr(comma + 1));
    }
    Complex u(re, im);
    double mod = std::abs(u);
    if (std::abs(mod - 1.0) > 1e-6)
        throw NonUnimodularU("|u| = " + std::to_string(mod) + " deviates beyond 1e-6");
    return u / mod;
}

struct CommonOptions {
    std::string measure;
    std::string schur_file;
    double q = 0.5;
    int n = 10;
    std::string u_text = "1";
    std::string ordering = "balanced0";
    std::string method = "cmv";
    std::string format = "json";
    std::string output;
};

void add_measure_flags(CLI::App* cmd, CommonOptions& opt) {
    auto* measure = cmd->add_option("--measure", opt.measure, "rogers-szego or lebesgue")
                        ->check(CLI::IsMember({"rogers-szego", "lebesgue"}));
    auto* file = cmd->add_option("--schur-file", opt.schur_file,
                                 "text file with one re,im parameter per line");
    measure->excludes(file);
    file->excludes(measure);
    cmd->add_option("--q", opt.q, "wrapped-Gaussian parameter in (0,1)");
}

// Parameters sized so every route up to rule size n works (roots
// needs delta_n, the eigenvalue routes only delta_{n-1}).
SchurSequence make_schur(const CommonOptions& opt, int count) {
    if (!opt.schur_file.empty()) {
        SchurSequence s = read_schur_file(opt.schur_file);
        if (s.n_max() < count)
            throw DomainError("schur file provides " + std::to_string(s.n_max()) +
                              " parameters, need " + std::to_string(count));
        return s;
    }
    if (opt.measure == "lebesgue") return SchurSequence::lebesgue(count);
    return SchurSequence::rogers_szego(opt.q, count);
}

std::ostream& open_output(const CommonOptions& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw DomainError("cannot open output file " + opt.output);
    return file;
}

QuadratureRule build_rule(const CommonOptions& opt) {
    Complex u = parse_u(opt.u_text);
    if (opt.method == "hessenberg")
        return rule_via_hessenberg(make_schur(opt, std::max(1, opt.n - 1)), opt.n, u);
    if (opt.method == "cmv")
        return rule_via_cmv(make_schur(opt, std::max(1, opt.n - 1)), opt.n, u);
    GeneratingSequence ord = GeneratingSequence::parse(opt.ordering, opt.n);
    return rule_via_roots(make_schur(opt, opt.n), ord, opt.n, u);
}

int cmd_rule(const CommonOptions& opt) {
    QuadratureRule rule = build_rule(opt);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "csv")
        write_csv(out, rule);
    else
        write_json(out, rule);
    return 0;
}

int cmd_matrix(const CommonOptions& opt, const std::string& kind) {
    Complex u = parse_u(opt.u_text);
    OperatorMatrix m{Eigen::MatrixXcd(), MatrixKind::cmv};
    if (kind == "hessenberg") {
        m = hessenberg(make_schur(opt, opt.n), opt.n);
    } else if (kind == "hessenberg-u") {
        m = hessenberg_truncated_u(make_schur(opt, std::max(1, opt.n - 1)), opt.n, u);
    } else if (kind == "cmv") {
        m = cmv(make_schur(opt, opt.n), opt.n);
    } else if (kind == "cmv-u") {
        m = cmv_truncated_u(make_schur(opt, std::max(1, opt.n - 1)), opt.n, u);
    } else if (kind == "cmv-transpose") {
        m = cmv_transpose_for_ceil_ordering(make_schur(opt, opt.n), opt.n);
    } else if (kind == "cmv-adjoint") {
        m = cmv_adjoint(make_schur(opt, opt.n), opt.n);
    } else { // banded
        SchurSequence s = make_schur(opt, opt.n);
        GeneratingSequence ord = GeneratingSequence::parse(opt.ordering, opt.n);
        m = banded_general(s, ord, opt.n, moments_from_schur(s, opt.n));
    }
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "csv")
        write_csv(out, m);
    else
        write_json(out, m);
    return 0;
}

int cmd_zeros(const CommonOptions& opt, int degree) {
    LaurentPoly phi = rs_laurent_explicit(opt.q, degree);
    GeneratingSequence ord = GeneratingSequence::balanced(BalancedKind::ceil_half,
                                                          std::max(1, degree));
    LaurentPoly numerator = shift_exp(phi, ord.p(degree));
    std::vector<Complex> zeros = companion_roots(ordinary_coeffs(numerator));
    LaurentPoly deriv = derivative(numerator);
    for (Complex& z : zeros)
        for (int it = 0; it < 30; ++it) {
            Complex val = numerator.eval(z);
            Complex der = deriv.eval(z);
            if (der == Complex(0.0, 0.0) || std::abs(val) < 1e-30) break;
            Complex step = val / der;
            z -= step;
            if (std::abs(step) < 1e-16 * std::abs(z)) break;
        }
    std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex b) {
        return std::arg(a) < std::arg(b);
    });
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    char buf[128];
    if (opt.format == "csv") {
        out << "zero_re,zero_im,modulus\n";
        for (Complex z : zeros) {
            std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", z.real(), z.imag(), std::abs(z));
            out << buf;
        }
    } else {
        out << "{\"q\":";
        std::snprintf(buf, sizeof buf, "%.15g", opt.q);
        out << buf << ",\"degree\":" << degree << ",\"zeros\":[";
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s[%.15g,%.15g]", i ? "," : "",
                          zeros[i].real(), zeros[i].imag());
            out << buf;
        }
        out << "],\"moduli\":[";
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%.15g", i ? "," : "", std::abs(zeros[i]));
            out << buf;
        }
        out << "]}\n";
    }
    return 0;
}

int cmd_verify(const CommonOptions& opt) {
    Complex u = parse_u(opt.u_text);
    int n = opt.n;
    SchurSequence s = make_schur(opt, n);
    GeneratingSequence ord = GeneratingSequence::parse(opt.ordering, n);

    QuadratureRule hess = rule_via_hessenberg(s, n, u);
    QuadratureRule cmvr = rule_via_cmv(s, n, u);
    QuadratureRule root = rule_via_roots(s, ord, n, u);

    double node_dev = 0.0, weight_dev = 0.0;
    for (int j = 0; j < n; ++j) {
        auto idx = static_cast<std::size_t>(j);
        node_dev = std::max({node_dev, std::abs(hess.nodes[idx] - cmvr.nodes[idx]),
                             std::abs(root.nodes[idx] - cmvr.nodes[idx])});
        weight_dev = std::max({weight_dev, std::abs(hess.weights[idx] - cmvr.weights[idx]),
                               std::abs(root.weights[idx] - cmvr.weights[idx])});
    }

    MomentTable moments = [&] {
        if (!opt.schur_file.empty()) return moments_from_schur(s, n);
        if (opt.measure == "lebesgue") return moments_lebesgue_exact(n);
        return moments_numeric(Measure::rogers_szego(opt.q), n, 1e-13);
    }();
    ExactnessReport ex = verify_exactness(cmvr, moments);

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "route agreement: nodes %.3e weights %.3e (tol 1e-9 / 1e-8)\n",
                  node_dev, weight_dev);
    out << buf;
    std::snprintf(buf, sizeof buf, "exactness: max |I(z^k) - mu_k| = %.3e at k = %d (tol %.1e)\n",
                  ex.max_error, ex.worst_k, ex.tol);
    out << buf;
    bool pass = node_dev <= 1e-9 && weight_dev <= 1e-8 && ex.pass;
    out << (pass ? "verify: PASS\n" : "verify: FAIL\n");
    if (!pass) throw NoConvergence("verification failed");
    return 0;
}

int cmd_tables(const CommonOptions& opt, int which) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    bool all_ok = true;
    char buf[200];
    for (const ReferenceTable& table : reference_tables()) {
        if (which != 0 && table.index != which) continue;
        SchurSequence s = SchurSequence::rogers_szego(table.q, table.n);
        QuadratureRule via_cmv = rule_via_cmv(s, table.n, Complex(1.0, 0.0));
        QuadratureRule via_hess = rule_via_hessenberg(s, table.n, Complex(1.0, 0.0));
        ExpandedReference ref = expand_reference(table);

        double dn = 0.0, dw = 0.0;
        for (int j = 0; j < table.n; ++j) {
            auto idx = static_cast<std::size_t>(j);
            dn = std::max({dn, std::abs(via_cmv.nodes[idx] - ref.nodes[idx]),
                           std::abs(via_hess.nodes[idx] - ref.nodes[idx])});
            dw = std::max({dw, std::abs(via_cmv.weights[idx] - ref.weights[idx]),
                           std::abs(via_hess.weights[idx] - ref.weights[idx])});
        }
        bool ok = dn <= table.node_tol && dw <= table.weight_tol;
        all_ok = all_ok && ok;
        std::snprintf(buf, sizeof buf,
                      "table %2d (q=%.2f, n=%d): max node delta %.3e (tol %.0e), "
                      "max weight delta %.3e (tol %.0e) %s\n",
                      table.index, table.q, table.n, dn, table.node_tol, dw,
                      table.weight_tol, ok ? "OK" : "MISMATCH");
        out << buf;
        if (!ok) {
            for (int j = 0; j < table.n; ++j) {
                auto idx = static_cast<std::size_t>(j);
                std::snprintf(buf, sizeof buf,
                              "  node %2d: computed %+.8f%+.8fi w %.9f | reference "
                              "%+.8f%+.8fi w %.9f\n",
                              j, via_cmv.nodes[idx].real(), via_cmv.nodes[idx].imag(),
                              via_cmv.weights[idx], ref.nodes[idx].real(),
                              ref.nodes[idx].imag(), ref.weights[idx]);
                out << buf;
            }
        }
    }
    if (!all_ok) throw NoConvergence("reference table mismatch");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Szego quadrature rules on the unit circle from Schur parameters"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string matrix_kind = "cmv";
    int zeros_degree = 10;
    int which_table = 0;

    auto add_common = [&](CLI::App* cmd, bool with_method) {
        add_measure_flags(cmd, opt);
        cmd->add_option("--n", opt.n, "rule size / matrix order")->check(CLI::PositiveNumber);
        cmd->add_option("--u", opt.u_text, "boundary parameter: re[,im] or angle:<radians>");
        cmd->add_option("--ordering", opt.ordering,
                        "ordering spec: balanced0, balanced1, poly, or digits 01...");
        if (with_method)
            cmd->add_option("--method", opt.method, "hessenberg, cmv, or roots")
                ->check(CLI::IsMember({"hessenberg", "cmv", "roots"}));
        cmd->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", opt.output, "write to file instead of stdout");
    };

    CLI::App* rule = app.add_subcommand("rule", "compute an n-point quadrature rule");
    add_common(rule, true);

    CLI::App* matrix = app.add_subcommand("matrix", "emit an operator matrix");
    add_common(matrix, false);
    matrix->add_option("--kind", matrix_kind, "matrix kind")
        ->check(CLI::IsMember({"hessenberg", "hessenberg-u", "cmv", "cmv-u",
                               "cmv-transpose", "cmv-adjoint", "banded"}));

    CLI::App* zeros = app.add_subcommand("zeros", "zeros of the explicit wrapped-Gaussian family");
    zeros->add_option("--q", opt.q, "parameter in (0,1)")->required();
    zeros->add_option("--degree", zeros_degree, "family degree")->check(CLI::PositiveNumber);
    zeros->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    zeros->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "route agreement and exactness report");
    add_common(verify, false);

    CLI::App* tables = app.add_subcommand("tables", "compare against published reference values");
    tables->add_option("--which", which_table, "single table index 1..10 (default: all)")
        ->check(CLI::Range(1, 10));
    tables->add_option("--output", opt.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int cap = max_n_cap();
        if (opt.n > cap || zeros_degree > cap)
            throw DomainError("n exceeds SZEGOQ_MAX_N = " + std::to_string(cap));
        if (rule->parsed()) return cmd_rule(opt);
        if (matrix->parsed()) return cmd_matrix(opt, matrix_kind);
        if (zeros->parsed()) return cmd_zeros(opt, zeros_degree);
        if (verify->parsed()) return cmd_verify(opt);
        if (tables->parsed()) return cmd_tables(opt, which_table);
    } catch (const Error& e) {
        std::cerr << "szegoq: " << e.what() << "\n";
        return e.category() == ErrorCategory::validation ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "szegoq: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
