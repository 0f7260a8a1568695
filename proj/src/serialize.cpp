#include "szegoq/serialize.hpp"

#include <cstdio>
#include <ostream>

namespace szegoq {

namespace {

constexpr const char* kJsonFmt = "%.15g";
constexpr const char* kCsvFmt = "%.9g";

std::string num(double v, const char* fmt) {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string pair_json(Complex z) {
    return "[" + num(z.real(), kJsonFmt) + "," + num(z.imag(), kJsonFmt) + "]";
}

} // namespace

void write_json(std::ostream& out, const QuadratureRule& rule) {
    out << "{\"n\":" << rule.size() << ",\"u\":" << pair_json(rule.u)
        << ",\"route\":\"" << to_string(rule.route) << "\",\"nodes\":[";
    for (int j = 0; j < rule.size(); ++j)
        out << (j ? "," : "") << pair_json(rule.nodes[static_cast<std::size_t>(j)]);
    out << "],\"weights\":[";
    for (int j = 0; j < rule.size(); ++j)
        out << (j ? "," : "") << num(rule.weights[static_cast<std::size_t>(j)], kJsonFmt);
    out << "]}\n";
}

void write_csv(std::ostream& out, const QuadratureRule& rule) {
    out << "node_re,node_im,weight\n";
    for (int j = 0; j < rule.size(); ++j) {
        const Complex& z = rule.nodes[static_cast<std::size_t>(j)];
        out << num(z.real(), kCsvFmt) << ',' << num(z.imag(), kCsvFmt) << ','
            << num(rule.weights[static_cast<std::size_t>(j)], kCsvFmt) << '\n';
    }
}

void write_json(std::ostream& out, const OperatorMatrix& m) {
    out << "{\"n\":" << m.dim() << ",\"kind\":\"" << to_string(m.kind)
        << "\",\"entries\":[";
    for (int r = 0; r < m.dim(); ++r) {
        out << (r ? ",[" : "[");
        for (int c = 0; c < m.dim(); ++c)
            out << (c ? "," : "") << pair_json(m.mat(r, c));
        out << "]";
    }
    out << "]}\n";
}

void write_csv(std::ostream& out, const OperatorMatrix& m) {
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            if (c) out << ',';
            out << num(m.mat(r, c).real(), kCsvFmt) << ','
                << num(m.mat(r, c).imag(), kCsvFmt);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const MomentTable& m) {
    out << "{\"K\":" << m.range() << ",\"mu\":[";
    for (int k = 0; k <= m.range(); ++k)
        out << (k ? "," : "") << pair_json(m.mu(k));
    out << "]}\n";
}

void write_json(std::ostream& out, const LaurentPoly& f) {
    if (f.is_zero()) {
        out << "{\"lo\":0,\"coeffs\":[]}\n";
        return;
    }
    out << "{\"lo\":" << f.lo() << ",\"coeffs\":[";
    for (int e = f.lo(); e <= f.hi(); ++e)
        out << (e != f.lo() ? "," : "") << pair_json(f.coeff(e));
    out << "]}\n";
}

} // namespace szegoq
