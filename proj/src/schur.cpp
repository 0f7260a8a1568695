#include "szegoq/schur.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace szegoq {

SchurSequence::SchurSequence(std::vector<Complex> delta, SchurValidation mode,
                             SchurSource source, double q)
    : delta_(std::move(delta)), mode_(mode), source_(source), q_(q) {
    if (delta_.empty()) throw DomainError("need at least one Schur parameter");
    for (std::size_t i = 0; i < delta_.size(); ++i) {
        double a = std::abs(delta_[i]);
        if (mode_ == SchurValidation::positive_definite) {
            if (!(a < 1.0))
                throw DomainError("|delta_" + std::to_string(i + 1) +
                                  "| = " + std::to_string(a) + " must be < 1");
        } else if (a == 1.0) {
            throw DomainError("|delta_" + std::to_string(i + 1) + "| must differ from 1");
        }
    }
}

SchurSequence SchurSequence::rogers_szego(double q, int n_max) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    std::vector<Complex> d(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        // q^(n/2) as exp((n/2) ln q): deterministic, no root-branch issues.
        double mag = std::exp(0.5 * n * std::log(q));
        d[static_cast<std::size_t>(n - 1)] = (n % 2 == 0) ? mag : -mag;
    }
    return SchurSequence(std::move(d), SchurValidation::positive_definite,
                         SchurSource::rogers_szego, q);
}

SchurSequence SchurSequence::lebesgue(int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    return SchurSequence(std::vector<Complex>(static_cast<std::size_t>(n_max), Complex(0.0, 0.0)),
                         SchurValidation::positive_definite, SchurSource::lebesgue, 0.0);
}

Complex SchurSequence::delta(int n) const {
    if (n == 0) return Complex(1.0, 0.0);
    if (n < 0 || n > n_max())
        throw IndexOutOfRange("delta_" + std::to_string(n) + " outside 0.." + std::to_string(n_max()));
    return delta_[static_cast<std::size_t>(n - 1)];
}

double SchurSequence::eta(int n) const {
    double v = eta_sq(n);
    if (v < 0.0)
        throw QuasiDefiniteUnsupported("eta_" + std::to_string(n) + " undefined for |delta| > 1");
    return std::sqrt(v);
}

double SchurSequence::eta_sq(int n) const {
    if (n < 1 || n > n_max())
        throw IndexOutOfRange("eta_" + std::to_string(n) + " outside 1.." + std::to_string(n_max()));
    return 1.0 - std::norm(delta_[static_cast<std::size_t>(n - 1)]);
}

double SchurSequence::e(int n) const {
    if (n == 0) return 1.0;
    if (n < 0 || n > n_max())
        throw IndexOutOfRange("e_" + std::to_string(n) + " outside 0.." + std::to_string(n_max()));
    double acc = 1.0;
    for (int k = 1; k <= n; ++k) acc *= eta_sq(k);
    return acc;
}

SchurSequence read_schur_file(std::istream& in, SchurValidation mode) {
    std::vector<Complex> d;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        double re = 0.0, im = 0.0;
        char extra = 0;
        int got = std::sscanf(line.c_str(), "%lf , %lf %c", &re, &im, &extra);
        if (got != 2)
            throw ParseError("schur file line " + std::to_string(lineno) +
                             ": expected \"re,im\", got \"" + line + "\"");
        d.emplace_back(re, im);
    }
    if (d.empty()) throw ParseError("schur file contains no parameters");
    return SchurSequence(std::move(d), mode);
}

SchurSequence read_schur_file(const std::string& path, SchurValidation mode) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open schur file: " + path);
    return read_schur_file(in, mode);
}

void write_schur_file(std::ostream& out, const SchurSequence& s) {
    char buf[80];
    for (int n = 1; n <= s.n_max(); ++n) {
        Complex d = s.delta(n);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", d.real(), d.imag());
        out << buf;
    }
}

} // namespace szegoq
