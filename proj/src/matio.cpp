#include "gconvex/matio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gconvex {

namespace {

double parse_real(const std::string& token, const std::string& context) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw InputError("bad numeric entry '" + token + "' in " + context);
    }
    if (used != token.size())
        throw InputError("bad numeric entry '" + token + "' in " + context);
    return v;
}

}  // namespace

cx parse_entry(const std::string& token) {
    if (!token.empty() && token.front() == '(') {
        if (token.back() != ')')
            throw InputError("complex entry '" + token + "' must look like (re,im)");
        std::string body = token.substr(1, token.size() - 2);
        std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw InputError("complex entry '" + token + "' must look like (re,im)");
        double re = parse_real(body.substr(0, comma), "complex entry");
        double im = parse_real(body.substr(comma + 1), "complex entry");
        return cx{re, im};
    }
    return cx{parse_real(token, "matrix entry"), 0.0};
}

Matrix read_matrix(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) throw InputError(source_name + ": missing dimension line");
    std::istringstream head(line);
    long n = 0;
    if (!(head >> n)) throw InputError(source_name + ": bad dimension line");
    std::string extra;
    if (head >> extra) throw InputError(source_name + ": bad dimension line");
    if (n < 1 || n > 256)
        throw InputError(source_name + ": dimension must lie in [1, 256]");

    Matrix m(static_cast<int>(n));
    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw InputError(source_name + ": expected " + std::to_string(n) + " rows");
        std::istringstream row(line);
        std::string token;
        long j = 0;
        while (row >> token) {
            if (j >= n)
                throw InputError(source_name + ": row " + std::to_string(i + 1) +
                                 " has too many entries");
            m.at(static_cast<int>(i), static_cast<int>(j)) = parse_entry(token);
            ++j;
        }
        if (j != n)
            throw InputError(source_name + ": row " + std::to_string(i + 1) + " has " +
                             std::to_string(j) + " entries, expected " + std::to_string(n));
    }
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.n() << "\n";
    char buf[96];
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) {
            const cx& v = m.at(i, j);
            if (v.imag() == 0.0)
                std::snprintf(buf, sizeof(buf), "%.17g", v.real());
            else
                std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", v.real(), v.imag());
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write matrix file '" + path + "'");
    write_matrix(out, m);
}

}  // namespace gconvex
