#include "gconvex/report.hpp"

#include <cstdio>

namespace gconvex {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_spectrum(const std::vector<double>& spectrum) {
    std::string out;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i) out += ';';
        out += format_double(spectrum[i]);
    }
    return out;
}

void Report::set(const std::string& key, const std::string& value) {
    header.emplace_back(key, value);
}

void Report::set(const std::string& key, double value) {
    header.emplace_back(key, format_double(value));
}

void Report::add_row(const std::string& label, const std::string& value, const std::string& gap,
                     const std::string& verdict) {
    rows.push_back({label, value, gap, verdict});
}

void Report::add_row(const std::string& label, double value, const std::string& gap,
                     const std::string& verdict) {
    rows.push_back({label, format_double(value), gap, verdict});
}

void add_chain(Report& report, const ChainReport& chain) {
    report.set("tol", chain.tol);
    report.set("direction",
               chain.direction == ChainDirection::Ascending ? "ascending" : "descending");
    report.set("status", chain.holds ? "holds" : "violated");
    if (!chain.holds) report.set("violated_link", static_cast<double>(chain.violated_index));
    for (std::size_t i = 0; i < chain.values.size(); ++i) {
        std::string gap = i ? format_double(chain.gaps[i - 1]) : "";
        std::string verdict;
        if (i) {
            bool link_ok = chain.direction == ChainDirection::Ascending
                               ? chain.values[i - 1] <= chain.values[i] + chain.tol
                               : chain.values[i - 1] >= chain.values[i] - chain.tol;
            verdict = link_ok ? "ok" : "violated";
        }
        report.add_row(chain.labels[i], chain.values[i], gap, verdict);
    }
}

std::string render_report(const Report& report) {
    std::string out;
    for (const auto& [k, v] : report.header) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    out += "\nterm,label,value,gap,verdict\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const Report::Row& r = report.rows[i];
        out += std::to_string(i);
        out += ',';
        out += r.label;
        out += ',';
        out += r.value;
        out += ',';
        out += r.gap;
        out += ',';
        out += r.verdict;
        out += '\n';
    }
    return out;
}

}  // namespace gconvex
