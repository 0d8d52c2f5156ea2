#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gconvex/chains.hpp"
#include "gconvex/matanalysis.hpp"

namespace gconvex {

// Line-oriented report: `key=value` header then a CSV block
//   term,label,value,gap,verdict
// Spectra are emitted as semicolon-joined descending lists. All numbers
// print as %.17g so identical inputs give byte-identical reports.
struct Report {
    struct Row {
        std::string label;
        std::string value;
        std::string gap;
        std::string verdict;
    };

    std::vector<std::pair<std::string, std::string>> header;
    std::vector<Row> rows;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void add_row(const std::string& label, const std::string& value,
                 const std::string& gap = "", const std::string& verdict = "");
    void add_row(const std::string& label, double value, const std::string& gap = "",
                 const std::string& verdict = "");
};

std::string format_double(double v);
std::string join_spectrum(const std::vector<double>& spectrum);

// Appends the chain's terms to the report rows and a status header line.
void add_chain(Report& report, const ChainReport& chain);

std::string render_report(const Report& report);

}  // namespace gconvex
