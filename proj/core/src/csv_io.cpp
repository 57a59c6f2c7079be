#include "nlkpp/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "nlkpp/errors.hpp"

namespace nlkpp {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<double> parse_csv_row(const std::string& line, const std::string& path, int line_no) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        const std::string cell =
            line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const char* begin = cell.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw FileError(path + ":" + std::to_string(line_no) + ": bad numeric cell '" + cell +
                            "'");
        row.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return row;
}

} // namespace

void write_snapshot_csv(const ScalarField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open " + path + " for writing");
    const std::size_t n = field.n();
    if (field.dim() == 1) {
        for (std::size_t i = 0; i < n; ++i) out << format_g17(field.at(i)) << '\n';
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out << ',';
                out << format_g17(field.at(i, j));
            }
            out << '\n';
        }
    }
    if (!out) throw FileError("write failed for " + path);
}

ScalarField read_snapshot_csv(const std::string& path, const GridSpec& grid) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        rows.push_back(parse_csv_row(line, path, line_no));
    }
    const std::size_t n = grid.n;
    const std::size_t cols = grid.dim == 1 ? 1 : n;
    if (rows.size() != n)
        throw FileError(path + ": expected " + std::to_string(n) + " rows, got " +
                        std::to_string(rows.size()));
    ScalarField field(grid);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != cols)
            throw FileError(path + ": row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " columns, expected " +
                            std::to_string(cols));
        if (grid.dim == 1)
            field.at(i) = rows[i][0];
        else
            for (std::size_t j = 0; j < n; ++j) field.at(i, j) = rows[i][j];
    }
    return field;
}

void write_series_csv(const MassSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open " + path + " for writing");
    out << "t,mass,max_u,min_u,l2_norm,lk_norm,int_u_alpha\n";
    for (const auto& r : series.records) {
        out << format_g17(r.t) << ',' << format_g17(r.mass) << ',' << format_g17(r.max_u) << ','
            << format_g17(r.min_u) << ',' << format_g17(r.l2_norm) << ','
            << format_g17(r.lk_norm) << ',' << format_g17(r.int_u_alpha) << '\n';
    }
    if (!out) throw FileError("write failed for " + path);
}

MassSeries read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "t,mass,max_u,min_u,l2_norm,lk_norm,int_u_alpha")
        throw FileError(path + ": missing or unexpected series header");
    MassSeries series;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto row = parse_csv_row(line, path, line_no);
        if (row.size() != 7)
            throw FileError(path + ":" + std::to_string(line_no) + ": expected 7 columns");
        MassRecord rec;
        rec.t = row[0];
        rec.mass = row[1];
        rec.max_u = row[2];
        rec.min_u = row[3];
        rec.l2_norm = row[4];
        rec.lk_norm = row[5];
        rec.int_u_alpha = row[6];
        rec.negativity_flag = rec.min_u < 0.0;
        series.append(rec);
    }
    return series;
}

void write_decay_csv(const DecaySeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open " + path + " for writing");
    out << "t,d,log_d\n";
    for (const auto& p : series.points)
        out << format_g17(p.t) << ',' << format_g17(p.d) << ','
            << format_g17(std::log(std::max(p.d, 1e-15))) << '\n';
    if (!out) throw FileError("write failed for " + path);
}

} // namespace nlkpp
