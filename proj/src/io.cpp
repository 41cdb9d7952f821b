#include "levybridge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace levy::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_real_field_csv(const std::filesystem::path& path, const RealField& field,
                          const std::string& value_header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << "x," << value_header << "\n";
    for (std::size_t j = 0; j < field.size(); ++j)
        out << format_double(field.grid().x(j)) << ',' << format_double(field[j]) << '\n';
}

void write_complex_field_csv(const std::filesystem::path& path, const ComplexField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << "x,re,im\n";
    for (std::size_t j = 0; j < field.size(); ++j)
        out << format_double(field.grid().x(j)) << ',' << format_double(field[j].real()) << ','
            << format_double(field[j].imag()) << '\n';
}

RealField read_real_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw Error("empty CSV: " + path.string());
    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error("malformed CSV row: " + line);
        xs.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    if (xs.size() < 16) throw Error("CSV too short: " + path.string());
    const double dx = xs[1] - xs[0];
    for (std::size_t j = 1; j < xs.size(); ++j)
        if (std::abs(xs[j] - xs[0] - static_cast<double>(j) * dx) > 1e-9 * std::abs(dx))
            throw Error("CSV x-column is not uniform: " + path.string());
    Grid1D grid(xs.front(), xs.front() + dx * static_cast<double>(xs.size()), xs.size());
    return RealField(grid, std::move(vs));
}

void write_profile_csv(const std::filesystem::path& path, const std::string& header,
                       std::span<const double> col1, std::span<const double> col2) {
    if (col1.size() != col2.size()) throw InvalidArgument("write_profile_csv: size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << header << "\n";
    for (std::size_t j = 0; j < col1.size(); ++j)
        out << format_double(col1[j]) << ',' << format_double(col2[j]) << '\n';
}

}  // namespace levy::io
