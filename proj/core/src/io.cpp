#include "scwave/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "scwave/errors.hpp"

namespace scwave {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string csv_cell(double value) { return std::isnan(value) ? "NA" : format_double(value); }

void write_density_csv(std::ostream& os, const Density& density) {
    os << "alpha,mass\n";
    const Grid& g = density.grid();
    for (int i = 0; i < g.node_count(); ++i)
        os << format_double(g.alpha(i)) << "," << format_double(density.masses()[static_cast<size_t>(i)]) << "\n";
    os << "inf," << format_double(density.inf_mass()) << "\n";
}

Density read_density_csv(std::istream& is, std::shared_ptr<const Grid> grid) {
    std::string line;
    if (!std::getline(is, line) || line != "alpha,mass") throw ConfigError("density CSV must start with 'alpha,mass'");
    Density out(std::move(grid));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const size_t comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("bad density CSV row: " + line);
        const std::string key = line.substr(0, comma);
        const double mass = std::stod(line.substr(comma + 1));
        if (key == "inf") {
            out.inf_mass() += mass;
        } else {
            const double alpha = std::stod(key);
            out.masses()[static_cast<size_t>(out.grid().nearest_node(alpha))] += mass;
        }
    }
    return out;
}

void write_profile_header(std::ostream& os) { os << "z,value,t\n"; }

void write_profile_rows(std::ostream& os, const ScalarProfile& profile) {
    for (int i = 0; i < profile.size(); ++i)
        os << format_double(profile.z_of(i)) << "," << format_double(profile.values[static_cast<size_t>(i)]) << ","
           << profile.t << "\n";
}

void write_trajectory_csv(std::ostream& os, const KinkTrajectory& trajectory) {
    os << "t,kink_position\n";
    for (const auto& s : trajectory.samples) os << s.t << "," << format_double(s.position) << "\n";
}

void write_shape_csv(std::ostream& os, const std::vector<double>& z, const std::vector<double>& shape) {
    os << "z,value\n";
    for (size_t i = 0; i < z.size(); ++i) os << format_double(z[i]) << "," << format_double(shape[i]) << "\n";
}

void write_soliton_summary(std::ostream& os, double epsilon, const SolitonSolution& sol) {
    os << "epsilon,v,denominator,deltaE,residual,iters\n";
    os << format_double(epsilon) << "," << format_double(sol.velocity) << "," << format_double(sol.denominator) << ","
       << format_double(sol.delta_e) << "," << format_double(sol.residual) << "," << sol.iterations << "\n";
}

void CsvTable::write(std::ostream& os) const {
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

} // namespace scwave
