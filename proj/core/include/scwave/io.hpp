#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scwave/coupled.hpp"
#include "scwave/density.hpp"
#include "scwave/soliton.hpp"

namespace scwave {

// Shortest round-trip decimal form (locale independent).
std::string format_double(double value);

// Density CSV: header "alpha,mass", one row per node, final row "inf,<mass>".
void write_density_csv(std::ostream& os, const Density& density);
Density read_density_csv(std::istream& is, std::shared_ptr<const Grid> grid = Grid::standard());

// Profile CSV rows "z,value,t"; call repeatedly to append snapshots.
void write_profile_header(std::ostream& os);
void write_profile_rows(std::ostream& os, const ScalarProfile& profile);

// Trajectory CSV: "t,kink_position".
void write_trajectory_csv(std::ostream& os, const KinkTrajectory& trajectory);

// Soliton shape CSV: "z,value".
void write_shape_csv(std::ostream& os, const std::vector<double>& z, const std::vector<double>& shape);

// summary.csv row: epsilon,v,denominator,deltaE,residual,iters
void write_soliton_summary(std::ostream& os, double epsilon, const SolitonSolution& sol);

// Generic CSV table with an optional NA marker for missing cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    void write(std::ostream& os) const;
};

std::string csv_cell(double value); // "NA" for NaN

} // namespace scwave
