#pragma once

#include <string>

#include "nlkpp/field.hpp"
#include "nlkpp/heat_compare.hpp"
#include "nlkpp/series.hpp"

namespace nlkpp {

/// All numeric output uses %.17g so CSV round-trips are lossless and
/// repeated runs are byte-identical.
std::string format_g17(double v);

/// Snapshot: N rows x N columns (1D: N rows x 1), comma-separated, row
/// index = x node index, no header.
void write_snapshot_csv(const ScalarField& field, const std::string& path);

/// Reads a snapshot-format matrix back onto the given grid.
/// Throws FileError on unreadable or ill-shaped data.
ScalarField read_snapshot_csv(const std::string& path, const GridSpec& grid);

/// series.csv: header t,mass,max_u,min_u,l2_norm,lk_norm,int_u_alpha.
void write_series_csv(const MassSeries& series, const std::string& path);
MassSeries read_series_csv(const std::string& path);

/// decay.csv: header t,d,log_d.
void write_decay_csv(const DecaySeries& series, const std::string& path);

} // namespace nlkpp
