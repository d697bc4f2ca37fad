#pragma once

// ============================================================================
// Persistent formats: the "TEIM" binary tensor container (order 2 or 3,
// little-endian 64-bit floats, column-major), self-framing record streams
// for basis files, JSON for grids/traces/indices, and the CSV run report.
// ============================================================================

#include "teim/interp.hpp"
#include "teim/pod.hpp"
#include "teim/tensor.hpp"
#include "teim/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace teim {

// --- Binary tensor container -------------------------------------------------
// Layout: magic "TEIM" | u32 version = 1 | u8 order (2 or 3) |
//         order x u64 dims | payload of prod(dims) doubles, first index
//         fastest. Round-trips are bitwise exact.

void write_tensor(std::ostream& out, const Tensor3& T);
void write_matrix(std::ostream& out, const Matrix& M);
Tensor3 read_tensor(std::istream& in);
Matrix read_matrix(std::istream& in);

// Peek: true if another record starts at the current stream position.
bool has_record(std::istream& in);

void write_tensor_file(const std::string& path, const Tensor3& T);
Tensor3 read_tensor_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& M);
Matrix read_matrix_file(const std::string& path);

// --- Basis files --------------------------------------------------------------
// FactorBasis: records [U1][U2][sv1][sv2][sv3] and, when a mean slice is
// carried (centered pipelines), a trailing [mean]. PodBasis: [V][sv]
// (+ [mean] as an n x 1 record).

void write_factor_basis(const std::string& path, const FactorBasis& basis,
                        const std::optional<Matrix>& mean = std::nullopt);
std::pair<FactorBasis, std::optional<Matrix>> read_factor_basis(const std::string& path);

void write_pod_basis(const std::string& path, const PodBasis& basis,
                     const std::optional<Vector>& mean = std::nullopt);
std::pair<PodBasis, std::optional<Vector>> read_pod_basis(const std::string& path);

// --- Structured text ----------------------------------------------------------

std::string grid_to_json(const InterpGrid& grid);
InterpGrid grid_from_json(const std::string& text);
std::string trace_to_json(const TeimTrace& trace);
std::string deim_to_json(const SelectionOperator& indices);

// --- Run reports ----------------------------------------------------------------

struct ReportRow {
  std::string experiment;
  std::string method;  // teim | deim | proj_tensor | proj_pod
  Index m1 = 0;
  Index m2 = 0;
  Index m = 0;
  Index k1 = 0;
  Index k2 = 0;
  Index k = 0;
  double xi = 0.0;
  double wall_ns_per_eval = 0.0;  // 0 when not applicable
};

struct RunReport {
  std::vector<ReportRow> rows;
};

extern const char* const kReportHeader;

void write_report(std::ostream& out, const RunReport& report);
void write_report_file(const std::string& path, const RunReport& report);

}  // namespace teim
