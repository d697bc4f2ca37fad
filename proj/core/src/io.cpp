#include "teim/io.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

// The payload is written as raw 64-bit floats; fixed little-endian layout is
// part of the format contract.
static_assert(std::endian::native == std::endian::little,
              "tensor container I/O requires a little-endian host");

namespace teim {

namespace {

constexpr char kMagic[4] = {'T', 'E', 'I', 'M'};
constexpr std::uint32_t kVersion = 1;

void write_raw(std::ostream& out, const void* data, std::size_t bytes) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
  if (!out) {
    throw IoError("tensor container: write failed");
  }
}

void read_raw(std::istream& in, void* data, std::size_t bytes) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(bytes));
  if (in.gcount() != static_cast<std::streamsize>(bytes)) {
    throw IoError("tensor container: truncated stream");
  }
}

void write_header(std::ostream& out, std::uint8_t order, const std::uint64_t* dims) {
  write_raw(out, kMagic, 4);
  write_raw(out, &kVersion, sizeof(kVersion));
  write_raw(out, &order, sizeof(order));
  write_raw(out, dims, sizeof(std::uint64_t) * order);
}

std::uint8_t read_header(std::istream& in, std::uint64_t dims[3]) {
  char magic[4];
  read_raw(in, magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError("tensor container: bad magic");
  }
  std::uint32_t version = 0;
  read_raw(in, &version, sizeof(version));
  if (version != kVersion) {
    throw IoError("tensor container: unsupported version " + std::to_string(version));
  }
  std::uint8_t order = 0;
  read_raw(in, &order, sizeof(order));
  if (order != 2 && order != 3) {
    throw IoError("tensor container: order must be 2 or 3");
  }
  read_raw(in, dims, sizeof(std::uint64_t) * order);
  return order;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  return out;
}

Matrix vector_as_column(const Vector& v) {
  return Eigen::Map<const Matrix>(v.data(), v.size(), 1);
}

}  // namespace

void write_tensor(std::ostream& out, const Tensor3& T) {
  const std::uint64_t dims[3] = {static_cast<std::uint64_t>(T.n1()),
                                 static_cast<std::uint64_t>(T.n2()),
                                 static_cast<std::uint64_t>(T.N())};
  write_header(out, 3, dims);
  write_raw(out, T.data().data(), sizeof(double) * static_cast<std::size_t>(T.data().size()));
}

void write_matrix(std::ostream& out, const Matrix& M) {
  const std::uint64_t dims[2] = {static_cast<std::uint64_t>(M.rows()),
                                 static_cast<std::uint64_t>(M.cols())};
  write_header(out, 2, dims);
  write_raw(out, M.data(), sizeof(double) * static_cast<std::size_t>(M.size()));
}

Tensor3 read_tensor(std::istream& in) {
  std::uint64_t dims[3] = {0, 0, 0};
  if (read_header(in, dims) != 3) {
    throw IoError("tensor container: expected an order-3 record");
  }
  Tensor3 T(static_cast<Index>(dims[0]), static_cast<Index>(dims[1]),
            static_cast<Index>(dims[2]));
  read_raw(in, T.data().data(), sizeof(double) * static_cast<std::size_t>(T.data().size()));
  return T;
}

Matrix read_matrix(std::istream& in) {
  std::uint64_t dims[3] = {0, 0, 0};
  if (read_header(in, dims) != 2) {
    throw IoError("tensor container: expected an order-2 record");
  }
  Matrix M(static_cast<Index>(dims[0]), static_cast<Index>(dims[1]));
  read_raw(in, M.data(), sizeof(double) * static_cast<std::size_t>(M.size()));
  return M;
}

bool has_record(std::istream& in) {
  return in.peek() != std::char_traits<char>::eof();
}

void write_tensor_file(const std::string& path, const Tensor3& T) {
  auto out = open_out(path);
  write_tensor(out, T);
}

Tensor3 read_tensor_file(const std::string& path) {
  auto in = open_in(path);
  return read_tensor(in);
}

void write_matrix_file(const std::string& path, const Matrix& M) {
  auto out = open_out(path);
  write_matrix(out, M);
}

Matrix read_matrix_file(const std::string& path) {
  auto in = open_in(path);
  return read_matrix(in);
}

void write_factor_basis(const std::string& path, const FactorBasis& basis,
                        const std::optional<Matrix>& mean) {
  if (basis.singular_values.size() != 3) {
    throw IoError("write_factor_basis: expected three per-mode singular-value lists");
  }
  auto out = open_out(path);
  write_matrix(out, basis.U1);
  write_matrix(out, basis.U2);
  for (const Vector& sv : basis.singular_values) {
    write_matrix(out, vector_as_column(sv));
  }
  if (mean) {
    write_matrix(out, *mean);
  }
}

std::pair<FactorBasis, std::optional<Matrix>> read_factor_basis(const std::string& path) {
  auto in = open_in(path);
  FactorBasis basis;
  basis.U1 = read_matrix(in);
  basis.U2 = read_matrix(in);
  basis.singular_values.resize(3);
  for (auto& sv : basis.singular_values) {
    const Matrix col = read_matrix(in);
    sv = Eigen::Map<const Vector>(col.data(), col.rows());
  }
  std::optional<Matrix> mean;
  if (has_record(in)) {
    mean = read_matrix(in);
  }
  return {std::move(basis), std::move(mean)};
}

void write_pod_basis(const std::string& path, const PodBasis& basis,
                     const std::optional<Vector>& mean) {
  auto out = open_out(path);
  write_matrix(out, basis.V);
  write_matrix(out, vector_as_column(basis.singular_values));
  if (mean) {
    write_matrix(out, vector_as_column(*mean));
  }
}

std::pair<PodBasis, std::optional<Vector>> read_pod_basis(const std::string& path) {
  auto in = open_in(path);
  PodBasis basis;
  basis.V = read_matrix(in);
  const Matrix sv = read_matrix(in);
  basis.singular_values = Eigen::Map<const Vector>(sv.data(), sv.rows());
  std::optional<Vector> mean;
  if (has_record(in)) {
    const Matrix m = read_matrix(in);
    mean = Eigen::Map<const Vector>(m.data(), m.rows());
  }
  return {std::move(basis), std::move(mean)};
}

std::string grid_to_json(const InterpGrid& grid) {
  nlohmann::json j;
  j["rows"] = grid.rows.indices;
  j["cols"] = grid.cols.indices;
  return j.dump();
}

InterpGrid grid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("grid_from_json: ") + e.what());
  }
  if (!j.contains("rows") || !j.contains("cols")) {
    throw IoError("grid_from_json: missing rows/cols");
  }
  InterpGrid grid;
  grid.rows.indices = j["rows"].get<std::vector<Index>>();
  grid.cols.indices = j["cols"].get<std::vector<Index>>();
  Index max_row = 0, max_col = 0;
  for (Index i : grid.rows.indices) max_row = std::max(max_row, i + 1);
  for (Index i : grid.cols.indices) max_col = std::max(max_col, i + 1);
  grid.rows.source_dim = max_row;
  grid.cols.source_dim = max_col;
  return grid;
}

std::string trace_to_json(const TeimTrace& trace) {
  nlohmann::json j;
  const InterpGrid grid = grid_of(trace);
  j["rows"] = grid.rows.indices;
  j["cols"] = grid.cols.indices;
  auto pairs = nlohmann::json::array();
  for (Index t = 0; t < trace.flat_pairs.size(); ++t) {
    pairs.push_back({trace.flat_pairs.row_indices[static_cast<std::size_t>(t)],
                     trace.flat_pairs.col_indices[static_cast<std::size_t>(t)]});
  }
  j["pairs"] = pairs;
  return j.dump();
}

std::string deim_to_json(const SelectionOperator& indices) {
  nlohmann::json j;
  j["indices"] = indices.indices;
  return j.dump();
}

const char* const kReportHeader =
    "experiment,method,m1,m2,m,k1,k2,k,xi,wall_ns_per_eval";

void write_report(std::ostream& out, const RunReport& report) {
  out << kReportHeader << "\n";
  std::ostringstream line;
  line.precision(17);
  for (const ReportRow& row : report.rows) {
    line.str("");
    line << row.experiment << ',' << row.method << ',' << row.m1 << ',' << row.m2 << ','
         << row.m << ',' << row.k1 << ',' << row.k2 << ',' << row.k << ',' << row.xi << ','
         << row.wall_ns_per_eval;
    out << line.str() << "\n";
  }
  if (!out) {
    throw IoError("write_report: stream failure");
  }
}

void write_report_file(const std::string& path, const RunReport& report) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  write_report(out, report);
}

}  // namespace teim
