#ifndef MULTIWAVE_IO_HPP
#define MULTIWAVE_IO_HPP

#include <string>
#include <vector>

#include "multiwave/field.hpp"

namespace mw {

// Field snapshot file format "MWF1": 32-byte little-endian header
//   bytes 0..3   magic "MWF1"
//   bytes 4..7   u32 n (spatial dimension, <= 4)
//   bytes 8..23  u32 per-dimension sample counts (unused entries zero)
//   bytes 24..27 u32 hdim
//   bytes 28..31 u32 reserved (zero)
// followed by f64 (real, imag) pairs in row-major (spatial point, component)
// order. Box lengths are not stored; the caller supplies them on load.
void save_field(const Field& f, const std::string& path);
Field load_field(const std::string& path, const std::vector<double>& box);

// CSV emission: first line is the schema comment "# multiwave-csv v1", then a
// header row, then rows. Floats print with %.17g. Writes are atomic
// (write to a temp file, then rename).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);
    void add_row(const std::vector<std::string>& cells);
    void write(const std::string& path) const;
    std::string to_string() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_double(double v);
std::string format_complex(cplx v);  // canonical "a+bi" form

// Atomic full-file write (temp + rename).
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace mw

#endif
