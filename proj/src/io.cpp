#include "multiwave/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace mw {
namespace {

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

double get_f64(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
}

constexpr int max_dims = 4;

}  // namespace

void save_field(const Field& f, const std::string& path) {
    f.validate("field to save");
    if (f.grid.ndim > max_dims) throw_io("MWF1 supports at most 4 spatial dimensions");
    std::string out;
    out.reserve(32 + f.values.size() * 16);
    out += "MWF1";
    put_u32(out, static_cast<std::uint32_t>(f.grid.ndim));
    for (int d = 0; d < max_dims; ++d)
        put_u32(out, d < f.grid.ndim ? static_cast<std::uint32_t>(f.grid.points[d]) : 0u);
    put_u32(out, static_cast<std::uint32_t>(f.hdim));
    put_u32(out, 0u);  // reserved
    for (const cplx& z : f.values) {
        put_f64(out, z.real());
        put_f64(out, z.imag());
    }
    write_file_atomic(path, out);
}

Field load_field(const std::string& path, const std::vector<double>& box) {
    const std::string raw = read_file(path);
    if (raw.size() < 32 || raw.compare(0, 4, "MWF1") != 0)
        throw_io("not an MWF1 field file: " + path);
    const unsigned char* p = reinterpret_cast<const unsigned char*>(raw.data());
    const std::uint32_t n = get_u32(p + 4);
    if (n < 1 || n > max_dims) throw_io("MWF1 header: bad dimension count");
    std::vector<int> points;
    for (std::uint32_t d = 0; d < n; ++d)
        points.push_back(static_cast<int>(get_u32(p + 8 + 4 * d)));
    const std::uint32_t hdim = get_u32(p + 24);
    if (hdim < 1 || hdim > 1024) throw_io("MWF1 header: bad hdim");
    if (box.size() != n) throw_io("MWF1 load: box length count must match header dimension");

    GridSpec grid = GridSpec::make(points, box);
    Field f(grid, static_cast<int>(hdim));
    const std::size_t expect = 32 + f.values.size() * 16;
    if (raw.size() != expect) throw_io("MWF1 payload size mismatch");
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = cplx(get_f64(p + 32 + 16 * i), get_f64(p + 32 + 16 * i + 8));
    f.validate("loaded field");
    return f;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size()) throw_invalid("csv row width mismatch");
    rows_.push_back(cells);
}

std::string CsvWriter::to_string() const {
    std::ostringstream os;
    os << "# multiwave-csv v1\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) os << ",";
        os << columns_[i];
    }
    os << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

void CsvWriter::write(const std::string& path) const { write_file_atomic(path, to_string()); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(cplx v) {
    const std::string re = format_double(v.real());
    const std::string im = format_double(v.imag());
    if (v.imag() < 0 || (v.imag() == 0.0 && std::signbit(v.imag())))
        return re + im + "i";
    return re + "+" + im + "i";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_io("cannot open for writing: " + tmp);
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw_io("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw_io("rename failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace mw
