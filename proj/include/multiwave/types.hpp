#ifndef MULTIWAVE_TYPES_HPP
#define MULTIWAVE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mw {

using cplx = std::complex<double>;

enum class ErrorCode {
    invalid_argument,  // bad inputs / violated preconditions
    config,            // scenario configuration problems
    numerical,         // singular modes, nonconvergence, blow-up
    io,                // file problems
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) { throw Error(ErrorCode::invalid_argument, msg); }
[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(ErrorCode::config, msg); }
[[noreturn]] inline void throw_numerical(const std::string& msg) { throw Error(ErrorCode::numerical, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorCode::io, msg); }

const char* error_code_name(ErrorCode code);

// Small dense complex vector/matrix for fiber-space (hdim x hdim) work.
// Row-major storage; hdim stays small (<= 8 at desk scale).
struct CVec {
    std::vector<cplx> v;

    CVec() = default;
    explicit CVec(std::size_t n, cplx fill = {}) : v(n, fill) {}
    std::size_t size() const { return v.size(); }
    cplx& operator[](std::size_t i) { return v[i]; }
    const cplx& operator[](std::size_t i) const { return v[i]; }
    double norm() const;
};

struct CMat {
    int dim{0};
    std::vector<cplx> a;  // row-major dim x dim

    CMat() = default;
    explicit CMat(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {}
    static CMat identity(int d);
    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
    CMat adjoint() const;
    double frobenius_norm() const;
    bool all_finite() const;
};

CMat operator+(const CMat& x, const CMat& y);
CMat operator-(const CMat& x, const CMat& y);
CMat operator*(const CMat& x, const CMat& y);
CMat operator*(cplx s, const CMat& x);
CVec operator*(const CMat& m, const CVec& x);

bool all_finite(const std::vector<cplx>& v);

}  // namespace mw

#endif
