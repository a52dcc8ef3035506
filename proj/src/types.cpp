#include "multiwave/types.hpp"

#include <cmath>

namespace mw {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid";
        case ErrorCode::config: return "config";
        case ErrorCode::numerical: return "numerical";
        case ErrorCode::io: return "io";
        case ErrorCode::internal: return "internal";
    }
    return "internal";
}

double CVec::norm() const {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

CMat CMat::identity(int d) {
    CMat m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a) s += std::norm(z);
    return std::sqrt(s);
}

bool CMat::all_finite() const {
    for (const cplx& z : a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMat operator+(const CMat& x, const CMat& y) {
    CMat r(x.dim);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

CMat operator-(const CMat& x, const CMat& y) {
    CMat r(x.dim);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

CMat operator*(const CMat& x, const CMat& y) {
    CMat r(x.dim);
    const int d = x.dim;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const cplx xik = x(i, k);
            if (xik == cplx{}) continue;
            for (int j = 0; j < d; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

CMat operator*(cplx s, const CMat& x) {
    CMat r(x.dim);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
}

CVec operator*(const CMat& m, const CVec& x) {
    CVec r(static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim; ++i) {
        cplx s{};
        for (int j = 0; j < m.dim; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

bool all_finite(const std::vector<cplx>& v) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace mw
