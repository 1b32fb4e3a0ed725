#include "kur/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace kur {

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
    int n = a.rows();
    if (n != a.cols() || static_cast<std::size_t>(n) != b.size())
        throw std::invalid_argument("lu_solve: shape mismatch");
    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scale = std::max(scale, std::fabs(a(r, c)));
    const double tiny = 1e-13 * std::max(scale, 1.0);

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::fabs(a(r, k)) > std::fabs(a(piv, k))) piv = r;
        if (std::fabs(a(piv, k)) < tiny) throw NumericError("lu_solve: singular matrix");
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        }
        for (int r = k + 1; r < n; ++r) {
            double f = a(r, k) / a(k, k);
            if (f == 0.0) continue;
            for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(k)];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / a(r, r);
    }
    return x;
}

namespace {

double off_norm(const Matrix& a) {
    int n = a.rows();
    double s = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) s += a(r, c) * a(r, c);
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(Matrix a) {
    int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("jacobi_eigenvalues: matrix must be square");
    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scale = std::max(scale, std::fabs(a(r, c)));
    const double sym_tol = 1e-12 * std::max(scale, 1.0);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (std::fabs(a(r, c) - a(c, r)) > sym_tol)
                throw std::invalid_argument("jacobi_eigenvalues: matrix not symmetric");

    const double target = 1e-12;
    double prev = off_norm(a);
    for (int sweep = 0; sweep < 100 && prev > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
        double now = off_norm(a);
        if (now >= prev) break;  // hit the rounding floor
        prev = now;
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) eig[static_cast<std::size_t>(r)] = a(r, r);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace kur
