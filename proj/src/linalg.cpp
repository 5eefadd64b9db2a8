#include "ezn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ezn {

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

SymMatrix laplacian_matrix(const Graph& g) {
    SymMatrix l(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) l.set(v, v, static_cast<double>(g.degree(v)));
    for (auto [u, v] : g.edges()) l.set(u, v, -1.0);
    return l;
}

SymMatrix signless_laplacian_matrix(const Graph& g) {
    SymMatrix q(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) q.set(v, v, static_cast<double>(g.degree(v)));
    for (auto [u, v] : g.edges()) q.set(u, v, 1.0);
    return q;
}

SymMatrix normalized_laplacian_matrix(const Graph& g) {
    SymMatrix l(g.order());
    std::vector<double> scale(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto d = g.degree(v);
        scale[v] = d == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(d));
        if (d != 0) l.set(v, v, 1.0);
    }
    for (auto [u, v] : g.edges()) l.set(u, v, -scale[u] * scale[v]);
    return l;
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& mat, const JacobiOptions& options) {
    const std::size_t n = mat.dim();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mat(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double frob = 0.0;
    for (double x : a) frob += x * x;
    const double threshold = options.off_diagonal_threshold * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > threshold) {
        if (sweep++ >= options.max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                                   " sweeps (dimension " + std::to_string(n) + ")");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle zeroing a_pq (Rutishauser's stable form).
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

Spectrum::Spectrum(std::vector<double> values, double tolerance) : values_(std::move(values)), tolerance_(tolerance) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("spectrum grouping tolerance must be positive");
    std::sort(values_.begin(), values_.end());
    // Group from the top so entries come out descending; chain neighbours within tolerance.
    std::size_t i = values_.size();
    while (i > 0) {
        std::size_t j = i - 1;
        double total = values_[j];
        while (j > 0 && values_[j] - values_[j - 1] <= tolerance_) {
            --j;
            total += values_[j];
        }
        const std::size_t count = i - j;
        entries_.push_back({total / static_cast<double>(count), count});
        i = j;
    }
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::size_t Spectrum::multiplicity_of(double x) const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [&](double v) { return std::abs(v - x) <= tolerance_; }));
}

Spectrum Spectrum::merged(const Spectrum& other) const {
    std::vector<double> all = values_;
    all.insert(all.end(), other.values_.begin(), other.values_.end());
    return Spectrum(std::move(all), tolerance_);
}

Spectrum symmetric_eigenvalues(const SymMatrix& mat, double tolerance) {
    return Spectrum(jacobi_eigenvalues(mat), tolerance);
}

double max_abs_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    return worst;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tolerance) {
    return max_abs_deviation(a, b) <= tolerance;
}

namespace {

std::vector<double> without_one_zero(const Spectrum& s, std::size_t order) {
    if (s.size() != order) throw std::invalid_argument("spectrum size does not match graph order");
    std::vector<double> rest = s.values();
    auto zero = std::min_element(rest.begin(), rest.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (zero == rest.end() || std::abs(*zero) > s.tolerance())
        throw std::invalid_argument("Laplacian spectrum must contain the eigenvalue 0");
    rest.erase(zero);
    return rest;
}

}  // namespace

Spectrum join_laplacian_spectrum(const Spectrum& s1, std::size_t n1, const Spectrum& s2, std::size_t n2) {
    std::vector<double> out{0.0, static_cast<double>(n1 + n2)};
    for (double mu : without_one_zero(s1, n1)) out.push_back(mu + static_cast<double>(n2));
    for (double mu : without_one_zero(s2, n2)) out.push_back(mu + static_cast<double>(n1));
    return Spectrum(std::move(out), s1.tolerance());
}

}  // namespace ezn
