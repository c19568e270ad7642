#include "parlat/scale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlat {

HilbertScale HilbertScale::make(int half_range, int dim, WeightKind kind,
                                std::vector<double> custom) {
    if (half_range < 1) throw std::invalid_argument("half_range must be >= 1");
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
    HilbertScale s;
    s.half_range = half_range;
    s.dim = dim;
    switch (kind) {
        case WeightKind::Linear:
            for (int k = 1; k <= dim; ++k) s.weights.push_back(k);
            break;
        case WeightKind::Quadratic:
            for (int k = 1; k <= dim; ++k) s.weights.push_back(double(k) * k);
            break;
        case WeightKind::Exponential:
            for (int k = 1; k <= dim; ++k) s.weights.push_back(std::exp(k - 1));
            break;
        case WeightKind::Custom:
            s.weights = std::move(custom);
            break;
    }
    if (static_cast<int>(s.weights.size()) != dim)
        throw std::invalid_argument("weight count must equal dim");
    for (int k = 0; k < dim; ++k) {
        if (s.weights[k] < 1.0) throw std::invalid_argument("weights must be >= 1");
        if (k > 0 && s.weights[k] <= s.weights[k - 1])
            throw std::invalid_argument("weights must be strictly increasing");
    }
    return s;
}

double HilbertScale::level_norm(const Eigen::VectorXcd& x, int s) const {
    double sum = 0.0;
    for (int k = 0; k < dim; ++k)
        sum += std::pow(weights[k], 2.0 * s) * std::norm(x[k]);
    return std::sqrt(sum);
}

std::vector<int> HilbertScale::indices() const {
    std::vector<int> out;
    for (int s = -half_range; s <= half_range; ++s) out.push_back(s);
    return out;
}

ScaleOperator ScaleOperator::diagonal_power(const HilbertScale& scale, int order,
                                            double cap) {
    ScaleOperator op;
    op.matrix = Eigen::MatrixXcd::Zero(scale.dim, scale.dim);
    for (int k = 0; k < scale.dim; ++k)
        op.matrix(k, k) = std::pow(scale.weights[k], order);
    op.declared_order = order;
    op.bound_cap = cap;
    return op;
}

ScaleOperator ScaleOperator::identity(const HilbertScale& scale, double cap) {
    ScaleOperator op;
    op.matrix = Eigen::MatrixXcd::Identity(scale.dim, scale.dim);
    op.declared_order = 0;
    op.bound_cap = cap;
    return op;
}

ScaleOperator ScaleOperator::shift(const HilbertScale& scale, int offset, double cap) {
    ScaleOperator op;
    op.matrix = Eigen::MatrixXcd::Zero(scale.dim, scale.dim);
    for (int k = 0; k < scale.dim; ++k) {
        const int j = k + offset;
        if (j >= 0 && j < scale.dim) op.matrix(j, k) = 1.0;
    }
    op.declared_order = 0;
    op.bound_cap = cap;
    return op;
}

OpNorm op_norm(const HilbertScale& scale, const Eigen::MatrixXcd& matrix, int q, int p) {
    if (!scale.valid_index(q) || !scale.valid_index(p))
        throw std::invalid_argument("op_norm: index outside the scale");
    if (matrix.rows() != scale.dim || matrix.cols() != scale.dim)
        throw std::invalid_argument("op_norm: matrix dimension mismatch");
    Eigen::MatrixXcd weighted = matrix;
    for (int k = 0; k < scale.dim; ++k) {
        weighted.row(k) *= std::pow(scale.weights[k], p);
        weighted.col(k) *= std::pow(scale.weights[k], -q);
    }
    // Power iteration on B^H B with a fixed deterministic start.
    Eigen::VectorXcd v(scale.dim);
    for (int k = 0; k < scale.dim; ++k)
        v[k] = std::complex<double>(1.0 + 0.01 * ((k * 7919) % 17), 0.003 * (k % 5));
    v.normalize();
    const int max_iter = 20000;
    const double rel_tol = 1e-8;
    double lambda = 0.0;
    OpNorm result;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd w = weighted.adjoint() * (weighted * v);
        const double next = std::sqrt(w.norm());
        if (next == 0.0) return {0.0, true};
        v = w / w.norm();
        // stop two decades below the contract tolerance for margin
        if (it > 2 && std::abs(next - lambda) <= 0.01 * rel_tol * std::max(next, 1e-300)) {
            return {next, true};
        }
        lambda = next;
    }
    result.value = lambda;
    result.converged = false;
    return result;
}

IndexSets index_sets(const HilbertScale& scale, const ScaleOperator& op) {
    IndexSets out;
    const int n = scale.half_range;
    std::vector<std::vector<bool>> in_j(2 * n + 1, std::vector<bool>(2 * n + 1, false));
    for (int q = -n; q <= n; ++q)
        for (int p = -n; p <= n; ++p) {
            const OpNorm nrm = op_norm(scale, op.matrix, q, p);
            if (std::abs(nrm.value - op.bound_cap) <= 0.01 * op.bound_cap)
                out.plateau_warning = true;
            if (nrm.value <= op.bound_cap) {
                in_j[q + n][p + n] = true;
                out.admissible.emplace_back(q, p);
            }
        }
    // Staircase coherence: raising q or lowering p preserves admissibility.
    for (int q = -n; q <= n; ++q)
        for (int p = -n; p <= n; ++p) {
            if (!in_j[q + n][p + n]) continue;
            const bool ok = (q == n || in_j[q + 1 + n][p + n]) &&
                            (p == -n || in_j[q + n][p - 1 + n]);
            if (!ok) {
                if (out.plateau_warning)
                    throw std::runtime_error(
                        "index_sets: bound cap sits on a norm plateau; classification "
                        "unstable near (" +
                        std::to_string(q) + "," + std::to_string(p) + ")");
                throw std::logic_error("index_sets: admissibility staircase violated");
            }
        }
    for (int q = -n; q <= n; ++q)
        for (int p = -n; p <= n; ++p)
            if (in_j[q + n][p + n]) {
                if (out.domain.empty() || out.domain.back() != q) out.domain.push_back(q);
                break;
            }
    for (int p = -n; p <= n; ++p)
        for (int q = -n; q <= n; ++q)
            if (in_j[q + n][p + n]) {
                out.range.push_back(p);
                break;
            }
    return out;
}

ScaleOperator adjoint(const ScaleOperator& op) {
    ScaleOperator out;
    out.matrix = op.matrix.adjoint();
    out.declared_order = op.declared_order;
    out.bound_cap = op.bound_cap;
    return out;
}

std::optional<ScaleOperator> partial_compose(const HilbertScale& scale,
                                             const ScaleOperator& a,
                                             const ScaleOperator& b) {
    const IndexSets ja = index_sets(scale, a);
    const IndexSets jb = index_sets(scale, b);
    bool channel = false;
    for (int q : jb.range)
        if (std::find(ja.domain.begin(), ja.domain.end(), q) != ja.domain.end()) {
            channel = true;
            break;
        }
    if (!channel) return std::nullopt;
    ScaleOperator out;
    out.matrix = a.matrix * b.matrix;
    out.declared_order = a.declared_order + b.declared_order;
    out.bound_cap = std::max(a.bound_cap, b.bound_cap);
    return out;
}

MultiplierSets multiplier_sets(const HilbertScale& scale,
                               const std::vector<ScaleOperator>& sample, int s) {
    if (!scale.valid_index(s))
        throw std::invalid_argument("multiplier_sets: index outside the scale");
    MultiplierSets out;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const IndexSets sets = index_sets(scale, sample[i]);
        if (std::find(sets.domain.begin(), sets.domain.end(), s) != sets.domain.end())
            out.left_members.push_back(static_cast<int>(i));
        if (std::find(sets.range.begin(), sets.range.end(), s) != sets.range.end())
            out.right_members.push_back(static_cast<int>(i));
    }
    return out;
}

HilbertScale triplet_configuration(int dim) {
    return HilbertScale::make(1, dim, WeightKind::Linear);
}

TripletClass classify_on_triplet(const HilbertScale& scale, const ScaleOperator& op) {
    if (scale.half_range != 1)
        throw std::invalid_argument("classify_on_triplet: needs the {-1,0,1} scale");
    const IndexSets sets = index_sets(scale, op);
    const IndexSets adj_sets = index_sets(scale, adjoint(op));
    auto has = [](const std::vector<int>& v, int s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    TripletClass c;
    c.in_model = !sets.admissible.empty();
    c.in_ra = has(sets.range, 1);
    c.in_la = has(sets.domain, -1);
    c.in_core = c.in_ra && has(adj_sets.range, 1);
    c.left_of_ra = has(sets.domain, 1);
    return c;
}

}  // namespace parlat
