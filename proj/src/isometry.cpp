// Copyright 2026 The cvcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvcodes/isometry.hpp"

#include <algorithm>
#include <cmath>

#include "cvcodes/errors.hpp"
#include "cvcodes/kernels.hpp"

namespace cvcodes {

namespace {

constexpr double kDegeneracyGap = 1e-8;
constexpr double kProjectorTol = 1e-9;
constexpr double kUnitaryTol = 1e-8;

using kernels::parallel::matmul;
using kernels::parallel::max_abs_diff;

void require_hermitian(const ComplexMatrix &m, const char *name) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidDimension, std::string(name) + " must be square and non-empty");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (max_abs_diff(m, m.adjoint()) > 1e-12 * scale) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " is not Hermitian");
    }
}

struct Eigenbasis {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};

Eigenbasis canonical_eigenbasis(const ComplexMatrix &m, const char *name) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::InvalidArgument, std::string("eigendecomposition of ") + name + " failed");
    }
    Eigenbasis out{solver.eigenvalues(), solver.eigenvectors()};
    for (Eigen::Index i = 1; i < out.values.size(); ++i) {
        if (out.values(i) - out.values(i - 1) < kDegeneracyGap) {
            throw Error(ErrorKind::DegenerateSpectrum,
                        std::string(name) + " has eigenvalues closer than 1e-8 near " +
                            std::to_string(out.values(i)));
        }
    }
    for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
        Eigen::Index arg = 0;
        out.vectors.col(c).cwiseAbs().maxCoeff(&arg);
        const std::complex<double> pivot = out.vectors(arg, c);
        out.vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    return out;
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

void require_orthogonal_projectors(const std::vector<const ComplexMatrix *> &projectors, const char *name,
                                   ErrorKind kind) {
    for (std::size_t a = 0; a < projectors.size(); ++a) {
        for (std::size_t b = a + 1; b < projectors.size(); ++b) {
            const ComplexMatrix prod = matmul(*projectors[a], *projectors[b]);
            if (prod.cwiseAbs().maxCoeff() > kProjectorTol) {
                throw Error(kind, std::string(name) + " projectors " + std::to_string(a) + " and " +
                                      std::to_string(b) + " overlap");
            }
        }
    }
}

}  // namespace

double IsometryResiduals::max() const {
    return std::max({vvdag_minus_k, vdagv_minus_l, vyvdag_minus_kxk, vdagxv_minus_lyl});
}

PartialIsometryRep canonical_partial_isometry(const ComplexMatrix &x, const ComplexMatrix &y, double match_tol) {
    require_hermitian(x, "X");
    require_hermitian(y, "Y");
    const Eigenbasis ex = canonical_eigenbasis(x, "X");
    const Eigenbasis ey = canonical_eigenbasis(y, "Y");

    PartialIsometryRep rep;
    rep.match_tol = match_tol;
    rep.v = ComplexMatrix::Zero(x.rows(), y.rows());
    rep.k = ComplexMatrix::Zero(x.rows(), x.rows());
    rep.l = ComplexMatrix::Zero(y.rows(), y.rows());

    // Both spectra are sorted ascending; walk them together.
    Eigen::Index i = 0;
    Eigen::Index j = 0;
    while (i < ex.values.size() && j < ey.values.size()) {
        const double dx = ex.values(i);
        const double dy = ey.values(j);
        if (std::abs(dx - dy) <= match_tol) {
            rep.v += ex.vectors.col(i) * ey.vectors.col(j).adjoint();
            rep.k += ex.vectors.col(i) * ex.vectors.col(i).adjoint();
            rep.l += ey.vectors.col(j) * ey.vectors.col(j).adjoint();
            rep.pairs.emplace_back(dx, dy);
            ++i;
            ++j;
        } else if (dx < dy) {
            ++i;
        } else {
            ++j;
        }
    }
    rep.empty = rep.pairs.empty();
    return rep;
}

IsometryResiduals partial_isometry_residuals(const PartialIsometryRep &rep, const ComplexMatrix &x,
                                             const ComplexMatrix &y) {
    const ComplexMatrix vdag = rep.v.adjoint();
    IsometryResiduals r;
    r.vvdag_minus_k = max_abs_diff(matmul(rep.v, vdag), rep.k);
    r.vdagv_minus_l = max_abs_diff(matmul(vdag, rep.v), rep.l);
    r.vyvdag_minus_kxk = max_abs_diff(matmul(matmul(rep.v, y), vdag), matmul(matmul(rep.k, x), rep.k));
    r.vdagxv_minus_lyl = max_abs_diff(matmul(matmul(vdag, x), rep.v), matmul(matmul(rep.l, y), rep.l));
    return r;
}

ComplexMatrix unitary_from_family(const std::vector<PartialIsometryRep> &family, DomainMode mode) {
    if (family.empty()) {
        throw Error(ErrorKind::IncompleteFamily, "empty family");
    }
    const Eigen::Index rows = family.front().v.rows();
    ComplexMatrix k_sum = ComplexMatrix::Zero(rows, rows);
    std::vector<const ComplexMatrix *> ks;
    for (const auto &member : family) {
        if (member.v.rows() != rows) {
            throw Error(ErrorKind::IncompleteFamily, "members map into different spaces");
        }
        k_sum += member.k;
        ks.push_back(&member.k);
    }
    if (max_abs_diff(k_sum, identity(rows)) > kProjectorTol) {
        throw Error(ErrorKind::IncompleteFamily, "image projectors do not sum to the identity");
    }
    require_orthogonal_projectors(ks, "image", ErrorKind::IncompleteFamily);

    ComplexMatrix u;
    if (mode == DomainMode::shared) {
        const Eigen::Index cols = family.front().v.cols();
        ComplexMatrix l_sum = ComplexMatrix::Zero(cols, cols);
        std::vector<const ComplexMatrix *> ls;
        u = ComplexMatrix::Zero(rows, cols);
        for (const auto &member : family) {
            if (member.v.cols() != cols) {
                throw Error(ErrorKind::IncompleteFamily, "members have different domains");
            }
            l_sum += member.l;
            ls.push_back(&member.l);
            u += member.v;
        }
        if (max_abs_diff(l_sum, identity(cols)) > kProjectorTol) {
            throw Error(ErrorKind::IncompleteFamily, "co-image projectors do not sum to the identity");
        }
        require_orthogonal_projectors(ls, "co-image", ErrorKind::IncompleteFamily);
    } else {
        Eigen::Index cols = 0;
        for (const auto &member : family) {
            if (max_abs_diff(member.l, identity(member.l.rows())) > kProjectorTol) {
                throw Error(ErrorKind::IncompleteFamily, "direct-sum members must have full co-image");
            }
            cols += member.v.cols();
        }
        u = ComplexMatrix::Zero(rows, cols);
        Eigen::Index at = 0;
        for (const auto &member : family) {
            u.middleCols(at, member.v.cols()) = member.v;
            at += member.v.cols();
        }
    }
    if (u.rows() != u.cols() || max_abs_diff(matmul(u.adjoint(), u), identity(u.cols())) > kUnitaryTol ||
        max_abs_diff(matmul(u, u.adjoint()), identity(u.rows())) > kUnitaryTol) {
        throw Error(ErrorKind::IncompleteFamily, "assembled map is not unitary");
    }
    return u;
}

CyclicResult cyclic_structure(const std::vector<ComplexMatrix> &semis) {
    if (semis.empty()) {
        throw Error(ErrorKind::NotSemiUnitary, "empty family");
    }
    const auto count = static_cast<Eigen::Index>(semis.size());
    const Eigen::Index d = semis.front().cols();
    const Eigen::Index total = count * d;
    std::vector<ComplexMatrix> ranges;
    ComplexMatrix range_sum = ComplexMatrix::Zero(total, total);
    for (const auto &s : semis) {
        if (s.rows() != total || s.cols() != d) {
            throw Error(ErrorKind::NotSemiUnitary, "each member must be (k d) x d");
        }
        if (max_abs_diff(matmul(s.adjoint(), s), identity(d)) > kProjectorTol) {
            throw Error(ErrorKind::NotSemiUnitary, "S^dagger S != 1");
        }
        ranges.push_back(matmul(s, s.adjoint()));
        range_sum += ranges.back();
    }
    std::vector<const ComplexMatrix *> ptrs;
    for (const auto &p : ranges) {
        ptrs.push_back(&p);
    }
    require_orthogonal_projectors(ptrs, "range", ErrorKind::NotSemiUnitary);
    if (max_abs_diff(range_sum, identity(total)) > kProjectorTol) {
        throw Error(ErrorKind::NotSemiUnitary, "ranges do not cover the space");
    }

    CyclicResult out;
    out.generator = ComplexMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < count; ++i) {
        out.generator += matmul(semis[static_cast<std::size_t>((i + 1) % count)],
                                semis[static_cast<std::size_t>(i)].adjoint());
    }
    ComplexMatrix power = out.generator;
    for (Eigen::Index i = 1; i < count; ++i) {
        power = matmul(power, out.generator);
    }
    out.power_residual = max_abs_diff(power, identity(total));
    for (Eigen::Index i = 0; i < count; ++i) {
        out.shift_residual =
            std::max(out.shift_residual, max_abs_diff(matmul(out.generator, semis[static_cast<std::size_t>(i)]),
                                                      semis[static_cast<std::size_t>((i + 1) % count)]));
    }
    out.order_ok = out.power_residual <= kUnitaryTol && out.shift_residual <= kUnitaryTol;
    return out;
}

std::string to_string(const BlockLabel &label) {
    return std::string("(") + (label.tau > 0 ? "+1" : "-1") + ", " + to_string(label.nu) + ")";
}

BlockOperator::BlockOperator(std::vector<BlockLabel> labels, std::vector<FockOperator> blocks)
    : labels_(std::move(labels)), blocks_(std::move(blocks)) {
    if (labels_.empty() || labels_.size() != blocks_.size()) {
        throw Error(ErrorKind::InvalidArgument, "block operator needs one block per label");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].tau != 1 && labels_[i].tau != -1) {
            throw Error(ErrorKind::InvalidArgument, "label tau must be +1 or -1");
        }
        if (blocks_[i].dim() != blocks_.front().dim()) {
            throw Error(ErrorKind::InvalidDimension, "all blocks must share one dimension");
        }
        if (blocks_[i].structure().kind != Structure::Kind::diagonal) {
            throw Error(ErrorKind::InvalidArgument, "blocks must be diagonal");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (labels_[j] == labels_[i]) {
                throw Error(ErrorKind::InvalidArgument, "duplicate label " + to_string(labels_[i]));
            }
        }
    }
}

std::size_t BlockOperator::position(const BlockLabel &label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorKind::UnknownLabel, "no block labelled " + to_string(label));
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

const FockOperator &BlockOperator::block(const BlockLabel &label) const { return blocks_[position(label)]; }

std::vector<BlockLabel> discretized_labels(int grid) {
    if (grid < 1) {
        throw Error(ErrorKind::InvalidArgument, "grid resolution G must be >= 1");
    }
    std::vector<BlockLabel> labels;
    for (int g = 0; g < grid; ++g) {
        labels.push_back({1, Rational(g, grid)});
    }
    for (int g = 1; g <= grid; ++g) {
        labels.push_back({-1, Rational(g, grid)});
    }
    return labels;
}

FockOperator affine_member(const FockOperator &a, const BlockLabel &label) {
    if (a.exact_diagonal() && a.exact_diagonal()->unit == ExactDiagonal::Unit::plain) {
        ExactDiagonal out = *a.exact_diagonal();
        for (auto &v : out.values) {
            v = Rational(label.tau) * (v + label.nu);
        }
        return FockOperator(std::move(out));
    }
    ComplexMatrix m = a.entries();
    m.diagonal().array() += to_double(label.nu);
    m *= static_cast<double>(label.tau);
    return FockOperator(std::move(m), a.structure());
}

BlockOperator number_family(int dim, int grid) {
    const FockOperator n = number_op(dim);
    std::vector<BlockLabel> labels = discretized_labels(grid);
    std::vector<FockOperator> blocks;
    for (const auto &label : labels) {
        blocks.push_back(affine_member(n, label));
    }
    return BlockOperator(std::move(labels), std::move(blocks));
}

SeriesAction polynomial_action(std::vector<Rational> coeffs) {
    return [coeffs = std::move(coeffs)](const FockOperator &a) {
        const auto &exact = a.exact_diagonal();
        if (exact && exact->unit == ExactDiagonal::Unit::plain) {
            ExactDiagonal out{ExactDiagonal::Unit::plain, {}};
            for (const auto &x : exact->values) {
                Rational acc(0);
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                    acc = acc * x + *it;
                }
                out.values.push_back(acc);
            }
            return FockOperator(std::move(out));
        }
        ComplexMatrix acc = ComplexMatrix::Zero(a.dim(), a.dim());
        ComplexMatrix power = ComplexMatrix::Identity(a.dim(), a.dim());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i > 0) {
                power = kernels::parallel::matmul(power, a.entries());
            }
            acc += to_double(coeffs[i]) * power;
        }
        return FockOperator(std::move(acc), Structure::dense());
    };
}

BlockOperator iota_embed(const SeriesAction &f, const BlockOperator &family) {
    std::vector<FockOperator> blocks;
    for (const auto &b : family.blocks()) {
        blocks.push_back(f(b));
    }
    return BlockOperator(family.labels(), std::move(blocks));
}

BlockOperator iota_embed(const SeriesAction &f, const FockOperator &a, const std::vector<BlockLabel> &labels) {
    std::vector<FockOperator> blocks;
    for (const auto &label : labels) {
        blocks.push_back(f(affine_member(a, label)));
    }
    return BlockOperator(labels, std::move(blocks));
}

FockOperator kappa_extract(const BlockOperator &op, const BlockLabel &label) { return op.block(label); }

RationalMatrix RationalMatrix::identity(std::int64_t n) {
    RationalMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) {
        m.set(i, i, Rational(1));
    }
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational> &values) {
    const auto n = static_cast<std::int64_t>(values.size());
    RationalMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) {
        m.set(i, i, values[static_cast<std::size_t>(i)]);
    }
    return m;
}

void RationalMatrix::set(std::int64_t r, std::int64_t c, const Rational &value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw Error(ErrorKind::InvalidDimension, "matrix index out of range");
    }
    if (value == Rational(0)) {
        entries_.erase({r, c});
    } else {
        entries_[{r, c}] = value;
    }
}

Rational RationalMatrix::at(std::int64_t r, std::int64_t c) const {
    const auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorKind::InvalidDimension, "matrix product shape mismatch");
    }
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, Rational>>> rhs_rows;
    for (const auto &[rc, v] : rhs.entries_) {
        rhs_rows[rc.first].emplace_back(rc.second, v);
    }
    RationalMatrix out(rows_, rhs.cols_);
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> acc;
    for (const auto &[rc, v] : entries_) {
        const auto it = rhs_rows.find(rc.second);
        if (it == rhs_rows.end()) {
            continue;
        }
        for (const auto &[col, w] : it->second) {
            acc[{rc.first, col}] += v * w;
        }
    }
    for (const auto &[rc, v] : acc) {
        out.set(rc.first, rc.second, v);
    }
    return out;
}

RationalMatrix RationalMatrix::adjoint() const {
    RationalMatrix out(cols_, rows_);
    for (const auto &[rc, v] : entries_) {
        out.entries_[{rc.second, rc.first}] = v;
    }
    return out;
}

Rational RationalMatrix::max_abs_diff(const RationalMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::InvalidDimension, "matrix shape mismatch");
    }
    Rational worst(0);
    auto consider = [&](const Rational &d) { worst = std::max(worst, d < Rational(0) ? -d : d); };
    for (const auto &[rc, v] : entries_) {
        consider(v - other.at(rc.first, rc.second));
    }
    for (const auto &[rc, v] : other.entries_) {
        if (!entries_.contains(rc)) {
            consider(v);
        }
    }
    return worst;
}

bool RationalMatrix::is_permutation() const {
    if (rows_ != cols_) {
        return false;
    }
    std::vector<int> row_count(static_cast<std::size_t>(rows_), 0);
    std::vector<int> col_count(static_cast<std::size_t>(cols_), 0);
    for (const auto &[rc, v] : entries_) {
        if (v != Rational(1)) {
            return false;
        }
        ++row_count[static_cast<std::size_t>(rc.first)];
        ++col_count[static_cast<std::size_t>(rc.second)];
    }
    auto all_one = [](const std::vector<int> &counts) {
        return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
    };
    return all_one(row_count) && all_one(col_count);
}

bool Alg1Result::pass() const {
    const bool exact = std::all_of(residuals.begin(), residuals.end(),
                                   [](const auto &kv) { return kv.second == Rational(0); });
    return exact && unitary_is_permutation && family.pass();
}

Alg1Result alg1_pipeline(int dim, int grid) {
    if (dim < 1 || grid < 1) {
        throw Error(ErrorKind::InvalidDimension, "alg1 needs D >= 1 and G >= 1");
    }
    Alg1Result out;
    out.dim = dim;
    out.grid = grid;
    out.j_n = number_family(dim, grid);
    out.labels = out.j_n.labels();

    const std::int64_t d = dim;
    const std::int64_t g = grid;
    const std::int64_t total = 2 * d * g;

    // J_n in block order: row = block_index * D + m.
    std::vector<Rational> j_diag;
    std::vector<SpectrumSpec> specs;
    for (const auto &block : out.j_n.blocks()) {
        const auto &values = block.exact_diagonal()->values;
        j_diag.insert(j_diag.end(), values.begin(), values.end());
        std::vector<Rational> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        specs.emplace_back(std::move(sorted));
    }
    out.j_n_matrix = RationalMatrix::diagonal(j_diag);

    std::vector<Rational> grid_values;
    std::map<Rational, std::int64_t> grid_index;
    for (std::int64_t j = -d * g; j < d * g; ++j) {
        grid_index[Rational(j, g)] = static_cast<std::int64_t>(grid_values.size());
        grid_values.emplace_back(j, g);
    }
    out.p_disc = RationalMatrix::diagonal(grid_values);
    out.family = validate_spectrum_family(specs, SpectrumSpec(grid_values));

    out.unitary = RationalMatrix(total, total);
    for (std::int64_t row = 0; row < static_cast<std::int64_t>(j_diag.size()); ++row) {
        const auto it = grid_index.find(j_diag[static_cast<std::size_t>(row)]);
        if (it != grid_index.end()) {
            out.unitary.set(row, it->second, Rational(1));
        }
    }
    out.unitary_is_permutation = out.unitary.is_permutation();

    const std::int64_t base = static_cast<std::int64_t>(out.j_n.position({1, Rational(0)})) * d;
    RationalMatrix extract(d, total);
    for (std::int64_t m = 0; m < d; ++m) {
        extract.set(m, base + m, Rational(1));
    }
    out.upsilon = extract * out.unitary;

    const RationalMatrix u_dag = out.unitary.adjoint();
    const RationalMatrix id = RationalMatrix::identity(total);
    out.residuals["U p U^dag - J_n"] = (out.unitary * out.p_disc * u_dag).max_abs_diff(out.j_n_matrix);
    out.residuals["U^dag U - 1"] = (u_dag * out.unitary).max_abs_diff(id);
    out.residuals["U U^dag - 1"] = (out.unitary * u_dag).max_abs_diff(id);
    out.residuals["U^dag J_n U - p"] = (u_dag * out.j_n_matrix * out.unitary).max_abs_diff(out.p_disc);
    const RationalMatrix n_exact = RationalMatrix::diagonal(number_op(dim).exact_diagonal()->values);
    out.residuals["Upsilon p Upsilon^dag - n"] =
        (out.upsilon * out.p_disc * out.upsilon.adjoint()).max_abs_diff(n_exact);
    out.residuals["Upsilon Upsilon^dag - 1"] =
        (out.upsilon * out.upsilon.adjoint()).max_abs_diff(RationalMatrix::identity(d));
    return out;
}

}  // namespace cvcodes
