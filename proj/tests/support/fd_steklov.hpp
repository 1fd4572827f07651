#pragma once

// Independent Steklov oracle: Q1 finite elements on the flat cylinder
// [-L, L] x S^1, Dirichlet-to-Neumann matrix by Schur complement, dense
// eigensolve on the boundary block. O(h^2) accurate; used only in tests.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <vector>

#include "wlab/steklov.hpp"

namespace wlab::testsupport {

inline std::vector<double> fdSteklovEigenvalues(const CylinderGeometry& geo, int ns,
                                                int nt, int count) {
    if (geo.rho1 != geo.rho2)
        throw WeightMismatchError("fd oracle assumes equal boundary weights");
    const double hs = 2.0 * geo.L / (ns - 1);
    const double ht = 2.0 * M_PI / nt;
    const int n = ns * nt;
    auto id = [&](int i, int j) { return i * nt + ((j % nt) + nt) % nt; };

    // Bilinear element stiffness on an hs x ht rectangle, nodes ordered
    // (0,0),(1,0),(1,1),(0,1) in (s,theta).
    Eigen::Matrix4d kx, ky;
    kx << 2, -2, -1, 1, -2, 2, 1, -1, -1, 1, 2, -2, 1, -1, -2, 2;
    ky << 2, 1, -1, -2, 1, 2, -2, -1, -1, -2, 2, 1, -2, -1, 1, 2;
    Eigen::Matrix4d ke = (ht / (6.0 * hs)) * kx + (hs / (6.0 * ht)) * ky;

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(16) * (ns - 1) * nt);
    for (int i = 0; i + 1 < ns; ++i) {
        for (int j = 0; j < nt; ++j) {
            int loc[4] = {id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    trips.emplace_back(loc[a], loc[b], ke(a, b));
        }
    }
    Eigen::SparseMatrix<double> k(n, n);
    k.setFromTriplets(trips.begin(), trips.end());

    // Partition: boundary rows i = 0 and i = ns-1, interior the rest.
    const int nb = 2 * nt, ni = n - nb;
    std::vector<int> perm(n); // node -> position, boundary first
    int bpos = 0, ipos = nb;
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            perm[id(i, j)] = (i == 0 || i == ns - 1) ? bpos++ : ipos++;

    std::vector<Eigen::Triplet<double>> tb, ti, tbi;
    for (int c = 0; c < k.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(k, c); it; ++it) {
            int r = perm[it.row()], cc = perm[it.col()];
            if (r < nb && cc < nb)
                tb.emplace_back(r, cc, it.value());
            else if (r >= nb && cc >= nb)
                ti.emplace_back(r - nb, cc - nb, it.value());
            else if (r >= nb)
                tbi.emplace_back(r - nb, cc, it.value()); // K_ib
        }
    Eigen::SparseMatrix<double> kbb(nb, nb), kii(ni, ni), kib(ni, nb);
    kbb.setFromTriplets(tb.begin(), tb.end());
    kii.setFromTriplets(ti.begin(), ti.end());
    kib.setFromTriplets(tbi.begin(), tbi.end());

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(kii);
    if (solver.info() != Eigen::Success) throw Error("fd oracle: factorization failed");
    Eigen::MatrixXd x = solver.solve(Eigen::MatrixXd(kib));
    Eigen::MatrixXd s = Eigen::MatrixXd(kbb) - Eigen::MatrixXd(kib).transpose() * x;

    // Lumped boundary mass: rho * ht per node, identical at every boundary
    // node, so the generalized problem reduces to a plain symmetric one.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s / (geo.rho1 * ht));
    std::vector<double> out;
    for (int i = 0; i < count && i < nb; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

} // namespace wlab::testsupport
