#include "jwent/reference.hpp"

#include <string>

#include "jwent/errors.hpp"

namespace jwent::reference {

namespace {

void check_size(int n, int site) {
  if (n < 1 || n > kMaxReferenceSites) {
    throw CapacityError("reference operators limited to " + std::to_string(kMaxReferenceSites) + " sites");
  }
  if (site < 1 || site > n) throw DomainError("site out of range");
}

// kron(op_n, ..., op_1): site 1 is the least significant index bit.
Eigen::MatrixXd embed(int n, int site, const Eigen::Matrix2d& op) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int l = n; l >= 1; --l) {
    const Eigen::Matrix2d local = (l == site) ? op : Eigen::Matrix2d::Identity();
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < out.rows(); ++r)
      for (int c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * local;
    out = std::move(next);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd spin_raising(int n, int site) {
  check_size(n, site);
  Eigen::Matrix2d up;
  up << 0, 0, 1, 0;  // |down> = index 0 -> |up> = index 1
  return embed(n, site, up);
}

Eigen::MatrixXd spin_z(int n, int site) {
  check_size(n, site);
  Eigen::Matrix2d sz;
  sz << -0.5, 0, 0, 0.5;
  return embed(n, site, sz);
}

Eigen::MatrixXd fermion_creation(int n, int site) {
  check_size(n, site);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index ket = 0; ket < dim; ++ket) {
    if ((ket >> (site - 1)) & 1) continue;
    // Moving a+_site into place passes every occupied lower site.
    int passed = 0;
    for (int p = 1; p < site; ++p) passed += static_cast<int>((ket >> (p - 1)) & 1);
    a(ket | (Eigen::Index{1} << (site - 1)), ket) = (passed % 2 == 0) ? 1.0 : -1.0;
  }
  return a;
}

Eigen::MatrixXd xxz_full(const CouplingSet& couplings) {
  const int n = couplings.sites();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 1; j < n; ++j) {
    const Eigen::MatrixXd sp_j = spin_raising(n, j);
    const Eigen::MatrixXd sp_k = spin_raising(n, j + 1);
    const Eigen::MatrixXd hop = sp_j * sp_k.transpose() + sp_j.transpose() * sp_k;
    h += couplings.j_xy[j - 1] * hop + couplings.j_z[j - 1] * spin_z(n, j) * spin_z(n, j + 1);
  }
  return h;
}

Eigen::MatrixXd tb_full(const CouplingSet& couplings) {
  const int n = couplings.sites();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 1; j < n; ++j) {
    const Eigen::MatrixXd c_j = fermion_creation(n, j);
    const Eigen::MatrixXd c_k = fermion_creation(n, j + 1);
    const Eigen::MatrixXd n_j = c_j * c_j.transpose();
    const Eigen::MatrixXd n_k = c_k * c_k.transpose();
    const Eigen::MatrixXd hop = c_j * c_k.transpose() + c_k * c_j.transpose();
    h += couplings.j_xy[j - 1] * hop + couplings.j_z[j - 1] * (n_j - 0.5 * one) * (n_k - 0.5 * one);
  }
  return h;
}

Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& full, const SectorBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      out(r, c) = full(basis[static_cast<std::size_t>(r)].bits, basis[static_cast<std::size_t>(c)].bits);
  return out;
}

}  // namespace jwent::reference
