#include "gaa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaa {

MatrixX<double> TridiagonalHamiltonian::dense() const {
  const int n = size();
  MatrixX<double> m = MatrixX<double>::Zero(n, n);
  m.diagonal() = diag;
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = offdiag[i];
    m(i + 1, i) = offdiag[i];
  }
  return m;
}

double TridiagonalHamiltonian::norm() const {
  const int n = size();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    best = std::max(best, row);
  }
  return best;
}

TridiagonalHamiltonian build_hamiltonian(const PotentialParams& pot) {
  pot.validate();
  if (!std::isfinite(pot.delta_over_j))
    throw InvalidArgument("the exact Hamiltonian needs a finite delta_over_j");
  TridiagonalHamiltonian h;
  h.pot = pot;
  h.diag.resize(pot.n_sites);
  for (int n = 1; n <= pot.n_sites; ++n) h.diag[n - 1] = site_energy(n, pot).over_j;
  h.offdiag = VectorXd::Constant(pot.n_sites - 1, -1.0);
  return h;
}

Spectrum eigensystem(const TridiagonalHamiltonian& h) {
  auto eig = symmetric_tridiagonal_eigen<double>(h.diag, h.offdiag);
  Spectrum s;
  s.eigenvalues = std::move(eig.eigenvalues);
  s.eigenvectors = std::move(eig.eigenvectors);
  s.iprs = s.eigenvectors.array().pow(4).colwise().sum().transpose();
  s.classes.reserve(static_cast<std::size_t>(s.eigenvalues.size()));
  for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j)
    s.classes.push_back(classify_state(s.eigenvalues[j], h.pot.alpha, h.pot.delta_over_j));
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

MeConsistency me_consistency(const Spectrum& s, const PotentialParams& pot) {
  if (pot.alpha == 0.0) throw InvalidArgument("ME consistency needs alpha != 0");
  MeConsistency r;
  std::vector<double> all(s.iprs.data(), s.iprs.data() + s.iprs.size());
  r.median_ipr = median(all);

  std::vector<double> loc, ext;
  int agree = 0;
  for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
    const double ipr = s.iprs[j];
    switch (classify_state(s.eigenvalues[j], pot.alpha, pot.delta_over_j)) {
      case StateClass::Localized:
        ++r.localized;
        loc.push_back(ipr);
        if (ipr > r.median_ipr) ++agree;
        break;
      case StateClass::Extended:
        ++r.extended;
        ext.push_back(ipr);
        if (ipr < r.median_ipr) ++agree;
        break;
      case StateClass::Critical: ++r.critical; break;
    }
  }
  r.median_ipr_localized = median(loc);
  r.median_ipr_extended = median(ext);
  const int decided = r.localized + r.extended;
  r.agreement_fraction = decided == 0 ? 0.0 : static_cast<double>(agree) / decided;
  return r;
}

}  // namespace gaa
