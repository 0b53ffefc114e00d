#include "hermex/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace hermex {

namespace {

constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_register(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("StateVector: qubit count out of range");
}

}  // namespace

StateVector::StateVector(int n_qubits)
    : n_(n_qubits), a_(std::size_t{1} << n_qubits, cplx{0.0, 0.0}) {
  check_register(n_qubits);
  a_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_(n_qubits), a_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (a_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("StateVector: amplitude count mismatch");
}

StateVector StateVector::basis_state(int n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim())
    throw std::invalid_argument("StateVector: basis index out of range");
  s.a_[0] = 0.0;
  s.a_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

void StateVector::apply_hadamard(int qubit) {
  if (qubit < 0 || qubit >= n_)
    throw std::invalid_argument("apply_hadamard: qubit out of range");
  const std::size_t bit = std::size_t{1} << (n_ - 1 - qubit);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i & bit) continue;
    const cplx lo = a_[i];
    const cplx hi = a_[i | bit];
    a_[i] = inv_sqrt2 * (lo + hi);
    a_[i | bit] = inv_sqrt2 * (lo - hi);
  }
}

void StateVector::apply_cz(int q1, int q2) {
  if (q1 < 0 || q1 >= n_ || q2 < 0 || q2 >= n_ || q1 == q2)
    throw std::invalid_argument("apply_cz: invalid qubit pair");
  const std::size_t mask = (std::size_t{1} << (n_ - 1 - q1)) |
                           (std::size_t{1} << (n_ - 1 - q2));
  for (std::size_t i = 0; i < a_.size(); ++i)
    if ((i & mask) == mask) a_[i] = -a_[i];
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() > n_)
    throw std::invalid_argument("apply_pauli: word larger than register");
  // Lift to index space: word qubit q sits at index bit (n-1-q).
  std::size_t xi = 0, zi = 0;
  for (int q = 0; q < p.n_qubits(); ++q) {
    if ((p.x_mask() >> q) & 1u) xi |= std::size_t{1} << (n_ - 1 - q);
    if ((p.z_mask() >> q) & 1u) zi |= std::size_t{1} << (n_ - 1 - q);
  }
  const int base =
      (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) & 3;
  if (xi == 0) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const int e = (base + 2 * (std::popcount(i & zi) & 1)) & 3;
      a_[i] *= kPhases[e];
    }
    return;
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const std::size_t j = i ^ xi;
    if (j < i) continue;
    // New amplitude at k comes from the source index k ^ xi.
    const int ei = (base + 2 * (std::popcount(j & zi) & 1)) & 3;
    const int ej = (base + 2 * (std::popcount(i & zi) & 1)) & 3;
    const cplx ai = a_[i];
    a_[i] = kPhases[ei] * a_[j];
    a_[j] = kPhases[ej] * ai;
  }
}

void StateVector::apply_pauli_rotation(const PauliString& p, double angle) {
  if (p.n_qubits() > n_)
    throw std::invalid_argument(
        "apply_pauli_rotation: word larger than register");
  const double c = std::cos(angle);
  const cplx ms = cplx{0.0, -std::sin(angle)};
  std::size_t xi = 0, zi = 0;
  for (int q = 0; q < p.n_qubits(); ++q) {
    if ((p.x_mask() >> q) & 1u) xi |= std::size_t{1} << (n_ - 1 - q);
    if ((p.z_mask() >> q) & 1u) zi |= std::size_t{1} << (n_ - 1 - q);
  }
  const int base =
      (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) & 3;
  if (xi == 0) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const int e = (base + 2 * (std::popcount(i & zi) & 1)) & 3;
      a_[i] = c * a_[i] + ms * kPhases[e] * a_[i];
    }
    return;
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const std::size_t j = i ^ xi;
    if (j < i) continue;
    const int ei = (base + 2 * (std::popcount(j & zi) & 1)) & 3;
    const int ej = (base + 2 * (std::popcount(i & zi) & 1)) & 3;
    const cplx ai = a_[i];
    const cplx aj = a_[j];
    a_[i] = c * ai + ms * kPhases[ei] * aj;
    a_[j] = c * aj + ms * kPhases[ej] * ai;
  }
}

namespace {

void check_targets(int n, std::span<const int> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n)
      throw std::invalid_argument("apply_dense: qubit out of range");
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw std::invalid_argument("apply_dense: duplicate qubit");
  }
}

}  // namespace

void StateVector::apply_dense(std::span<const int> qubits,
                              const ComplexMatrix& u) {
  const int k = static_cast<int>(qubits.size());
  if (k < 1 || k > n_)
    throw std::invalid_argument("apply_dense: bad target count");
  check_targets(n_, qubits);
  const std::size_t kdim = std::size_t{1} << k;
  if (u.rows() != kdim || u.cols() != kdim)
    throw std::invalid_argument("apply_dense: matrix size mismatch");

  std::vector<std::size_t> tbit(static_cast<std::size_t>(k));
  std::size_t tmask = 0;
  for (int j = 0; j < k; ++j) {
    tbit[static_cast<std::size_t>(j)] = std::size_t{1} << (n_ - 1 - qubits[j]);
    tmask |= tbit[static_cast<std::size_t>(j)];
  }

  std::vector<cplx> in(kdim), out(kdim);
  for (std::size_t rest = 0; rest < a_.size(); ++rest) {
    if (rest & tmask) continue;
    for (std::size_t l = 0; l < kdim; ++l) {
      std::size_t idx = rest;
      for (int j = 0; j < k; ++j)
        if ((l >> (k - 1 - j)) & 1u) idx |= tbit[static_cast<std::size_t>(j)];
      in[l] = a_[idx];
    }
    for (std::size_t r = 0; r < kdim; ++r) {
      cplx s = 0.0;
      for (std::size_t cidx = 0; cidx < kdim; ++cidx) s += u(r, cidx) * in[cidx];
      out[r] = s;
    }
    for (std::size_t l = 0; l < kdim; ++l) {
      std::size_t idx = rest;
      for (int j = 0; j < k; ++j)
        if ((l >> (k - 1 - j)) & 1u) idx |= tbit[static_cast<std::size_t>(j)];
      a_[idx] = out[l];
    }
  }
}

void StateVector::apply_controlled_dense(int control,
                                         std::span<const int> qubits,
                                         const ComplexMatrix& u) {
  if (control < 0 || control >= n_)
    throw std::invalid_argument("apply_controlled_dense: control out of range");
  for (int q : qubits)
    if (q == control)
      throw std::invalid_argument(
          "apply_controlled_dense: control overlaps targets");
  const int k = static_cast<int>(qubits.size());
  check_targets(n_, qubits);
  const std::size_t kdim = std::size_t{1} << k;
  if (u.rows() != kdim || u.cols() != kdim)
    throw std::invalid_argument("apply_controlled_dense: matrix size mismatch");

  const std::size_t cbit = std::size_t{1} << (n_ - 1 - control);
  std::vector<std::size_t> tbit(static_cast<std::size_t>(k));
  std::size_t tmask = 0;
  for (int j = 0; j < k; ++j) {
    tbit[static_cast<std::size_t>(j)] = std::size_t{1} << (n_ - 1 - qubits[j]);
    tmask |= tbit[static_cast<std::size_t>(j)];
  }

  std::vector<cplx> in(kdim), out(kdim);
  for (std::size_t rest = 0; rest < a_.size(); ++rest) {
    if (rest & tmask) continue;
    if (!(rest & cbit)) continue;  // control |1> sector only
    for (std::size_t l = 0; l < kdim; ++l) {
      std::size_t idx = rest;
      for (int j = 0; j < k; ++j)
        if ((l >> (k - 1 - j)) & 1u) idx |= tbit[static_cast<std::size_t>(j)];
      in[l] = a_[idx];
    }
    for (std::size_t r = 0; r < kdim; ++r) {
      cplx s = 0.0;
      for (std::size_t cidx = 0; cidx < kdim; ++cidx) s += u(r, cidx) * in[cidx];
      out[r] = s;
    }
    for (std::size_t l = 0; l < kdim; ++l) {
      std::size_t idx = rest;
      for (int j = 0; j < k; ++j)
        if ((l >> (k - 1 - j)) & 1u) idx |= tbit[static_cast<std::size_t>(j)];
      a_[idx] = out[l];
    }
  }
}

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("overlap: register size mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

StateVector apply_operator(const PauliSum& h, const StateVector& psi) {
  if (h.n_qubits() > psi.n_qubits())
    throw std::invalid_argument("apply_operator: operator larger than state");
  std::vector<cplx> acc(psi.dim(), cplx{0.0, 0.0});
  for (const PauliSum::Term& t : h.terms()) {
    StateVector w = psi;
    w.apply_pauli(t.string);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += t.coeff * w.amplitude(i);
  }
  return StateVector(psi.n_qubits(), std::move(acc));
}

cplx expectation(const PauliString& p, const StateVector& psi) {
  StateVector w = psi;
  w.apply_pauli(p);
  return overlap(psi, w);
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix entries)
    : n_(n_qubits), m_(std::move(entries)) {
  check_register(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (m_.rows() != dim || m_.cols() != dim)
    throw std::invalid_argument("DensityMatrix: dimension mismatch");
  if (m_.hermiticity_defect() > 1e-10)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace() - cplx{1.0, 0.0}) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  const EigenSystem sys = jacobi_eigh(m_);
  if (sys.values.front() < -1e-9)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const std::size_t dim = psi.dim();
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
  return {psi.n_qubits(), std::move(m)};
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  if (keep.empty())
    throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n)
      throw std::invalid_argument("partial_trace: qubit out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("partial_trace: duplicate qubit");
  }

  const int k = static_cast<int>(sorted.size());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(sorted.begin(), sorted.end(), q))
      traced.push_back(q);

  auto expand = [&](std::size_t kept_idx, std::size_t traced_idx) {
    std::size_t idx = 0;
    for (int j = 0; j < k; ++j)
      if ((kept_idx >> (k - 1 - j)) & 1u)
        idx |= std::size_t{1} << (n - 1 - sorted[static_cast<std::size_t>(j)]);
    for (std::size_t j = 0; j < traced.size(); ++j)
      if ((traced_idx >> (traced.size() - 1 - j)) & 1u)
        idx |= std::size_t{1} << (n - 1 - traced[j]);
    return idx;
  };

  const std::size_t kdim = std::size_t{1} << k;
  const std::size_t tdim = std::size_t{1} << traced.size();
  ComplexMatrix out(kdim, kdim);
  for (std::size_t i = 0; i < kdim; ++i)
    for (std::size_t j = 0; j < kdim; ++j) {
      cplx s = 0.0;
      for (std::size_t tr = 0; tr < tdim; ++tr)
        s += rho.matrix()(expand(i, tr), expand(j, tr));
      out(i, j) = s;
    }
  return {k, std::move(out)};
}

}  // namespace hermex
