#include "hermex/pauli.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace hermex {

namespace {

constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit_count(int n) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("PauliString: qubit count out of range");
}

int popcount_mod4(std::uint32_t m) { return std::popcount(m) & 3; }

}  // namespace

PauliString::PauliString(int n_qubits) : n_(n_qubits), x_(0), z_(0), phase_(0) {
  check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint32_t x_mask,
                         std::uint32_t z_mask, int phase_exp)
    : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
  check_qubit_count(n_qubits);
  const std::uint32_t valid =
      n_qubits == 32 ? ~0u : ((std::uint32_t{1} << n_qubits) - 1);
  if ((x_ & ~valid) != 0 || (z_ & ~valid) != 0)
    throw std::invalid_argument("PauliString: mask bits beyond qubit count");
}

PauliString PauliString::from_word(std::string_view word, int phase_exp) {
  const int n = static_cast<int>(word.size());
  check_qubit_count(n);
  std::uint32_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    switch (word[q]) {
      case 'I': break;
      case 'X': x |= 1u << q; break;
      case 'Y': x |= 1u << q; z |= 1u << q; break;
      case 'Z': z |= 1u << q; break;
      default:
        throw std::invalid_argument("PauliString: invalid letter in word");
    }
  }
  return {n, x, z, phase_exp};
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("PauliString: qubit index out of range");
  std::string w(static_cast<std::size_t>(n_qubits), 'I');
  w[static_cast<std::size_t>(qubit)] = letter;
  return from_word(w);
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

char PauliString::letter(int qubit) const {
  if (qubit < 0 || qubit >= n_)
    throw std::invalid_argument("PauliString: qubit index out of range");
  const bool xb = (x_ >> qubit) & 1u;
  const bool zb = (z_ >> qubit) & 1u;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::word() const {
  std::string w(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) w[static_cast<std::size_t>(q)] = letter(q);
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("PauliString: qubit count mismatch");
  const int sym =
      std::popcount(z_ & other.x_) + std::popcount(x_ & other.z_);
  return (sym & 1) == 0;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("PauliString: qubit count mismatch");
  // With W(x,z) = i^{|x&z|} X^x Z^z, the product phase follows from moving
  // Z^{z1} past X^{x2}, which costs (-1)^{|z1&x2|}.
  const std::uint32_t x3 = a.x_ ^ b.x_;
  const std::uint32_t z3 = a.z_ ^ b.z_;
  int e = a.phase_ + b.phase_;
  e += popcount_mod4(a.x_ & a.z_) + popcount_mod4(b.x_ & b.z_);
  e += 2 * popcount_mod4(a.z_ & b.x_);
  e -= popcount_mod4(x3 & z3);
  return {a.n_, x3, z3, e};
}

ComplexMatrix PauliString::to_dense() const {
  if (n_ > 12)
    throw std::invalid_argument("PauliString::to_dense: more than 12 qubits");
  const std::size_t dim = std::size_t{1} << n_;
  // Index-space masks: qubit q sits at bit (n-1-q) of a basis index.
  std::uint32_t xi = 0, zi = 0;
  for (int q = 0; q < n_; ++q) {
    if ((x_ >> q) & 1u) xi |= 1u << (n_ - 1 - q);
    if ((z_ >> q) & 1u) zi |= 1u << (n_ - 1 - q);
  }
  const int base = (phase_ + popcount_mod4(x_ & z_)) & 3;
  ComplexMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t row = col ^ xi;
    const int sign = std::popcount(static_cast<std::uint32_t>(col) & zi) & 1;
    m(row, col) = kPhases[(base + 2 * sign) & 3];
  }
  return m;
}

std::optional<std::pair<cplx, PauliString>> commutator(const PauliString& a,
                                                       const PauliString& b) {
  if (a.commutes_with(b)) return std::nullopt;
  const PauliString p = a * b;
  return std::make_pair(2.0 * kPhases[p.phase_exp()], p.canonical());
}

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) { check_qubit_count(n_qubits); }

void PauliSum::add(double coeff, const PauliString& s) {
  if (s.n_qubits() != n_)
    throw std::invalid_argument("PauliSum: qubit count mismatch");
  double c = coeff;
  switch (s.phase_exp()) {
    case 0: break;
    case 2: c = -c; break;
    default:
      throw std::invalid_argument(
          "PauliSum: imaginary phase would break Hermiticity");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].string.same_word(s)) {
      terms_[i].coeff += c;
      if (std::abs(terms_[i].coeff) < 1e-12)
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
  }
  if (std::abs(c) >= 1e-12) terms_.push_back({c, s.canonical()});
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const Term& t : terms_) w = std::max(w, t.string.weight());
  return w;
}

ComplexMatrix PauliSum::to_dense() const {
  if (n_ > 12)
    throw std::invalid_argument("PauliSum::to_dense: more than 12 qubits");
  const std::size_t dim = std::size_t{1} << n_;
  ComplexMatrix m(dim, dim);
  for (const Term& t : terms_) {
    const ComplexMatrix p = t.string.to_dense();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) += t.coeff * p(i, j);
  }
  return m;
}

PauliSum PauliSum::parse(std::istream& in) {
  std::vector<std::pair<double, std::string>> rows;
  std::string line;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double coeff = 0.0;
    std::string word, extra;
    if (!(ls >> coeff >> word) || (ls >> extra))
      throw std::runtime_error("PauliSum::parse: malformed line: " + line);
    for (char c : word)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw std::runtime_error("PauliSum::parse: invalid word: " + word);
    if (width == 0) width = word.size();
    if (word.size() != width)
      throw std::runtime_error("PauliSum::parse: inconsistent word length");
    rows.emplace_back(coeff, word);
  }
  if (rows.empty()) throw std::runtime_error("PauliSum::parse: empty input");
  PauliSum sum(static_cast<int>(width));
  for (const auto& [coeff, word] : rows)
    sum.add(coeff, PauliString::from_word(word));
  return sum;
}

PauliSum PauliSum::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const Term& t : terms_) out << t.coeff << ' ' << t.string.word() << '\n';
  return out.str();
}

PauliSum truncate_to_weight(const PauliSum& h, int max_weight) {
  PauliSum out(h.n_qubits());
  for (const PauliSum::Term& t : h.terms()) {
    const int w = t.string.weight();
    if (w >= 1 && w <= max_weight) out.add(t.coeff, t.string);
  }
  return out;
}

PauliSum pauli_decompose(const ComplexMatrix& hermitian, int n_qubits) {
  if (n_qubits > 6)
    throw std::invalid_argument("pauli_decompose: more than 6 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (hermitian.rows() != dim || hermitian.cols() != dim)
    throw std::invalid_argument("pauli_decompose: dimension mismatch");
  PauliSum sum(n_qubits);
  std::string word(static_cast<std::size_t>(n_qubits), 'I');
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const std::size_t n_words = std::size_t{1} << (2 * n_qubits);
  for (std::size_t w = 0; w < n_words; ++w) {
    std::size_t code = w;
    for (int q = 0; q < n_qubits; ++q) {
      word[static_cast<std::size_t>(q)] = letters[code & 3];
      code >>= 2;
    }
    const PauliString p = PauliString::from_word(word);
    const ComplexMatrix pd = p.to_dense();
    cplx proj = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        proj += std::conj(pd(i, j)) * hermitian(i, j);
    const double coeff = proj.real() / static_cast<double>(dim);
    if (std::abs(coeff) >= 1e-12) sum.add(coeff, p);
  }
  return sum;
}

}  // namespace hermex
