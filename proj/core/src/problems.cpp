#include "hermex/problems.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hermex {

const PauliSum& ProblemInstance::pauli() const {
  if (!is_pauli())
    throw std::runtime_error("ProblemInstance: operator is dense");
  return std::get<PauliSum>(op);
}

ComplexMatrix ProblemInstance::dense() const {
  if (is_pauli()) return std::get<PauliSum>(op).to_dense();
  return std::get<ComplexMatrix>(op);
}

PauliSum ProblemInstance::as_pauli_sum() const {
  if (is_pauli()) return std::get<PauliSum>(op);
  return pauli_decompose(std::get<ComplexMatrix>(op), n_qubits);
}

namespace problems {

namespace {

const std::vector<double> kDefaultTimes{0.05, 0.1, 0.2};

PauliSum bell_state_sum() {
  // |Phi+><Phi+| = (II + ZZ + XX - YY) / 4
  PauliSum s(2);
  s.add(0.25, PauliString::from_word("II"));
  s.add(0.25, PauliString::from_word("ZZ"));
  s.add(0.25, PauliString::from_word("XX"));
  s.add(-0.25, PauliString::from_word("YY"));
  return s;
}

PauliSum ghz_state_sum() {
  // |GHZ><GHZ| on 3 qubits.
  PauliSum s(3);
  for (const char* w : {"III", "ZZI", "ZIZ", "IZZ", "XXX"})
    s.add(0.125, PauliString::from_word(w));
  for (const char* w : {"XYY", "YXY", "YYX"})
    s.add(-0.125, PauliString::from_word(w));
  return s;
}

}  // namespace

CrotonicParams parse_crotonic_params(std::istream& in) {
  CrotonicParams params;
  params.nu.assign(4, 0.0);
  std::vector<bool> nu_seen(4, false);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "nu") {
      int j;
      double value;
      if (!(ls >> j >> value) || j < 1 || j > 4)
        throw std::runtime_error("crotonic params: bad nu line: " + line);
      params.nu[static_cast<std::size_t>(j - 1)] = value;
      nu_seen[static_cast<std::size_t>(j - 1)] = true;
    } else if (tag == "J") {
      int j, k;
      double value;
      if (!(ls >> j >> k >> value) || j < 1 || k <= j || k > 4)
        throw std::runtime_error("crotonic params: bad J line: " + line);
      params.j_couplings.push_back({{j - 1, k - 1}, value});
    } else {
      throw std::runtime_error("crotonic params: unknown tag: " + tag);
    }
  }
  for (bool seen : nu_seen)
    if (!seen) throw std::runtime_error("crotonic params: missing nu entry");
  return params;
}

PauliSum crotonic_hamiltonian(const CrotonicParams& params) {
  PauliSum h(4);
  for (int j = 0; j < 4; ++j)
    h.add(0.5 * params.nu[static_cast<std::size_t>(j)],
          PauliString::single(4, j, 'Z'));
  for (const auto& [jk, value] : params.j_couplings) {
    std::string w(4, 'I');
    w[static_cast<std::size_t>(jk.first)] = 'Z';
    w[static_cast<std::size_t>(jk.second)] = 'Z';
    h.add(0.5 * std::numbers::pi * value, PauliString::from_word(w));
  }
  return h;
}

std::filesystem::path crotonic_params_path(
    const std::filesystem::path& override_path) {
  if (!override_path.empty()) return override_path;
  if (const char* env = std::getenv("HERMEX_CROTONIC_PARAMS")) return env;
#ifdef HERMEX_DATA_DIR
  return std::filesystem::path(HERMEX_DATA_DIR) / "crotonic_params.txt";
#else
  return std::filesystem::path("data") / "crotonic_params.txt";
#endif
}

ProblemInstance builtin(const std::string& name) {
  if (name == "bell") return {"bell", 2, bell_state_sum(), kDefaultTimes};
  if (name == "ghz") return {"ghz", 3, ghz_state_sum(), kDefaultTimes};
  if (name == "crotonic") {
    const std::filesystem::path path = crotonic_params_path();
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("crotonic: cannot open parameter file " +
                               path.string());
    return {"crotonic", 4, crotonic_hamiltonian(parse_crotonic_params(in)),
            kDefaultTimes};
  }
  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> builtin_names() { return {"bell", "ghz", "crotonic"}; }

ProblemInstance load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream sniff(text);
  std::string first_token;
  sniff >> first_token;
  ProblemInstance instance;
  instance.name = path.stem().string();
  instance.times = kDefaultTimes;
  if (first_token == "dense") {
    int n = 0;
    if (!(sniff >> n) || n < 1 || n > 12)
      throw std::runtime_error("dense operator: bad qubit count");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        double re, im;
        if (!(sniff >> re >> im))
          throw std::runtime_error("dense operator: truncated matrix data");
        m(i, j) = {re, im};
      }
    if (m.hermiticity_defect() > 1e-9)
      throw std::runtime_error("dense operator: matrix is not Hermitian");
    instance.n_qubits = n;
    instance.op = std::move(m);
  } else {
    PauliSum sum = PauliSum::parse_text(text);
    instance.n_qubits = sum.n_qubits();
    instance.op = std::move(sum);
  }
  return instance;
}

void save(const ProblemInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  if (instance.is_pauli()) {
    out << std::get<PauliSum>(instance.op).to_text();
    return;
  }
  const ComplexMatrix& m = std::get<ComplexMatrix>(instance.op);
  out << "dense " << instance.n_qubits << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).real() << ' ' << m(i, j).imag();
    }
    out << '\n';
  }
}

}  // namespace problems

}  // namespace hermex
