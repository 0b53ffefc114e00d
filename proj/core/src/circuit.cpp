#include "hermex/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace hermex {

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 12)
    throw std::invalid_argument("Circuit: qubit count out of range");
}

void Circuit::add_hadamard(int qubit) {
  if (qubit < 0 || qubit >= n_)
    throw std::invalid_argument("Circuit: qubit out of range");
  Gate g;
  g.kind = Gate::Kind::hadamard;
  g.q1 = qubit;
  gates_.push_back(g);
}

void Circuit::add_cz(int q1, int q2) {
  if (q1 < 0 || q1 >= n_ || q2 < 0 || q2 >= n_ || q1 == q2)
    throw std::invalid_argument("Circuit: invalid CZ qubit pair");
  Gate g;
  g.kind = Gate::Kind::cz;
  g.q1 = q1;
  g.q2 = q2;
  gates_.push_back(g);
}

int Circuit::add_rotation(const PauliString& word, double scale) {
  const int slot = n_params_++;
  add_rotation_on_slot(word, slot, scale);
  return slot;
}

void Circuit::add_rotation_on_slot(const PauliString& word, int slot,
                                   double scale) {
  if (word.n_qubits() > n_)
    throw std::invalid_argument("Circuit: rotation word larger than register");
  if (slot < 0) throw std::invalid_argument("Circuit: bad parameter slot");
  n_params_ = std::max(n_params_, slot + 1);
  Gate g;
  g.kind = Gate::Kind::pauli_rotation;
  g.word = word;
  g.param_slot = slot;
  g.scale = scale;
  gates_.push_back(std::move(g));
}

void Circuit::add_frozen_rotation(const PauliString& word, double angle) {
  if (word.n_qubits() > n_)
    throw std::invalid_argument("Circuit: rotation word larger than register");
  Gate g;
  g.kind = Gate::Kind::pauli_rotation;
  g.word = word;
  g.param_slot = -1;
  g.scale = angle;
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_)
    throw std::invalid_argument("Circuit::append: register size mismatch");
  const int offset = n_params_;
  for (const Gate& g : other.gates_) {
    Gate copy = g;
    if (copy.kind == Gate::Kind::pauli_rotation && copy.param_slot >= 0)
      copy.param_slot += offset;
    gates_.push_back(std::move(copy));
  }
  n_params_ += other.n_params_;
}

double Circuit::gate_angle(const Gate& g,
                           std::span<const double> params) const {
  if (g.param_slot < 0) return g.scale;
  return g.scale * params[static_cast<std::size_t>(g.param_slot)];
}

void Circuit::apply_to(StateVector& state, std::span<const double> params,
                       int qubit_offset) const {
  if (static_cast<int>(params.size()) != n_params_)
    throw std::invalid_argument("Circuit::apply_to: parameter count mismatch");
  if (qubit_offset < 0 || qubit_offset + n_ > state.n_qubits())
    throw std::invalid_argument("Circuit::apply_to: register does not fit");
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case Gate::Kind::hadamard:
        state.apply_hadamard(g.q1 + qubit_offset);
        break;
      case Gate::Kind::cz:
        state.apply_cz(g.q1 + qubit_offset, g.q2 + qubit_offset);
        break;
      case Gate::Kind::pauli_rotation: {
        const PauliString& w = *g.word;
        if (qubit_offset == 0) {
          state.apply_pauli_rotation(w, gate_angle(g, params));
        } else {
          // Shift the word onto the offset register.
          PauliString shifted(state.n_qubits(),
                              w.x_mask() << qubit_offset,
                              w.z_mask() << qubit_offset, w.phase_exp());
          state.apply_pauli_rotation(shifted, gate_angle(g, params));
        }
        break;
      }
    }
  }
}

ComplexMatrix Circuit::unitary(std::span<const double> params) const {
  if (n_ > 10)
    throw std::invalid_argument("Circuit::unitary: register too large");
  const std::size_t dim = std::size_t{1} << n_;
  ComplexMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis_state(n_, col);
    apply_to(s, params);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s.amplitude(row);
  }
  return u;
}

Circuit Circuit::freeze(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != n_params_)
    throw std::invalid_argument("Circuit::freeze: parameter count mismatch");
  Circuit out(n_);
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case Gate::Kind::hadamard: out.add_hadamard(g.q1); break;
      case Gate::Kind::cz: out.add_cz(g.q1, g.q2); break;
      case Gate::Kind::pauli_rotation:
        out.add_frozen_rotation(*g.word, gate_angle(g, params));
        break;
    }
  }
  return out;
}

Circuit invert(const Circuit& c, std::span<const double> params) {
  if (static_cast<int>(params.size()) != c.n_params())
    throw std::invalid_argument("invert: parameter count mismatch");
  Circuit out(c.n_qubits());
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    switch (it->kind) {
      case Gate::Kind::hadamard: out.add_hadamard(it->q1); break;
      case Gate::Kind::cz: out.add_cz(it->q1, it->q2); break;
      case Gate::Kind::pauli_rotation: {
        const double angle = it->param_slot < 0
                                 ? it->scale
                                 : it->scale * params[static_cast<std::size_t>(
                                       it->param_slot)];
        out.add_frozen_rotation(*it->word, -angle);
        break;
      }
    }
  }
  return out;
}

std::string circuit_to_text(const Circuit& c, std::span<const double> params) {
  std::ostringstream out;
  out.precision(17);
  out << "circuit " << c.n_qubits() << ' ' << c.n_params() << '\n';
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case Gate::Kind::hadamard: out << "H " << g.q1 << '\n'; break;
      case Gate::Kind::cz: out << "CZ " << g.q1 << ' ' << g.q2 << '\n'; break;
      case Gate::Kind::pauli_rotation:
        if (g.param_slot < 0)
          out << "ROTF " << g.word->word() << ' ' << g.scale << '\n';
        else
          out << "ROT " << g.word->word() << ' ' << g.param_slot << ' '
              << g.scale << '\n';
        break;
    }
  }
  if (!params.empty()) {
    if (static_cast<int>(params.size()) != c.n_params())
      throw std::invalid_argument("circuit_to_text: parameter count mismatch");
    for (std::size_t i = 0; i < params.size(); ++i)
      out << "PARAM " << i << ' ' << params[i] << '\n';
  }
  return out.str();
}

LoadedCircuit circuit_from_text(std::istream& in) {
  std::string line;
  std::optional<Circuit> circuit;
  int declared_params = 0;
  std::optional<std::vector<double>> params;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "circuit") {
      int n = 0;
      if (!(ls >> n >> declared_params))
        throw std::runtime_error("circuit_from_text: bad header");
      circuit.emplace(n);
      continue;
    }
    if (!circuit)
      throw std::runtime_error("circuit_from_text: missing header line");
    if (tag == "H") {
      int q;
      if (!(ls >> q)) throw std::runtime_error("circuit_from_text: bad H line");
      circuit->add_hadamard(q);
    } else if (tag == "CZ") {
      int q1, q2;
      if (!(ls >> q1 >> q2))
        throw std::runtime_error("circuit_from_text: bad CZ line");
      circuit->add_cz(q1, q2);
    } else if (tag == "ROT") {
      std::string word;
      int slot;
      double scale;
      if (!(ls >> word >> slot >> scale))
        throw std::runtime_error("circuit_from_text: bad ROT line");
      circuit->add_rotation_on_slot(PauliString::from_word(word), slot, scale);
    } else if (tag == "ROTF") {
      std::string word;
      double angle;
      if (!(ls >> word >> angle))
        throw std::runtime_error("circuit_from_text: bad ROTF line");
      circuit->add_frozen_rotation(PauliString::from_word(word), angle);
    } else if (tag == "PARAM") {
      int slot;
      double value;
      if (!(ls >> slot >> value))
        throw std::runtime_error("circuit_from_text: bad PARAM line");
      if (!params) params.emplace(static_cast<std::size_t>(declared_params));
      if (slot < 0 || slot >= declared_params)
        throw std::runtime_error("circuit_from_text: PARAM slot out of range");
      (*params)[static_cast<std::size_t>(slot)] = value;
    } else {
      throw std::runtime_error("circuit_from_text: unknown tag " + tag);
    }
  }
  if (!circuit) throw std::runtime_error("circuit_from_text: empty input");
  if (circuit->n_params() != declared_params)
    throw std::runtime_error("circuit_from_text: parameter count mismatch");
  return {std::move(*circuit), std::move(params)};
}

LoadedCircuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  return circuit_from_text(in);
}

}  // namespace hermex
