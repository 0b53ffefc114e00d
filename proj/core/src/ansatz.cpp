#include "hermex/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermex {

namespace {

// Solves 2m = s (mod n) for odd n; 2 is invertible, inverse (n+1)/2.
int half_mod(int s, int n) { return (s * ((n + 1) / 2)) % n; }

std::vector<std::vector<std::pair<int, int>>> groups_odd(int n) {
  std::vector<std::vector<std::pair<int, int>>> groups(
      static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = half_mod((i + j) % n, n);
      groups[static_cast<std::size_t>(m)].emplace_back(i, j);
    }
  return groups;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> group_pauli_pairs(int n) {
  if (n < 2) throw std::invalid_argument("group_pauli_pairs: need n >= 2");
  if (n % 2 == 1) return groups_odd(n);
  // Even n: one-factorize the first n-1 qubits, then hand qubit n-1 to the
  // group that leaves qubit m idle (group m misses exactly qubit m).
  std::vector<std::vector<std::pair<int, int>>> groups(
      static_cast<std::size_t>(n));
  if (n - 1 >= 3) {
    auto odd = groups_odd(n - 1);
    for (std::size_t m = 0; m < odd.size(); ++m) groups[m] = std::move(odd[m]);
  }
  for (int m = 0; m < n - 1; ++m)
    groups[static_cast<std::size_t>(m)].emplace_back(m, n - 1);
  return groups;
}

ApqcLayout build_apqc(int n_system) {
  if (n_system < 1 || n_system > 6)
    throw std::invalid_argument("build_apqc: system size out of range");
  const int total = 2 * n_system;
  Circuit encode(total);
  for (int q = 0; q < total; ++q) encode.add_hadamard(q);
  for (int q = 0; q < n_system; ++q) encode.add_cz(q, q + n_system);
  for (int q = n_system; q < total; ++q) encode.add_hadamard(q);

  Circuit decode(total);
  for (int q = n_system; q < total; ++q) decode.add_hadamard(q);
  for (int q = 0; q < n_system; ++q) decode.add_cz(q, q + n_system);
  for (int q = 0; q < total; ++q) decode.add_hadamard(q);

  return {n_system, n_system, std::move(encode), std::move(decode)};
}

StateVector apqc_bell_input(const ApqcLayout& layout) {
  StateVector s(2 * layout.n_system);
  layout.encode.apply_to(s, {});
  return s;
}

namespace {

std::pair<int, int> support_pair(const PauliString& w) {
  int a = -1, b = -1;
  for (int q = 0; q < w.n_qubits(); ++q) {
    if (w.letter(q) == 'I') continue;
    if (a < 0)
      a = q;
    else
      b = q;
  }
  return {a, b};
}

}  // namespace

Circuit build_two_body_ansatz(const PauliSum& h, double t) {
  if (h.max_weight() > 2)
    throw std::invalid_argument(
        "build_two_body_ansatz: terms of weight 3+ are unsupported");
  const int n = h.n_qubits();
  Circuit circuit(n);

  std::vector<const PauliSum::Term*> singles;
  std::vector<const PauliSum::Term*> pairs;
  for (const PauliSum::Term& term : h.terms()) {
    const int w = term.string.weight();
    if (w == 1)
      singles.push_back(&term);
    else if (w == 2)
      pairs.push_back(&term);
    // weight-0 contributes only a global phase; skipped
  }

  std::vector<bool> single_placed(singles.size(), false);
  auto place_singles_touching = [&](auto touches) {
    for (std::size_t s = 0; s < singles.size(); ++s) {
      if (single_placed[s]) continue;
      const int q = support_pair(singles[s]->string).first;
      if (touches(q)) {
        circuit.add_rotation(singles[s]->string, t);
        single_placed[s] = true;
      }
    }
  };

  if (n >= 2) {
    const auto groups = group_pauli_pairs(n);
    for (const auto& group : groups) {
      std::vector<bool> layer_qubits(static_cast<std::size_t>(n), false);
      bool any = false;
      for (const auto& [i, j] : group) {
        for (const PauliSum::Term* term : pairs) {
          const auto [a, b] = support_pair(term->string);
          if (a == i && b == j) {
            circuit.add_rotation(term->string, t);
            layer_qubits[static_cast<std::size_t>(i)] = true;
            layer_qubits[static_cast<std::size_t>(j)] = true;
            any = true;
          }
        }
      }
      if (any)
        place_singles_touching(
            [&](int q) { return layer_qubits[static_cast<std::size_t>(q)]; });
    }
  }
  // Singles whose qubit no two-body layer touches go at the end.
  place_singles_touching([](int) { return true; });

  return circuit;
}

int two_body_layer_count(const PauliSum& h) {
  if (h.max_weight() > 2) return static_cast<int>(h.terms().size());
  const int n = h.n_qubits();
  bool has_single = false;
  std::vector<std::vector<std::pair<int, int>>> groups;
  if (n >= 2) groups = group_pauli_pairs(n);
  std::vector<bool> occupied(groups.size(), false);
  for (const PauliSum::Term& term : h.terms()) {
    const int w = term.string.weight();
    if (w == 1) has_single = true;
    if (w != 2) continue;
    const auto [i, j] = support_pair(term.string);
    for (std::size_t m = 0; m < groups.size(); ++m)
      for (const auto& [a, b] : groups[m])
        if (a == i && b == j) occupied[m] = true;
  }
  int layers =
      static_cast<int>(std::count(occupied.begin(), occupied.end(), true));
  if (has_single) ++layers;
  return layers;
}

}  // namespace hermex
