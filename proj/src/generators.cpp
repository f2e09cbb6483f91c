#include "qbench/generators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "qbench/errors.hpp"

namespace qbench {

int PauliString::weight() const {
  return static_cast<int>(
      std::count_if(symbols.begin(), symbols.end(),
                    [](char c) { return c != 'I'; }));
}

PauliString PauliString::parse(const std::string& s) {
  for (char c : s)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw InputError("pauli string must be over {I,X,Y,Z}");
  return PauliString{s};
}

UndirectedGraph sample_shallow_graph(int n, Rng& rng,
                                     std::uint64_t max_attempts) {
  if (n < 2) throw InputError("sample_shallow_graph: need n >= 2");
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.bernoulli(0.5)) g.add_edge(i, j);
    if (g.max_degree() <= 3 && g.connected()) return g;
  }
  throw BudgetError("sample_shallow_graph: rejection budget exhausted");
}

Circuit gen_shallow(int n, Rng& rng, std::optional<double> fixed_angle) {
  if (n < 2) throw InputError("gen_shallow: need n >= 2");
  const UndirectedGraph graph = sample_shallow_graph(n, rng);
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.add(Gate::h(static_cast<std::uint32_t>(q)));
  // CZ gates scheduled by edge-colour layer; within a layer by edge order
  const auto colours = edge_coloring(graph);
  int max_colour = 0;
  for (const auto& [edge, col] : colours) max_colour = std::max(max_colour, col);
  for (int col = 0; col <= max_colour; ++col) {
    for (const auto& [edge, ecol] : colours) {
      if (ecol == col)
        c.add(Gate::cz(static_cast<std::uint32_t>(edge.a),
                       static_cast<std::uint32_t>(edge.b)));
    }
  }
  for (int q = 0; q < n; ++q) {
    const double alpha = fixed_angle ? *fixed_angle : rng.uniform_angle();
    c.add(Gate::rz(static_cast<std::uint32_t>(q), alpha));
  }
  for (int q = 0; q < n; ++q) c.add(Gate::h(static_cast<std::uint32_t>(q)));
  return c;
}

Su4Matrix haar_su4(Rng& rng) {
  using Eigen::Matrix4cd;
  for (;;) {
    Matrix4cd g;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const auto [re, im] = rng.normal_pair();
        g(i, j) = std::complex<double>(re, im);
      }
    }
    Eigen::HouseholderQR<Matrix4cd> qr(g);
    Matrix4cd q = qr.householderQ();
    const Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    bool singular = false;
    for (int i = 0; i < 4; ++i) {
      const double mag = std::abs(r(i, i));
      if (mag < 1e-12) {
        singular = true;
        break;
      }
      q.col(i) *= r(i, i) / mag;  // Mezzadri phase correction
    }
    if (singular) continue;
    const std::complex<double> det = q.determinant();
    q /= std::pow(det, 0.25);
    Su4Matrix out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i * 4 + j] = q(i, j);
    return out;
  }
}

Circuit gen_square(int n, Rng& rng, std::optional<int> layers) {
  if (n < 2) throw InputError("gen_square: need n >= 2");
  const int n_layers = layers.value_or(n);
  if (n_layers < 0) throw InputError("gen_square: layers must be >= 0");
  Circuit c(n);
  std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
  for (int layer = 0; layer < n_layers; ++layer) {
    // Fisher-Yates shuffle, then pair consecutive entries
    for (int q = 0; q < n; ++q) order[static_cast<std::size_t>(q)] =
        static_cast<std::uint32_t>(q);
    for (int i = n - 1; i > 0; --i) {
      const auto j = rng.uniform_int(static_cast<std::uint64_t>(i) + 1);
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(j)]);
    }
    for (int p = 0; p + 1 < n; p += 2) {
      c.add(Gate::su4(order[static_cast<std::size_t>(p)],
                      order[static_cast<std::size_t>(p + 1)], haar_su4(rng)));
    }
  }
  return c;
}

std::vector<Gate> pauli_gadget(double alpha, const PauliString& s) {
  std::vector<std::uint32_t> support;
  for (std::size_t i = 0; i < s.symbols.size(); ++i)
    if (s.symbols[i] != 'I') support.push_back(static_cast<std::uint32_t>(i));
  if (support.empty())
    throw InputError("pauli_gadget: string must have weight >= 1");

  constexpr double half_pi = 1.5707963267948966;
  std::vector<Gate> seq;
  for (std::uint32_t q : support) {
    if (s.symbols[q] == 'X') seq.push_back(Gate::h(q));
    else if (s.symbols[q] == 'Y') seq.push_back(Gate::rx(q, half_pi));
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i)
    seq.push_back(Gate::cx(support[i], support[i + 1]));
  seq.push_back(Gate::rz(support.back(), alpha));
  for (std::size_t i = support.size() - 1; i-- > 0;)
    seq.push_back(Gate::cx(support[i], support[i + 1]));
  for (std::uint32_t q : support) {
    if (s.symbols[q] == 'X') seq.push_back(Gate::h(q));
    else if (s.symbols[q] == 'Y') seq.push_back(Gate::rx(q, -half_pi));
  }
  return seq;
}

Circuit gen_deep(int n, Rng& rng, std::optional<int> layers) {
  if (n < 2) throw InputError("gen_deep: need n >= 2");
  const int n_layers = layers.value_or(3 * n + 1);
  if (n_layers < 0) throw InputError("gen_deep: layers must be >= 0");
  static constexpr char kSymbols[4] = {'I', 'X', 'Y', 'Z'};
  Circuit c(n);
  for (int layer = 0; layer < n_layers; ++layer) {
    PauliString s;
    do {
      s.symbols.clear();
      for (int q = 0; q < n; ++q)
        s.symbols.push_back(kSymbols[rng.uniform_int(4)]);
    } while (s.weight() == 0);
    const double alpha = rng.uniform_angle();
    c.add(pauli_gadget(alpha, s));
  }
  return c;
}

const char* class_name(CircuitClass c) {
  switch (c) {
    case CircuitClass::Shallow: return "shallow";
    case CircuitClass::Square: return "square";
    case CircuitClass::Deep: return "deep";
  }
  return "?";
}

CircuitClass class_from_name(const std::string& name) {
  if (name == "shallow") return CircuitClass::Shallow;
  if (name == "square") return CircuitClass::Square;
  if (name == "deep") return CircuitClass::Deep;
  throw InputError("unknown circuit class: " + name);
}

Circuit generate(CircuitClass cls, int n, Rng& rng,
                 std::optional<int> layers) {
  switch (cls) {
    case CircuitClass::Shallow: return gen_shallow(n, rng);
    case CircuitClass::Square: return gen_square(n, rng, layers);
    case CircuitClass::Deep: return gen_deep(n, rng, layers);
  }
  throw InputError("unknown circuit class");
}

}  // namespace qbench
