#include "qbench/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <vector>

#include "qbench/errors.hpp"

namespace qbench {

namespace {

std::string fmt_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

struct Token {
  std::string text;
};

std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(' || c == ')' || c == ',' || c == ';' || c == '[' ||
               c == ']') {
      flush();
      out.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  out << "creg c[" << circuit.n_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
        out << kind_name(g.kind) << " q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::RX:
      case GateKind::RZ:
      case GateKind::U1:
        out << kind_name(g.kind) << "(" << fmt_angle(g.params[0]) << ") q["
            << g.qubits[0] << "];\n";
        break;
      case GateKind::U2:
        out << "u2(" << fmt_angle(g.params[0]) << "," << fmt_angle(g.params[1])
            << ") q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::U3:
        out << "u3(" << fmt_angle(g.params[0]) << "," << fmt_angle(g.params[1])
            << "," << fmt_angle(g.params[2]) << ") q[" << g.qubits[0]
            << "];\n";
        break;
      case GateKind::CX:
      case GateKind::CZ:
      case GateKind::SWAP:
        out << kind_name(g.kind) << " q[" << g.qubits[0] << "],q["
            << g.qubits[1] << "];\n";
        break;
      case GateKind::SU4:
        throw GateError("export_qasm: raw su4 gate; rebase first");
    }
  }
  if (circuit.measure_all()) {
    for (int q = 0; q < circuit.n_qubits(); ++q)
      out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

Circuit parse_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n_qubits = -1;
  bool measured = false;
  std::vector<Gate> gates;

  auto fail = [](const std::string& what) -> void {
    throw InputError("parse_qasm: " + what);
  };

  while (std::getline(in, line)) {
    const auto comment = line.find("//");
    if (comment != std::string::npos) line = line.substr(0, comment);
    auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head == "OPENQASM" || head == "include" || head == "creg") continue;
    if (head == "qreg") {
      // qreg q [ n ] ;
      if (tokens.size() < 5) fail("malformed qreg");
      n_qubits = std::stoi(tokens[3]);
      continue;
    }
    if (n_qubits < 0) fail("gate before qreg");
    if (head == "measure") {
      measured = true;
      continue;
    }

    // name ( p1 , p2 , ... ) q [ i ] (, q [ j ])
    std::size_t pos = 1;
    std::vector<double> params;
    if (pos < tokens.size() && tokens[pos] == "(") {
      ++pos;
      while (pos < tokens.size() && tokens[pos] != ")") {
        if (tokens[pos] == ",") {
          ++pos;
          continue;
        }
        params.push_back(std::stod(tokens[pos]));
        ++pos;
      }
      ++pos;  // ')'
    }
    std::vector<std::uint32_t> qubits;
    while (pos < tokens.size() && tokens[pos] != ";") {
      if (tokens[pos] == "," || tokens[pos] == "q") {
        ++pos;
        continue;
      }
      if (tokens[pos] == "[") {
        qubits.push_back(static_cast<std::uint32_t>(std::stoul(tokens[pos + 1])));
        pos += 3;  // idx ']'
        continue;
      }
      fail("unexpected token: " + tokens[pos]);
    }

    auto need = [&](std::size_t np, std::size_t nq) {
      if (params.size() != np || qubits.size() != nq)
        fail("wrong arity for " + head);
    };
    if (head == "h") { need(0, 1); gates.push_back(Gate::h(qubits[0])); }
    else if (head == "x") { need(0, 1); gates.push_back(Gate::x(qubits[0])); }
    else if (head == "y") { need(0, 1); gates.push_back(Gate::y(qubits[0])); }
    else if (head == "z") { need(0, 1); gates.push_back(Gate::z(qubits[0])); }
    else if (head == "rx") { need(1, 1); gates.push_back(Gate::rx(qubits[0], params[0])); }
    else if (head == "rz") { need(1, 1); gates.push_back(Gate::rz(qubits[0], params[0])); }
    else if (head == "u1") { need(1, 1); gates.push_back(Gate::u1(qubits[0], params[0])); }
    else if (head == "u2") { need(2, 1); gates.push_back(Gate::u2(qubits[0], params[0], params[1])); }
    else if (head == "u3") { need(3, 1); gates.push_back(Gate::u3(qubits[0], params[0], params[1], params[2])); }
    else if (head == "cx") { need(0, 2); gates.push_back(Gate::cx(qubits[0], qubits[1])); }
    else if (head == "cz") { need(0, 2); gates.push_back(Gate::cz(qubits[0], qubits[1])); }
    else if (head == "swap") { need(0, 2); gates.push_back(Gate::swap(qubits[0], qubits[1])); }
    else fail("unsupported gate: " + head);
  }

  if (n_qubits < 0) fail("missing qreg");
  Circuit c(n_qubits, measured);
  c.add(gates);
  return c;
}

}  // namespace qbench
