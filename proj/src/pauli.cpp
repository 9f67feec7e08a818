#include "ncgraph/pauli.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace ncg {

namespace {

void require_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

void require_same_n(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) {
    throw std::invalid_argument("qubit-count mismatch: " +
                                std::to_string(p.n) + " vs " +
                                std::to_string(q.n));
  }
}

int popcount(std::uint64_t v) { return std::popcount(v); }

// Per-qubit sigma index from the (x, z) bits.
std::uint8_t digit_of(bool x, bool z) {
  if (!x && !z) return 0;  // I
  if (!x && z) return 1;   // Z
  if (x && !z) return 2;   // X
  return 3;                // Y
}

}  // namespace

PauliString PauliString::identity(int n) {
  require_qubits(n);
  PauliString p;
  p.n = n;
  return p;
}

bool pauli_less(const PauliString& p, const PauliString& q) {
  if (p.x_bits != q.x_bits) return p.x_bits < q.x_bits;
  if (p.z_bits != q.z_bits) return p.z_bits < q.z_bits;
  return p.phase_exp < q.phase_exp;
}

PauliString parse_pauli(const std::string& text, int n) {
  require_qubits(n);
  std::size_t pos = 0;
  int prefix = 0;
  if (!text.empty()) {
    if (text.rfind("-i", 0) == 0) {
      prefix = 3;
      pos = 2;
    } else if (text[0] == '-') {
      prefix = 2;
      pos = 1;
    } else if (text[0] == 'i') {
      prefix = 1;
      pos = 1;
    } else if (text[0] == '+') {
      pos = 1;
    }
  }
  if (text.size() - pos != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Pauli string '" + text + "' does not have " +
                                std::to_string(n) + " letters");
  }
  PauliString p = PauliString::identity(n);
  p.phase_exp = prefix;
  for (int q = 0; q < n; ++q) {
    switch (text[pos + q]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= 1ull << q;
        break;
      case 'Z':
        p.z_bits |= 1ull << q;
        break;
      case 'Y':
        // Y = -i * XZ, so each Y letter contributes i^3.
        p.x_bits |= 1ull << q;
        p.z_bits |= 1ull << q;
        p.phase_exp = (p.phase_exp + 3) & 3;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") +
                                    text[pos + q] + "' in '" + text + "'");
    }
  }
  return p;
}

std::string pauli_letters(const PauliString& p) {
  std::string s(p.n, 'I');
  for (int q = 0; q < p.n; ++q) {
    static const char kLetters[4] = {'I', 'Z', 'X', 'Y'};
    s[q] = kLetters[digit_of(p.x(q), p.z(q))];
  }
  return s;
}

std::string pauli_to_string(const PauliString& p) {
  const int y_count = popcount(p.x_bits & p.z_bits);
  const int display = (p.phase_exp + y_count) & 3;
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[display] + pauli_letters(p);
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  require_same_n(p, q);
  PauliString r;
  r.n = p.n;
  // Per qubit, Z^z X^x' = (-1)^(z x') X^x' Z^z; squares are exactly I.
  r.phase_exp =
      (p.phase_exp + q.phase_exp + 2 * popcount(p.z_bits & q.x_bits)) & 3;
  r.x_bits = p.x_bits ^ q.x_bits;
  r.z_bits = p.z_bits ^ q.z_bits;
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_n(p, q);
  const int sym =
      popcount(p.x_bits & q.z_bits) + popcount(p.z_bits & q.x_bits);
  return (sym & 1) == 0;
}

PauliString phase_free(const PauliString& p) {
  PauliString r = p;
  r.phase_exp = 0;
  return r;
}

std::vector<std::uint8_t> pauli_digits(const PauliString& p) {
  std::vector<std::uint8_t> d(p.n);
  for (int q = 0; q < p.n; ++q) {
    d[q] = digit_of(p.x(q), p.z(q));
  }
  return d;
}

PauliString pauli_from_digits(const std::vector<std::uint8_t>& digits) {
  const int n = static_cast<int>(digits.size());
  PauliString p = PauliString::identity(n);
  for (int q = 0; q < n; ++q) {
    switch (digits[q]) {
      case 0:
        break;
      case 1:
        p.z_bits |= 1ull << q;
        break;
      case 2:
        p.x_bits |= 1ull << q;
        break;
      case 3:
        p.x_bits |= 1ull << q;
        p.z_bits |= 1ull << q;
        p.phase_exp = (p.phase_exp + 3) & 3;
        break;
      default:
        throw std::invalid_argument("sigma index out of range");
    }
  }
  return p;
}

std::uint64_t pauli_ordinal(const PauliString& p) {
  std::uint64_t ord = 0;
  for (int q = 0; q < p.n; ++q) {
    ord = ord * 4 + digit_of(p.x(q), p.z(q));
  }
  return ord;
}

PauliString pauli_from_ordinal(int n, std::uint64_t ordinal) {
  std::vector<std::uint8_t> digits(n);
  for (int q = n - 1; q >= 0; --q) {
    digits[q] = static_cast<std::uint8_t>(ordinal & 3u);
    ordinal >>= 2;
  }
  return pauli_from_digits(digits);
}

ComplexMatrix to_matrix(const PauliString& p, int cap) {
  if (p.n > cap) {
    throw std::invalid_argument("dense form capped at " + std::to_string(cap) +
                                " qubits, got " + std::to_string(p.n));
  }
  static const ComplexMatrix kI = ComplexMatrix::from_rows({{1, 0}, {0, 1}});
  static const ComplexMatrix kX = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  static const ComplexMatrix kZ = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
  static const ComplexMatrix kXZ = ComplexMatrix::from_rows({{0, -1}, {1, 0}});

  ComplexMatrix m = ComplexMatrix::identity(1);
  for (int q = 0; q < p.n; ++q) {
    const std::uint8_t d = digit_of(p.x(q), p.z(q));
    const ComplexMatrix* f = &kI;
    if (d == 1) f = &kZ;
    if (d == 2) f = &kX;
    if (d == 3) f = &kXZ;
    m = kron(m, *f);
  }
  static const cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return scale(kPhases[p.phase_exp & 3], m);
}

int PauliGroup::log2_order() const {
  int s = 0;
  while ((1ull << (s + 1)) <= elements.size()) {
    ++s;
  }
  return s;
}

bool PauliGroup::contains_bits(const PauliString& p) const {
  for (const auto& e : elements) {
    if (e.x_bits == p.x_bits && e.z_bits == p.z_bits) {
      return true;
    }
  }
  return false;
}

PauliGroup generate_group(int n, const std::vector<PauliString>& gens,
                          std::uint64_t cap) {
  require_qubits(n);
  if (cap == 0) {
    cap = n <= 12 ? (4ull << (2 * n)) : (1ull << 26);
  }
  for (const auto& g : gens) {
    if (g.n != n) {
      throw std::invalid_argument("generator qubit count differs from n");
    }
  }

  struct Key {
    std::uint64_t x, z;
    int pe;
    auto operator<=>(const Key&) const = default;
  };
  auto key_of = [](const PauliString& p) {
    return Key{p.x_bits, p.z_bits, p.phase_exp};
  };

  std::set<Key> seen;
  std::vector<PauliString> work;
  const PauliString id = PauliString::identity(n);
  seen.insert(key_of(id));
  work.push_back(id);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& g : gens) {
      const PauliString m = pauli_mul(work[i], g);
      if (seen.insert(key_of(m)).second) {
        if (seen.size() > cap) {
          throw std::runtime_error("group closure exceeds cap " +
                                   std::to_string(cap));
        }
        work.push_back(m);
      }
    }
  }

  PauliGroup grp;
  grp.n = n;
  grp.generators = gens;
  grp.elements = std::move(work);
  std::sort(grp.elements.begin(), grp.elements.end(), pauli_less);

  grp.is_abelian = true;
  for (std::size_t i = 0; i < gens.size() && grp.is_abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        grp.is_abelian = false;
        break;
      }
    }
  }
  grp.minus_identity_free = true;
  for (const auto& e : grp.elements) {
    if (e.x_bits == 0 && e.z_bits == 0 && e.phase_exp != 0) {
      grp.minus_identity_free = false;
      break;
    }
  }
  return grp;
}

std::vector<PauliString> normalizer(const PauliGroup& g) {
  if (!g.valid_stabilizer()) {
    throw std::invalid_argument(
        "normalizer requires an abelian group without -I");
  }
  if (g.n > 12) {
    throw std::invalid_argument("normalizer enumeration capped at 12 qubits");
  }
  const std::uint64_t total = 1ull << (2 * g.n);
  std::vector<PauliString> out;
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    PauliString rep = phase_free(pauli_from_ordinal(g.n, ord));
    bool all = true;
    for (const auto& gen : g.generators) {
      if (!commutes(rep, gen)) {
        all = false;
        break;
      }
    }
    if (all) {
      out.push_back(rep);
    }
  }
  return out;
}

ComplexMatrix codespace_projector(const PauliGroup& g, int cap) {
  if (!g.valid_stabilizer()) {
    throw std::invalid_argument(
        "codespace projector requires an abelian group without -I");
  }
  ComplexMatrix sum = ComplexMatrix(1 << g.n);
  for (const auto& e : g.elements) {
    sum = add(sum, to_matrix(e, cap));
  }
  return scale(1.0 / static_cast<double>(g.elements.size()), sum);
}

}  // namespace ncg
