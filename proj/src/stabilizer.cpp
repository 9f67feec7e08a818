#include "ncgraph/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ncgraph/clifford.hpp"
#include "ncgraph/ncgraph.hpp"

namespace ncg {

namespace {

void require_ns(int n, int s) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("n out of range");
  }
  if (s < 1 || s > n) {
    throw std::invalid_argument("need 1 <= s <= n");
  }
}

void require_key(const std::vector<std::uint8_t>& key, int n) {
  if (static_cast<int>(key.size()) != n) {
    throw std::invalid_argument("coefficient key length differs from n");
  }
  for (auto d : key) {
    if (d > 3) {
      throw std::invalid_argument("sigma index out of range in key");
    }
  }
}

std::string key_string(const std::vector<std::uint8_t>& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + key[i]);
  }
  return s;
}

std::string mask_string(std::uint32_t mask, int s) {
  std::string out;
  for (int r = 0; r < s; ++r) {
    out += ((mask >> r) & 1u) ? '1' : '0';
  }
  return out;
}

// Double in [0, 1) from the top 53 bits; avoids distribution objects so the
// stream is identical on every platform.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double symmetric_double(std::mt19937_64& rng) {
  return 2.0 * unit_double(rng) - 1.0;
}

}  // namespace

std::uint32_t block_mask(const std::vector<std::uint8_t>& key, int s) {
  std::uint32_t mask = 0;
  for (int r = 0; r < s; ++r) {
    if (key[r] >= 2) {
      mask |= 1u << r;
    }
  }
  return mask;
}

std::string M0Violation::describe() const {
  switch (kind) {
    case Kind::identity_zero:
      return "identity coefficient is zero";
    case Kind::forbidden_key:
      return "key " + where + " has no X/Y on the stabilized qubits";
    case Kind::line_broken:
      return "block u=" + where + " coefficients are not on a complex line";
  }
  return "?";
}

M0Check validate_m0(const M0Coefficients& coeffs, double tol) {
  require_ns(coeffs.n, coeffs.s);
  M0Check check;

  const std::vector<std::uint8_t> zero_key(coeffs.n, 0);
  cplx alpha0 = 0.0;
  std::map<std::uint32_t, std::vector<cplx>> blocks;
  for (const auto& [key, val] : coeffs.alpha) {
    require_key(key, coeffs.n);
    if (key == zero_key) {
      alpha0 = val;
      continue;
    }
    const std::uint32_t mask = block_mask(key, coeffs.s);
    if (mask == 0) {
      if (std::abs(val) > tol) {
        check.violations.push_back(
            {M0Violation::Kind::forbidden_key, key_string(key)});
      }
      continue;
    }
    blocks[mask].push_back(val);
  }
  if (std::abs(alpha0) <= tol) {
    check.violations.push_back({M0Violation::Kind::identity_zero, ""});
  }
  for (const auto& [mask, vals] : blocks) {
    // All coefficients on one complex line through the origin iff
    // |sum v^2| = sum |v|^2.
    cplx sum_sq = 0.0;
    double norm_sq = 0.0;
    for (const cplx& v : vals) {
      sum_sq += v * v;
      norm_sq += std::norm(v);
    }
    if (norm_sq - std::abs(sum_sq) > tol * std::max(1.0, norm_sq)) {
      check.violations.push_back(
          {M0Violation::Kind::line_broken, mask_string(mask, coeffs.s)});
    }
  }
  check.ok = check.violations.empty();
  return check;
}

M0Coefficients sample_m0(int n, int s, std::uint64_t seed) {
  require_ns(n, s);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull +
                      static_cast<std::uint64_t>(n) * 131 +
                      static_cast<std::uint64_t>(s));
  M0Coefficients coeffs;
  coeffs.n = n;
  coeffs.s = s;

  cplx alpha0;
  do {
    alpha0 = cplx(symmetric_double(rng), symmetric_double(rng));
  } while (std::abs(alpha0) < 0.3);
  coeffs.alpha[std::vector<std::uint8_t>(n, 0)] = alpha0;

  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    const double theta = 2.0 * 3.14159265358979323846 * unit_double(rng);
    const cplx phase(std::cos(theta), std::sin(theta));
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int c = 0; c < count; ++c) {
      std::vector<std::uint8_t> key(n, 0);
      for (int r = 0; r < s; ++r) {
        const bool hi = (mask >> r) & 1u;
        key[r] = static_cast<std::uint8_t>((hi ? 2 : 0) + rng() % 2);
      }
      for (int r = s; r < n; ++r) {
        key[r] = static_cast<std::uint8_t>(rng() % 4);
      }
      double amp;
      do {
        amp = symmetric_double(rng);
      } while (std::abs(amp) < 0.2);
      coeffs.alpha[key] += amp * phase;  // duplicates stay on the line
    }
  }
  return coeffs;
}

ComplexMatrix m0_matrix(const M0Coefficients& coeffs, int cap) {
  require_ns(coeffs.n, coeffs.s);
  ComplexMatrix m(1 << coeffs.n);
  for (const auto& [key, val] : coeffs.alpha) {
    require_key(key, coeffs.n);
    m = add(m, scale(val, to_matrix(pauli_from_digits(key), cap)));
  }
  return m;
}

OperatorSubspace m0_subspace(const M0Coefficients& coeffs, double tol) {
  const M0Check check = validate_m0(coeffs, tol);
  if (!check.ok) {
    throw std::invalid_argument("invalid m0 coefficients: " +
                                check.violations.front().describe());
  }
  const int d = 1 << coeffs.n;
  std::map<std::uint32_t, ComplexMatrix> block_sums;
  const std::vector<std::uint8_t> zero_key(coeffs.n, 0);
  for (const auto& [key, val] : coeffs.alpha) {
    if (key == zero_key) {
      continue;
    }
    const std::uint32_t mask = block_mask(key, coeffs.s);
    if (mask == 0) {
      continue;  // validated to be ~0
    }
    auto it = block_sums.find(mask);
    if (it == block_sums.end()) {
      it = block_sums.emplace(mask, ComplexMatrix(d)).first;
    }
    it->second = add(it->second, scale(val, to_matrix(pauli_from_digits(key))));
  }
  std::vector<ComplexMatrix> mats;
  mats.push_back(ComplexMatrix::identity(d));
  for (const auto& [mask, sum] : block_sums) {
    mats.push_back(sum);
  }
  return orthonormalize(mats, tol);
}

namespace {

std::vector<LabeledUnitary> element_family(const PauliGroup& g) {
  std::vector<LabeledUnitary> fam;
  fam.reserve(g.elements.size());
  for (const auto& e : g.elements) {
    fam.push_back({pauli_to_string(e), to_matrix(e)});
  }
  return fam;
}

}  // namespace

SpanIdentity stabilizer_span(const PauliGroup& g, double tol) {
  if (!g.valid_stabilizer()) {
    throw std::invalid_argument(
        "span identity requires an abelian group without -I");
  }
  const int s = g.log2_order();
  if (s == 0) {
    throw std::invalid_argument(
        "span identity is undefined for the trivial group");
  }
  if (g.n > 5) {
    throw std::invalid_argument("span identity capped at 5 qubits");
  }
  const int n = g.n;
  const int d = 1 << n;

  const CanonicalForm canon = clifford_canonicalize(g);
  std::vector<ComplexMatrix> group_mats;
  group_mats.reserve(g.elements.size());
  for (const auto& e : g.elements) {
    group_mats.push_back(to_matrix(e));
  }
  const ComplexMatrix id = ComplexMatrix::identity(d);

  // Canonical-frame sigmas with X/Y somewhere on the first s qubits, each
  // seeding an admissible m0 = I + U sigma U†.
  const std::uint64_t total = 1ull << (2 * n);
  std::vector<ComplexMatrix> lhs_mats;
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    const PauliString sigma = pauli_from_ordinal(n, ord);
    bool blocked = false;
    for (int r = 0; r < s; ++r) {
      if (sigma.x(r)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      continue;
    }
    const ComplexMatrix seed =
        add(id, conjugate_by(canon.u, to_matrix(sigma)));
    for (const auto& gm : group_mats) {
      lhs_mats.push_back(conjugate_by(gm, seed));
    }
  }

  std::vector<ComplexMatrix> rhs_mats;
  rhs_mats.push_back(id);
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    const PauliString rep = pauli_from_ordinal(n, ord);
    bool in_normalizer = true;
    for (const auto& gen : g.generators) {
      if (!commutes(rep, gen)) {
        in_normalizer = false;
        break;
      }
    }
    if (!in_normalizer) {
      rhs_mats.push_back(to_matrix(rep));
    }
  }

  SpanIdentity out;
  out.lhs = orthonormalize(lhs_mats, tol);
  out.rhs = orthonormalize(rhs_mats, tol);
  out.equal = subspace_equal(out.lhs, out.rhs, tol);
  return out;
}

ClassicalCheck classical_stabilizer_check(const PauliGroup& g, double tol) {
  if (!g.valid_stabilizer()) {
    throw std::invalid_argument(
        "classical check requires an abelian group without -I");
  }
  if (g.n > 4) {
    throw std::invalid_argument("classical check capped at 4 qubits");
  }
  const ComplexMatrix p = codespace_projector(g);
  const double trp = trace(p).real();
  const double p_norm = hs_norm(p);
  const std::uint64_t total = 1ull << (2 * g.n);

  ClassicalCheck out;
  out.entries.resize(total);
#pragma omp parallel for schedule(static)
  for (long long ord = 0; ord < static_cast<long long>(total); ++ord) {
    const PauliString rep =
        pauli_from_ordinal(g.n, static_cast<std::uint64_t>(ord));
    const ComplexMatrix e = to_matrix(rep);
    const ComplexMatrix pep = mul(p, mul(e, p));
    const cplx c = trace(pep) / trp;
    const double resid = hs_norm(sub(pep, scale(c, p)));
    const bool compresses = resid <= tol * std::max(1.0, p_norm);

    bool in_norm = true;
    for (const auto& gen : g.generators) {
      if (!commutes(rep, gen)) {
        in_norm = false;
        break;
      }
    }
    const bool in_span = !in_norm || g.contains_bits(rep);
    out.entries[ord] = {rep, compresses, c, in_span};
  }
  out.ok = true;
  for (const auto& entry : out.entries) {
    if (entry.compresses != entry.in_span) {
      out.ok = false;
      ++out.mismatch_count;
    }
  }
  return out;
}

namespace {

// Deterministic invalid perturbation of an admissible sample. Mode 0 breaks
// a block line with a decisively off-phase coefficient, mode 1 zeroes the
// identity coefficient, mode 2 adds support with I/Z only on the stabilized
// qubits.
M0Coefficients perturb_invalid(M0Coefficients coeffs, std::mt19937_64& rng) {
  const int n = coeffs.n;
  const int s = coeffs.s;
  const int mode = static_cast<int>(rng() % 3);
  if (mode == 1) {
    coeffs.alpha[std::vector<std::uint8_t>(n, 0)] = 0.0;
    return coeffs;
  }
  if (mode == 2) {
    std::vector<std::uint8_t> key(n, 0);
    // head stays in {0,1} and must not vanish entirely when the tail does
    key[rng() % s] = 1;
    for (int r = s; r < n; ++r) {
      key[r] = static_cast<std::uint8_t>(rng() % 4);
    }
    coeffs.alpha[key] = cplx(0.5 + unit_double(rng), 0.0);
    return coeffs;
  }
  // find an existing block key and add a second coefficient rotated well off
  // the block phase
  for (const auto& [key, val] : coeffs.alpha) {
    const std::uint32_t mask = block_mask(key, s);
    if (mask == 0 || std::abs(val) < 0.1) {
      continue;
    }
    std::vector<std::uint8_t> other = key;
    other[0] = static_cast<std::uint8_t>(((mask & 1u) ? 2 : 0) +
                                         (1 - (other[0] & 1)));
    const double delta =
        0.5 + (3.14159265358979323846 - 1.0) * unit_double(rng);
    const cplx rot(std::cos(delta), std::sin(delta));
    const cplx base = val / std::abs(val);
    coeffs.alpha[other] = 0.7 * base * rot;
    if (other == key) {
      // same key rewritten: force the misalignment explicitly
      coeffs.alpha[key] = val + 0.7 * base * rot;
    }
    return coeffs;
  }
  // no usable block key (cannot happen for sample_m0 output); fall back
  coeffs.alpha[std::vector<std::uint8_t>(n, 0)] = 0.0;
  return coeffs;
}

}  // namespace

LemmaTrialReport lemma_trials(int n, int s, int trials, std::uint64_t seed,
                              double tol) {
  require_ns(n, s);
  if (trials < 1) {
    throw std::invalid_argument("trials must be positive");
  }
  std::vector<PauliString> gens;
  for (int r = 0; r < s; ++r) {
    PauliString z = PauliString::identity(n);
    z.z_bits = 1ull << r;
    gens.push_back(z);
  }
  const PauliGroup g = generate_group(n, gens);
  const auto family = element_family(g);

  LemmaTrialReport report;
  report.trials = trials;
  std::vector<char> agree(trials, 0);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    M0Coefficients coeffs = sample_m0(n, s, seed + 1000003ull * t);
    if (t % 2 == 1) {
      std::mt19937_64 rng(seed ^ (0xabcdef1234567ull + t));
      coeffs = perturb_invalid(std::move(coeffs), rng);
    }
    const bool predicted = validate_m0(coeffs, tol).ok;
    const NcGraph graph = build_ncgraph(family, m0_matrix(coeffs), tol);
    const bool numeric = is_operator_system(graph.space, tol).ok;
    agree[t] = predicted == numeric ? 1 : 0;
  }
  for (int t = 0; t < trials; ++t) {
    if (!agree[t]) {
      ++report.disagreements;
      report.failing.push_back(t);
    }
  }
  return report;
}

std::string m0_coeffs_to_json(const M0Coefficients& coeffs) {
  nlohmann::json j;
  j["n"] = coeffs.n;
  j["s"] = coeffs.s;
  nlohmann::json alpha = nlohmann::json::object();
  for (const auto& [key, val] : coeffs.alpha) {
    alpha[key_string(key)] = {val.real(), val.imag()};
  }
  j["alpha"] = std::move(alpha);
  return j.dump();
}

M0Coefficients m0_coeffs_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad coefficient JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("s") ||
      !j.contains("alpha") || !j["alpha"].is_object()) {
    throw std::invalid_argument("coefficient JSON needs n, s and alpha");
  }
  M0Coefficients coeffs;
  coeffs.n = j["n"].get<int>();
  coeffs.s = j["s"].get<int>();
  require_ns(coeffs.n, coeffs.s);
  for (const auto& [key_text, val] : j["alpha"].items()) {
    std::istringstream in(key_text);
    std::vector<std::uint8_t> key;
    int digit;
    while (in >> digit) {
      if (digit < 0 || digit > 3) {
        throw std::invalid_argument("key digit out of range: " + key_text);
      }
      key.push_back(static_cast<std::uint8_t>(digit));
    }
    require_key(key, coeffs.n);
    if (!val.is_array() || val.size() != 2 || !val[0].is_number() ||
        !val[1].is_number()) {
      throw std::invalid_argument("coefficient for key '" + key_text +
                                  "' must be [re, im]");
    }
    coeffs.alpha[key] = cplx(val[0].get<double>(), val[1].get<double>());
  }
  return coeffs;
}

}  // namespace ncg
