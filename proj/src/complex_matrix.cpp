#include "ncgraph/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "ncgraph/kernels.hpp"

namespace ncg {

namespace {

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(x.dim) + " vs " +
                                std::to_string(y.dim));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int d) {
  if (d < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
  dim = d;
  a.assign(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::zero(int d) { return ComplexMatrix(d); }

ComplexMatrix ComplexMatrix::identity(int d) {
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    m.at(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const int d = static_cast<int>(rows.size());
  ComplexMatrix m(d);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) {
      throw std::invalid_argument("ragged matrix rows");
    }
    int j = 0;
    for (const cplx& v : row) {
      m.at(i, j++) = v;
    }
    ++i;
  }
  if (!all_finite(m)) {
    throw std::invalid_argument("non-finite matrix entry");
  }
  return m;
}

ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  ComplexMatrix r(x.dim);
  for (std::size_t e = 0; e < x.a.size(); ++e) {
    r.a[e] = x.a[e] + y.a[e];
  }
  return r;
}

ComplexMatrix sub(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  ComplexMatrix r(x.dim);
  for (std::size_t e = 0; e < x.a.size(); ++e) {
    r.a[e] = x.a[e] - y.a[e];
  }
  return r;
}

ComplexMatrix scale(cplx c, const ComplexMatrix& x) {
  ComplexMatrix r(x.dim);
  for (std::size_t e = 0; e < x.a.size(); ++e) {
    r.a[e] = c * x.a[e];
  }
  return r;
}

ComplexMatrix mul(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  ComplexMatrix r(x.dim);
  kernels::matmul(x.a.data(), y.a.data(), r.a.data(), x.dim);
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& x) {
  ComplexMatrix r(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    for (int j = 0; j < x.dim; ++j) {
      r.at(i, j) = std::conj(x.at(j, i));
    }
  }
  return r;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
  require_same_dim(u, m);
  ComplexMatrix t(u.dim), r(u.dim);
  kernels::matmul(u.a.data(), m.a.data(), t.a.data(), u.dim);
  kernels::matmul_adj_r(t.a.data(), u.a.data(), r.a.data(), u.dim);
  return r;
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  const int dx = x.dim, dy = y.dim;
  ComplexMatrix r(dx * dy);
  for (int i = 0; i < dx; ++i) {
    for (int j = 0; j < dx; ++j) {
      const cplx xij = x.at(i, j);
      for (int k = 0; k < dy; ++k) {
        for (int l = 0; l < dy; ++l) {
          r.at(i * dy + k, j * dy + l) = xij * y.at(k, l);
        }
      }
    }
  }
  return r;
}

cplx trace(const ComplexMatrix& x) {
  cplx t = 0.0;
  for (int i = 0; i < x.dim; ++i) {
    t += x.at(i, i);
  }
  return t;
}

double hs_norm(const ComplexMatrix& x) {
  double s = 0.0;
  for (const cplx& v : x.a) {
    s += std::norm(v);
  }
  return std::sqrt(s);
}

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  // tr(x† y) = sum_ij conj(x_ij) y_ij
  return kernels::hs_dot(x.a.data(), y.a.data(), x.a.size());
}

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  double m = 0.0;
  for (std::size_t e = 0; e < x.a.size(); ++e) {
    m = std::max(m, std::abs(x.a[e] - y.a[e]));
  }
  return m;
}

bool all_finite(const ComplexMatrix& x) {
  for (const cplx& v : x.a) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      return false;
    }
  }
  return true;
}

std::string matrix_to_json(const ComplexMatrix& x) {
  nlohmann::json j;
  j["dim"] = x.dim;
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < x.dim; ++i) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (int jj = 0; jj < x.dim; ++jj) {
      rrow.push_back(x.at(i, jj).real());
      irow.push_back(x.at(i, jj).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
      !j.contains("im")) {
    throw std::invalid_argument("matrix JSON needs dim/re/im fields");
  }
  const int d = j["dim"].get<int>();
  if (d <= 0) {
    throw std::invalid_argument("matrix dim must be positive");
  }
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != d ||
      static_cast<int>(im.size()) != d) {
    throw std::invalid_argument("matrix JSON re/im must be dim rows");
  }
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    const auto& rrow = re[i];
    const auto& irow = im[i];
    if (!rrow.is_array() || !irow.is_array() ||
        static_cast<int>(rrow.size()) != d ||
        static_cast<int>(irow.size()) != d) {
      throw std::invalid_argument("ragged matrix JSON row " +
                                  std::to_string(i));
    }
    for (int jj = 0; jj < d; ++jj) {
      if (!rrow[jj].is_number() || !irow[jj].is_number()) {
        throw std::invalid_argument("non-numeric matrix entry");
      }
      m.at(i, jj) = cplx(rrow[jj].get<double>(), irow[jj].get<double>());
    }
  }
  if (!all_finite(m)) {
    throw std::invalid_argument("non-finite matrix entry");
  }
  return m;
}

}  // namespace ncg
