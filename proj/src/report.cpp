#include "ncgraph/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace ncg {

double report_real(double v) {
  if (v == 0.0) {
    return 0.0;  // normalize -0
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::json report_complex(cplx v) {
  return nlohmann::json::array({report_real(v.real()), report_real(v.imag())});
}

nlohmann::json report_matrix(const ComplexMatrix& m) {
  nlohmann::json j;
  j["dim"] = m.dim;
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < m.dim; ++i) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (int jj = 0; jj < m.dim; ++jj) {
      rrow.push_back(report_real(m.at(i, jj).real()));
      irow.push_back(report_real(m.at(i, jj).imag()));
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::string digest(const nlohmann::json& j) {
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ncg
