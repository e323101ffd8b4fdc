#include "qrf/serialize.hpp"

namespace qrf {

namespace {

constexpr const char* kStateSchema = "qrflab.state/1";
constexpr const char* kDensitySchema = "qrflab.density/1";
constexpr const char* kTransformSchema = "qrflab.transform/1";

ojson complex_pair(const cxd& z) { return ojson::array({z.real(), z.imag()}); }

cxd complex_from(const ojson& j) {
  if (!j.is_array() || j.size() != 2)
    fail(Err::ParseError, "complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

void expect_schema(const ojson& j, const char* schema) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != schema)
    fail(Err::ParseError, std::string("expected schema \"") + schema + "\"");
}

}  // namespace

ojson spec_to_json(const FactorSpec& spec) {
  ojson factors = ojson::array();
  for (const auto& f : spec.factors()) {
    factors.push_back({{"dim", f.dim},
                       {"role", f.role == Role::Reference ? "reference" : "physical"},
                       {"index", f.index}});
  }
  return factors;
}

FactorSpec spec_from_json(const ojson& j) {
  if (!j.is_array()) fail(Err::ParseError, "factor list must be an array");
  std::vector<Factor> fs;
  for (const auto& item : j) {
    Factor f;
    f.dim = item.at("dim").get<int>();
    const std::string role = item.at("role").get<std::string>();
    if (role == "reference")
      f.role = Role::Reference;
    else if (role == "physical")
      f.role = Role::Physical;
    else
      fail(Err::ParseError, "unknown factor role \"" + role + "\"");
    f.index = item.at("index").get<int>();
    fs.push_back(f);
  }
  return FactorSpec(std::move(fs));
}

ojson state_to_json(const PureState& psi) {
  ojson j;
  j["schema"] = kStateSchema;
  j["factors"] = spec_to_json(psi.spec);
  ojson amps = ojson::array();
  for (Eigen::Index i = 0; i < psi.amps.size(); ++i) amps.push_back(complex_pair(psi.amps(i)));
  j["amplitudes"] = std::move(amps);
  return j;
}

PureState state_from_json(const ojson& j) {
  expect_schema(j, kStateSchema);
  FactorSpec spec = spec_from_json(j.at("factors"));
  const auto& amps_json = j.at("amplitudes");
  Vec amps(amps_json.size());
  for (size_t i = 0; i < amps_json.size(); ++i) amps(i) = complex_from(amps_json[i]);
  return PureState(std::move(spec), std::move(amps));
}

ojson density_to_json(const DensityOp& rho) {
  ojson j;
  j["schema"] = kDensitySchema;
  j["factors"] = spec_to_json(rho.spec);
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < rho.rho.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < rho.rho.cols(); ++c) row.push_back(complex_pair(rho.rho(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

DensityOp density_from_json(const ojson& j) {
  expect_schema(j, kDensitySchema);
  FactorSpec spec = spec_from_json(j.at("factors"));
  const auto& rows = j.at("matrix");
  Mat m(rows.size(), rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) fail(Err::ParseError, "matrix is not square");
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = complex_from(rows[r][c]);
  }
  return DensityOp(std::move(spec), std::move(m));
}

ojson transform_to_json(const QrfTransform& t) {
  ojson j;
  j["schema"] = kTransformSchema;
  j["kind"] = t.kind == QrfTransform::Kind::Perspectival ? "perspectival" : "passive";
  j["from"] = t.from;
  j["to"] = t.to;
  j["domain"] = t.domain_description();
  j["codomain"] = t.codomain_description();
  j["factors"] = spec_to_json(t.config.spec());
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) row.push_back(complex_pair(t.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

}  // namespace qrf
