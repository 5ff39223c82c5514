#include "bidepo/json_io.hpp"

#include <cmath>
#include <string>

namespace bidepo {

namespace {

// JSON has no infinities.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json matrix_json(const CMatrix& m) {
  Json re = Json::array(), im = Json::array();
  bool complex = false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
      complex = complex || m(i, j).imag() != 0.0;
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  Json out{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}};
  if (complex) out["im"] = std::move(im);
  return out;
}

Json vector_json(const CVector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json vector_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const PhiParams& p) {
  return Json{{"dA", p.dims.dA}, {"dB", p.dims.dB}, {"alpha", p.alpha}, {"beta", p.beta},
              {"gamma", p.gamma}};
}

Json to_json(const ClassificationReport& r) {
  Json slacks = Json::object();
  for (const auto& s : r.slacks) {
    slacks[std::string(s.group) + "." + std::string(s.name)] = s.value;
  }
  return Json{{"positive", r.positive}, {"cp", r.cp},
              {"cocp", r.cocp},         {"eb", r.eb},
              {"ppt_inducing", r.ppt_inducing}, {"ea", r.ea},
              {"slacks", std::move(slacks)}};
}

Json to_json(const OracleVerdict& v) {
  Json out{{"property", v.property}, {"worst", number(v.worst)},  {"samples", v.samples},
           {"seed", v.seed},         {"exact", v.exact},          {"witness_index", v.witness_index}};
  if (v.witness_family >= 0) out["witness_family"] = v.witness_family;
  if (v.witness_lambda.size() > 0) {
    out["witness_lambda"] = vector_json(v.witness_lambda);
    out["block_minimum"] = number(v.block_minimum);
  }
  if (v.witness_state.size() > 0) out["witness_state"] = vector_json(v.witness_state);
  return out;
}

Json to_json(const SeparableCertificate& c, bool with_operators) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) {
    Json margins = Json::array();
    for (const auto& f : p.psd_factors) margins.push_back(min_eigenvalue(f));
    Json piece{{"kind", to_string(p.kind)}, {"weight", p.weight}, {"cited", p.cited},
               {"psd_margins", std::move(margins)}};
    if (!p.note.empty()) piece["note"] = p.note;
    if (with_operators) piece["operator"] = matrix_json(p.op);
    pieces.push_back(std::move(piece));
  }
  Json out{{"label", c.label},
           {"dimension", c.target.rows()},
           {"residual", number(c.residual)},
           {"min_psd_margin", number(c.min_psd_margin)},
           {"weights_nonnegative", c.weights_nonnegative},
           {"valid", c.valid()},
           {"pieces", std::move(pieces)}};
  if (with_operators) out["target"] = matrix_json(c.target);
  return out;
}

}  // namespace bidepo
