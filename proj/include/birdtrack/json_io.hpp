#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "birdtrack/diagram.hpp"
#include "birdtrack/epsilon.hpp"
#include "birdtrack/numeric.hpp"
#include "birdtrack/radical.hpp"
#include "birdtrack/singlets.hpp"

namespace birdtrack::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "1";

inline json versioned(json body) {
  body["schema"] = kSchema;
  return body;
}

/// Rejects documents written under another schema version.
inline void check_schema(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchema) fail(ErrorCode::ParseError, "unsupported schema " + j.at("schema").dump());
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

// "num/den" strings; integers are written without a denominator.
inline std::string rational_to_json(const mpq_class& q) { return q.get_str(); }
inline mpq_class rational_from_json(const json& j) {
  return guarded([&] {
    mpq_class q(j.get<std::string>());
    if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator");
    q.canonicalize();
    return q;
  });
}

inline json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(rational_to_json(c));
  return a;
}
inline Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "polynomial must be a list");
  std::vector<mpq_class> cs;
  for (const auto& c : j) cs.push_back(rational_from_json(c));
  return Polynomial(std::move(cs));
}

inline json to_json(const RationalFunction& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }
inline RationalFunction rational_function_from_json(const json& j) {
  return guarded([&] {
    Polynomial den = polynomial_from_json(j.at("den"));
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
    return RationalFunction(polynomial_from_json(j.at("num")), den);
  });
}

inline json to_json(const RadicalCoefficient& c) {
  json a = json::array();
  for (const auto& [r, m] : c.terms()) a.push_back({{"radicand", to_json(r)}, {"multiplier", to_json(m)}});
  return a;
}
inline RadicalCoefficient radical_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "coefficient must be a list");
  return guarded([&] {
    RadicalCoefficient out;
    for (const auto& t : j)
      out += RadicalCoefficient::term(rational_function_from_json(t.at("multiplier")), polynomial_from_json(t.at("radicand")));
    return out;
  });
}

inline Role role_from_string(const std::string& s) {
  if (s == "operator") return Role::Operator;
  if (s == "ket") return Role::Ket;
  if (s == "bra") return Role::Bra;
  fail(ErrorCode::ParseError, "role '" + s + "'");
}

inline json to_json(const LegSignature& s) { return {{"orientations", s.orientation_string()}, {"role", s.role_string()}}; }
inline LegSignature signature_from_json(const json& j) {
  return guarded([&] { return LegSignature::parse(j.at("orientations").get<std::string>(), role_from_string(j.at("role").get<std::string>())); });
}

// Linkings are written 1-based.
inline json to_json(const InvariantElement& e) {
  json terms = json::array();
  for (const auto& [p, c] : e.terms()) {
    json perm = json::array();
    for (int v : p) perm.push_back(v + 1);
    terms.push_back({{"perm", perm}, {"coeff", to_json(c)}});
  }
  return {{"signature", to_json(e.signature())}, {"terms", terms}};
}
inline InvariantElement element_from_json(const json& j) {
  return guarded([&] {
    InvariantElement e(signature_from_json(j.at("signature")));
    for (const auto& t : j.at("terms")) {
      Perm p;
      for (const auto& v : t.at("perm")) p.push_back(v.get<int>() - 1);
      e += InvariantElement::primitive(e.signature(), p, radical_from_json(t.at("coeff")));
    }
    return e;
  });
}

inline json to_json(const SingletOperator& s) {
  return {{"kind", s.kind_string()},
          {"labels", s.labels},
          {"normalization", to_json(s.normalization)},
          {"ket", to_json(s.ket)},
          {"bra", to_json(s.bra)}};
}
inline SingletOperator singlet_from_json(const json& j) {
  return guarded([&] {
    SingletOperator s;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "projector") s.kind = SingletOperator::Kind::Projector;
    else if (kind == "transition") s.kind = SingletOperator::Kind::Transition;
    else fail(ErrorCode::ParseError, "kind '" + kind + "'");
    s.labels = j.at("labels").get<std::vector<int>>();
    s.normalization = radical_from_json(j.at("normalization"));
    s.ket = element_from_json(j.at("ket"));
    s.bra = element_from_json(j.at("bra"));
    return s;
  });
}

inline json to_json(const ExactTensor& t) {
  json entries = json::array();
  for (const auto& [f, v] : t.entries()) entries.push_back({t.unflat(f), rational_to_json(v)});
  return {{"shape", t.shape()}, {"entries", entries}};
}
inline ExactTensor tensor_from_json(const json& j) {
  return guarded([&] {
    ExactTensor t(j.at("shape").get<std::vector<int>>());
    for (const auto& e : j.at("entries")) {
      auto idx = e.at(0).get<std::vector<int>>();
      if (idx.size() != t.shape().size()) fail(ErrorCode::ParseError, "multi-index rank");
      for (std::size_t a = 0; a < idx.size(); ++a)
        if (idx[a] < 0 || idx[a] >= t.shape()[a]) fail(ErrorCode::ParseError, "multi-index out of range");
      t.add(idx, rational_from_json(e.at(1)));
    }
    return t;
  });
}

/// Row-major list of [re, im] pairs.
inline json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}
inline ComplexMatrix complex_matrix_from_json(const json& j) {
  return guarded([&] {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (static_cast<Eigen::Index>(j.at(r).size()) != cols) fail(ErrorCode::ParseError, "ragged matrix");
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = {j.at(r).at(c).at(0).get<double>(), j.at(r).at(c).at(1).get<double>()};
    }
    return m;
  });
}

inline json to_json(const YoungShape& s) { return s.rows(); }
inline YoungShape shape_from_json(const json& j) {
  return guarded([&] { return YoungShape(j.get<std::vector<int>>()); });
}

inline json to_json(const TransientParams& p) { return {{"a", p.a}, {"b", p.b}, {"k", p.k}, {"alpha", p.alpha}}; }
inline TransientParams transient_from_json(const json& j) {
  return guarded([&] {
    return TransientParams{j.at("a").get<int>(), j.at("b").get<int>(), j.at("k").get<int>(), j.at("alpha").get<int>()};
  });
}

}  // namespace birdtrack::io
