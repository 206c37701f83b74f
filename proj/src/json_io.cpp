#include "matmom/json_io.hpp"

namespace matmom {

namespace {

Json complex_grid(const Mat& m, bool imaginary) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
Json vector_json(const char* kind, int p, const std::vector<T>& items) {
  Json j;
  j["p"] = p;
  j["kind"] = kind;
  Json arr = Json::array();
  for (const auto& item : items) {
    if constexpr (std::is_same_v<T, Mat>) {
      arr.push_back(matrix_to_json(item));
    } else {
      arr.push_back(matrix_to_json(item.mat()));
    }
  }
  j["items"] = std::move(arr);
  return j;
}

std::vector<Mat> items_from_json(const Json& j, const char* expected_kind) {
  if (!j.contains("kind") || j.at("kind").get<std::string>() != expected_kind) {
    throw BadShape(std::string("expected vector of kind ") + expected_kind);
  }
  std::vector<Mat> items;
  for (const auto& item : j.at("items")) items.push_back(matrix_from_json(item));
  return items;
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  check_square(m);
  Json j;
  j["p"] = static_cast<int>(m.rows());
  j["re"] = complex_grid(m, false);
  j["im"] = complex_grid(m, true);
  return j;
}

Mat matrix_from_json(const Json& j) {
  int p = j.at("p").get<int>();
  if (p < 1) throw BadShape("matrix_from_json: p must be positive");
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (static_cast<int>(re.size()) != p || static_cast<int>(im.size()) != p) {
    throw BadShape("matrix_from_json: row count does not match p");
  }
  Mat m(p, p);
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(re[i].size()) != p || static_cast<int>(im[i].size()) != p) {
      throw BadShape("matrix_from_json: column count does not match p");
    }
    for (int c = 0; c < p; ++c) {
      m(i, c) = Cplx(re[i][c].get<double>(), im[i][c].get<double>());
    }
  }
  check_finite(m, "matrix_from_json");
  return m;
}

Json moment_vector_to_json(const IntervalMomentVector& s) {
  return vector_json("interval-moments", s.p, s.moments);
}

Json canonical_vector_to_json(const IntervalCanonicalVector& u) {
  return vector_json("interval-canonical", u.p, u.canon);
}

Json trig_vector_to_json(const TrigMomentVector& g) {
  return vector_json("trig-moments", g.p, g.moments);
}

Json circle_canonical_to_json(const CircleCanonicalVector& a) {
  return vector_json("circle-canonical", a.p, a.canon);
}

Json schur_taylor_to_json(const SchurTaylorCoefficients& g) {
  return vector_json("schur-taylor", g.p, g.coeffs);
}

IntervalMomentVector moment_vector_from_json(const Json& j) {
  IntervalMomentVector s;
  s.p = j.at("p").get<int>();
  for (const auto& m : items_from_json(j, "interval-moments")) s.moments.emplace_back(m);
  return s;
}

IntervalCanonicalVector canonical_vector_from_json(const Json& j) {
  IntervalCanonicalVector u;
  u.p = j.at("p").get<int>();
  for (const auto& m : items_from_json(j, "interval-canonical")) u.canon.emplace_back(m);
  return u;
}

TrigMomentVector trig_vector_from_json(const Json& j) {
  TrigMomentVector g;
  g.p = j.at("p").get<int>();
  g.moments = items_from_json(j, "trig-moments");
  return g;
}

CircleCanonicalVector circle_canonical_from_json(const Json& j) {
  CircleCanonicalVector a;
  a.p = j.at("p").get<int>();
  a.canon = items_from_json(j, "circle-canonical");
  return a;
}

SchurTaylorCoefficients schur_taylor_from_json(const Json& j) {
  SchurTaylorCoefficients g;
  g.p = j.at("p").get<int>();
  g.coeffs = items_from_json(j, "schur-taylor");
  return g;
}

std::string vector_kind(const Json& j) {
  if (!j.contains("kind")) throw BadShape("vector JSON is missing its kind");
  return j.at("kind").get<std::string>();
}

Json batch_to_json(const SampleBatch& batch) {
  Json j;
  j["params"] = Json{{"ensemble", batch.ensemble}, {"p", batch.params.p},
                     {"a", batch.params.a},        {"b", batch.params.b},
                     {"n", batch.params.n},        {"k", batch.params.k}};
  j["seed"] = batch.provenance.seed;
  j["stream"] = batch.provenance.stream;
  Json arr = Json::array();
  for (const auto& m : batch.draws) arr.push_back(matrix_to_json(m));
  j["draws"] = std::move(arr);
  return j;
}

SampleBatch batch_from_json(const Json& j) {
  SampleBatch batch;
  const Json& params = j.at("params");
  batch.ensemble = params.at("ensemble").get<std::string>();
  batch.params.p = params.at("p").get<int>();
  batch.params.a = params.at("a").get<double>();
  batch.params.b = params.at("b").get<double>();
  batch.params.n = params.at("n").get<int>();
  batch.params.k = params.at("k").get<int>();
  batch.provenance.seed = j.at("seed").get<std::uint64_t>();
  batch.provenance.stream = j.at("stream").get<std::uint64_t>();
  for (const auto& m : j.at("draws")) batch.draws.push_back(matrix_from_json(m));
  return batch;
}

}  // namespace matmom
