#include "utq/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace utq {

Json loop_to_json(const FourierLoop& f) {
  Json j;
  j["N"] = f.spec().N;
  j["real"] = f.is_real();
  Json coeffs = Json::array();
  for (int k = -f.spec().N; k <= f.spec().N; ++k) {
    if (k == 0 && !f.spec().include_zero) continue;
    const cplx v = f.coeff(k);
    if (k != 0 && v == cplx{0.0, 0.0}) continue;
    coeffs.push_back(Json::array({k, v.real(), v.imag()}));
  }
  j["coeffs"] = coeffs;
  return j;
}

FourierLoop loop_from_json(const Json& j) {
  const int N = j.at("N").get<int>();
  const bool real = j.at("real").get<bool>();
  bool zero = false;
  for (const auto& row : j.at("coeffs")) {
    if (row.at(0).get<int>() == 0) zero = true;
  }
  FourierLoop f(ModeSpec{N, zero}, real);
  for (const auto& row : j.at("coeffs")) {
    const int k = row.at(0).get<int>();
    const cplx v{row.at(1).get<double>(), row.at(2).get<double>()};
    if (real && k < 0) continue;  // the mirror entry fixes it
    f.set(k, v);
  }
  return f;
}

Json map_to_json(const CircleMap& h) {
  Json j;
  std::visit(
      [&j](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, CircleMap::Mobius>) {
          j["kind"] = "mobius";
          j["a"] = Json::array({rep.a.real(), rep.a.imag()});
          j["angle"] = rep.angle;
        } else if constexpr (std::is_same_v<T, CircleMap::Flow>) {
          j["kind"] = "flow";
          j["v"] = loop_to_json(rep.v);
          j["t"] = rep.t;
          j["steps_per_unit"] = rep.steps_per_unit;
        } else if constexpr (std::is_same_v<T, CircleMap::Zigzag>) {
          j["kind"] = "zigzag";
          j["s"] = rep.s;
          Json bp = Json::array();
          for (std::size_t i = 1; i + 1 < rep.knots.size(); ++i) bp.push_back(rep.knots[i]);
          j["breakpoints"] = bp;
        } else if constexpr (std::is_same_v<T, CircleMap::Sampled>) {
          j["kind"] = "sampled";
          Json lift = Json::array();
          for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) lift.push_back(rep.values[i]);
          j["lift"] = lift;
        } else {
          throw std::invalid_argument("map_to_json: composite maps have no file form");
        }
      },
      h.rep());
  if (h.dilatation_hint) j["dilatation_hint"] = *h.dilatation_hint;
  return j;
}

CircleMap map_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto build = [&]() -> CircleMap {
    if (kind == "mobius") {
      const auto& a = j.at("a");
      return CircleMap::make_mobius({a.at(0).get<double>(), a.at(1).get<double>()},
                                    j.at("angle").get<double>());
    }
    if (kind == "flow") {
      return CircleMap::make_flow(loop_from_json(j.at("v")), j.at("t").get<double>(),
                                  j.value("steps_per_unit", 1024));
    }
    if (kind == "zigzag") {
      std::vector<double> bp;
      if (j.contains("breakpoints")) {
        for (const auto& b : j.at("breakpoints")) bp.push_back(b.get<double>());
      }
      return CircleMap::make_zigzag(j.at("s").get<double>(), std::move(bp));
    }
    if (kind == "sampled") {
      std::vector<double> lift;
      for (const auto& v : j.at("lift")) lift.push_back(v.get<double>());
      return CircleMap::make_sampled(lift);
    }
    throw std::invalid_argument("map_from_json: unknown kind '" + kind + "'");
  };
  CircleMap h = build();
  if (j.contains("dilatation_hint")) h.dilatation_hint = j.at("dilatation_hint").get<double>();
  return h;
}

namespace {

Json complex_matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      rows.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return rows;
}

Mat complex_matrix_from_json(const Json& j, int n) {
  if (static_cast<int>(j.size()) != n * n) {
    throw std::invalid_argument("matrix json: wrong entry count");
  }
  Mat m(n, n);
  int i = 0;
  for (const auto& e : j) {
    m(i / n, i % n) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
    ++i;
  }
  return m;
}

}  // namespace

Json siegel_to_json(const Mat& Z) {
  Json j;
  j["n"] = static_cast<int>(Z.rows());
  j["z"] = complex_matrix_to_json(Z);
  return j;
}

Mat siegel_from_json(const Json& j) {
  return complex_matrix_from_json(j.at("z"), j.at("n").get<int>());
}

Json sp_element_to_json(const SpAlgebraElement& X) {
  Json j;
  j["n"] = X.dim();
  j["alpha"] = complex_matrix_to_json(X.alpha);
  j["beta"] = complex_matrix_to_json(X.beta);
  j["gamma"] = complex_matrix_to_json(X.gamma);
  return j;
}

SpAlgebraElement sp_element_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  return {complex_matrix_from_json(j.at("alpha"), n),
          complex_matrix_from_json(j.at("beta"), n),
          complex_matrix_from_json(j.at("gamma"), n)};
}

std::string operator_to_csv(const OneParticleOperator& op) {
  std::ostringstream out;
  out.precision(17);
  out << "row,col,re,im\n";
  for (int r = 0; r < op.dim(); ++r) {
    for (int c = 0; c < op.dim(); ++c) {
      const cplx v = op.m(r, c);
      if (v == cplx{0.0, 0.0}) continue;
      out << op.mode_at(r) << ',' << op.mode_at(c) << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
  return out.str();
}

std::string matrix_to_csv(const Mat& m) {
  std::ostringstream out;
  out.precision(17);
  out << "row,col,re,im\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out << r << ',' << c << ',' << m(r, c).real() << ',' << m(r, c).imag() << '\n';
    }
  }
  return out.str();
}

Mat matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  struct Entry {
    int r, c;
    cplx v;
  };
  std::vector<Entry> entries;
  int maxr = -1, maxc = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Entry e;
    char comma;
    double re, im;
    if (!(row >> e.r >> comma >> e.c >> comma >> re >> comma >> im)) {
      throw std::invalid_argument("matrix_from_csv: malformed line '" + line + "'");
    }
    e.v = {re, im};
    if (e.r < 0 || e.c < 0) {
      throw std::invalid_argument("matrix_from_csv: negative index (expected 0-based block CSV)");
    }
    entries.push_back(e);
    maxr = std::max(maxr, e.r);
    maxc = std::max(maxc, e.c);
  }
  const int n = std::max(maxr, maxc) + 1;
  Mat m = Mat::Zero(n, n);
  for (const auto& e : entries) m(e.r, e.c) = e.v;
  return m;
}

Json operator_metadata(const OneParticleOperator& op) {
  Json j;
  j["label"] = op.label;
  j["modes"] = op.spec.N;
  j["include_zero"] = op.spec.include_zero;
  j["reality_symmetry"] = op.reality;
  j["format"] = "csv row,col,re,im with signed mode indices";
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace utq
