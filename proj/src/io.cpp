#include "sepball/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sepball::io {
namespace {

using nlohmann::json;

bounds::Method method_from_name(const std::string& name) {
  for (auto m : {bounds::Method::recursion, bounds::Method::closed_form, bounds::Method::weak_corollary,
                 bounds::Method::gb03_baseline}) {
    if (bounds::method_name(m) == name) return m;
  }
  throw ParseError("unknown method '" + name + "'");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename F>
auto wrap_json_errors(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

MatrixFile parse_matrix_json(const std::string& text) {
  return wrap_json_errors([&] {
    const json j = json::parse(text);
    if (!j.is_object() || !j.contains("dims") || !j.contains("entries")) {
      throw ParseError("matrix JSON needs \"dims\" and \"entries\"");
    }
    std::vector<int> dims_list;
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_integer()) throw ParseError("dims must be integers");
      dims_list.push_back(d.get<int>());
    }
    Dims dims = [&] {
      try {
        return Dims(dims_list);
      } catch (const Error& e) {
        throw ParseError(std::string("bad dims: ") + e.what());
      }
    }();
    const std::size_t n = dims.materialized_total();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n * n) {
      throw ParseError("expected " + std::to_string(n * n) + " entries for dims " + dims.to_string());
    }
    CMat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n * n; ++k) {
      const json& e = entries[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("entry " + std::to_string(k) + " is not [re, im]");
      }
      m(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) =
          cplx(e[0].get<double>(), e[1].get<double>());
    }
    return MatrixFile{std::move(dims), ComplexMatrix(std::move(m))};
  });
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string matrix_json(const Dims& dims, const CMat& m) {
  const std::size_t n = dims.materialized_total();
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    throw DimensionError("matrix does not match dims " + dims.to_string());
  }
  std::string out = "{\"dims\": [";
  for (std::size_t k = 0; k < dims.size(); ++k) out += (k ? ", " : "") + std::to_string(dims[k]);
  out += "], \"entries\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i || j) out += ", ";
      out += "[" + format_double(m(i, j).real()) + ", " + format_double(m(i, j).imag()) + "]";
    }
  }
  out += "]}\n";
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const Dims& dims, const CMat& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << matrix_json(dims, m);
}

json to_json(const certify::Certificate& c) {
  return {{"verdict", std::string(certify::verdict_name(c.verdict))},
          {"bound", c.bound},
          {"measured", c.measured},
          {"margin", c.margin},
          {"dims", c.dims.values()},
          {"boundary", c.boundary}};
}

certify::Certificate certificate_from_json(const json& j) {
  return wrap_json_errors([&] {
    return certify::Certificate{certify::verdict_from_name(j.at("verdict").get<std::string>()),
                                j.at("bound").get<double>(),
                                j.at("measured").get<double>(),
                                j.at("margin").get<double>(),
                                Dims(j.at("dims").get<std::vector<int>>()),
                                j.value("boundary", false)};
  });
}

json to_json(const bounds::RadiusReport& r) {
  return {{"dims", r.dims.values()},
          {"method", std::string(bounds::method_name(r.method))},
          {"unnormalized_radius", r.unnormalized_radius},
          {"normalized_radius", r.normalized_radius}};
}

bounds::RadiusReport radius_report_from_json(const json& j) {
  return wrap_json_errors([&] {
    return bounds::RadiusReport{Dims(j.at("dims").get<std::vector<int>>()),
                                j.at("unnormalized_radius").get<double>(), j.at("normalized_radius").get<double>(),
                                method_from_name(j.at("method").get<std::string>())};
  });
}

json to_json(const nmr::ThresholdReport& r) {
  return {{"mode", std::string(nmr::mode_name(r.mode))},
          {"baseline", std::string(nmr::baseline_name(r.baseline))},
          {"eta", r.eta},
          {"threshold", r.threshold},
          {"margin_at_threshold", r.margin_at_threshold},
          {"margin_after_threshold", r.margin_after_threshold}};
}

nmr::ThresholdReport threshold_report_from_json(const json& j) {
  return wrap_json_errors([&] {
    return nmr::ThresholdReport{nmr::mode_from_name(j.at("mode").get<std::string>()),
                                nmr::baseline_from_name(j.at("baseline").get<std::string>()),
                                j.at("eta").get<double>(),
                                j.at("threshold").get<int>(),
                                j.at("margin_at_threshold").get<double>(),
                                j.at("margin_after_threshold").get<double>()};
  });
}

}  // namespace sepball::io
