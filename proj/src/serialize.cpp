#include "gaborlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gaborlab {
namespace {

void write_string(std::ostringstream& os, const std::string& s) {
  // nlohmann already knows how to escape.
  os << Json(s).dump();
}

void emit(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_string(os, it.key());
        os << ": ";
        emit(os, it.value(), depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        emit(os, j[i], depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x))
        os << format_double(x);
      else
        write_string(os, std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf"));
      return;
    }
    default:
      os << j.dump();
  }
}

int signed_index(int i, int count) { return 2 * i >= count ? i - count : i; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json_text(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

std::string profile_csv(const DecayProfile& h) {
  const Lattice& lat = h.lattice();
  std::ostringstream os;
  os << "mu_k,mu_l,h\n";
  for (int l = 0; l < lat.freq_count(); ++l)
    for (int k = 0; k < lat.time_count(); ++k)
      os << signed_index(k, lat.time_count()) << ',' << signed_index(l, lat.freq_count()) << ','
         << format_double(h[lat.index(k, l)]) << '\n';
  return os.str();
}

std::string matrix_csv(const CMatrix& m) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      os << r << ',' << c << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag()) << '\n';
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace gaborlab
