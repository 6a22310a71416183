#include "orchard/points_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace orchard {

namespace {

using nlohmann::json;

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw FormatError("malformed rational '" + whole + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw FormatError("malformed rational '" + whole + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

std::string as_string(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw FormatError(std::string(what) + " must be a string \"p/q\"");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw FormatError("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

PointSet read_points(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw FormatError("document needs a \"points\" array");
  }
  std::vector<ProjPoint> pts;
  for (const auto& entry : doc["points"]) {
    if (!entry.is_object()) throw FormatError("each point must be an object");
    if (entry.contains("h")) {
      const auto& h = entry["h"];
      if (!h.is_array() || h.size() != 3) throw FormatError("\"h\" needs three entries");
      std::array<Integer, 3> c;
      for (std::size_t i = 0; i < 3; ++i) {
        const std::string s = as_string(h[i], "homogeneous entry");
        c[i] = parse_integer(s, s);
      }
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw FormatError("homogeneous entries all zero");
      pts.emplace_back(std::move(c));
    } else if (entry.contains("x") && entry.contains("y")) {
      pts.push_back(mk_point(parse_rational(as_string(entry["x"], "x")),
                             parse_rational(as_string(entry["y"], "y"))));
    } else {
      throw FormatError("point needs \"x\" and \"y\" or \"h\"");
    }
  }
  if (!doc.contains("labels") || doc["labels"].is_null()) return PointSet(std::move(pts));
  const auto& lab = doc["labels"];
  if (!lab.is_array()) throw FormatError("\"labels\" must be an array");
  if (lab.size() != pts.size()) throw FormatError("labels length does not match points");
  std::vector<int> labels;
  for (const auto& l : lab) {
    if (!l.is_number_integer()) throw FormatError("labels must be integers 1, 2 or 3");
    const int v = l.get<int>();
    if (v < 1 || v > 3) throw FormatError("labels must be integers 1, 2 or 3");
    labels.push_back(v);
  }
  return PointSet(std::move(pts), std::move(labels));
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& set) {
  json pts = json::array();
  for (const auto& p : set.points()) {
    if (at_infinity(p)) {
      pts.push_back({{"h", {p[0].get_str(), p[1].get_str(), p[2].get_str()}}});
    } else {
      const auto xy = affine(p);
      pts.push_back({{"x", format_rational(xy[0])}, {"y", format_rational(xy[1])}});
    }
  }
  json doc = {{"points", std::move(pts)}};
  if (set.has_labels()) doc["labels"] = set.labels();
  out << doc.dump(1) << '\n';
}

void write_points_file(const std::string& path, const PointSet& set) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_points(out, set);
}

}  // namespace orchard
