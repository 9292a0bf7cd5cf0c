#include "patchkit/patch_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "patchkit/toric.hpp"

namespace patchkit {
namespace {

using nlohmann::json;

constexpr const char* kToricBasis = "toric-bezier";

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::InvalidInput, message);
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!object.is_object()) invalid(where + " must be a JSON object");
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) invalid("unknown key '" + key + "' in " + where);
  }
}

const json& required(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) invalid("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  invalid(where + ": rationals must be \"p/q\" strings or integers");
}

RationalPoint read_rational_vector(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) invalid(where + " must be an array");
  if (v.size() != dim) invalid(where + " must have " + std::to_string(dim) + " entries");
  RationalPoint out;
  for (const auto& c : v) out.push_back(read_rational(c, where));
  return out;
}

std::vector<RationalPoint> read_points(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.empty()) invalid(where + " must be a nonempty array");
  std::vector<RationalPoint> out;
  for (const auto& p : v) out.push_back(read_rational_vector(p, dim, where));
  return out;
}

AffineForm read_form(const json& v, std::size_t dim, const std::string& where) {
  return AffineForm(read_rational_vector(required(v, "normal", where), dim, where + ".normal"),
                    read_rational(required(v, "constant", where), where + ".constant"));
}

std::vector<FormProduct> read_basis(const json& v, std::size_t dim) {
  if (!v.is_array()) invalid("basis must be \"toric-bezier\" or an array of form products");
  std::vector<FormProduct> out;
  for (const auto& fp : v) {
    reject_unknown_keys(fp, {"coefficient", "factors"}, "basis entry");
    std::vector<Factor> factors;
    const json& fs = required(fp, "factors", "basis entry");
    if (!fs.is_array()) invalid("basis factors must be an array");
    for (const auto& f : fs) {
      reject_unknown_keys(f, {"normal", "constant", "exponent"}, "basis factor");
      const json& e = required(f, "exponent", "basis factor");
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        invalid("factor exponents must be nonnegative integers");
      }
      factors.push_back(Factor{read_form(f, dim, "basis factor"), e.get<unsigned>()});
    }
    out.emplace_back(read_rational(required(fp, "coefficient", "basis entry"), "coefficient"),
                     std::move(factors));
  }
  return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json vector_json(const RationalPoint& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rational_json(c));
  return out;
}

json points_json(const PointConfig& config) {
  json out = json::array();
  for (const auto& p : config.points()) out.push_back(vector_json(p));
  return out;
}

json form_json(const AffineForm& form) {
  return json{{"normal", vector_json(form.normal())}, {"constant", rational_json(form.constant())}};
}

}  // namespace

PatchSpec read_patch_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("patch file is not valid JSON: ") + e.what());
  }
  try {
    reject_unknown_keys(j,
                        {"dimension", "points", "labels", "weights", "taut_points",
                         "control_points", "basis", "facets"},
                        "patch file");
    const json& dim_json = required(j, "dimension", "patch file");
    if (!dim_json.is_number_integer() || dim_json.get<long long>() < 1) {
      invalid("dimension must be a positive integer");
    }
    const auto dim = dim_json.get<std::size_t>();

    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    PointConfig config(read_points(required(j, "points", "patch file"), dim, "points"),
                       std::move(labels));

    const json& wj = required(j, "weights", "patch file");
    if (!wj.is_array()) invalid("weights must be an array");
    std::vector<Rational> weights;
    for (const auto& w : wj) weights.push_back(read_rational(w, "weights"));
    WeightVector weight_vector(std::move(weights));
    if (weight_vector.size() != config.size()) invalid("weights must have one entry per point");

    std::optional<PointConfig> taut;
    if (j.contains("taut_points")) {
      taut = PointConfig(read_points(j.at("taut_points"), dim, "taut_points"));
    }

    std::optional<std::vector<Point>> controls;
    if (j.contains("control_points")) {
      const json& cj = j.at("control_points");
      if (!cj.is_array()) invalid("control_points must be an array");
      std::vector<Point> pts;
      for (const auto& c : cj) {
        if (!c.is_array()) invalid("each control point must be an array of numbers");
        Point p;
        for (const auto& v : c) {
          if (!v.is_number()) invalid("control point coordinates must be numbers");
          p.push_back(v.get<double>());
        }
        pts.push_back(std::move(p));
      }
      controls = std::move(pts);
    }

    FacetSystem facets;
    if (j.contains("facets")) {
      const json& fj = j.at("facets");
      if (!fj.is_array()) invalid("facets must be an array");
      for (const auto& f : fj) {
        reject_unknown_keys(f, {"normal", "constant"}, "facet");
        facets.forms.push_back(read_form(f, dim, "facet"));
      }
    } else {
      facets = facet_system(config);
    }

    const json& bj = required(j, "basis", "patch file");
    std::vector<FormProduct> basis;
    if (bj.is_string()) {
      if (bj.get<std::string>() != kToricBasis) invalid("unknown basis '" + bj.get<std::string>() + "'");
      basis = toric_bezier(config, weight_vector, facets);
    } else {
      basis = read_basis(bj, dim);
    }

    return PatchSpec(std::move(config), std::move(weight_vector), std::move(basis),
                     std::move(facets), std::move(taut), std::move(controls));
  } catch (const json::exception& e) {
    invalid(std::string("patch file: ") + e.what());
  }
}

PatchSpec read_patch_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_patch_json(buf.str());
}

std::string write_patch_json(const PatchSpec& spec, bool toric_basis) {
  json j;
  j["dimension"] = spec.dim();
  j["points"] = points_json(spec.config());
  if (!spec.config().labels().empty()) j["labels"] = spec.config().labels();
  json weights = json::array();
  for (const auto& w : spec.weights().values()) weights.push_back(rational_json(w));
  j["weights"] = std::move(weights);
  if (spec.taut_points()) j["taut_points"] = points_json(*spec.taut_points());
  if (spec.control_points()) j["control_points"] = *spec.control_points();

  if (toric_basis) {
    j["basis"] = kToricBasis;
  } else {
    json basis = json::array();
    for (const auto& fp : spec.basis()) {
      json factors = json::array();
      for (const auto& f : fp.factors()) {
        json fj = form_json(f.form);
        fj["exponent"] = f.exponent;
        factors.push_back(std::move(fj));
      }
      basis.push_back(json{{"coefficient", rational_json(fp.coefficient())}, {"factors", factors}});
    }
    j["basis"] = std::move(basis);
  }
  json facets = json::array();
  for (const auto& f : spec.facets().forms) facets.push_back(form_json(f));
  j["facets"] = std::move(facets);
  return j.dump(2);
}

}  // namespace patchkit
