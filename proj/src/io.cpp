#include "liegeo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace liegeo {

namespace {

int resolve_index(const OrderedJson& key, const std::vector<std::string>& basis,
                  const char* what) {
  const int n = static_cast<int>(basis.size());
  if (key.is_string()) {
    const std::string name = key.get<std::string>();
    const auto it = std::find(basis.begin(), basis.end(), name);
    if (it == basis.end())
      throw ParseError(std::string(what) + ": unknown basis name '" + name + "'");
    return static_cast<int>(it - basis.begin());
  }
  if (key.is_number_integer()) {
    const int idx = key.get<int>();
    if (idx < 1 || idx > n)
      throw ParseError(std::string(what) + ": index " + std::to_string(idx) +
                       " out of range 1.." + std::to_string(n));
    return idx - 1;
  }
  throw ParseError(std::string(what) + ": expected a basis name or 1-based index");
}

int resolve_result_key(const std::string& key, const std::vector<std::string>& basis) {
  const auto it = std::find(basis.begin(), basis.end(), key);
  if (it != basis.end()) return static_cast<int>(it - basis.begin());
  try {
    size_t pos = 0;
    const int idx = std::stoi(key, &pos);
    if (pos == key.size() && idx >= 1 && idx <= static_cast<int>(basis.size()))
      return idx - 1;
  } catch (...) {
  }
  throw ParseError("bracket result: unknown basis name '" + key + "'");
}

double number_or_throw(const OrderedJson& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite value");
  return x;
}

}  // namespace

InputDocument parse_input(const OrderedJson& j) {
  if (!j.is_object()) throw ParseError("input: expected a JSON object");
  InputDocument doc;

  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("input: missing integer field 'dim'");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1 || doc.dim > 64)
    throw ParseError("input: 'dim' must be between 1 and 64");

  if (j.contains("basis")) {
    if (!j["basis"].is_array() ||
        static_cast<int>(j["basis"].size()) != doc.dim)
      throw ParseError("input: 'basis' must list exactly dim names");
    for (const auto& name : j["basis"]) {
      if (!name.is_string()) throw ParseError("input: basis names must be strings");
      doc.basis.push_back(name.get<std::string>());
    }
    for (size_t i = 0; i < doc.basis.size(); ++i)
      for (size_t k = i + 1; k < doc.basis.size(); ++k)
        if (doc.basis[i] == doc.basis[k])
          throw ParseError("input: duplicate basis name '" + doc.basis[i] + "'");
  } else {
    doc.basis = default_labels(doc.dim);
  }

  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("input: 'brackets' must be an array");
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
          !entry.contains("result"))
        throw ParseError("input: bracket entries need fields x, y, result");
      BracketTerm term;
      term.x = resolve_index(entry["x"], doc.basis, "bracket x");
      term.y = resolve_index(entry["y"], doc.basis, "bracket y");
      if (term.x >= term.y)
        throw ParseError("input: brackets must be given for index(x) < index(y)");
      term.value = Vec::Zero(doc.dim);
      if (!entry["result"].is_object())
        throw ParseError("input: bracket result must be an object");
      for (const auto& [key, coeff] : entry["result"].items())
        term.value[resolve_result_key(key, doc.basis)] =
            number_or_throw(coeff, "bracket coefficient");
      doc.brackets.push_back(std::move(term));
    }
  }

  if (j.contains("metric")) {
    doc.metric = json_to_mat(j["metric"], "metric");
    if (doc.metric.rows() != doc.dim)
      throw ParseError("input: metric must be dim x dim");
  } else {
    doc.metric = Mat::Identity(doc.dim, doc.dim);
  }

  if (j.contains("tolerance")) {
    doc.tolerance = number_or_throw(j["tolerance"], "tolerance");
    if (doc.tolerance <= 0.0) throw ParseError("input: tolerance must be positive");
  }
  return doc;
}

InputDocument parse_input_text(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_input(j);
}

OrderedJson emit_input(const InputDocument& doc) {
  OrderedJson j;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;

  // normalize: accumulate terms per (x, y) pair and emit in pair order
  std::map<std::pair<int, int>, Vec> by_pair;
  for (const auto& term : doc.brackets) {
    auto [it, inserted] = by_pair.try_emplace({term.x, term.y}, Vec::Zero(doc.dim));
    it->second += term.value;
  }
  OrderedJson brackets = OrderedJson::array();
  for (const auto& [pair, value] : by_pair) {
    if (value.cwiseAbs().maxCoeff() == 0.0) continue;
    OrderedJson entry;
    entry["x"] = doc.basis[static_cast<size_t>(pair.first)];
    entry["y"] = doc.basis[static_cast<size_t>(pair.second)];
    OrderedJson result;
    for (int k = 0; k < doc.dim; ++k)
      if (value[k] != 0.0) result[doc.basis[static_cast<size_t>(k)]] = value[k];
    entry["result"] = std::move(result);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  j["metric"] = mat_to_json(doc.metric);
  j["tolerance"] = doc.tolerance;
  return j;
}

LieAlgebra to_algebra(const InputDocument& doc) {
  return LieAlgebra(doc.dim, doc.brackets, doc.basis);
}

MetricLieAlgebra to_metric_algebra(const InputDocument& doc) {
  return MetricLieAlgebra(to_algebra(doc), doc.metric, doc.tolerance);
}

std::string render_scalar(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

bool all_primitive(const OrderedJson& arr) {
  for (const auto& el : arr)
    if (el.is_object() || el.is_array()) return false;
  return true;
}

void render_value(const OrderedJson& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * depth), ' ');
  const std::string pad_in(static_cast<size_t>(indent * (depth + 1)), ' ');
  switch (j.type()) {
    case OrderedJson::value_t::null:
      out += "null";
      break;
    case OrderedJson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case OrderedJson::value_t::number_integer:
    case OrderedJson::value_t::number_unsigned:
      out += j.dump();
      break;
    case OrderedJson::value_t::number_float:
      out += render_scalar(j.get<double>());
      break;
    case OrderedJson::value_t::string:
      out += j.dump();  // handles escaping
      break;
    case OrderedJson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      if (all_primitive(j)) {
        out += "[";
        bool first = true;
        for (const auto& el : j) {
          if (!first) out += ", ";
          first = false;
          render_value(el, out, indent, depth);
        }
        out += "]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        render_value(el, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      break;
    }
    case OrderedJson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + OrderedJson(key).dump() + ": ";
        render_value(value, out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      break;
    }
    default:
      throw Error("render_json: unsupported value type");
  }
}

}  // namespace

std::string render_json(const OrderedJson& j, int indent) {
  std::string out;
  render_value(j, out, indent, 0);
  out += "\n";
  return out;
}

OrderedJson vec_to_json(const Vec& v) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

OrderedJson mat_to_json(const Mat& m) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
  return arr;
}

Mat json_to_mat(const OrderedJson& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + ": expected a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  Mat m;
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<size_t>(i)];
    if (!row.is_array()) throw ParseError(std::string(what) + ": rows must be arrays");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m.resize(rows, cols);
    }
    if (static_cast<int>(row.size()) != cols)
      throw ParseError(std::string(what) + ": ragged rows");
    for (int k = 0; k < cols; ++k)
      m(i, k) = number_or_throw(row[static_cast<size_t>(k)], what);
  }
  return m;
}

}  // namespace liegeo
