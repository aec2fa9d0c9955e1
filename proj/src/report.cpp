#include "cylindex/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace cylindex {

namespace {

void write_float(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string text(buf);
  // Keep the value a float after a parse round trip.
  if (text.find_first_of(".e") == std::string::npos) text += ".0";
  out += text;
}

void write(std::string& out, const Json& v) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, item);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        write(out, v[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_float(out, v.get<double>());
      break;
    default:
      out += v.dump(-1, ' ', false, Json::error_handler_t::replace);
      break;
  }
}

}  // namespace

std::string canonical_json(const Json& value) {
  std::string out;
  write(out, value);
  return out;
}

std::string format_shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

Json to_json(const PerturbationParams& p) {
  return {{"m", p.m}, {"s", p.s}, {"t", p.t}, {"eps1", p.eps1}, {"eps2", p.eps2}};
}

Json to_json(const WeightSet& w) {
  Json out = {{"variant", to_string(w.kind)}};
  if (w.kind == WeightSet::Kind::Finite) out["weights"] = w.weights;
  if (w.kind != WeightSet::Kind::NonFredholm) out["case"] = w.case_label;
  return out;
}

Json to_json(const Discretization& d) {
  return {{"center", d.center}, {"R", d.R}, {"h", d.h}, {"N", d.interior_points()}};
}

Json to_json(const Thresholds& th) {
  return {{"tau_zero", th.tau_zero}, {"tau_gap", th.tau_gap}};
}

Json to_json(const SpectralReport& r) {
  return {{"n", r.n},
          {"params", to_json(r.params)},
          {"disc", to_json(r.disc)},
          {"thresholds", to_json(r.thresholds)},
          {"low_plus", r.low_plus},
          {"low_minus", r.low_minus},
          {"kernel_plus", r.kernel_plus},
          {"kernel_minus", r.kernel_minus}};
}

Json to_json(const CharacterFunctional& c, IntegerWindow window) {
  Json mult = Json::array();
  for (int n = window.lo; n <= window.hi; ++n) mult.push_back(c.evaluate(n));
  Json out = {{"window", {window.lo, window.hi}}, {"multiplicities", mult},
              {"pattern", c.pattern()}};
  const Multiplicity& tail = c.plus;
  if (tail.tail == Multiplicity::Tail::AtLeast || tail.tail == Multiplicity::Tail::AtMost) {
    out["tail_bound"] = tail.tail_bound;
    out["tail_multiplicity"] = tail.tail_multiplicity;
  }
  return out;
}

}  // namespace cylindex
