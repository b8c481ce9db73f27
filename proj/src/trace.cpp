#include "mitlq/trace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mitlq/error.hpp"

namespace mitlq {

using nlohmann::json;

Approximation Approximation::checked(IntervalQueue under, IntervalQueue over) {
  if (!difference(under, over).empty()) {
    throw std::invalid_argument("under-approximation " + under.to_string() + " is not contained in over-approximation " +
                                over.to_string());
  }
  return {std::move(under), std::move(over)};
}

namespace {

IntervalQueue queue_field(const json& entry, const char* key, const std::string& prop) {
  const auto& value = entry.at(key);
  if (!value.is_string()) throw TraceError("proposition '" + prop + "': '" + key + "' must be a queue literal string");
  try {
    return parse_queue(value.get<std::string>());
  } catch (const ParseError& e) {
    throw TraceError("proposition '" + prop + "': " + key + ": " + e.what());
  }
}

Rational rational_field(const json& value, const char* what) {
  if (value.is_number_unsigned() || value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) throw TraceError(std::string(what) + " must be a rational string such as \"7/2\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw TraceError(std::string(what) + ": " + e.what());
  }
}

Approximation read_proposition(const std::string& name, const json& entry) {
  if (!entry.is_object()) throw TraceError("proposition '" + name + "' must be an object");
  bool has_exact = entry.contains("exact");
  bool has_under = entry.contains("under");
  bool has_over = entry.contains("over");
  for (const auto& [key, _] : entry.items()) {
    if (key != "exact" && key != "under" && key != "over") {
      throw TraceError("proposition '" + name + "': unknown key '" + key + "'");
    }
  }
  if (has_exact) {
    if (has_under || has_over) throw TraceError("proposition '" + name + "': 'exact' excludes 'under'/'over'");
    return Approximation::exact(queue_field(entry, "exact", name));
  }
  if (!has_under || !has_over) throw TraceError("proposition '" + name + "' needs both 'under' and 'over', or 'exact'");
  auto under = queue_field(entry, "under", name);
  auto over = queue_field(entry, "over", name);
  try {
    return Approximation::checked(std::move(under), std::move(over));
  } catch (const std::invalid_argument& e) {
    throw TraceError("proposition '" + name + "': " + e.what());
  }
}

Trace read_document(const json& doc) {
  if (!doc.is_object()) throw TraceError("trace document must be a JSON object");

  Trace trace;
  // The bare form maps proposition names directly; the full form nests them
  // under "propositions" next to an optional "horizon".
  const json* props = &doc;
  if (doc.contains("propositions")) {
    props = &doc.at("propositions");
    if (!props->is_object()) throw TraceError("'propositions' must be an object");
    for (const auto& [key, _] : doc.items()) {
      if (key != "propositions" && key != "horizon") throw TraceError("unknown top-level key '" + key + "'");
    }
  }

  std::optional<Rational> horizon;
  if (doc.contains("horizon")) {
    horizon = rational_field(doc.at("horizon"), "horizon");
    if (*horizon < 0) throw TraceError("horizon must be non-negative");
  }

  for (const auto& [name, entry] : props->items()) {
    if (props == &doc && name == "horizon") continue;
    trace.propositions.emplace(name, read_proposition(name, entry));
  }
  if (horizon) trace = apply_horizon(trace, *horizon);
  return trace;
}

}  // namespace

Trace load_trace_string(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TraceError(std::string("malformed trace document: ") + e.what());
  }
  return read_document(doc);
}

Trace load_trace(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_trace_string(buffer.str());
}

Trace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot open trace file '" + path + "'");
  return load_trace(in);
}

std::string save_trace(const Trace& t) {
  json doc;
  if (t.horizon) doc["horizon"] = format_rational(*t.horizon);
  json props = json::object();
  for (const auto& [name, approx] : t.propositions) {
    if (approx.is_exact()) {
      props[name] = {{"exact", approx.under.to_string()}};
    } else {
      props[name] = {{"under", approx.under.to_string()}, {"over", approx.over.to_string()}};
    }
  }
  doc["propositions"] = std::move(props);
  return doc.dump(2);
}

Trace apply_horizon(const Trace& t, const Rational& b) {
  if (b < 0) throw std::invalid_argument("horizon must be non-negative");
  IntervalQueue beyond = IntervalQueue::construct({Interval::open(b, Endpoint::pos_inf())});
  Trace out;
  out.horizon = t.horizon ? std::min(*t.horizon, b) : b;
  for (const auto& [name, approx] : t.propositions) {
    std::vector<Interval> grown(approx.over.begin(), approx.over.end());
    grown.push_back(beyond.items().front());
    out.propositions.emplace(name, Approximation{difference(approx.under, beyond), IntervalQueue::construct(grown)});
  }
  return out;
}

Trace to_trace(const ExactTrace& t) {
  Trace out;
  for (const auto& [name, q] : t.propositions) out.propositions.emplace(name, Approximation::exact(q));
  return out;
}

Trace apply_horizon(const ExactTrace& t, const Rational& b) { return apply_horizon(to_trace(t), b); }

Trace approximate_from_exact(const ExactTrace& t) {
  Trace out;
  for (const auto& [name, q] : t.propositions) {
    std::vector<std::optional<Interval>> inner;
    std::vector<Interval> outer;
    for (const auto& i : q) {
      inner.push_back(interior(i));
      outer.push_back(closure(i));
    }
    out.propositions.emplace(name, Approximation{IntervalQueue::construct(inner), IntervalQueue::construct(outer)});
  }
  return out;
}

std::optional<ExactTrace> as_exact(const Trace& t) {
  ExactTrace out;
  for (const auto& [name, approx] : t.propositions) {
    if (!approx.is_exact()) return std::nullopt;
    out.propositions.emplace(name, approx.under);
  }
  return out;
}

}  // namespace mitlq
