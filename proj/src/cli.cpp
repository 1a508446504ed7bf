#include "divclass/cli.hpp"

#include <exception>
#include <functional>
#include <sstream>

#include "divclass/error.hpp"
#include "divclass/joinmeet.hpp"
#include "divclass/poset.hpp"
#include "divclass/semigroup.hpp"

namespace divclass::cli {
namespace {

Integer parse_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool digits = s.size() > start;
    for (std::size_t i = start; i < s.size() && digits; ++i)
      digits = s[i] >= '0' && s[i] <= '9';
    if (digits) return Integer(s, 10);
  }
  throw InputError(where + ": expected an integer or a decimal string");
}

IntVector parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json poset_json(const PosetInput& in) {
  Json relations = Json::array();
  for (const auto& [a, b] : in.relations) relations.push_back({a, b});
  return Json{{"mode", "poset"}, {"elements", in.elements}, {"relations", relations}};
}

std::string render_text(const Json& doc, const std::string& indent = "") {
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n" << render_text(value, indent + "  ");
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << indent << key << ": " << value.dump() << '\n';
    }
  }
  return os.str();
}

std::string emit(const Json& doc, OutputFormat format) {
  return format == OutputFormat::json ? doc.dump(2) + "\n" : render_text(doc);
}

Json header(std::string_view command) {
  return Json{{"tool", kToolName}, {"version", kVersion}, {"command", command}};
}

Json report_json(Json doc, const ClassGroupReport& report) {
  doc["num_height_one_primes"] = report.num_height_one_primes;
  doc["rank"] = report.group.free_rank;
  doc["invariant_factors"] = vector_json(report.group.torsion_factors);
  if (report.canonical_in_basis) {
    doc["canonical_class"] = {{"basis", report.basis},
                              {"coordinates", vector_json(*report.canonical_in_basis)}};
  } else {
    doc["canonical_class"] = {{"basis", "height-one-primes"},
                              {"coordinates", vector_json(report.canonical.coords)}};
  }
  doc["torsion_number"] = report.torsion_number.get_str();
  doc["gorenstein"] = report.gorenstein;
  if (report.pure) doc["pure"] = *report.pure;
  return doc;
}

ClassGroupReport analyze_document(const InputDocument& in) {
  if (in.mode == InputDocument::Mode::poset)
    return joinmeet_report(build_poset(in.poset.elements, in.poset.relations));
  ConeDescription cone{in.dim, {}, in.interior_point};
  for (const auto& f : in.forms) {
    if (f.size() != in.dim) throw InputError("form length does not match dim");
    cone.forms.push_back(normalize_form(f, in.interior_point));
  }
  return cone_report(cone);
}

Json analysis_json(std::string_view command, const InputDocument& in) {
  Json doc = header(command);
  doc["mode"] = in.mode == InputDocument::Mode::poset ? "poset" : "cone";
  doc["input"] = to_json(in);
  return report_json(std::move(doc), analyze_document(in));
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    return {kInputError, "", std::string("error: malformed JSON: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantError& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

long required(const std::optional<long>& v, const char* name, long lo, long hi) {
  if (!v) throw InputError(std::string("missing parameter --") + name);
  if (*v < lo || *v > hi)
    throw InputError(std::string("parameter --") + name + " must lie in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return *v;
}

constexpr long kMaxShape = 200;
constexpr long kMaxDegree = 1'000'000'000;

}  // namespace

InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) throw InputError("input document must be a JSON object");
  if (!doc.contains("mode") || !doc["mode"].is_string())
    throw InputError("input document needs a string field 'mode'");
  const auto mode = doc["mode"].get<std::string>();

  InputDocument out;
  if (mode == "poset") {
    for (const auto& [key, _] : doc.items())
      if (key != "mode" && key != "elements" && key != "relations")
        throw InputError("poset document has unexpected field '" + key + "'");
    if (!doc.contains("elements") || !doc["elements"].is_array())
      throw InputError("poset document needs an array 'elements'");
    for (const auto& e : doc["elements"]) {
      if (!e.is_string()) throw InputError("element names must be strings");
      out.poset.elements.push_back(e.get<std::string>());
    }
    if (doc.contains("relations")) {
      if (!doc["relations"].is_array()) throw InputError("'relations' must be an array");
      for (const auto& r : doc["relations"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
          throw InputError("each relation must be a pair of element names");
        out.poset.relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
      }
    }
    return out;
  }
  if (mode == "cone") {
    out.mode = InputDocument::Mode::cone;
    for (const auto& [key, _] : doc.items())
      if (key != "mode" && key != "dim" && key != "forms" && key != "interior_point")
        throw InputError("cone document has unexpected field '" + key + "'");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 0)
      throw InputError("cone document needs a nonnegative integer 'dim'");
    out.dim = doc["dim"].get<std::size_t>();
    if (!doc.contains("forms") || !doc["forms"].is_array())
      throw InputError("cone document needs an array 'forms'");
    for (std::size_t i = 0; i < doc["forms"].size(); ++i)
      out.forms.push_back(parse_vector(doc["forms"][i], "forms[" + std::to_string(i) + "]"));
    if (doc.contains("interior_point"))
      out.interior_point = parse_vector(doc["interior_point"], "interior_point");
    return out;
  }
  throw InputError("unknown mode '" + mode + "' (expected 'poset' or 'cone')");
}

Json to_json(const InputDocument& doc) {
  if (doc.mode == InputDocument::Mode::poset) return poset_json(doc.poset);
  Json forms = Json::array();
  for (const auto& f : doc.forms) forms.push_back(vector_json(f));
  Json out{{"mode", "cone"}, {"dim", doc.dim}, {"forms", forms}};
  if (doc.interior_point) out["interior_point"] = vector_json(*doc.interior_point);
  return out;
}

CommandResult cmd_analyze(std::string_view document, OutputFormat format) {
  return guarded([&] {
    const InputDocument in = parse_input(Json::parse(document));
    return CommandResult{kSuccess, emit(analysis_json("analyze", in), format), ""};
  });
}

CommandResult cmd_family(const FamilyRequest& request, OutputFormat format) {
  return guarded([&] {
    Json params = Json::object();
    auto param = [&](const std::optional<long>& v, const char* name, long lo, long hi) {
      const long value = required(v, name, lo, hi);
      params[name] = value;
      return static_cast<std::size_t>(value);
    };

    const auto& name = request.name;
    if (name == "two-chains") {
      const std::size_t a = param(request.a, "a", 0, kMaxShape);
      const std::size_t b = param(request.b, "b", 0, kMaxShape);
      InputDocument in;
      auto chain = [&](const char* prefix, std::size_t length) {
        for (std::size_t i = 0; i <= length; ++i) {
          in.poset.elements.push_back(prefix + std::to_string(i));
          if (i > 0)
            in.poset.relations.emplace_back(prefix + std::to_string(i - 1),
                                            prefix + std::to_string(i));
        }
      };
      chain("x", a);
      chain("y", b);
      Json doc = analysis_json("family", in);
      doc["family"] = {{"name", name}, {"parameters", params}};
      return CommandResult{kSuccess, emit(doc, format), ""};
    }
    if (name == "veronese" || name == "segre") {
      ConeDescription cone;
      if (name == "veronese") {
        const std::size_t n = param(request.n, "n", 1, kMaxShape);
        const std::size_t r = param(request.r, "r", 1, kMaxDegree);
        cone = veronese_cone(n, r);
      } else {
        const std::size_t m = param(request.m, "m", 2, kMaxShape);
        const std::size_t p = param(request.p, "p", 1, kMaxDegree);
        const std::size_t n = param(request.n, "n", 2, kMaxShape);
        const std::size_t q = param(request.q, "q", 1, kMaxDegree);
        cone = segre_veronese_cone(m, p, n, q);
      }
      InputDocument in;
      in.mode = InputDocument::Mode::cone;
      in.dim = cone.dim;
      in.forms = cone.forms;
      in.interior_point = cone.interior_point;
      Json doc = analysis_json("family", in);
      doc["family"] = {{"name", name}, {"parameters", params}};
      return CommandResult{kSuccess, emit(doc, format), ""};
    }
    if (name == "determinantal") {
      const std::size_t m = param(request.m, "m", 1, kMaxDegree);
      const std::size_t n = param(request.n, "n", 1, kMaxDegree);
      const auto inv = determinantal_invariants(m, n);
      Json doc = header("family");
      doc["mode"] = "closed-form";
      doc["family"] = {{"name", name}, {"parameters", params}};
      doc["rank"] = inv.rank;
      doc["invariant_factors"] = Json::array();
      doc["canonical_class"] = {{"basis", "[P]"},
                                {"coordinates", Json::array({inv.torsion_number.get_str()})}};
      doc["torsion_number"] = inv.torsion_number.get_str();
      doc["gorenstein"] = inv.torsion_number == 0;
      return CommandResult{kSuccess, emit(doc, format), ""};
    }
    throw InputError("unknown family '" + name +
                     "' (expected two-chains, veronese, segre or determinantal)");
  });
}

CommandResult cmd_sweep(const SweepConfig& config, OutputFormat format) {
  return guarded([&] {
    const SweepSummary summary = run_sweep(config);
    Json doc = header("sweep");
    doc["seed"] = std::to_string(config.seed);
    doc["count"] = config.count;
    doc["max_n"] = config.max_n;
    Json tallies = Json::object();
    for (const auto& t : summary.tallies)
      tallies[t.name] = {{"passed", t.passed}, {"failed", t.failed}};
    doc["properties"] = tallies;
    doc["chain_pairs_found"] = summary.chain_pairs_found;
    doc["all_passed"] = summary.all_passed();

    CommandResult result{kSuccess, "", ""};
    if (!summary.all_passed()) {
      Json failures = Json::array();
      for (const auto& f : summary.failures)
        failures.push_back({{"index", f.index},
                            {"property", f.property},
                            {"detail", f.detail},
                            {"poset", poset_json(f.poset)}});
      doc["failures"] = failures;
      result.exit_code = kInternalError;
      result.err = "sweep: " + std::to_string(summary.failures.size()) +
                   " property failure(s); offending posets are listed under 'failures'\n";
    }
    result.out = emit(doc, format);
    return result;
  });
}

}  // namespace divclass::cli
