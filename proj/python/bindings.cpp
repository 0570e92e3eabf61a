// pybind11 module exposing the proving pipeline: translate, prove,
// discover, transcripts, and the polynomial text round-trip.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "geoprove/discovery.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"
#include "geoprove/transcript.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

using SpecPoints = std::vector<std::pair<std::string, std::pair<std::string, std::string>>>;

struct Pipeline {
  geoprove::PolySystem unspecialized;
  geoprove::PolySystem proved_system;
  geoprove::Specialization spec;
};

Pipeline build_pipeline(const std::string& source, const std::string& encoding,
                        const std::string& specialize, const SpecPoints& specialize_points) {
  auto c = geoprove::parse_construction(source);
  geoprove::Encoding enc = c.encoding.value_or(geoprove::Encoding::Direct);
  if (!encoding.empty()) enc = geoprove::encoding_from_string(encoding);
  auto sys = geoprove::translate(c, enc);

  geoprove::Specialization spec;
  if (!specialize_points.empty()) {
    for (const auto& [name, coords] : specialize_points)
      spec.assignments.push_back({name,
                                  {geoprove::Rational::from_string(coords.first),
                                   geoprove::Rational::from_string(coords.second)}});
  } else if (specialize == "auto") {
    spec = geoprove::default_specialization(sys);
  } else if (specialize != "none") {
    throw std::invalid_argument("specialize must be auto, none, or explicit points");
  }

  auto proved = geoprove::specialize(sys, spec);
  return Pipeline{std::move(sys), std::move(proved), std::move(spec)};
}

geoprove::ProveOptions make_options(bool minimize, std::size_t spair_budget,
                                    int degree_budget, const std::string& route,
                                    bool specialized) {
  geoprove::ProveOptions opts;
  opts.minimize = minimize;
  opts.spair_budget = spair_budget;
  opts.degree_budget = degree_budget;
  if (route == "reductio" || (route == "auto" && specialized))
    opts.route = geoprove::ProofRoute::Reductio;
  else if (route != "ladder" && route != "auto")
    throw std::invalid_argument("route must be auto, ladder, or reductio");
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "algebraic geometry prover: certificates and difficulty scores";

  m.def(
      "translate",
      [](const std::string& source, const std::string& encoding,
         const std::string& specialize, const SpecPoints& specialize_points) {
        auto pipe = build_pipeline(source, encoding, specialize, specialize_points);
        return json_to_py(geoprove::to_json(pipe.proved_system));
      },
      py::arg("source"), py::arg("encoding") = "", py::arg("specialize") = "none",
      py::arg("specialize_points") = SpecPoints{},
      "Parse a .geo construction and return its polynomial system as a dict.");

  m.def(
      "prove",
      [](const std::string& source, const std::string& order, const std::string& encoding,
         const std::string& specialize, const SpecPoints& specialize_points, bool minimize,
         const std::string& route, std::size_t spair_budget, int degree_budget) {
        auto pipe = build_pipeline(source, encoding, specialize, specialize_points);
        auto opts =
            make_options(minimize, spair_budget, degree_budget, route, !pipe.spec.empty());
        auto ord = geoprove::system_order(pipe.proved_system, order);
        auto cert = geoprove::prove(pipe.proved_system, ord, opts);
        py::dict out;
        out["certificate"] = json_to_py(geoprove::to_json(cert));
        out["system"] = json_to_py(geoprove::to_json(pipe.proved_system));
        out["transcript"] =
            py::str(geoprove::render(pipe.unspecialized, pipe.spec, cert, "text"));
        out["proved"] = py::bool_(cert.mode != geoprove::TruthMode::Unproved);
        return out;
      },
      py::arg("source"), py::arg("order") = "tdeg", py::arg("encoding") = "",
      py::arg("specialize") = "auto", py::arg("specialize_points") = SpecPoints{},
      py::arg("minimize") = true, py::arg("route") = "auto",
      py::arg("spair_budget") = geoprove::kDefaultSpairBudget,
      py::arg("degree_budget") = -1,
      "Prove the thesis of a .geo construction; returns certificate, system, "
      "and a text transcript.");

  m.def(
      "discover",
      [](const std::string& source, const std::vector<std::string>& kinds, int trials,
         std::uint64_t seed, const std::string& order, const std::string& encoding,
         int jobs, bool minimize) {
        auto c = geoprove::parse_construction(source);
        geoprove::Encoding enc = c.encoding.value_or(geoprove::Encoding::Direct);
        if (!encoding.empty()) enc = geoprove::encoding_from_string(encoding);
        geoprove::DiscoveryOptions opts;
        if (!kinds.empty()) {
          opts.kinds.clear();
          for (const auto& k : kinds) {
            auto kind = geoprove::predicate_kind_from_string(k);
            if (!kind) throw std::invalid_argument("unknown candidate kind '" + k + "'");
            opts.kinds.insert(*kind);
          }
        }
        opts.trials = trials;
        opts.seed = seed;
        opts.jobs = jobs;
        opts.order_label = order;
        opts.prove_options.minimize = minimize;
        auto report = geoprove::discover(c, enc, opts);
        return json_to_py(geoprove::to_json(report));
      },
      py::arg("source"), py::arg("kinds") = std::vector<std::string>{},
      py::arg("trials") = 5, py::arg("seed") = 0, py::arg("order") = "tdeg",
      py::arg("encoding") = "", py::arg("jobs") = 1, py::arg("minimize") = true,
      "Enumerate, filter, prove and rank candidate statements.");

  m.def(
      "polynomial_roundtrip",
      [](const std::string& text, const std::vector<std::string>& variables) {
        auto table = std::make_shared<geoprove::VariableTable>();
        for (const auto& v : variables) table->add(v);
        geoprove::VariableTablePtr t = table;
        auto p = geoprove::parse_polynomial(text, t);
        return p.to_string(geoprove::MonomialOrder::grevlex(t->all_indices()));
      },
      py::arg("text"), py::arg("variables"),
      "Parse a polynomial and render its canonical text form.");

  py::register_exception<geoprove::Error>(m, "GeoproveError");
}
