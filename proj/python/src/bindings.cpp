#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ufp/acceptance.hpp"
#include "ufp/analysis.hpp"
#include "ufp/cli.hpp"
#include "ufp/errors.hpp"
#include "ufp/forecaster.hpp"
#include "ufp/protocol.hpp"
#include "ufp/spec_parser.hpp"
#include "ufp/trace_io.hpp"

namespace py = pybind11;

namespace {

ufp::NumericMode mode_from(const std::string& text) {
  if (text == "exact") return ufp::NumericMode::ExactRational;
  if (text == "float") return ufp::NumericMode::Float;
  throw py::value_error("mode must be 'exact' or 'float'");
}

ufp::ProtocolVariant variant_from(const std::string& text) {
  if (text == "standard") return ufp::ProtocolVariant::Standard;
  if (text == "modified") return ufp::ProtocolVariant::Modified;
  throw py::value_error("variant must be 'standard' or 'modified'");
}

ufp::SignPolicy sign_policy_from(const std::string& text) {
  if (text == "positive") return ufp::SignPolicy::PreferPositive;
  if (text == "alternate") return ufp::SignPolicy::Alternate;
  throw py::value_error("sign_policy must be 'positive' or 'alternate'");
}

// Values cross the boundary as strings ("p/q" or float text) so no precision is lost.
std::string payoff_text(const std::string& m, const std::string& v_stake, const std::string& variance,
                        const std::string& x, const std::string& mode) {
  const auto nm = mode_from(mode);
  const ufp::SkepticMove move{ufp::Scalar::parse(m, nm), ufp::Scalar::parse(v_stake, nm)};
  return ufp::payoff(move, ufp::Scalar::parse(variance, nm), ufp::Scalar::parse(x, nm)).to_string();
}

py::tuple play(const std::string& forecaster, const std::string& skeptic, ufp::Round rounds,
               const std::string& variant, const std::string& mode, const std::string& sign_policy,
               bool stop_on_bankruptcy) {
  ufp::RunConfig config;
  config.forecaster = forecaster;
  config.skeptic = skeptic;
  config.horizon = rounds;
  config.variant = variant_from(variant);
  config.mode = mode_from(mode);
  config.sign_policy = sign_policy_from(sign_policy);
  config.stop_on_bankruptcy = stop_on_bankruptcy;
  ufp::MatchupResult result;
  {
    py::gil_scoped_release release;
    result = ufp::play_matchup(config);
  }
  return py::make_tuple(ufp::trace_to_jsonl(result.trace), ufp::verdict_document(result.verdict, result.report));
}

std::string analyze(const std::string& jsonl) {
  const ufp::Trace trace = ufp::trace_from_jsonl(jsonl);
  const ufp::Verdict verdict = ufp::analyze_trace(trace);
  return ufp::verdict_document(verdict, ufp::check_properties(verdict, trace));
}

std::string kolmogorov_sum(const std::string& forecaster, ufp::Round rounds, const std::string& mode) {
  const auto spec = ufp::resolve_forecaster(ufp::parse_forecaster_spec(forecaster));
  return ufp::kolmogorov_partial_sum(spec, rounds, mode_from(mode)).to_string();
}

std::string divergence(const std::string& forecaster) {
  return std::string(ufp::to_string(ufp::classify_divergence(ufp::parse_forecaster_spec(forecaster))));
}

py::tuple verify() {
  std::ostringstream out;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = ufp::verify_command(out);
  }
  return py::make_tuple(code == ufp::kExitOk, out.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unbounded forecasting game engine";

  auto protocol_error = py::register_exception<ufp::ProtocolError>(m, "ProtocolError", PyExc_ValueError);
  py::register_exception<ufp::ParseError>(m, "ParseError", protocol_error.ptr());

  m.def("payoff", &payoff_text, py::arg("M"), py::arg("V"), py::arg("v"), py::arg("x"), py::arg("mode") = "exact");
  m.def("play", &play, py::arg("forecaster"), py::arg("skeptic"), py::arg("rounds"),
        py::arg("variant") = "standard", py::arg("mode") = "exact", py::arg("sign_policy") = "positive",
        py::arg("stop_on_bankruptcy") = false);
  m.def("analyze", &analyze, py::arg("jsonl"));
  m.def("kolmogorov_sum", &kolmogorov_sum, py::arg("forecaster"), py::arg("rounds"), py::arg("mode") = "exact");
  m.def("divergence", &divergence, py::arg("forecaster"));
  m.def("verify", &verify);
}
