#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seal/delegator.hpp"
#include "seal/grade_service.hpp"
#include "seal/minisql.hpp"
#include "seal/secure_strategies.hpp"
#include "seal/sensitive_store.hpp"
#include "seal/threat_detection.hpp"

namespace py = pybind11;

using namespace seal;

PYBIND11_MODULE(_seal, m) {
  m.doc() = "SQL-injection delegation pipeline over an in-memory grade store";

  py::register_exception<sql::SqlError>(m, "SqlError", PyExc_ValueError);
  py::register_exception<store::StoreError>(m, "StoreError", PyExc_ValueError);

  // Store
  py::enum_<store::TrustLevel>(m, "TrustLevel")
      .value("T1", store::TrustLevel::T1)
      .value("T2", store::TrustLevel::T2);

  py::class_<store::UserRecord>(m, "UserRecord")
      .def_readonly("username", &store::UserRecord::username)
      .def_readonly("student", &store::UserRecord::student)
      .def_readonly("faculty", &store::UserRecord::faculty)
      .def_readonly("trust", &store::UserRecord::trust);

  py::class_<store::SensitiveStore>(m, "SensitiveStore")
      .def("users", &store::SensitiveStore::users)
      .def("get_user", &store::SensitiveStore::get_user)
      .def("set_trust", &store::SensitiveStore::set_trust)
      .def("list_user_privileges", &store::SensitiveStore::list_user_privileges)
      .def("digest", [](const store::SensitiveStore& s) { return s.digest().str(); })
      .def("copy", [](const store::SensitiveStore& s) { return s; });

  m.def("seed_default", &store::seed_default);
  m.def("load_seed", &store::load_seed, py::arg("text"));
  m.def("save_seed", &store::save_seed, py::arg("store"));
  m.def("render_row", &render_row);

  // Mini SQL
  py::enum_<sql::TokenKind>(m, "TokenKind")
      .value("Keyword", sql::TokenKind::Keyword)
      .value("Identifier", sql::TokenKind::Identifier)
      .value("StringLiteral", sql::TokenKind::StringLiteral)
      .value("IntLiteral", sql::TokenKind::IntLiteral)
      .value("Symbol", sql::TokenKind::Symbol)
      .value("Placeholder", sql::TokenKind::Placeholder);

  py::class_<sql::Token>(m, "Token")
      .def_readonly("kind", &sql::Token::kind)
      .def_readonly("lexeme", &sql::Token::lexeme)
      .def_readonly("position", &sql::Token::position)
      .def("__repr__", [](const sql::Token& t) {
        return "Token(" + std::string(sql::to_string(t.kind)) + ", '" + t.lexeme + "', " +
               std::to_string(t.position) + ")";
      });

  py::class_<sql::ExecutionReport>(m, "ExecutionReport")
      .def_readonly("statements_executed", &sql::ExecutionReport::statements_executed)
      .def_readonly("mutations_applied", &sql::ExecutionReport::mutations_applied)
      .def_readonly("discarded_result_sets", &sql::ExecutionReport::discarded_result_sets);

  m.def("tokenize", &sql::tokenize, py::arg("sql"), py::arg("allow_placeholders") = false);
  m.def(
      "split_statements",
      [](const std::vector<sql::Token>& tokens) {
        std::vector<std::vector<sql::Token>> out;
        for (auto slice : sql::split_statements(tokens)) out.emplace_back(slice.begin(), slice.end());
        return out;
      },
      py::arg("tokens"));
  m.def("interpolate", &sql::interpolate, py::arg("template"), py::arg("value"));
  m.def(
      "execute_script",
      [](store::SensitiveStore& s, const std::string& text) { return sql::execute_script(s, text); },
      py::arg("store"), py::arg("sql"));
  m.def(
      "execute_parameterized",
      [](const store::SensitiveStore& s, const std::string& tmpl,
         const std::vector<std::string>& params) {
        return sql::execute_parameterized(s, tmpl, params);
      },
      py::arg("store"), py::arg("template"), py::arg("params"));

  // Threat detection and strategies
  py::enum_<threat::ThreatClass>(m, "ThreatClass")
      .value("Benign", threat::ThreatClass::Benign)
      .value("UpdateBased", threat::ThreatClass::UpdateBased)
      .value("ErrorBased", threat::ThreatClass::ErrorBased);

  m.def(
      "classify",
      [](const std::string& raw, std::size_t sequence_index) {
        return threat::classify({raw, sequence_index});
      },
      py::arg("raw"), py::arg("sequence_index") = 0);

  py::enum_<Response::Kind>(m, "ResponseKind")
      .value("Granted", Response::Kind::Granted)
      .value("Denied", Response::Kind::Denied)
      .value("NotFound", Response::Kind::NotFound)
      .value("Obscured", Response::Kind::Obscured)
      .value("ValidationRejected", Response::Kind::ValidationRejected);

  py::class_<Response>(m, "Response")
      .def_readonly("kind", &Response::kind)
      .def_readonly("message", &Response::message)
      .def("__repr__", [](const Response& r) {
        return "Response(" + std::string(to_string(r.kind)) + ", '" + r.message + "')";
      });

  py::class_<strategy::StrategyFactory>(m, "StrategyFactory")
      .def_property_readonly("tag", &strategy::StrategyFactory::tag);
  m.def("make_factory", &strategy::make_factory, py::arg("threat"));
  m.def(
      "delegate_strategy",
      [](const strategy::StrategyFactory& f, const std::string& raw,
         const store::SensitiveStore& s) { return strategy::delegate_strategy(f, {raw, 0}, s); },
      py::arg("factory"), py::arg("payload"), py::arg("store"));

  // Grade service and delegator
  py::enum_<grades::Mode>(m, "Mode")
      .value("Vulnerable", grades::Mode::Vulnerable)
      .value("Seal", grades::Mode::Seal);

  m.def(
      "has_entergrades_vulnerable",
      [](store::SensitiveStore& s, const std::string& raw) {
        auto check = grades::has_entergrades_vulnerable(s, raw);
        return py::make_tuple(check.response, check.report);
      },
      py::arg("store"), py::arg("username"));
  m.def("has_entergrades_secure", &grades::has_entergrades_secure, py::arg("store"),
        py::arg("username"));
  m.def("whitelist", &grades::whitelist, py::arg("store"));

  py::class_<PipelineStep>(m, "PipelineStep")
      .def_readonly("raw", &PipelineStep::raw)
      .def_readonly("accepted", &PipelineStep::accepted)
      .def_readonly("threat", &PipelineStep::threat)
      .def_readonly("factory_tag", &PipelineStep::factory_tag)
      .def_readonly("script_report", &PipelineStep::script_report)
      .def_readonly("response", &PipelineStep::response)
      .def("describe", &describe);

  m.def("handle", &handle, py::arg("raw"), py::arg("store"), py::arg("mode") = grades::Mode::Seal,
        py::arg("sequence_index") = 0);

  m.def(
      "run_lateral",
      [](const std::string& scenario_text, store::SensitiveStore& s, grades::Mode mode) {
        const auto report = run_lateral(parse_scenario(scenario_text, "scenario"), s, mode);
        py::list steps;
        for (const auto& o : report.outcomes) {
          steps.append(py::make_tuple(o.step, o.passed));
        }
        return py::make_tuple(report.passed(), steps);
      },
      py::arg("scenario_text"), py::arg("store"), py::arg("mode") = grades::Mode::Seal);
}
