// Command dispatch shared by the command-line binary and the test suite.
//
// Every command emits one report (JSON or aligned text) on stdout and returns
// an exit code: 0 success, 1 validation failure, 2 budget exhaustion,
// 3 usage error. Budget exhaustion and usage problems still emit a report.

#ifndef COFLAG_CLI_HPP
#define COFLAG_CLI_HPP

#include "cli_commands.hpp"

namespace coflag {

inline int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    json report;
    report["command"] = req.command;
    if (req.seed) report["seed"] = *req.seed;
    int code = 0;
    try {
        std::vector<std::string> warnings;
        dispatch_command(req, report, warnings);
        if (!warnings.empty()) report["warnings"] = warnings;
    } catch (const budget_error& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const validation_error& e) {
        report["error"] = e.what();
        report["violations"] = violations_to_json(e.report);
        code = 1;
    } catch (const usage_error& e) {
        report["error"] = e.what();
        code = 3;
    } catch (const error& e) {
        report["error"] = e.what();
        code = 1;
    }
    if (code == 0 && report.contains("valid") && report.at("valid") == false) code = 1;
    emit_report(report, req.format, out);
    if (code != 0 && report.contains("error"))
        err << "coflag: " << report.at("error").get<std::string>() << "\n";
    return code;
}

}  // namespace coflag

#endif
