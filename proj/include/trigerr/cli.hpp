// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. `run` takes the argument vector and two streams so
// the tool can be driven in-process by tests.
//
//   trigerr error  --psi S --n N (--x X | --uniform) [--method M] [--tol T]
//   trigerr sweep  --psi S (--n N --x-from A --x-to B --points P | --n-from A --n-to B ...)
//   trigerr verify [--suite all|aliasing|duality|crossform] [--seed K]
//
// Exit status: 0 success, 1 usage or validation error, 2 precondition,
// truncation or quadrature failure, 3 a verification check failed.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trigerr/error.hpp"
#include "trigerr/exact_errors.hpp"
#include "trigerr/json.hpp"
#include "trigerr/kernel.hpp"
#include "trigerr/linear_methods.hpp"
#include "trigerr/suites.hpp"

namespace trigerr::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kCheckFailed = 3 };

struct Config {
    std::string command;
    std::string psi_spec;
    std::string method_spec = "interp";
    int n = 0;
    std::string x_text;
    bool uniform = false;
    double tol = 1e-10;
    std::string format;
    std::uint64_t seed = 42;
    std::string out_path;

    std::string x_from_text;
    std::string x_to_text;
    int points = 0;
    int n_from = 0;
    int n_to = 0;
    std::string suite = "all";
};

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

/// Parses a real number or a multiple of pi: "0.5", "pi", "-pi/3",
/// "2*pi/3", "2pi/5".
inline std::optional<double> parse_angle(std::string_view text) {
    const auto at = text.find("pi");
    if (at == std::string_view::npos) return trigerr::detail::parse_real(text);

    std::string_view head = text.substr(0, at);
    std::string_view tail = text.substr(at + 2);
    double factor = 1.0;
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    if (head == "-") {
        factor = -1.0;
    } else if (!head.empty() && head != "+") {
        const auto v = trigerr::detail::parse_real(head);
        if (!v) return std::nullopt;
        factor = *v;
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') return std::nullopt;
        const auto v = trigerr::detail::parse_real(tail.substr(1));
        if (!v || *v == 0.0) return std::nullopt;
        divisor = *v;
    }
    return factor * std::numbers::pi / divisor;
}

inline double require_angle(const std::string& text, std::string_view flag) {
    const auto v = parse_angle(text);
    if (!v || !std::isfinite(*v)) {
        throw UsageError("cannot parse " + std::string(flag) + " value '" + text + "'");
    }
    return *v;
}

/// 12 significant digits in scientific notation.
inline std::string csv_number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
    return {buf, res.ptr};
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

inline MultiplierSet parse_method(const std::string& spec, int n) {
    constexpr std::string_view prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) return multipliers_from_file(spec.substr(prefix.size()), n);
    if (spec == "interp" || spec == "zero") return preset_multipliers(spec, n);
    throw UsageError("method must be interp, zero or custom:<path>, got '" + spec + "'");
}

inline std::string resolved_format(const Config& c, std::string_view fallback) {
    const std::string f = c.format.empty() ? std::string(fallback) : c.format;
    if (f != "json" && f != "csv") throw UsageError("format must be json or csv");
    return f;
}

/// Pointwise error of the configured method at x.
inline ErrorResult pointwise(const PsiSequence& psi, const std::string& method, int n, double x,
                             double tol) {
    if (method == "interp") return pointwise_error_interp(psi, n, x, tol);
    return pointwise_error_general(psi, parse_method(method, n), x, tol);
}

/// Uniform error of the interpolation method, by closed form for each family.
inline ErrorResult uniform(const PsiSequence& psi, const std::string& method, int n, double tol) {
    parse_method(method, n);
    if (method != "interp") {
        throw PreconditionError("the uniform error is available for the interp method only");
    }
    switch (psi.family()) {
        case PsiFamily::geometric: return {poisson_uniform(*psi.param(), n), 0.0, 0};
        case PsiFamily::power: return sobolev_uniform(*psi.param(), n, tol);
        case PsiFamily::custom: break;
    }
    return uniform_error_convex(psi, n, tol);
}

inline nlohmann::json params_json(const Config& c, std::optional<double> x) {
    nlohmann::json p{{"psi", c.psi_spec}, {"method", c.method_spec}, {"n", c.n},
                     {"uniform", c.uniform}, {"tol", c.tol}};
    p["x"] = x ? nlohmann::json(*x) : nlohmann::json(nullptr);
    return p;
}

inline std::string cmd_error(const Config& c) {
    const std::string format = resolved_format(c, "json");
    const PsiSequence psi = parse_psi(c.psi_spec);
    std::optional<double> x;
    if (!c.uniform) {
        if (c.x_text.empty()) throw UsageError("error needs --x unless --uniform is given");
        x = require_angle(c.x_text, "--x");
    }
    const ErrorResult r =
        c.uniform ? uniform(psi, c.method_spec, c.n, c.tol) : pointwise(psi, c.method_spec, c.n, *x, c.tol);

    if (format == "csv") {
        std::string s = c.uniform ? "n,value,truncation_bound\n" : "x,value,truncation_bound\n";
        s += c.uniform ? std::to_string(c.n) : csv_number(*x);
        s += "," + csv_number(r.value) + "," + csv_number(r.truncation_bound) + "\n";
        return s;
    }
    nlohmann::json j = r;
    j["params"] = params_json(c, x);
    return j.dump(2) + "\n";
}

struct Row {
    std::string key;
    nlohmann::json key_json;
    ErrorResult result;
};

inline std::string cmd_sweep(const Config& c) {
    const std::string format = resolved_format(c, "csv");
    const PsiSequence psi = parse_psi(c.psi_spec);
    const bool x_grid = !c.x_from_text.empty() || !c.x_to_text.empty() || c.points != 0;
    const bool n_grid = c.n_from != 0 || c.n_to != 0;
    if (x_grid == n_grid) {
        throw UsageError("sweep needs exactly one grid: --x-from/--x-to/--points or --n-from/--n-to");
    }

    std::vector<Row> rows;
    std::string key_name;
    if (x_grid) {
        key_name = "x";
        if (c.x_from_text.empty() || c.x_to_text.empty()) {
            throw UsageError("x sweep needs --x-from and --x-to");
        }
        if (c.points < 2) throw UsageError("x sweep needs --points >= 2");
        const double from = require_angle(c.x_from_text, "--x-from");
        const double to = require_angle(c.x_to_text, "--x-to");
        if (!(to > from)) throw UsageError("x sweep needs --x-to > --x-from");
        for (int i = 0; i < c.points; ++i) {
            const double x = i + 1 == c.points ? to : from + (to - from) * i / (c.points - 1);
            rows.push_back({csv_number(x), x, pointwise(psi, c.method_spec, c.n, x, c.tol)});
        }
    } else {
        key_name = "n";
        if (c.n_from < 1 || c.n_to <= c.n_from) {
            throw UsageError("n sweep needs 1 <= --n-from < --n-to");
        }
        if (c.method_spec != "interp" && c.method_spec != "zero") {
            throw UsageError("n sweep supports the interp and zero methods only");
        }
        std::optional<double> x;
        if (!c.uniform) {
            if (c.x_text.empty()) throw UsageError("n sweep needs --x unless --uniform is given");
            x = require_angle(c.x_text, "--x");
        }
        for (int n = c.n_from; n <= c.n_to; ++n) {
            rows.push_back({std::to_string(n), n,
                            c.uniform ? uniform(psi, c.method_spec, n, c.tol)
                                      : pointwise(psi, c.method_spec, n, *x, c.tol)});
        }
    }

    if (format == "csv") {
        std::string s = key_name + ",value,truncation_bound\n";
        for (const Row& r : rows) {
            s += r.key + "," + csv_number(r.result.value) + "," +
                 csv_number(r.result.truncation_bound) + "\n";
        }
        return s;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json j = r.result;
        j[key_name] = r.key_json;
        list.push_back(std::move(j));
    }
    nlohmann::json j{{"rows", std::move(list)}};
    j["params"] = params_json(c, std::nullopt);
    return j.dump(2) + "\n";
}

inline std::string cmd_verify(const Config& c, bool& all_pass) {
    const std::string format = resolved_format(c, "json");
    std::vector<Check> checks;
    auto run = [&](std::string_view name, auto suite) {
        if (c.suite == "all" || c.suite == name) {
            for (Check& check : suite(c.seed)) checks.push_back(std::move(check));
        }
    };
    if (c.suite != "all" && c.suite != "aliasing" && c.suite != "crossform" &&
        c.suite != "duality") {
        throw UsageError("suite must be all, aliasing, crossform or duality");
    }
    run("aliasing", [](std::uint64_t s) { return aliasing_suite(s); });
    run("crossform", [](std::uint64_t s) { return crossform_suite(s); });
    run("duality", [](std::uint64_t s) { return duality_suite(s); });

    all_pass = true;
    for (const Check& check : checks) all_pass = all_pass && check.pass;

    if (format == "csv") {
        std::string s = "suite,check,value,reference,tolerance,pass\n";
        for (const Check& k : checks) {
            s += k.suite + "," + csv_field(k.name) + "," + csv_number(k.value) + "," +
                 csv_number(k.reference) + "," + csv_number(k.tolerance) + "," +
                 (k.pass ? "true" : "false") + "\n";
        }
        return s;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const Check& k : checks) {
        list.push_back({{"suite", k.suite},
                        {"check", k.name},
                        {"value", k.value},
                        {"reference", k.reference},
                        {"tolerance", k.tolerance},
                        {"pass", k.pass}});
    }
    nlohmann::json j{{"suite", c.suite}, {"seed", c.seed}, {"pass", all_pass},
                     {"checks", std::move(list)}};
    return j.dump(2) + "\n";
}

inline void add_model_options(CLI::App& sub, Config& c) {
    sub.add_option("--psi", c.psi_spec, "geometric:q=<real> or power:r=<real>")->required();
    sub.add_option("--method", c.method_spec, "interp, zero or custom:<path>");
    sub.add_option("--x", c.x_text, "point; accepts multiples of pi such as 2*pi/3");
    sub.add_flag("--uniform", c.uniform, "uniform error over the period");
    sub.add_option("--tol", c.tol, "absolute tolerance on the reported error");
}

inline void add_output_options(CLI::App& sub, Config& c) {
    sub.add_option("--format", c.format, "json or csv");
    sub.add_option("--seed", c.seed, "random seed");
    sub.add_option("--out", c.out_path, "write output to this file");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Sharp error bounds for trigonometric interpolation"};
    app.name("trigerr");
    app.require_subcommand(1);

    CLI::App* error = app.add_subcommand("error", "sharp error at a point or uniformly");
    detail::add_model_options(*error, c);
    error->add_option("--n", c.n, "order n (2n+1 nodes)")->required();
    detail::add_output_options(*error, c);

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate the error over x or n");
    detail::add_model_options(*sweep, c);
    sweep->add_option("--n", c.n, "order n for an x sweep");
    sweep->add_option("--x-from", c.x_from_text, "first grid point");
    sweep->add_option("--x-to", c.x_to_text, "last grid point, included");
    sweep->add_option("--points", c.points, "number of grid points (>= 2)");
    sweep->add_option("--n-from", c.n_from, "first order of an n sweep");
    sweep->add_option("--n-to", c.n_to, "last order of an n sweep, included");
    detail::add_output_options(*sweep, c);

    CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
    verify->add_option("--suite", c.suite, "all, aliasing, duality or crossform");
    detail::add_output_options(*verify, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        std::string text;
        bool pass = true;
        if (error->parsed()) {
            c.command = "error";
            text = detail::cmd_error(c);
        } else if (sweep->parsed()) {
            c.command = "sweep";
            text = detail::cmd_sweep(c);
        } else {
            c.command = "verify";
            text = detail::cmd_verify(c, pass);
        }
        if (c.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(c.out_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file '" + c.out_path + "'");
            file << text;
        }
        return pass ? kOk : kCheckFailed;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace trigerr::cli
