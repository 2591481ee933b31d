#include "fde/problem_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fde/errors.hpp"

namespace fde {

namespace {

using nlohmann::json;

std::string array(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ", ";
        out += format_number(xs[k]);
    }
    return out + "]";
}

std::string problem_fields(const TwoPointProblem& prob) {
    std::ostringstream os;
    os << "  \"tau1\": " << format_number(prob.tau1) << ",\n"
       << "  \"tau2\": " << format_number(prob.tau2) << ",\n"
       << "  \"c\": " << format_number(prob.c) << ",\n"
       << "  \"p1\": " << to_json(prob.p1) << ",\n"
       << "  \"p2\": " << to_json(prob.p2) << ",\n"
       << "  \"f\": " << to_json(prob.f);
    return os.str();
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field '" + path + key + "'");
    if (!it->is_number()) throw ParseError("field '" + path + key + "': expected a number");
    return it->get<double>();
}

std::vector<double> number_array(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field '" + path + key + "'");
    if (!it->is_array()) throw ParseError("field '" + path + key + "': expected an array of numbers");
    std::vector<double> out;
    out.reserve(it->size());
    for (std::size_t k = 0; k < it->size(); ++k) {
        if (!(*it)[k].is_number()) {
            throw ParseError("field '" + path + key + "[" + std::to_string(k) + "]': expected a number");
        }
        out.push_back((*it)[k].get<double>());
    }
    return out;
}

StepFunction step_field(const json& obj, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field '" + key + "'");
    if (!it->is_object()) throw ParseError("field '" + key + "': expected an object with breaks and values");
    auto breaks = number_array(*it, "breaks", key + ".");
    auto values = number_array(*it, "values", key + ".");
    try {
        return StepFunction(std::move(breaks), std::move(values));
    } catch (const DomainError& e) {
        throw ParseError("field '" + key + "': " + e.what());
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string to_json(const StepFunction& sf) {
    return "{\"breaks\": " + array(sf.breaks()) + ", \"values\": " + array(sf.values()) + "}";
}

std::string to_json(const TwoPointProblem& prob) { return "{\n" + problem_fields(prob) + "\n}\n"; }

std::string to_json(const PiecewiseLinear& x) {
    return "{\"breaks\": " + array(x.breaks()) + ", \"values\": " + array(x.values()) + "}\n";
}

std::string to_json(const Counterexample& cx, double A, double B, double residual) {
    std::ostringstream os;
    os << "{\n"
       << "  \"A\": " << format_number(A) << ",\n"
       << "  \"B\": " << format_number(B) << ",\n"
       << problem_fields(cx.problem) << ",\n"
       << "  \"delta\": " << format_number(cx.delta) << ",\n"
       << "  \"null_vector\": " << array({cx.null_vector[0], cx.null_vector[1]}) << ",\n"
       << "  \"residual\": " << format_number(residual) << ",\n"
       << "  \"null_solution\": {\"breaks\": " << array(cx.null_solution.breaks())
       << ", \"values\": " << array(cx.null_solution.values()) << "}\n"
       << "}\n";
    return os.str();
}

TwoPointProblem parse_problem(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
    TwoPointProblem prob{number_field(doc, "tau1", ""), number_field(doc, "tau2", ""), step_field(doc, "p1"),
                         step_field(doc, "p2"),         step_field(doc, "f"),          number_field(doc, "c", "")};
    try {
        validate(prob.linear());
    } catch (const DomainError& e) {
        throw ParseError(std::string("fields 'tau1'/'tau2': ") + e.what());
    }
    return prob;
}

PiecewiseLinear parse_solution(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("solution document must be a JSON object");
    try {
        return PiecewiseLinear(number_array(doc, "breaks", ""), number_array(doc, "values", ""));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace fde
