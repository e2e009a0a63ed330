#include "bosy/spec.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "bosy/error.hpp"

namespace bosy {

const char* to_string(Semantics s) noexcept {
    return s == Semantics::Mealy ? "mealy" : "moore";
}

namespace {

std::vector<std::string> read_signal_list(const nlohmann::json& doc, const char* key,
                                          std::set<std::string>& seen) {
    if (!doc.contains(key))
        throw Error(std::string("specification is missing key \"") + key + "\"");
    const auto& arr = doc.at(key);
    if (!arr.is_array())
        throw Error(std::string("\"") + key + "\" must be an array of signal names");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string() || item.get<std::string>().empty())
            throw Error(std::string("\"") + key + "\" must contain non-empty strings");
        std::string name = item.get<std::string>();
        if (!seen.insert(name).second)
            throw Error("duplicate signal \"" + name + "\"");
        out.push_back(std::move(name));
    }
    return out;
}

std::vector<LtlPtr> read_formula_list(const nlohmann::json& doc, const char* key, bool required) {
    std::vector<LtlPtr> out;
    if (!doc.contains(key)) {
        if (required)
            throw Error(std::string("specification is missing key \"") + key + "\"");
        return out;
    }
    const auto& arr = doc.at(key);
    if (!arr.is_array())
        throw Error(std::string("\"") + key + "\" must be an array of LTL strings");
    for (const auto& item : arr) {
        if (!item.is_string())
            throw Error(std::string("\"") + key + "\" must contain strings");
        try {
            out.push_back(parse_ltl(item.get<std::string>()));
        } catch (const ParseError& e) {
            throw Error(std::string(key) + " formula \"" + item.get<std::string>() +
                        "\": " + e.what());
        }
    }
    return out;
}

}  // namespace

SynthesisProblem parse_spec(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("specification must be a JSON object");

    SynthesisProblem p;

    if (!doc.contains("semantics")) throw Error("specification is missing key \"semantics\"");
    const auto sem = doc.at("semantics");
    if (!sem.is_string() || (sem != "mealy" && sem != "moore"))
        throw Error("unknown semantics value (expected \"mealy\" or \"moore\")");
    p.semantics = sem == "mealy" ? Semantics::Mealy : Semantics::Moore;

    std::set<std::string> declared;
    p.inputs = read_signal_list(doc, "inputs", declared);
    p.outputs = read_signal_list(doc, "outputs", declared);

    p.assumptions = read_formula_list(doc, "assumptions", /*required=*/false);
    p.guarantees = read_formula_list(doc, "guarantees", /*required=*/true);

    std::set<std::string> atoms;
    for (const auto& f : p.assumptions) collect_atoms(f, atoms);
    for (const auto& f : p.guarantees) collect_atoms(f, atoms);
    for (const auto& a : atoms)
        if (!declared.count(a)) throw Error("undeclared atom \"" + a + "\"");

    p.player = Player::System;
    return p;
}

namespace {

LtlPtr conjunction(const std::vector<LtlPtr>& fs) {
    if (fs.empty()) return Ltl::constant(true);
    LtlPtr acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
        acc = Ltl::binary(LtlKind::And, *it, std::move(acc));
    return acc;
}

}  // namespace

LtlPtr combine(const SynthesisProblem& problem) {
    LtlPtr guarantee = conjunction(problem.guarantees);
    if (problem.assumptions.empty()) return guarantee;
    return Ltl::binary(LtlKind::Implies, conjunction(problem.assumptions), std::move(guarantee));
}

SynthesisProblem dualize(const SynthesisProblem& problem) {
    if (problem.player != Player::System)
        throw Error("dualize requires a system-player problem");
    SynthesisProblem dual;
    dual.inputs = problem.outputs;   // the environment observes the system's outputs
    dual.outputs = problem.inputs;   // and controls the system's inputs
    dual.semantics = problem.semantics == Semantics::Mealy ? Semantics::Moore : Semantics::Mealy;
    dual.guarantees.push_back(Ltl::unary(LtlKind::Not, combine(problem)));
    dual.player = Player::Environment;
    return dual;
}

}  // namespace bosy
