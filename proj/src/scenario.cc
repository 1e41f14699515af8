// Copyright 2026 The unimeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unimeas/scenario.h"

#include <cmath>
#include <initializer_list>
#include <set>

#include "json.hpp"
#include "unimeas/error.h"

namespace unimeas {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
    throw Error(ErrorCode::kSchema, path + ": " + what);
}

void allow_keys(const json &object, const std::string &path, std::initializer_list<std::string_view> keys) {
    for (const auto &item : object.items()) {
        bool known = false;
        for (auto k : keys) {
            known = known || item.key() == k;
        }
        if (!known) {
            schema_error(path, "unexpected key '" + item.key() + "'");
        }
    }
}

const json &require(const json &object, const std::string &path, const char *key) {
    auto it = object.find(key);
    if (it == object.end()) {
        schema_error(path, std::string("missing key '") + key + "'");
    }
    return *it;
}

std::string as_string(const json &value, const std::string &path) {
    if (!value.is_string()) {
        schema_error(path, "expected a string");
    }
    return value.get<std::string>();
}

std::string as_label(const json &value, const std::string &path) {
    std::string label = as_string(value, path);
    if (!is_valid_label(label)) {
        schema_error(path, "invalid label '" + label + "'");
    }
    return label;
}

std::vector<std::string> as_label_list(const json &value, const std::string &path) {
    if (!value.is_array()) {
        schema_error(path, "expected an array of labels");
    }
    std::vector<std::string> labels;
    for (size_t k = 0; k < value.size(); k++) {
        labels.push_back(as_label(value[k], path + "[" + std::to_string(k) + "]"));
    }
    return labels;
}

double as_number(const json &value, const std::string &path) {
    if (!value.is_number()) {
        schema_error(path, "expected a number");
    }
    return value.get<double>();
}

Amplitude as_amplitude(const json &value, const std::string &path) {
    if (value.is_number()) {
        return {value.get<double>(), 0.0};
    }
    if (!value.is_array() || value.size() != 2) {
        schema_error(path, "expected an amplitude [re, im]");
    }
    return {as_number(value[0], path + "[0]"), as_number(value[1], path + "[1]")};
}

QubitAmplitudes as_pair(const json &value, const std::string &path) {
    if (!value.is_array() || value.size() != 2) {
        schema_error(path, "expected two amplitudes");
    }
    QubitAmplitudes pair{as_amplitude(value[0], path + "[0]"), as_amplitude(value[1], path + "[1]")};
    for (const auto &a : pair) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::kBadAmplitude, path + ": non-finite amplitude");
        }
    }
    if (std::norm(pair[0]) + std::norm(pair[1]) == 0) {
        throw Error(ErrorCode::kBadAmplitude, path + ": amplitude pair is zero");
    }
    return pair;
}

Basis as_basis(const json &value, const std::string &path) {
    std::string name = as_string(value, path);
    if (name == "Z") {
        return Basis::kZ;
    }
    if (name == "X") {
        return Basis::kX;
    }
    schema_error(path, "basis must be \"Z\" or \"X\", got \"" + name + "\"");
}

class Parser {
   public:
    explicit Parser(const json &doc) : doc_(doc) {
    }

    Scenario parse() {
        if (!doc_.is_object()) {
            schema_error("$", "scenario must be a JSON object");
        }
        allow_keys(doc_, "$", {"name", "description", "subsystems", "script", "options"});
        if (doc_.contains("name")) {
            scenario_.name = as_string(doc_["name"], "$.name");
        }
        if (doc_.contains("description")) {
            as_string(doc_["description"], "$.description");
        }
        parse_subsystems(require(doc_, "$", "subsystems"));
        if (doc_.contains("options")) {
            parse_options(doc_["options"]);
        }
        if (doc_.contains("script")) {
            const json &script = doc_["script"];
            if (!script.is_array()) {
                schema_error("$.script", "expected an array of steps");
            }
            for (size_t k = 0; k < script.size(); k++) {
                scenario_.script.push_back(parse_step(script[k], "$.script[" + std::to_string(k) + "]"));
            }
        }
        return std::move(scenario_);
    }

   private:
    void declare(const std::string &label, const std::string &path) {
        if (!declared_.insert(label).second) {
            throw Error(ErrorCode::kDuplicateLabel, path + ": label '" + label + "' declared twice");
        }
        labels_.push_back(label);
    }

    const std::string &known(const std::string &label, const std::string &path) const {
        if (!declared_.count(label)) {
            throw Error(ErrorCode::kUnknownLabel, path + ": undeclared label '" + label + "'");
        }
        return label;
    }

    std::string label_at(const json &step, const std::string &path, const char *key) const {
        std::string p = path + "." + key;
        return known(as_label(require(step, path, key), p), p);
    }

    void parse_subsystems(const json &list) {
        if (!list.is_array()) {
            schema_error("$.subsystems", "expected an array");
        }
        for (size_t k = 0; k < list.size(); k++) {
            const std::string path = "$.subsystems[" + std::to_string(k) + "]";
            const json &entry = list[k];
            if (!entry.is_object()) {
                schema_error(path, "expected an object");
            }
            if (entry.contains("ghz")) {
                allow_keys(entry, path, {"ghz"});
                const json &ghz = entry["ghz"];
                const std::string gpath = path + ".ghz";
                if (!ghz.is_object()) {
                    schema_error(gpath, "expected an object");
                }
                allow_keys(ghz, gpath, {"labels", "coefficients"});
                GhzDecl decl{as_label_list(require(ghz, gpath, "labels"), gpath + ".labels"),
                             as_pair(require(ghz, gpath, "coefficients"), gpath + ".coefficients")};
                if (decl.labels.empty()) {
                    schema_error(gpath + ".labels", "GHZ group needs at least one label");
                }
                for (const auto &label : decl.labels) {
                    declare(label, gpath + ".labels");
                }
                scenario_.subsystems.emplace_back(std::move(decl));
            } else {
                allow_keys(entry, path, {"label", "amplitudes"});
                SingleQubitDecl decl{as_label(require(entry, path, "label"), path + ".label"),
                                     as_pair(require(entry, path, "amplitudes"), path + ".amplitudes")};
                declare(decl.label, path + ".label");
                scenario_.subsystems.emplace_back(std::move(decl));
            }
        }
        scenario_.reg = Register(labels_);
    }

    void parse_options(const json &options) {
        const std::string path = "$.options";
        if (!options.is_object()) {
            schema_error(path, "expected an object");
        }
        allow_keys(options, path, {"tolerance", "relabel", "format"});
        if (options.contains("tolerance")) {
            double tol = as_number(options["tolerance"], path + ".tolerance");
            if (!(tol > 0) || !std::isfinite(tol)) {
                schema_error(path + ".tolerance", "must be a positive number");
            }
            scenario_.options.tolerance = tol;
        }
        if (options.contains("relabel")) {
            if (!options["relabel"].is_boolean()) {
                schema_error(path + ".relabel", "expected true or false");
            }
            scenario_.options.relabel = options["relabel"].get<bool>();
        }
        if (options.contains("format")) {
            std::string format = as_string(options["format"], path + ".format");
            if (format == "text") {
                scenario_.options.format = OutputFormat::kText;
            } else if (format == "json") {
                scenario_.options.format = OutputFormat::kJson;
            } else {
                schema_error(path + ".format", "must be \"text\" or \"json\"");
            }
        }
    }

    // A single basis name applies to every label; an object maps labels to
    // bases and unlisted labels stay in Z.
    BasisChoice parse_basis_choice(const json &step, const std::string &path) const {
        BasisChoice choice = uniform_basis(scenario_.reg, Basis::kZ);
        auto it = step.find("basis");
        if (it == step.end()) {
            return choice;
        }
        const std::string bpath = path + ".basis";
        if (it->is_string()) {
            return uniform_basis(scenario_.reg, as_basis(*it, bpath));
        }
        if (!it->is_object()) {
            schema_error(bpath, "expected \"Z\", \"X\" or an object of label: basis");
        }
        for (const auto &item : it->items()) {
            known(item.key(), bpath);
            choice[item.key()] = as_basis(item.value(), bpath + "." + item.key());
        }
        return choice;
    }

    void require_distinct(const std::vector<std::string> &labels, const std::string &path) const {
        std::set<std::string> seen;
        for (const auto &label : labels) {
            if (!seen.insert(label).second) {
                schema_error(path, "operand '" + label + "' used twice");
            }
        }
    }

    Step parse_step(const json &step, const std::string &path) {
        if (!step.is_object()) {
            schema_error(path, "expected a step object");
        }
        const std::string op = as_string(require(step, path, "op"), path + ".op");
        if (op == "imprint" || op == "inverse_imprint") {
            allow_keys(step, path, {"op", "source", "target"});
            std::string source = label_at(step, path, "source");
            std::string target = label_at(step, path, "target");
            require_distinct({source, target}, path);
            return GateStep{op == "imprint" ? GateOp::imprint(source, target)
                                            : GateOp::inverse_imprint(source, target)};
        }
        if (op == "swap") {
            allow_keys(step, path, {"op", "a", "b"});
            std::string a = label_at(step, path, "a");
            std::string b = label_at(step, path, "b");
            require_distinct({a, b}, path);
            return GateStep{GateOp::swap(a, b)};
        }
        if (op == "rotate_basis") {
            allow_keys(step, path, {"op", "target"});
            return GateStep{GateOp::rotate_basis(label_at(step, path, "target"))};
        }
        if (op == "uncorrected_measure") {
            allow_keys(step, path, {"op", "signal", "observer", "environment"});
            UncorrectedMeasureStep s{label_at(step, path, "signal"), label_at(step, path, "observer"),
                                     label_at(step, path, "environment")};
            require_distinct({s.signal, s.observer, s.environment}, path);
            return s;
        }
        if (op == "corrected_measure") {
            allow_keys(step, path, {"op", "signal", "observer", "environment", "basis"});
            MeasurementSpec spec;
            spec.signal = label_at(step, path, "signal");
            spec.observer = label_at(step, path, "observer");
            spec.environment = as_label_list(require(step, path, "environment"), path + ".environment");
            for (const auto &label : spec.environment) {
                known(label, path + ".environment");
            }
            if (spec.environment.size() < 2) {
                schema_error(path + ".environment", "corrected measurement needs at least two environment labels");
            }
            if (step.contains("basis")) {
                spec.basis = as_basis(step["basis"], path + ".basis");
            }
            std::vector<std::string> all{spec.signal, spec.observer};
            all.insert(all.end(), spec.environment.begin(), spec.environment.end());
            require_distinct(all, path);
            return CorrectedMeasureStep{std::move(spec)};
        }
        if (op == "ideal_measure") {
            allow_keys(step, path, {"op", "signal", "observer", "basis"});
            IdealMeasureStep s{label_at(step, path, "signal"), label_at(step, path, "observer"), Basis::kZ};
            if (step.contains("basis")) {
                s.basis = as_basis(step["basis"], path + ".basis");
            }
            require_distinct({s.signal, s.observer}, path);
            return s;
        }
        if (op == "branches") {
            allow_keys(step, path, {"op", "basis"});
            return BranchesStep{parse_basis_choice(step, path)};
        }
        if (op == "ledger") {
            allow_keys(step, path, {"op", "tag"});
            std::string tag = step.contains("tag") ? as_string(step["tag"], path + ".tag") : "";
            return LedgerStep{std::move(tag)};
        }
        if (op == "agreement") {
            allow_keys(step, path, {"op", "basis", "pairs"});
            const json &pairs = require(step, path, "pairs");
            if (!pairs.is_array()) {
                schema_error(path + ".pairs", "expected an array of label pairs");
            }
            AgreementStep s{parse_basis_choice(step, path), {}};
            for (size_t k = 0; k < pairs.size(); k++) {
                std::string ppath = path + ".pairs[" + std::to_string(k) + "]";
                auto labels = as_label_list(pairs[k], ppath);
                if (labels.size() != 2) {
                    schema_error(ppath, "expected exactly two labels");
                }
                s.pairs.emplace_back(known(labels[0], ppath), known(labels[1], ppath));
            }
            return s;
        }
        if (op == "recover_record") {
            allow_keys(step, path, {"op", "basis", "records"});
            RecoverRecordStep s{parse_basis_choice(step, path),
                                as_label_list(require(step, path, "records"), path + ".records")};
            if (s.records.empty()) {
                schema_error(path + ".records", "needs at least one record label");
            }
            for (const auto &label : s.records) {
                known(label, path + ".records");
            }
            return s;
        }
        schema_error(path + ".op", "unknown op '" + op + "'");
    }

    const json &doc_;
    Scenario scenario_;
    std::set<std::string> declared_;
    std::vector<std::string> labels_;
};

std::pair<size_t, size_t> line_and_column(std::string_view text, size_t byte) {
    size_t line = 1;
    size_t column = 1;
    size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (size_t k = 0; k < end; k++) {
        if (text[k] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace

std::string step_name(const Step &step) {
    struct Visitor {
        std::string operator()(const GateStep &s) const {
            return std::string(gate_kind_name(s.op.kind));
        }
        std::string operator()(const UncorrectedMeasureStep &) const {
            return "uncorrected_measure";
        }
        std::string operator()(const CorrectedMeasureStep &) const {
            return "corrected_measure";
        }
        std::string operator()(const IdealMeasureStep &) const {
            return "ideal_measure";
        }
        std::string operator()(const BranchesStep &) const {
            return "branches";
        }
        std::string operator()(const LedgerStep &) const {
            return "ledger";
        }
        std::string operator()(const AgreementStep &) const {
            return "agreement";
        }
        std::string operator()(const RecoverRecordStep &) const {
            return "recover_record";
        }
    };
    return std::visit(Visitor{}, step);
}

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, column] = line_and_column(text, e.byte);
        throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                            ": malformed JSON");
    }
    return Parser(doc).parse();
}

PureState initial_state(const Scenario &scenario) {
    PureState state = PureState::basis_state(Register(), 0);
    for (const auto &decl : scenario.subsystems) {
        if (const auto *single = std::get_if<SingleQubitDecl>(&decl)) {
            const QubitAmplitudes pair[] = {single->amplitudes};
            state = tensor(state, product_state(Register({single->label}), pair));
        } else {
            const auto &ghz = std::get<GhzDecl>(decl);
            state = tensor(state, make_ghz(ghz.labels, ghz.coefficients));
        }
    }
    return state;
}

}  // namespace unimeas
