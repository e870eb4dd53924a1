// Copyright 2026 The qdconcat Authors
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

#include "qdconcat_cli/json_io.h"

#include <filesystem>
#include <fstream>

#include "qdconcat/errors.h"

namespace qdc::cli {

namespace {

nlohmann::json strings(const std::vector<PauliString> &ops) {
    auto out = nlohmann::json::array();
    for (const auto &p : ops) {
        out.push_back(p.str());
    }
    return out;
}

std::vector<PauliString> parse_list(const nlohmann::json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw ParseError(std::string("code description needs an array '") + key + "'");
    }
    std::vector<PauliString> out;
    for (const auto &item : doc[key]) {
        if (!item.is_string()) {
            throw ParseError(std::string("entries of '") + key + "' must be Pauli strings");
        }
        out.push_back(PauliString::parse(item.get<std::string>()));
    }
    return out;
}

}  // namespace

nlohmann::json code_to_json(const StabilizerCode &code) {
    nlohmann::json doc;
    doc["name"] = code.name();
    doc["n"] = code.n();
    doc["k"] = code.k();
    doc["generators"] = strings(code.generators());
    doc["logical_x"] = strings(code.logical_x());
    doc["logical_z"] = strings(code.logical_z());
    auto passive = nlohmann::json::array();
    for (bool b : code.passive_mask()) {
        passive.push_back(b);
    }
    doc["passive"] = passive;
    return doc;
}

StabilizerCode code_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ParseError("code description must be a JSON object");
    }
    for (const char *key : {"n", "k"}) {
        if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
            throw ParseError(std::string("code description needs a non-negative integer '") + key + "'");
        }
    }
    std::vector<bool> passive;
    if (doc.contains("passive")) {
        if (!doc["passive"].is_array()) {
            throw ParseError("'passive' must be an array of booleans");
        }
        for (const auto &b : doc["passive"]) {
            if (!b.is_boolean()) {
                throw ParseError("'passive' must be an array of booleans");
            }
            passive.push_back(b.get<bool>());
        }
    }
    return StabilizerCode(doc.value("name", std::string("custom")), doc["n"].get<size_t>(), doc["k"].get<size_t>(),
                          parse_list(doc, "generators"), parse_list(doc, "logical_x"), parse_list(doc, "logical_z"),
                          std::move(passive));
}

StabilizerCode load_code(std::string_view name_or_path) {
    std::filesystem::path path(name_or_path);
    if (name_or_path.find('/') != std::string_view::npos || path.extension() == ".json") {
        std::ifstream in(path);
        if (!in) {
            throw LookupError("cannot open code description '" + path.string() + "'");
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
        }
        return code_from_json(doc);
    }
    return builtin(name_or_path);
}

nlohmann::json concat_to_json(const ConcatenatedCode &cc) {
    nlohmann::json doc = code_to_json(cc.code);
    doc["order"] = order_name(cc.spec.order);
    doc["alphabet"] = alphabet_name(cc.spec.alphabet);
    doc["outer"] = cc.spec.outer.name();
    doc["inner"] = cc.spec.inner.name();
    auto classes = nlohmann::json::array();
    for (const auto &g : cc.generator_classes) {
        classes.push_back({{"canonical", g.canonical().str()},
                           {"raw_phase", g.raw_phase()},
                           {"passive", g.passive},
                           {"representatives", strings(g.representatives)}});
    }
    doc["generator_classes"] = classes;
    auto sets = nlohmann::json::array();
    for (const auto &s : cc.equivalence.sets) {
        sets.push_back(strings(s));
    }
    doc["equivalence_class"] = sets;
    HammingEfficiency h = hamming_efficiency(cc.equivalence, cc.spec.n_cc, cc.spec.k_cc);
    doc["phi"] = h.phi;
    doc["phi_prime"] = h.phi_prime;
    if (h.phi_exact) {
        doc["phi_exact"] = h.phi_exact->str();
    }
    if (h.phi_prime_exact) {
        doc["phi_prime_exact"] = h.phi_prime_exact->str();
    }
    return doc;
}

}  // namespace qdc::cli
