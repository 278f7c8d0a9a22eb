// Copyright 2026 The qumem Authors
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

#include "qumem/ledger_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qumem/error.hpp"

namespace qumem {
namespace {

using nlohmann::json;

json pair(cplx v) { return json::array({v.real(), v.imag()}); }

cplx unpair(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::parse, "expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T field(const json &j, const char *key) {
    if (!j.contains(key)) throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::parse, std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

nlohmann::json ledger_to_json(const FrameLedger &ledger) {
    json deltas = json::array();
    for (const cplx &d : ledger.deltas()) deltas.push_back(pair(d));
    json tags = json::array();
    for (const EntropyValue &t : ledger.tags()) tags.push_back(t.bits());
    json j{
        {"version", kLedgerVersion},
        {"kappa", ledger.gain().kappa()},
        {"cutoff", ledger.cutoff()},
        {"noise_nbar", ledger.noise().nbar()},
        {"deltas", std::move(deltas)},
        {"cumulative", pair(ledger.cumulative())},
        {"phase", ledger.phase()},
        {"tags_bits", std::move(tags)},
        {"channel", std::string(to_string(ledger.channel()))},
    };
    if (ledger.patch()) j["patch"] = json::array({ledger.patch()->row, ledger.patch()->col});
    return j;
}

FrameLedger ledger_from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw Error(ErrorKind::parse, "ledger must be a JSON object");
    const int version = field<int>(j, "version");
    if (version != kLedgerVersion)
        throw Error(ErrorKind::parse, "unsupported ledger version " + std::to_string(version));

    const json &jd = j.at("deltas");
    if (!jd.is_array()) throw Error(ErrorKind::parse, "'deltas' must be an array");
    std::vector<cplx> deltas;
    for (const json &d : jd) deltas.push_back(unpair(d));

    std::vector<EntropyValue> tags;
    for (double t : field<std::vector<double>>(j, "tags_bits")) tags.emplace_back(t);

    std::optional<PatchIndex> patch;
    if (j.contains("patch")) {
        const auto rc = field<std::vector<std::size_t>>(j, "patch");
        if (rc.size() != 2) throw Error(ErrorKind::parse, "'patch' must be [row, col]");
        patch = PatchIndex{rc[0], rc[1]};
    }

    FrameLedger ledger(EncodingGain(field<double>(j, "kappa")), std::move(deltas), std::move(tags),
                       field<std::size_t>(j, "cutoff"), NoiseParameter(field<double>(j, "noise_nbar")),
                       parse_channel(field<std::string>(j, "channel")), patch);

    const cplx cumulative = unpair(j.at("cumulative"));
    if (std::abs(cumulative - ledger.cumulative()) > 1e-12)
        throw Error(ErrorKind::parse, "stored cumulative amplitude disagrees with the deltas");
    if (std::abs(field<double>(j, "phase") - ledger.phase()) > 1e-12)
        throw Error(ErrorKind::parse, "stored phase disagrees with the deltas");
    return ledger;
}

std::string dump_ledgers(std::span<const FrameLedger> ledgers) {
    json out;
    if (ledgers.size() == 1) {
        out = ledger_to_json(ledgers[0]);
    } else {
        out = json::array();
        for (const FrameLedger &l : ledgers) out.push_back(ledger_to_json(l));
    }
    return out.dump(2) + "\n";
}

std::vector<FrameLedger> parse_ledgers(const std::string &text, const std::string &name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::parse, name + ": " + e.what());
    }
    std::vector<FrameLedger> out;
    try {
        if (j.is_array()) {
            for (const json &item : j) out.push_back(ledger_from_json(item));
        } else {
            out.push_back(ledger_from_json(j));
        }
    } catch (const Error &e) {
        throw Error(e.kind(), name + ": " + e.what());
    } catch (const json::exception &e) {
        throw Error(ErrorKind::parse, name + ": " + e.what());
    }
    if (out.empty()) throw Error(ErrorKind::parse, name + ": no ledgers in file");
    return out;
}

void write_ledger_file(const std::filesystem::path &path, std::span<const FrameLedger> ledgers) {
    write_text_file(path, dump_ledgers(ledgers));
}

std::vector<FrameLedger> read_ledger_file(const std::filesystem::path &path) {
    return parse_ledgers(read_text_file(path), path.string());
}

nlohmann::json state_to_json(const FockKet &state) {
    json amps = json::array();
    for (const cplx &a : state.amplitudes()) amps.push_back(pair(a));
    return json{{"cutoff", state.cutoff()}, {"amplitudes", std::move(amps)}};
}

FockKet state_from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw Error(ErrorKind::parse, "state dump must be a JSON object");
    const auto cutoff = field<std::size_t>(j, "cutoff");
    const json &ja = j.at("amplitudes");
    if (!ja.is_array() || ja.size() != cutoff)
        throw Error(ErrorKind::parse, "'amplitudes' must hold exactly 'cutoff' pairs");
    std::vector<cplx> amps;
    for (const json &a : ja) amps.push_back(unpair(a));
    return FockKet(std::move(amps));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, path.string() + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw Error(ErrorKind::io, path.string() + ": write failed");
}

}  // namespace qumem
