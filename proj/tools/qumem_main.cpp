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


#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "qumem/error.hpp"

namespace {

using namespace qumem::cli;

void add_ledger(CLI::App *cmd, LedgerRef &ref) {
    cmd->add_option("ledger", ref.path, "Ledger JSON file")->required();
    cmd->add_option("--entry", ref.entry, "Ledger index within a multi-ledger file")->capture_default_str();
}

int fail(const std::string &category, const std::string &message) {
    std::cerr << "ERROR:" << category << ": " << message << "\n";
    return category == "usage" ? 2 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qumem: store image sequences as displaced coherent states of one qumode"};
    app.require_subcommand(1);
    std::function<void()> action;

    EncodeArgs enc;
    auto *c = app.add_subcommand("encode", "Encode PGM/PPM frames into a ledger");
    c->add_option("images", enc.images, "Frames in order")->required();
    c->add_option("-o,--output", enc.output, "Ledger JSON to write")->required();
    c->add_option("--kappa", enc.kappa, "Encoding gain")->capture_default_str();
    c->add_option("--kappa-r", enc.kappa_r, "Red gain (defaults to --kappa)");
    c->add_option("--kappa-g", enc.kappa_g, "Green gain (defaults to --kappa)");
    c->add_option("--kappa-b", enc.kappa_b, "Blue gain (defaults to --kappa)");
    c->add_option("--nbar", enc.nbar, "Tag noise mean photon number")->capture_default_str();
    c->add_option("--cutoff", enc.cutoff, "Fixed Fock cutoff (default: sized to the largest amplitude)");
    c->add_option("--patch", enc.patch, "Split frames into a g x g patch grid");
    c->callback([&] { action = [&] { run_encode(enc, std::cout); }; });

    RewindArgs rew;
    c = app.add_subcommand("rewind", "Recover the state of frame k and dump it");
    add_ledger(c, rew.ledger);
    c->add_option("-k,--frame", rew.k, "Frame number (0 = vacuum)")->required();
    c->add_option("-o,--output", rew.output, "State JSON to write")->required();
    c->add_option("--samples", rew.samples, "Draw photon-number samples from the state");
    c->add_option("--seed", rew.seed, "Sampling seed")->capture_default_str();
    c->callback([&] { action = [&] { run_rewind(rew, std::cout); }; });

    DecodeArgs dec;
    c = app.add_subcommand("decode", "Print decoded frame intensities");
    add_ledger(c, dec.ledger);
    c->add_option("-k,--frame", dec.k, "Single frame (default: all)");
    c->callback([&] { action = [&] { run_decode(dec, std::cout); }; });

    WignerArgs wig;
    c = app.add_subcommand("wigner", "Export the Wigner function of frame k as CSV and PGM");
    add_ledger(c, wig.ledger);
    c->add_option("-k,--frame", wig.k, "Frame number")->required();
    c->add_option("--grid", wig.grid, "Axis as min:max:n, shared by x and p")->capture_default_str();
    c->add_option("-o,--output", wig.prefix, "Output prefix; writes <prefix>.csv and <prefix>.pgm")->required();
    c->callback([&] { action = [&] { run_wigner(wig, std::cout); }; });

    FidelityArgs fid;
    c = app.add_subcommand("fidelity", "Fidelity between the states of frames k and j");
    add_ledger(c, fid.ledger);
    c->add_option("-k", fid.k, "First frame")->required();
    c->add_option("-j", fid.j, "Second frame")->required();
    c->callback([&] { action = [&] { run_fidelity(fid, std::cout); }; });

    EntropyArgs ent;
    c = app.add_subcommand("entropy", "Print the entropy tag table");
    c->add_option("ledger", ent.path, "Ledger JSON file")->required();
    c->add_flag("--nats", ent.nats, "Report nats instead of bits");
    c->callback([&] { action = [&] { run_entropy(ent, std::cout); }; });

    IndexBuildArgs ib;
    c = app.add_subcommand("index-build", "Bucket every frame tag of the given ledgers");
    c->add_option("ledgers", ib.ledgers, "Ledger JSON files")->required();
    c->add_option("-w,--width", ib.width, "Bucket width in bits")->capture_default_str();
    c->add_option("-o,--output", ib.output, "Index JSON to write")->required();
    c->callback([&] { action = [&] { run_index_build(ib, std::cout); }; });

    IndexQueryArgs iq;
    c = app.add_subcommand("index-query", "List candidate frames for an entropy tag");
    c->add_option("index", iq.index, "Index JSON file")->required();
    c->add_option("--tag", iq.tag, "Tag in bits")->required();
    c->add_option("--tol", iq.tolerance, "Half-width of the search window in bits")->capture_default_str();
    c->callback([&] { action = [&] { run_index_query(iq, std::cout); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return fail("usage", e.what());
    }

    try {
        action();
        std::cout.flush();
        if (!std::cout) return fail("io", "failed writing to standard output");
    } catch (const qumem::Error &e) {
        return fail(std::string(qumem::to_string(e.kind())), e.what());
    } catch (const std::exception &e) {
        return fail("internal", e.what());
    }
    return 0;
}
