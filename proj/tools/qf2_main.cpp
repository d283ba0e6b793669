/*
   Copyright 2026 The qf2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qf2.h"

namespace {

using Json = nlohmann::ordered_json;

struct Args {
    int field_k = 0;  // 0 = take from the document (default 1)
    std::string input;
    int degree_bound = -1;
    long long seed = -1;
    bool json_output = false;
    bool timing = false;
    bool verbose = false;
    bool negative_exit_zero = false;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "qf2: cannot open input file: " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json build_job(const std::string& command, const Args& a) {
    Json doc = Json::object();
    if (command != "selftest") {
        std::string text = read_input(a.input);
        Json parsed = Json::parse(text, nullptr, false);
        if (parsed.is_discarded()) {
            std::cerr << "qf2: input is not valid JSON\n";
            std::exit(2);
        }
        doc = parsed;
        if (doc.contains("command") && doc["command"] != command) {
            std::cerr << "qf2: document command \"" << doc["command"].get<std::string>()
                      << "\" conflicts with subcommand \"" << command << "\"\n";
            std::exit(2);
        }
    }
    doc["command"] = command;
    if (a.field_k > 0) doc["field"] = Json{{"k", a.field_k}};
    if (!doc.contains("field")) doc["field"] = Json{{"k", 1}};
    Json& opt = doc["options"];
    if (!opt.is_object()) opt = Json::object();
    if (a.degree_bound >= 0) opt["degree_bound"] = a.degree_bound;
    if (a.seed >= 0) opt["seed"] = a.seed;
    if (a.timing) opt["timing"] = true;
    if (a.verbose) opt["verbose"] = true;
    if (a.negative_exit_zero) opt["negative_exit_zero"] = true;
    return doc;
}

void print_certificate(const Json& cert) {
    for (const Json& c : cert) {
        std::cout << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] " << c["check"].get<std::string>();
        if (!c["place"].is_null()) std::cout << " @ " << c["place"].get<std::string>();
        if (c.contains("detail") && c["detail"].is_string() && !c["detail"].get<std::string>().empty())
            std::cout << " (" << c["detail"].get<std::string>() << ")";
        std::cout << "\n";
    }
}

void print_text_report(const Json& report) {
    const std::string cmd = report["command"].get<std::string>();
    std::cout << "qf2 " << cmd << " over F_{2^" << report["field"]["k"].get<int>() << "}(t)\n";
    const Json& r = report["result"];
    if (cmd == "isometric" || cmd == "similar" || cmd == "isotropic" || cmd == "factor") {
        std::cout << "verdict: " << (r["verdict"].get<bool>() ? "true" : "false") << "\n";
        if (!r["factor"].is_null())
            std::cout << "factor:  " << r["factor"].get<std::string>() << " ("
                      << r["factor_status"].get<std::string>() << ")\n";
        if (!r["witness"].is_null()) std::cout << "witness: " << r["witness"].get<std::string>() << "\n";
        print_certificate(r["certificate"]);
    } else if (cmd == "invariants") {
        std::cout << "rank: " << r["rank"].get<int>() << "\n";
        std::cout << "disc (" << r["disc_kind"].get<std::string>() << "): " << r["disc"].get<std::string>()
                  << "\n";
        std::cout << "anisotropic dimension: " << r["anisotropic_dimension"].get<int>() << "\n";
        std::cout << "local Clifford classes:\n";
        for (auto& [place, cls] : r["clifford_local_classes"].items())
            std::cout << "  " << place << ": " << cls.get<int>() << "\n";
    } else if (cmd == "localize") {
        for (const Json& p : r)
            std::cout << "  " << p["place"].get<std::string>() << ": m=" << p["anisotropic_rank"].get<int>()
                      << " i0=" << p["witt_index"].get<int>()
                      << " disc_trivial=" << (p["disc_trivial"].get<bool>() ? "yes" : "no")
                      << " clifford=" << p["clifford_class"].get<int>() << "\n";
    } else if (cmd == "reciprocity") {
        for (const Json& s : r["symbols"])
            std::cout << "  (" << s["symbol"][0].get<std::string>() << ", " << s["symbol"][1].get<std::string>()
                      << "]: " << (s["reciprocity"].get<bool>() ? "ok" : "FAIL") << "\n";
        std::cout << "all: " << (r["all"].get<bool>() ? "ok" : "FAIL") << "\n";
    } else if (cmd == "selftest") {
        for (const Json& b : r["batteries"])
            std::cout << "  " << b["name"].get<std::string>() << ": " << b["trials"].get<int>()
                      << " trials, " << b["failures"].get<int>() << " failures\n";
        std::cout << "all: " << (r["all"].get<bool>() ? "ok" : "FAIL") << "\n";
    }
    if (report.contains("local_profiles")) {
        for (const Json& entry : report["local_profiles"]) {
            std::cout << "local profiles of form " << entry["form"].get<int>() << ":\n";
            for (const Json& p : entry["profiles"])
                std::cout << "  " << p["place"].get<std::string>() << ": m=" << p["anisotropic_rank"].get<int>()
                          << " i0=" << p["witt_index"].get<int>()
                          << " disc_trivial=" << (p["disc_trivial"].get<bool>() ? "yes" : "no")
                          << " clifford=" << p["clifford_class"].get<int>() << "\n";
        }
    }
    if (report.contains("timing_ms")) std::cout << "time: " << report["timing_ms"].get<long long>() << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic-form invariants and local-global decisions over F_{2^k}(t)"};
    app.require_subcommand(1);

    Args args;
    const char* commands[] = {"invariants", "localize", "isometric", "similar",
                              "isotropic",  "factor",   "reciprocity", "selftest"};
    const char* descriptions[] = {
        "rank, discriminant and Clifford data of one form",
        "per-place local profiles (m, i0, disc, Clifford class)",
        "decide isometry of two forms",
        "decide similarity of two forms and produce a factor",
        "decide isotropy of one form",
        "decide similarity and insist on a similarity factor",
        "check symbol reciprocity",
        "run the built-in battery",
    };
    for (size_t i = 0; i < sizeof(commands) / sizeof(commands[0]); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--field", args.field_k, "constant field degree k (F_{2^k})")->check(CLI::Range(1, 8));
        sub->add_option("--input", args.input, "job document file ('-' or empty = stdin)");
        sub->add_option("--degree-bound", args.degree_bound, "similarity factor search bound");
        sub->add_option("--seed", args.seed, "seed for randomized pipelines");
        sub->add_flag("--json", args.json_output, "emit the JSON report");
        sub->add_flag("--timing", args.timing, "include timing in the report");
        sub->add_flag("--verbose", args.verbose, "append per-place local profiles to decision reports");
        sub->add_flag("--negative-exit-zero", args.negative_exit_zero,
                      "exit 0 instead of 1 on negative verdicts");
    }
    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    Json job = build_job(command, args);
    char* report_text = nullptr;
    int exit_code = 2;
    qf2_status st = qf2_run_job(job.dump().c_str(), &report_text, &exit_code);
    if (st != QF2_OK) {
        std::cerr << "qf2: error (" << static_cast<int>(st) << "): " << qf2_last_error() << "\n";
        return 2;
    }
    Json report = Json::parse(report_text);
    qf2_string_free(report_text);
    if (args.json_output)
        std::cout << report.dump(2) << "\n";
    else
        print_text_report(report);
    return exit_code;
}
