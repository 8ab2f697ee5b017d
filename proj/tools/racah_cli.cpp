// Command-line front end: single evaluations, full polynomial tables, the
// relation-verification suites, and the orthogonality-weight solver.
//
// Exit status: 0 all checks pass, 1 suite failure, 2 usage error, 3 invalid
// parameter pack.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "racah/algebra.hpp"
#include "racah/bivariate.hpp"
#include "racah/gridop.hpp"
#include "racah/rational.hpp"
#include "racah/univariate.hpp"
#include "racah/verify.hpp"

using ojson = nlohmann::ordered_json;
using namespace racah;

namespace {

std::vector<Q> parse_list(const std::string& s) {
    std::vector<Q> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ValidityError("empty list");
    return out;
}

std::vector<long> parse_ints(const std::string& s) {
    std::vector<long> out;
    for (const Q& q : parse_list(s)) {
        if (q.get_den() != 1) throw ValidityError("expected integer list: " + s);
        out.push_back(q.get_num().get_si());
    }
    return out;
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(outPath, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + outPath);
        f << text;
    }
}

ojson nu_json(const SU11Weights& w) {
    ojson a = ojson::array();
    for (const Q& v : w.nu) a.push_back(to_string(v));
    return a;
}

ojson report_json(const RelationReport& r) {
    ojson j;
    j["relationId"] = r.relationId;
    j["printedFormHolds"] = verdict_name(r.printedFormHolds);
    j["correctedFormHolds"] = verdict_name(r.correctedFormHolds);
    j["correctionNote"] = r.correctionNote;
    j["residualWitness"] = r.residualWitness;
    return j;
}

ojson envelope(const std::string& command, const SU11Weights& w, long N) {
    ojson j;
    j["version"] = "1";
    j["command"] = command;
    j["params"]["nu"] = nu_json(w);
    j["params"]["N"] = N;
    j["results"] = ojson::array();
    return j;
}

struct VerifyRun {
    SU11Weights w;
    long N = 0;
    std::vector<RelationReport> reports;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int emit_verify(const std::string& command, const std::vector<VerifyRun>& runs,
                const std::string& format, const std::string& outPath) {
    bool allPass = true;
    for (const auto& run : runs)
        for (const auto& r : run.reports)
            if (!r.ok()) allPass = false;

    std::ostringstream os;
    if (format == "json") {
        ojson j;
        j["version"] = "1";
        j["command"] = command;
        j["params"]["nu"] =
            runs.size() == 1 ? nu_json(runs[0].w) : ojson::array();
        j["params"]["N"] = runs.size() == 1 ? ojson(runs[0].N) : ojson(nullptr);
        j["results"] = ojson::array();
        for (const auto& run : runs)
            for (const auto& r : run.reports) {
                ojson e = report_json(r);
                e["nu"] = nu_json(run.w);
                e["N"] = run.N;
                j["results"].push_back(e);
            }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "relationId,printedFormHolds,correctedFormHolds,correctionNote,"
              "residualWitness,nu,N\n";
        for (const auto& run : runs) {
            std::string nu;
            for (size_t i = 0; i < run.w.nu.size(); ++i)
                nu += (i ? ";" : "") + to_string(run.w.nu[i]);
            for (const auto& r : run.reports)
                os << csv_escape(r.relationId) << ','
                   << verdict_name(r.printedFormHolds) << ','
                   << verdict_name(r.correctedFormHolds) << ','
                   << csv_escape(r.correctionNote) << ','
                   << csv_escape(r.residualWitness) << ',' << nu << ','
                   << run.N << "\n";
        }
    } else {
        for (const auto& run : runs) {
            os << "pack nu=";
            for (size_t i = 0; i < run.w.nu.size(); ++i)
                os << (i ? "," : "") << to_string(run.w.nu[i]);
            os << " N=" << run.N << "\n";
            for (const auto& r : run.reports) {
                os << "  [" << (r.ok() ? "pass" : "FAIL") << "] "
                   << r.relationId
                   << " printed=" << verdict_name(r.printedFormHolds)
                   << " corrected=" << verdict_name(r.correctedFormHolds);
                if (!r.correctionNote.empty()) os << "  (" << r.correctionNote << ")";
                if (!r.ok() && !r.residualWitness.empty())
                    os << "  witness: " << r.residualWitness;
                os << "\n";
            }
        }
        os << (allPass ? "all relations hold\n" : "SUITE FAILURE\n");
    }
    emit(os.str(), outPath);
    return allPass ? 0 : 1;
}

SU11Weights make_weights(const std::vector<Q>& nu) {
    SU11Weights w;
    w.nu = nu;
    w.validate();
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Racah polynomial identities"};
    app.require_subcommand(1);

    std::string nuArg, nArg, xArg, format = "text", outPath;
    long N = -1;

    auto addCommon = [&](CLI::App* sub, bool needN) {
        sub->add_option("--nu", nuArg, "comma-separated rational weights");
        auto* n = sub->add_option("--N", N, "truncation level");
        if (needN) n->required();
        sub->add_option("--format", format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", outPath, "output file (default stdout)");
    };

    CLI::App* eval1 = app.add_subcommand("eval1", "evaluate r_n(x)");
    CLI::App* eval2 = app.add_subcommand("eval2", "evaluate R2(n1,n2; x1,x2)");
    CLI::App* table1 = app.add_subcommand("table1", "full univariate table");
    CLI::App* table2 = app.add_subcommand("table2", "full bivariate table");
    for (CLI::App* sub : {eval1, eval2, table1, table2}) addCommon(sub, true);
    for (CLI::App* sub : {eval1, eval2}) {
        sub->add_option("--n", nArg, "degree index (or pair)")->required();
        sub->add_option("--x", xArg, "evaluation point (or pair)")->required();
    }

    std::vector<std::string> verifyNames = {
        "verify-qr3",      "verify-qr9",           "verify-casimir",
        "verify-duality",  "verify-orthogonality", "weights"};
    std::vector<CLI::App*> verifySubs;
    for (const auto& name : verifyNames) {
        CLI::App* sub = app.add_subcommand(name, "verification suite");
        addCommon(sub, false);
        verifySubs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        return app.exit(e);  // --help
    }

    try {
        if (*eval1 || *eval2) {
            bool uni = static_cast<bool>(*eval1);
            SU11Weights w = make_weights(parse_list(nuArg));
            std::vector<long> n = parse_ints(nArg);
            std::vector<Q> x = parse_list(xArg);
            size_t want = uni ? 1 : 2;
            if (w.nu.size() != (uni ? 3u : 4u) || n.size() != want ||
                x.size() != want)
                throw ValidityError("wrong arity for this command");
            Q value;
            if (uni) {
                value = racah1_eval(n[0], x[0], params1_from_nu(w, N));
            } else {
                value = racah2_eval(n[0], n[1], x[0], x[1], params2_from_nu(w, N));
            }
            std::ostringstream os;
            if (format == "json") {
                ojson j = envelope(uni ? "eval1" : "eval2", w, N);
                ojson e;
                e["n"] = nArg;
                e["x"] = xArg;
                e["value"] = to_string(value);
                j["results"].push_back(e);
                os << j.dump(2) << "\n";
            } else if (format == "csv") {
                os << "n,x,value\n" << csv_escape(nArg) << ',' << csv_escape(xArg)
                   << ',' << to_string(value) << "\n";
            } else {
                os << to_string(value) << "\n";
            }
            emit(os.str(), outPath);
            return 0;
        }

        if (*table1) {
            SU11Weights w = make_weights(parse_list(nuArg));
            if (w.nu.size() != 3) throw ValidityError("table1 needs 3 weights");
            RacahParams1 p = params1_from_nu(w, N);
            std::ostringstream os;
            if (format == "json") {
                ojson j = envelope("table1", w, N);
                for (long n = 0; n <= N; ++n) {
                    ojson row = ojson::array();
                    for (long x = 0; x <= N; ++x)
                        row.push_back(to_string(racah1_eval(n, Q(x), p)));
                    ojson e;
                    e["n"] = n;
                    e["values"] = row;
                    j["results"].push_back(e);
                }
                os << j.dump(2) << "\n";
            } else {
                os << "n\\x";
                for (long x = 0; x <= N; ++x) os << ',' << x;
                os << "\n";
                for (long n = 0; n <= N; ++n) {
                    os << n;
                    for (long x = 0; x <= N; ++x)
                        os << ',' << to_string(racah1_eval(n, Q(x), p));
                    os << "\n";
                }
            }
            emit(os.str(), outPath);
            return 0;
        }

        if (*table2) {
            SU11Weights w = make_weights(parse_list(nuArg));
            if (w.nu.size() != 4) throw ValidityError("table2 needs 4 weights");
            RacahParams2 p = params2_from_nu(w, N);
            Grid deg = Grid::degrees(static_cast<int>(N));
            Grid pts = Grid::triangle(static_cast<int>(N));
            std::ostringstream os;
            if (format == "json") {
                ojson j = envelope("table2", w, N);
                for (int d = 0; d < deg.size(); ++d) {
                    auto dd = deg.pts[static_cast<size_t>(d)];
                    ojson row = ojson::array();
                    for (int i = 0; i < pts.size(); ++i) {
                        auto pt = pts.pts[static_cast<size_t>(i)];
                        row.push_back(to_string(
                            racah2_eval(dd[0], dd[1], Q(pt[0]), Q(pt[1]), p)));
                    }
                    ojson e;
                    e["n"] = std::to_string(dd[0]) + ";" + std::to_string(dd[1]);
                    e["values"] = row;
                    j["results"].push_back(e);
                }
                os << j.dump(2) << "\n";
            } else {
                os << "n\\x";
                for (int i = 0; i < pts.size(); ++i) {
                    auto pt = pts.pts[static_cast<size_t>(i)];
                    os << ',' << pt[0] << ';' << pt[1];
                }
                os << "\n";
                for (int d = 0; d < deg.size(); ++d) {
                    auto dd = deg.pts[static_cast<size_t>(d)];
                    os << dd[0] << ';' << dd[1];
                    for (int i = 0; i < pts.size(); ++i) {
                        auto pt = pts.pts[static_cast<size_t>(i)];
                        os << ','
                           << to_string(racah2_eval(dd[0], dd[1], Q(pt[0]),
                                                    Q(pt[1]), p));
                    }
                    os << "\n";
                }
            }
            emit(os.str(), outPath);
            return 0;
        }

        // verification suites: explicit pack or the default battery
        std::string command;
        for (size_t i = 0; i < verifySubs.size(); ++i)
            if (*verifySubs[i]) command = verifyNames[i];

        bool univariateCmd =
            command == "verify-qr3" || command == "verify-orthogonality";
        std::vector<BatteryEntry> battery;
        if (!nuArg.empty()) {
            if (N < 1) throw ValidityError("verification suites need --N >= 1");
            battery.push_back({make_weights(parse_list(nuArg)), N});
        } else {
            for (auto& e : default_battery()) {
                if (univariateCmd) e.weights = univariate_weights(e.weights);
                battery.push_back(e);
            }
        }

        std::vector<VerifyRun> runs;
        for (const auto& e : battery) {
            VerifyRun run{e.weights, e.N, {}};
            if (command == "verify-qr3") {
                run.reports = verify_univariate_qr3(e.weights, e.N);
                auto eig = verify_eigen1(e.weights, e.N);
                run.reports.insert(run.reports.end(), eig.begin(), eig.end());
            } else if (command == "verify-orthogonality") {
                run.reports = verify_orthogonality1(e.weights, e.N);
            } else if (command == "verify-qr9") {
                OperatorSet s = build_operator_set(e.weights, e.N);
                run.reports = verify_qr9_catalog(s);
            } else if (command == "verify-casimir") {
                OperatorSet s = build_operator_set(e.weights, e.N);
                run.reports = verify_casimir_catalog(s);
            } else if (command == "verify-duality") {
                run.reports = verify_duality(e.weights, e.N);
                auto fam = verify_family_my(e.weights, e.N);
                run.reports.insert(run.reports.end(), fam.begin(), fam.end());
            } else if (command == "weights") {
                run.reports = verify_weights2(e.weights, e.N);
            }
            runs.push_back(std::move(run));
        }
        return emit_verify(command, runs, format, outPath);
    } catch (const ValidityError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 3;
    } catch (const PoleError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
