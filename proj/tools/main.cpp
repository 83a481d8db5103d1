#include "fusioncheck/batch.hpp"
#include "fusioncheck/criteria.hpp"
#include "fusioncheck/fixtures.hpp"
#include "fusioncheck/io.hpp"
#include "fusioncheck/obstructions.hpp"
#include "fusioncheck/schur.hpp"
#include "fusioncheck/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fc = fusioncheck;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int verdict_exit(const fc::PsdVerdict& v) {
    switch (v.kind) {
        case fc::PsdVerdict::Kind::Holds: return kExitHolds;
        case fc::PsdVerdict::Kind::Violated: return kExitViolated;
        case fc::PsdVerdict::Kind::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

fc::EvalConfig env_config() {
    fc::EvalConfig cfg;
    if (const char* p = std::getenv("FUSIONCHECK_PRECISION")) {
        double w = std::atof(p);
        if (w > 0) cfg.eig.target_width = w;
    }
    return cfg;
}

std::vector<int> parse_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void print_verdict(const std::string& what, const fc::PsdVerdict& v) {
    std::cout << what << ": " << fc::to_string(v.kind) << "\n";
    std::cout << "  lambda_min in [" << fc::io::fmt12(v.min_eig_lower) << ", "
              << fc::io::fmt12(v.min_eig_upper) << "]  (tol " << fc::io::fmt12(v.tol) << ")\n";
    if (v.violated()) {
        std::cout << "  certified value " << fc::io::fmt12(v.rayleigh)
                  << (v.exact_certificate ? "  [exact rational certificate]" : "") << "\n";
    }
    if (!v.detail.empty()) std::cout << "  " << v.detail << "\n";
}

void write_report(const std::string& out_path, const fc::io::Json& body) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    out << body.dump(2) << "\n";
}

fc::io::Json report_skeleton(const fc::EvalConfig& cfg) {
    fc::io::Json j;
    j["schema_version"] = fc::kReportSchemaVersion;
    j["tool_version"] = fc::kVersion;
    std::ostringstream hash;
    hash << std::hex << cfg.hash();
    j["config_hash"] = hash.str();
    return j;
}

int check_command(const fc::FusionRing& ring, const fc::CriterionSpec& spec,
                  const fc::PsdVerdict& verdict, const fc::EvalConfig& cfg,
                  const std::string& out_path) {
    print_verdict(ring.name() + " " + spec.render(), verdict);
    fc::io::Json j = report_skeleton(cfg);
    j["input"] = ring.name();
    j["criterion"] = spec.render();
    j["result"] = fc::io::verdict_to_json(verdict);
    write_report(out_path, j);
    return verdict_exit(verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion ring categorification obstruction checker"};
    app.set_version_flag("--version", fc::kVersion);
    app.require_subcommand(1);

    std::string ring_path, out_path, set_text, twists_text;
    long long n_value = 3;
    int max_set = 2, max_n = 3, k_param = 3, ell = 1, nmax = 4;
    double d2 = 2.0;
    std::string mults_text, dims_text, batch_dir;

    auto* validate_cmd = app.add_subcommand("validate", "validate a ring file");
    validate_cmd->add_option("ring", ring_path, "ring file")->required();
    validate_cmd->add_option("--out", out_path, "write a JSON report");

    auto* dims_cmd = app.add_subcommand("dims", "Perron-Frobenius dimensions");
    dims_cmd->add_option("ring", ring_path, "ring file")->required();
    dims_cmd->add_option("--out", out_path, "write a JSON report");

    auto* check = app.add_subcommand("check", "positivity criteria");
    check->require_subcommand(1);
    auto* c_primary = check->add_subcommand("primary", "primary n-criterion");
    c_primary->add_option("--n", n_value, "tensor power")->required();
    c_primary->add_option("ring", ring_path, "ring file")->required();
    c_primary->add_option("--out", out_path, "write a JSON report");
    auto* c_localized = check->add_subcommand("localized", "S-localized n-criterion");
    c_localized->add_option("--set", set_text, "1-based labels, comma separated")->required();
    c_localized->add_option("--n", n_value, "tensor power")->required();
    c_localized->add_option("ring", ring_path, "ring file")->required();
    c_localized->add_option("--out", out_path, "write a JSON report");
    auto* c_reduced = check->add_subcommand("reduced", "reduced (twisted) n-criterion");
    c_reduced->add_option("--set", set_text, "1-based labels, comma separated")->required();
    c_reduced->add_option("--n", n_value, "Hadamard power")->required();
    c_reduced->add_option("--twists", twists_text, "pattern like I,I,swap");
    c_reduced->add_option("ring", ring_path, "ring file")->required();
    c_reduced->add_option("--out", out_path, "write a JSON report");
    auto* c_schur = check->add_subcommand("schur", "commutative Schur product criterion");
    c_schur->add_option("ring", ring_path, "ring file")->required();
    c_schur->add_option("--out", out_path, "write a JSON report");
    auto* c_limit = check->add_subcommand("limit", "large-n limit criterion");
    c_limit->add_option("--set", set_text, "1-based labels, comma separated")->required();
    c_limit->add_option("ring", ring_path, "ring file")->required();
    c_limit->add_option("--out", out_path, "write a JSON report");

    auto* search_cmd = app.add_subcommand("search", "first-witness violation search");
    search_cmd->add_option("--max-set", max_set, "largest subset size");
    search_cmd->add_option("--max-n", max_n, "largest power");
    search_cmd->add_option("ring", ring_path, "ring file")->required();
    search_cmd->add_option("--out", out_path, "write a JSON report");

    auto* family = app.add_subcommand("family", "closed-form obstruction families");
    family->require_subcommand(1);
    auto* f_r4k = family->add_subcommand("r4k", "the rank-4 family at parameter k");
    f_r4k->add_option("--k", k_param, "family parameter")->required();
    f_r4k->add_option("--out", out_path, "write a JSON report");
    auto* f_graph = family->add_subcommand("graph", "parametric principal-graph screening");
    f_graph->add_option("--l", ell, "arc multiplicity")->required();
    f_graph->add_option("--mults", mults_text, "branch multiplicities, comma separated")->required();
    f_graph->add_option("--d2", d2, "quantum dimension of x2")->required();
    f_graph->add_option("--nmax", nmax, "largest power scanned");
    f_graph->add_option("--out", out_path, "write a JSON report");

    auto* perturb = app.add_subcommand("perturb", "dimension-perturbation bounds");
    auto* p_k7 = perturb->add_subcommand("k7", "k7 local-datum thresholds");
    p_k7->add_option("--dims", dims_text, "d2,d3,d4,d5,d7")->required();
    p_k7->add_option("--out", out_path, "write a JSON report");

    auto* batch_cmd = app.add_subcommand("batch", "screen a directory of ring files");
    batch_cmd->add_option("dir", batch_dir, "directory with .ring files")->required();
    batch_cmd->add_option("--out", out_path, "write the JSON report")->required();

    auto* graph_cmd = app.add_subcommand("graph", "bipartite graph utilities");
    graph_cmd->require_subcommand(1);
    std::string graph_path;
    auto* g_dims = graph_cmd->add_subcommand("dims", "dimension vector of a graph");
    g_dims->add_option("graph", graph_path, "graph file")->required();
    auto* g_extract = graph_cmd->add_subcommand("extract", "detect the arc-family local form");
    g_extract->add_option("graph", graph_path, "graph file")->required();
    g_extract->add_option("--nmax", nmax, "largest power scanned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    fc::EvalConfig cfg = env_config();
    try {
        if (*validate_cmd) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            std::cout << ring.name() << ": valid fusion ring, rank " << ring.rank()
                      << (ring.commutative() ? ", commutative" : ", noncommutative") << "\n";
            fc::io::Json j = report_skeleton(cfg);
            j["input"] = ring.name();
            j["valid"] = true;
            j["rank"] = ring.rank();
            j["commutative"] = ring.commutative();
            write_report(out_path, j);
            return kExitHolds;
        }
        if (*dims_cmd) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            std::cout << ring.name() << " dims:";
            for (double d : ring.dims().d) std::cout << " " << fc::io::fmt12(d);
            std::cout << (ring.dims().integral ? "  (integral)" : "") << "\n";
            fc::io::Json j = report_skeleton(cfg);
            j["input"] = ring.name();
            j["dims"] = ring.dims().d;
            j["integral"] = ring.dims().integral;
            write_report(out_path, j);
            return kExitHolds;
        }
        if (*c_primary) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            fc::CriterionSpec spec{fc::CriterionSpec::Kind::Primary, n_value, {}, ""};
            return check_command(ring, spec, fc::check_primary(ring, n_value, cfg), cfg, out_path);
        }
        if (*c_localized) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            std::vector<int> S = parse_set(set_text);
            fc::CriterionSpec spec{fc::CriterionSpec::Kind::Localized, n_value, S, ""};
            fc::SymMatrixR mat = fc::localized_matrix(fc::local_data(ring, S), n_value, cfg);
            return check_command(ring, spec, fc::check_matrix(mat, cfg), cfg, out_path);
        }
        if (*c_reduced) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            std::vector<int> S = parse_set(set_text);
            fc::LocalData L = fc::local_data(ring, S);
            fc::SymMatrixR mat = twists_text.empty()
                                     ? fc::reduced_matrix(L, n_value, cfg)
                                     : fc::reduced_twisted_matrix(
                                           L, n_value, fc::TwistPattern::parse(twists_text, L.s), cfg);
            fc::CriterionSpec spec{twists_text.empty() ? fc::CriterionSpec::Kind::Reduced
                                                       : fc::CriterionSpec::Kind::ReducedTwisted,
                                   n_value, S, twists_text};
            return check_command(ring, spec, fc::check_matrix(mat, cfg), cfg, out_path);
        }
        if (*c_schur) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            fc::SchurScanResult res = fc::check_schur_full(ring, cfg);
            fc::CriterionSpec spec{fc::CriterionSpec::Kind::Schur, 3, {}, ""};
            print_verdict(ring.name() + " schur", res.verdict);
            if (res.verdict.violated()) {
                std::cout << "  minimizing tuple (";
                for (size_t i = 0; i < res.min_tuple.size(); ++i)
                    std::cout << (i ? "," : "") << res.min_tuple[i];
                std::cout << ")  nu = " << fc::io::fmt12(res.min_nu) << "\n";
            }
            fc::io::Json j = report_skeleton(cfg);
            j["input"] = ring.name();
            j["criterion"] = spec.render();
            j["result"] = fc::io::verdict_to_json(res.verdict);
            j["min_tuple"] = res.min_tuple;
            j["min_nu"] = res.min_nu;
            write_report(out_path, j);
            return verdict_exit(res.verdict);
        }
        if (*c_limit) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            std::vector<int> S = parse_set(set_text);
            fc::CriterionSpec spec{fc::CriterionSpec::Kind::Limit, 1, S, ""};
            return check_command(ring, spec, fc::check_matrix(fc::limit_matrix(ring, S), cfg), cfg,
                                 out_path);
        }
        if (*search_cmd) {
            fc::FusionRing ring = fc::io::parse_ring(ring_path);
            fc::SearchBudget budget{max_set, max_n, true};
            auto witness = fc::search_violation(ring, budget, cfg);
            fc::io::Json j = report_skeleton(cfg);
            j["input"] = ring.name();
            if (witness) {
                std::cout << ring.name() << ": violated at " << witness->spec.render()
                          << "  value " << fc::io::fmt12(witness->value) << "\n";
                j["witness"] = fc::io::witness_to_json(*witness);
                write_report(out_path, j);
                return kExitViolated;
            }
            std::cout << ring.name() << ": no violation within budget (max-set " << max_set
                      << ", max-n " << max_n << ")\n";
            j["witness"] = nullptr;
            write_report(out_path, j);
            return kExitHolds;
        }
        if (*f_r4k) {
            fc::R4kReport rep = fc::r4k_check(k_param, cfg);
            std::cout << "R(4," << k_param << "): d2 = " << fc::io::fmt12(rep.d2)
                      << ", d3 = " << fc::io::fmt12(rep.d3) << ", f(d3) = " << fc::io::fmt12(rep.f_value)
                      << "\n";
            if (rep.scan_found)
                std::cout << "  inequality witness (n,a,b) = (" << rep.nab[0] << "," << rep.nab[1]
                          << "," << rep.nab[2] << ")\n";
            print_verdict("  reduced twisted", rep.verdict);
            fc::io::Json j = report_skeleton(cfg);
            j["k"] = k_param;
            j["d2"] = rep.d2;
            j["d3"] = rep.d3;
            j["f_value"] = rep.f_value;
            j["result"] = fc::io::verdict_to_json(rep.verdict);
            write_report(out_path, j);
            return verdict_exit(rep.verdict);
        }
        if (*f_graph) {
            fc::GraphFamilyParams p;
            p.ell = ell;
            for (int v : parse_set(mults_text)) p.mults.push_back(v);
            p.d2 = d2;
            auto nab = fc::graph_family_check(p, nmax);
            bool cor = fc::cor56_check(p);
            std::cout << "graph family (l=" << ell << ", M=" << fc::io::fmt12(p.M())
                      << ", d2=" << fc::io::fmt12(d2) << "): ";
            if (nab)
                std::cout << "excluded at (n,a,b) = (" << (*nab)[0] << "," << (*nab)[1] << ","
                          << (*nab)[2] << ")\n";
            else
                std::cout << "no obstruction up to n = " << nmax << "\n";
            std::cout << "  corollary chain: " << (cor ? "holds (excluded)" : "fails") << "\n";
            fc::io::Json j = report_skeleton(cfg);
            j["params"] = {{"l", ell}, {"mults", p.mults}, {"d2", d2}, {"M", p.M()}};
            j["excluded"] = static_cast<bool>(nab);
            if (nab) j["nab"] = std::vector<int>{(*nab)[0], (*nab)[1], (*nab)[2]};
            j["cor56"] = cor;
            write_report(out_path, j);
            return nab ? kExitViolated : kExitHolds;
        }
        if (*p_k7) {
            std::vector<int> raw;
            std::vector<double> ds;
            {
                std::stringstream ss(dims_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) ds.push_back(std::stod(tok));
            }
            (void)raw;
            if (ds.size() != 5) throw fc::io::ParseError("perturb k7 expects --dims d2,d3,d4,d5,d7");
            fc::K7Perturbation p = fc::k7_perturbation(ds[0], ds[1], ds[2], ds[3], ds[4]);
            std::cout << "Q1+ = " << fc::io::fmt12(p.Q1p) << ", Q2+ = " << fc::io::fmt12(p.Q2p)
                      << "\n";
            std::cout << "excluded for d6 < " << fc::io::fmt12(p.threshold) << "\n";
            if (!p.disc1_ok || !p.disc2_ok)
                std::cout << "  note: negative discriminant encountered; no exclusion claimed for"
                             " that quadratic\n";
            fc::io::Json j = report_skeleton(cfg);
            j["Q1p"] = p.Q1p;
            j["Q2p"] = p.Q2p;
            j["threshold"] = p.threshold;
            write_report(out_path, j);
            return kExitHolds;
        }
        if (*batch_cmd) {
            fc::BatchConfig bc;
            bc.eval = cfg;
            fc::BatchReport rep = fc::batch_run(batch_dir, bc);
            std::cout << "batch over " << rep.entries.size() << " files: " << rep.holds << " hold, "
                      << rep.violated << " violated, " << rep.inconclusive << " inconclusive, "
                      << rep.errors << " errors\n";
            write_report(out_path, rep.to_json());
            return rep.errors > 0 ? kExitParse : (rep.violated > 0 ? kExitViolated : kExitHolds);
        }
        if (*g_dims) {
            fc::BipartiteGraph g = fc::io::parse_graph(graph_path);
            fc::DimensionVector dv = fc::graph_dims(g);
            std::cout << g.name << " dims:";
            for (double d : dv.d) std::cout << " " << fc::io::fmt12(d);
            std::cout << "\n";
            return kExitHolds;
        }
        if (*g_extract) {
            fc::BipartiteGraph g = fc::io::parse_graph(graph_path);
            auto params = fc::extract_family(g);
            if (!params) {
                std::cout << g.name << ": local arc-family form not present\n";
                return kExitHolds;
            }
            std::cout << g.name << ": l = " << params->ell << ", mults =";
            for (int v : params->mults) std::cout << " " << v;
            std::cout << ", d2 = " << fc::io::fmt12(params->d2) << ", M = " << fc::io::fmt12(params->M())
                      << "\n";
            auto nab = fc::graph_family_check(*params, nmax);
            if (nab) {
                std::cout << "  excluded at (n,a,b) = (" << (*nab)[0] << "," << (*nab)[1] << ","
                          << (*nab)[2] << ")\n";
                return kExitViolated;
            }
            std::cout << "  no obstruction up to n = " << nmax << "\n";
            return kExitHolds;
        }
    } catch (const fc::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fc::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fc::CriteriaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fc::SchurError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fc::GraphError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
