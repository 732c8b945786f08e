// Command-line front end: enumeration, posets, order complexes, homology,
// verification sweeps, and TC tables.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "strata/arrangement.hpp"
#include "strata/cupcalc.hpp"
#include "strata/errors.hpp"
#include "strata/homology.hpp"
#include "strata/io.hpp"
#include "strata/oracle.hpp"
#include "strata/simplicial.hpp"
#include "strata/sphere.hpp"
#include "strata/tcformulas.hpp"
#include "strata/version.hpp"

namespace {

using strata::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    int n = 0;
    int k = 0;
    std::string space = "euclidean";
    std::string filter = "configuration";
    bool quotient = false;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    long long limit_cells = -1;  // -1: env or default
};

strata::arrangement::ResourceLimits limits_from(const CommonOpts& opts) {
    strata::arrangement::ResourceLimits lim;
    if (opts.limit_cells >= 0) {
        lim.max_cells = opts.limit_cells;
    } else if (const char* env = std::getenv("BRAID_STRATA_LIMIT")) {
        lim.max_cells = strata::BigInt(env);
    }
    return lim;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw strata::ValidationError("cannot open output file " + opts.out);
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json config_json(const CommonOpts& opts, const std::string& command) {
    Json c;
    c["command"] = command;
    c["n"] = opts.n;
    c["k"] = opts.k;
    c["space"] = opts.space;
    c["filter"] = opts.filter;
    c["quotient"] = opts.quotient;
    c["format"] = opts.format;
    return c;
}

strata::FacePoset build_poset(const CommonOpts& opts) {
    const auto lim = limits_from(opts);
    if (opts.space == "sphere") {
        if (opts.filter != "configuration")
            throw strata::ValidationError("sphere posets are configuration-only");
        return strata::sphere::sphere_poset(opts.n, opts.k, lim, opts.jobs);
    }
    if (opts.space != "euclidean") throw strata::ValidationError("unknown space " + opts.space);
    if (opts.filter == "configuration") return strata::arrangement::salvetti_poset(opts.n, opts.k, lim);
    if (opts.filter == "all") return strata::arrangement::full_poset(opts.n, opts.k, lim);
    throw strata::ValidationError("unknown filter " + opts.filter);
}

int cmd_cells(const CommonOpts& opts) {
    strata::FacePoset poset = build_poset(opts);
    if (opts.format == "json") {
        Json j = strata::io::artifact_header(config_json(opts, "cells"));
        j.update(strata::io::cells_json(poset));
        emit(opts, dump(j));
    } else if (opts.format == "text") {
        std::ostringstream out;
        for (int id = 0; id < poset.size(); ++id)
            out << id << "\t" << poset.cell_label(id) << "\tdim " << poset.dim(id) << "\n";
        out << "total " << poset.size() << " cells\n";
        emit(opts, out.str());
    } else {
        throw strata::ValidationError("cells supports json or text output");
    }
    return kExitOk;
}

int cmd_poset(const CommonOpts& opts) {
    strata::FacePoset poset = build_poset(opts);
    if (opts.format == "json") {
        Json j = strata::io::artifact_header(config_json(opts, "poset"));
        j.update(strata::io::poset_json(poset));
        emit(opts, dump(j));
    } else if (opts.format == "dot") {
        emit(opts, strata::io::poset_dot(poset));
    } else if (opts.format == "text") {
        std::ostringstream out;
        out << "cells " << poset.size() << ", covers " << poset.covers().size() << ", height "
            << poset.height() << "\n";
        for (auto [lo, hi] : poset.covers())
            out << poset.cell_label(lo) << " < " << poset.cell_label(hi) << "\n";
        emit(opts, out.str());
    } else {
        throw strata::ValidationError("poset supports json, dot, or text output");
    }
    return kExitOk;
}

int cmd_complex(const CommonOpts& opts) {
    strata::FacePoset poset = build_poset(opts);
    Json j = strata::io::artifact_header(config_json(opts, "complex"));
    std::ostringstream text;
    auto describe = [&](const char* label, const std::vector<long long>& f, long long chi) {
        text << label << ": f-vector (";
        for (size_t i = 0; i < f.size(); ++i) text << (i ? "," : "") << f[i];
        text << "), euler " << chi << "\n";
    };
    if (poset.has_multiple_attachments() || poset.has_positive_dimensional_attachments()) {
        // Parallel boundary attachments: the homotopy model is the nerve.
        auto nerve = strata::simplicial::nerve_complex(poset);
        if (opts.quotient) {
            auto orbit = strata::simplicial::quotient(nerve, strata::sphere::action_tables(poset));
            j.update(strata::io::complex_json(orbit));
            describe("orbit nerve", strata::simplicial::f_vector(orbit),
                     strata::simplicial::euler_char(orbit));
        } else {
            j.update(strata::io::complex_json(nerve));
            describe("nerve", strata::simplicial::f_vector(nerve),
                     strata::simplicial::euler_char(nerve));
        }
    } else {
        auto complex = strata::simplicial::order_complex(poset);
        if (opts.quotient) {
            auto orbit = strata::simplicial::quotient(complex, strata::sphere::action_tables(poset));
            j.update(strata::io::complex_json(orbit));
            describe("orbit complex", strata::simplicial::f_vector(orbit),
                     strata::simplicial::euler_char(orbit));
        } else {
            j.update(strata::io::complex_json(complex));
            describe("order complex", strata::simplicial::f_vector(complex),
                     strata::simplicial::euler_char(complex));
        }
    }
    if (opts.format == "json")
        emit(opts, dump(j));
    else if (opts.format == "text")
        emit(opts, text.str());
    else
        throw strata::ValidationError("complex supports json or text output");
    return kExitOk;
}

int cmd_homology(const CommonOpts& opts) {
    strata::FacePoset poset = build_poset(opts);
    strata::homology::HomologyGroups h;
    if (poset.has_multiple_attachments() || poset.has_positive_dimensional_attachments()) {
        auto nerve = strata::simplicial::nerve_complex(poset);
        if (opts.quotient)
            h = strata::homology::homology(
                strata::simplicial::quotient(nerve, strata::sphere::action_tables(poset)));
        else
            h = strata::homology::homology(nerve);
    } else {
        auto complex = strata::simplicial::order_complex(poset);
        if (opts.quotient)
            h = strata::homology::homology(
                strata::simplicial::quotient(complex, strata::sphere::action_tables(poset)));
        else
            h = strata::homology::homology(complex);
    }
    if (opts.format == "json") {
        Json j = strata::io::artifact_header(config_json(opts, "homology"));
        j.update(strata::io::homology_json(h));
        emit(opts, dump(j));
    } else if (opts.format == "text") {
        std::ostringstream out;
        out << "unreduced integral homology (H_0 counts components): " << h.to_string() << "\n";
        emit(opts, out.str());
    } else {
        throw strata::ValidationError("homology supports json or text output");
    }
    return kExitOk;
}

struct VerifyOpts {
    std::string theorem;
    int n_max = 3;
    int k_max = 2;
    int jobs = 1;
    long long limit_cells = -1;
    bool debug_oracle = false;
};

void dump_oracle_samples(std::ostream& out, int n, int k) {
    namespace orc = strata::oracle;
    auto cells = strata::arrangement::enumerate_cells(n, k, strata::arrangement::CellFilter::All);
    orc::DiffConstraintSystem feasible_sys;
    orc::add_exact_conditions(feasible_sys, strata::combinat::tree_to_signvector(cells.front()));
    auto r = orc::solve(feasible_sys);
    if (std::holds_alternative<orc::Feasible>(r)) {
        const auto& w = std::get<orc::Feasible>(r).witness;
        out << "  witness for " << cells.front().to_string() << " (eps <= "
            << orc::epsilon_bound(feasible_sys, w) << "):";
        for (const auto& [var, val] : w)
            out << " p[" << var.point << "][" << var.level << "]=" << orc::to_string(val);
        out << "\n";
    }

    orc::DiffConstraintSystem cyclic;
    using orc::Rel;
    using orc::VarId;
    cyclic.add(VarId{1, 1}, Rel::Less, VarId{2, 1});
    cyclic.add(VarId{2, 1}, Rel::Less, VarId{3, 1});
    cyclic.add(VarId{3, 1}, Rel::Less, VarId{1, 1});
    auto bad = orc::solve(cyclic);
    if (std::holds_alternative<orc::Infeasible>(bad)) {
        const auto& cert = std::get<orc::Infeasible>(bad).cycle;
        out << "  certificate for a strict 3-cycle:";
        for (const auto& step : cert)
            out << " [" << orc::to_string(cyclic.constraints()[static_cast<size_t>(step.constraint)])
                << "]";
        out << " slack " << orc::to_string(orc::certificate_slack(cyclic, cert)) << "\n";
    }
}

int cmd_verify(const VerifyOpts& vo) {
    using strata::arrangement::CellFilter;
    CommonOpts base;
    base.jobs = vo.jobs;
    base.limit_cells = vo.limit_cells;
    const auto lim = limits_from(base);

    int failures = 0;
    std::ostringstream out;
    auto row = [&](const std::string& inst, bool ok, const std::string& detail) {
        out << (ok ? "pass" : "FAIL") << "  " << inst << "  " << detail << "\n";
        if (!ok) ++failures;
    };

    auto cover_note = [](const strata::FacePoset& poset) {
        auto bad = poset.cover_dimension_violations();
        return bad.empty() ? std::string(" covers step by 1")
                           : " COVERS WITH DIMENSION GAP: " + std::to_string(bad.size());
    };

    if (vo.theorem == "dim-salvetti") {
        for (int n = 2; n <= vo.n_max; ++n)
            for (int k = 1; k <= vo.k_max; ++k) {
                std::string inst = "salvetti n=" + std::to_string(n) + " k=" + std::to_string(k);
                try {
                    auto poset = strata::arrangement::salvetti_poset(n, k, lim);
                    int measured = poset.height() - 1;
                    int predicted = (n - 1) * (k - 1);
                    row(inst, measured == predicted,
                        "dim=" + std::to_string(measured) + " predicted=" + std::to_string(predicted) +
                            cover_note(poset));
                } catch (const strata::ResourceError& e) {
                    out << "skip  " << inst << "  resource refusal (projected " << e.projected_count
                        << ")\n";
                }
            }
    } else if (vo.theorem == "dim-sphere") {
        for (int n = 2; n <= vo.n_max; ++n)
            for (int k = 1; k <= vo.k_max; ++k) {
                std::string inst = "sphere n=" + std::to_string(n) + " k=" + std::to_string(k);
                try {
                    auto poset = strata::sphere::sphere_poset(n, k, lim, vo.jobs);
                    int measured = poset.height() - 1;
                    int predicted = (k - 1) * (n - 1) + 1;
                    row(inst, measured == predicted,
                        "dim=" + std::to_string(measured) + " predicted=" + std::to_string(predicted) +
                            cover_note(poset));
                } catch (const strata::ResourceError& e) {
                    out << "skip  " << inst << "  resource refusal (projected " << e.projected_count
                        << ")\n";
                }
            }
    } else if (vo.theorem == "freeness") {
        for (int n = 2; n <= vo.n_max; ++n)
            for (int k = 1; k <= vo.k_max; ++k) {
                for (bool sphere_space : {false, true}) {
                    std::string inst = std::string(sphere_space ? "sphere" : "salvetti") +
                                       " n=" + std::to_string(n) + " k=" + std::to_string(k);
                    try {
                        auto poset = sphere_space
                                         ? strata::sphere::sphere_poset(n, k, lim, vo.jobs)
                                         : strata::arrangement::salvetti_poset(n, k, lim);
                        auto report = strata::sphere::orbits(poset);
                        row(inst, report.free,
                            "orbits=" + std::to_string(report.orbits.size()) +
                                (report.free ? "" : " fixed cells found"));
                    } catch (const strata::ResourceError& e) {
                        out << "skip  " << inst << "  resource refusal (projected "
                            << e.projected_count << ")\n";
                    }
                }
            }
    } else if (vo.theorem == "oracle-consistency") {
        for (int n = 2; n <= vo.n_max; ++n)
            for (int k = 1; k <= vo.k_max; ++k) {
                std::string inst = "oracle n=" + std::to_string(n) + " k=" + std::to_string(k);
                const int pairs = n * (n - 1) / 2;
                double projected = 1;
                for (int p = 0; p < pairs; ++p) projected *= 2 * k + 1;
                if (projected > 2e5) {
                    out << "skip  " << inst << "  resource refusal (projected "
                        << static_cast<long long>(projected) << " sign vectors)\n";
                    continue;
                }
                // Exhaustive: realizability matches tree decodability, and the
                // combinatorial face order matches geometric closure on cells.
                long long count = static_cast<long long>(projected);
                bool ok = true;
                for (long long code = 0; code < count && ok; ++code) {
                    strata::combinat::SignVector sv(n, k);
                    long long rest = code;
                    for (int i = 1; i <= n && true; ++i)
                        for (int j = i + 1; j <= n; ++j) {
                            int sym = static_cast<int>(rest % (2 * k + 1));
                            rest /= 2 * k + 1;
                            strata::combinat::SignSymbol s;
                            if (sym > 0) {
                                int level = (sym + 1) / 2;
                                s = sym % 2 ? strata::combinat::SignSymbol::plus(level)
                                            : strata::combinat::SignSymbol::minus(level);
                            }
                            sv.set_entry(i, j, s);
                        }
                    ok = strata::oracle::realizable(sv) ==
                         strata::combinat::signvector_to_tree(sv).has_value();
                }
                auto cells = strata::arrangement::enumerate_cells(n, k, CellFilter::All, lim);
                for (size_t a = 0; a < cells.size() && ok; ++a)
                    for (size_t b = 0; b < cells.size() && ok; ++b)
                        ok = strata::arrangement::face_leq(cells[a], cells[b]) ==
                             strata::oracle::closure_leq_geometric(
                                 strata::combinat::tree_to_signvector(cells[a]),
                                 strata::combinat::tree_to_signvector(cells[b]));
                row(inst, ok,
                    "checked " + std::to_string(count) + " sign vectors, " +
                        std::to_string(cells.size() * cells.size()) + " face pairs");
                if (vo.debug_oracle) dump_oracle_samples(out, n, k);
            }
    } else {
        throw strata::ValidationError("unknown theorem " + vo.theorem);
    }

    std::cout << out.str();
    std::cout << (failures == 0 ? "all instances pass\n"
                                : std::to_string(failures) + " instances FAILED\n");
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

struct TcOpts {
    std::string family;
    std::vector<int> ks;
    int n = 0;
    int k = 0;
    int m = 0;
    int i = 0;
    int d = 2;
    bool witness = false;
    bool classical = false;
    std::string format = "text";
    std::string out;
};

void print_witness(std::ostringstream& out, const strata::cupcalc::WitnessReport& w) {
    out << "  witness " << w.witness << ": " << (w.nonzero ? "nonzero" : "ZERO") << ", coefficient of "
        << w.leading_monomial << " = " << w.coefficient << " (" << w.factors << " factors) -> "
        << w.conclusion << "\n";
}

Json witness_json(const strata::cupcalc::WitnessReport& w) {
    Json j;
    j["witness"] = w.witness;
    j["nonzero"] = w.nonzero;
    j["leading_monomial"] = w.leading_monomial;
    j["coefficient"] = w.coefficient;
    j["factors"] = w.factors;
    j["conclusion"] = w.conclusion;
    return j;
}

int cmd_tc(const TcOpts& to) {
    namespace tcf = strata::tcformulas;
    namespace cc = strata::cupcalc;
    std::ostringstream text;
    Json j;
    j["tool"] = {{"name", strata::kToolName}, {"version", strata::kToolVersion}};
    j["family"] = to.family;

    auto emit_report = [&](const tcf::TCReport& r) {
        text << tcf::to_string(r, to.classical) << "\n";
        j["n"] = r.n;
        j["params"] = r.params;
        j["lower"] = r.lower;
        j["upper"] = r.upper;
        if (r.value) j["value"] = *r.value;
        if (r.rational_bound) {
            std::ostringstream rb;
            rb << *r.rational_bound;
            j["rational_bound"] = rb.str();
        }
        j["provenance"] = r.provenance;
        j["normalization"] = to.classical ? "classical (reduced + 1)" : "reduced";
    };

    if (to.family == "sphere-product") {
        if (to.ks.empty() || to.n < 2) throw strata::ValidationError("sphere-product needs --ks and --n");
        emit_report(tcf::tc_sphere_product(to.ks, to.n));
        if (to.witness) {
            auto rep = cc::verify_spheres_product(to.ks, to.n);
            print_witness(text, rep.product);
            text << "  all factors zero divisors: " << (rep.all_factors_zero_divisors ? "yes" : "no")
                 << "; certified cl >= " << rep.cl_lower_bound << ": "
                 << (rep.certified ? "yes" : "no") << "\n";
            j["witness"] = witness_json(rep.product);
            j["witness"]["certified"] = rep.certified;
            j["witness"]["cl_lower_bound"] = rep.cl_lower_bound;
        }
    } else if (to.family == "torus") {
        if (to.k < 1 || to.n < 2) throw strata::ValidationError("torus needs --k and --n");
        emit_report(tcf::tc_torus(to.k, to.n));
    } else if (to.family == "symplectic") {
        if (to.m < 1 || to.n < 2) throw strata::ValidationError("symplectic needs --m and --n");
        emit_report(tcf::tc_symplectic(to.m, to.n));
    } else if (to.family == "quaternionic") {
        if (to.m < 1 || to.n < 2) throw strata::ValidationError("quaternionic needs --m and --n");
        emit_report(tcf::tc_quaternionic(to.m, to.n));
    } else if (to.family == "tcs-sphere") {
        if (to.k < 1 || to.n < 2) throw strata::ValidationError("tcs-sphere needs --k and --n");
        emit_report(tcf::tcs_sphere_upper(to.n, to.k));
    } else if (to.family == "genus-eps") {
        if (to.i < 2 || to.k < 1) throw strata::ValidationError("genus-eps needs --i and --k");
        auto g = tcf::genus_eps_upper(to.i, to.k);
        std::ostringstream rb;
        rb << g.rational;
        text << "genus-eps i=" << to.i << " k=" << to.k << " rational=" << rb.str()
             << " floored=" << g.floored << "\n";
        j["i"] = to.i;
        j["k"] = to.k;
        j["rational"] = rb.str();
        j["floored"] = g.floored;
    } else if (to.family == "cohom-witness") {
        if (to.n < 2 || to.m < 1) throw strata::ValidationError("cohom-witness needs --n and --m");
        auto w = cc::verify_cohom(to.n, to.m, to.d);
        text << "cohom witness n=" << to.n << " m=" << to.m << " d=" << to.d << "\n";
        print_witness(text, w);
        j["witness"] = witness_json(w);
    } else if (to.family == "multbysphere-witness") {
        if (to.n < 2 || to.k < 1) throw strata::ValidationError("multbysphere-witness needs --n and --k");
        auto rep = cc::verify_multbysphere(to.n, to.k);
        text << "multbysphere witness n=" << to.n << " k=" << to.k << "\n";
        print_witness(text, rep.difference_product);
        if (rep.even_power_product) print_witness(text, *rep.even_power_product);
        text << "  cl lower bound " << rep.cl_lower_bound << "\n";
        j["witness"] = witness_json(rep.difference_product);
        if (rep.even_power_product) j["witness_even"] = witness_json(*rep.even_power_product);
        j["cl_lower_bound"] = rep.cl_lower_bound;
    } else if (to.family == "cl-search") {
        if (to.n < 2 || to.k < 1) throw strata::ValidationError("cl-search needs --n and --k");
        int found = cc::search_cl_single_sphere(to.k, to.n);
        text << "cl-search sphere k=" << to.k << " n=" << to.n
             << ": longest nonzero zero-divisor product of length " << found << "\n";
        j["cl_search"] = found;
    } else {
        throw strata::ValidationError("unknown family " + to.family);
    }

    std::string payload = to.format == "json" ? dump(j) : text.str();
    if (to.out.empty())
        std::cout << payload;
    else {
        std::ofstream file(to.out, std::ios::binary);
        if (!file) throw strata::ValidationError("cannot open output file " + to.out);
        file << payload;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial models of configuration spaces on euclidean spaces and spheres"};
    app.set_version_flag("--version", std::string(strata::kToolName) + " " + strata::kToolVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* cmd, bool needs_nk = true) {
        auto* n = cmd->add_option("--n", opts.n, "number of points");
        auto* k = cmd->add_option("--k", opts.k, "stratification depth / sphere dimension");
        if (needs_nk) {
            n->required();
            k->required();
        }
        cmd->add_option("--space", opts.space, "euclidean or sphere")
            ->check(CLI::IsMember({"euclidean", "sphere"}));
        cmd->add_option("--filter", opts.filter, "all or configuration")
            ->check(CLI::IsMember({"all", "configuration"}));
        cmd->add_flag("--quotient", opts.quotient, "pass to the symmetric-group quotient");
        cmd->add_option("--format", opts.format, "json, dot, or text");
        cmd->add_option("--out", opts.out, "output path (default stdout)");
        cmd->add_option("--jobs", opts.jobs, "worker thread cap")->check(CLI::PositiveNumber);
        cmd->add_option("--limit-cells", opts.limit_cells,
                        "cell-count refusal threshold (overrides BRAID_STRATA_LIMIT)");
    };

    auto* cells = app.add_subcommand("cells", "enumerate stratification cells");
    add_common(cells);
    auto* poset = app.add_subcommand("poset", "face poset with covers");
    add_common(poset);
    auto* complex_cmd = app.add_subcommand("complex", "order complex of the face poset");
    add_common(complex_cmd);
    auto* homology_cmd = app.add_subcommand("homology", "integral homology of the order complex");
    add_common(homology_cmd);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "sweep a theorem over a parameter grid");
    verify->add_option("--theorem", vo.theorem, "dim-salvetti, dim-sphere, freeness, oracle-consistency")
        ->required()
        ->check(CLI::IsMember({"dim-salvetti", "dim-sphere", "freeness", "oracle-consistency"}));
    verify->add_option("--n-max", vo.n_max, "largest n")->required();
    verify->add_option("--k-max", vo.k_max, "largest k")->required();
    verify->add_option("--jobs", vo.jobs, "worker thread cap")->check(CLI::PositiveNumber);
    verify->add_option("--limit-cells", vo.limit_cells, "cell-count refusal threshold");
    verify->add_flag("--debug-oracle", vo.debug_oracle,
                     "dump sample witnesses and certificates as exact fractions");

    TcOpts to;
    auto* tc = app.add_subcommand("tc", "topological-complexity tables and witnesses");
    tc->add_option("--family", to.family,
                   "sphere-product, torus, symplectic, quaternionic, tcs-sphere, genus-eps, "
                   "cohom-witness, multbysphere-witness, cl-search")
        ->required();
    tc->add_option("--ks", to.ks, "sphere dimensions (comma separated)")->delimiter(',');
    tc->add_option("--n", to.n, "number of stages");
    tc->add_option("--k", to.k, "sphere dimension / torus rank");
    tc->add_option("--m", to.m, "projective/symplectic parameter");
    tc->add_option("--i", to.i, "genus stage index");
    tc->add_option("--d", to.d, "degree of the truncated class (even)");
    tc->add_flag("--witness", to.witness, "also run the cup-length witness check");
    tc->add_flag("--classical", to.classical, "display with the classical +1 normalization");
    tc->add_option("--format", to.format, "json or text");
    tc->add_option("--out", to.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cells->parsed()) return cmd_cells(opts);
        if (poset->parsed()) return cmd_poset(opts);
        if (complex_cmd->parsed()) return cmd_complex(opts);
        if (homology_cmd->parsed()) return cmd_homology(opts);
        if (verify->parsed()) return cmd_verify(vo);
        if (tc->parsed()) return cmd_tc(to);
    } catch (const strata::ResourceError& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return kExitResource;
    } catch (const strata::ValidationError& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
