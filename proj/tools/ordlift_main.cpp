#include "ordlift/acceptance.hpp"
#include "ordlift/grpalg.hpp"
#include "ordlift/lift.hpp"
#include "ordlift/nebe.hpp"
#include "ordlift/quiver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace ordlift;
using nlohmann::json;

namespace {

json matrix_json(const std::vector<std::vector<long>>& M) {
    json j = json::array();
    for (const auto& r : M) j.push_back(r);
    return j;
}

json lattice_json(const Lattice& L) {
    json j = json::array();
    for (const auto& r : L.rows) {
        json row = json::array();
        for (const auto& x : r) row.push_back(rat_str(x));
        j.push_back(row);
    }
    return j;
}

// u components: comma-separated rationals; a quadratic component is
// written a+b*pi (with --pi-d supplying d)
SymmElem parse_u(const std::string& s) {
    SymmElem u;
    std::string cur;
    auto flush = [&]() {
        auto pos = cur.find('+');
        if (pos != std::string::npos && cur.find("*pi") != std::string::npos) {
            std::string a = cur.substr(0, pos);
            std::string b = cur.substr(pos + 1);
            b = b.substr(0, b.find("*pi"));
            u.u.push_back({rat_parse(a), rat_parse(b)});
        } else {
            u.u.push_back({rat_parse(cur), 0});
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') flush();
        else if (!isspace(ch)) cur += ch;
    }
    if (!cur.empty()) flush();
    return u;
}

LiftParams make_params(long p, long f, const std::string& variant, const std::string& u_str,
                       const std::string& c_str, const std::string& d_str) {
    Rat c = c_str.empty() ? Rat(1) : rat_parse(c_str);
    Rat d = d_str.empty() ? Rat(-1) : rat_parse(d_str);
    LiftParams P = default_lift_params(p, f, c, d);
    if (variant == "char2" && P.variant != LiftVariant::Char2)
        throw std::runtime_error("char2 requires p = 2");
    if (variant == "split" && P.variant != LiftVariant::Split)
        throw std::runtime_error("split requires p odd and f even");
    if (variant == "nonsplit" && P.variant != LiftVariant::Nonsplit)
        throw std::runtime_error("nonsplit requires p odd and f odd");
    if (!u_str.empty()) {
        P.u = parse_u(u_str);
        if (P.variant == LiftVariant::Split && P.u.u.size() == (size_t)P.kappa() + 2)
            P.c = P.u.u[P.kappa()].first / P.u.u[P.kappa() + 1].first;
    }
    P.validate();
    return P;
}

int emit(const Report& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and verification for the self-dual lifts "
                 "of k Delta_2(p^f) and Nebe's SL_2(2^f) order"};
    app.require_subcommand(1);

    auto* quiver = app.add_subcommand("quiver", "quiver presentations and graded quotients");
    std::string qkind = "delta";
    long qp = 2, qf = 1;
    bool q_cartan = false, q_dims = false, q_center = false;
    quiver->add_option("kind", qkind, "delta or koshita")->required();
    quiver->add_option("--p", qp, "prime");
    quiver->add_option("--f", qf, "extension degree")->required();
    quiver->add_flag("--cartan", q_cartan);
    quiver->add_flag("--dims", q_dims);
    quiver->add_flag("--center", q_center);

    auto* group = app.add_subcommand("group", "the group algebra side");
    long gp = 2, gf = 1;
    bool g_cartan = false, g_xset = false, g_classes = false, g_iso = false;
    group->add_option("--p", gp)->required();
    group->add_option("--f", gf)->required();
    group->add_flag("--cartan", g_cartan);
    group->add_flag("--xset", g_xset);
    group->add_flag("--classes", g_classes);
    group->add_flag("--iso", g_iso);

    auto* lift = app.add_subcommand("lift", "standard-form self-dual lifts");
    lift->require_subcommand(1);
    long lp = 2, lf = 1, trials = 100;
    unsigned long seed = 20240809;
    std::string variant = "auto", u_str, c_str, d_str;
    auto add_lift_opts = [&](CLI::App* sub) {
        sub->add_option("--p", lp)->required();
        sub->add_option("--f", lf)->required();
        sub->add_option("--variant", variant, "auto|char2|split|nonsplit");
        sub->add_option("--u", u_str, "comma-separated rationals, quadratic as a+b*pi");
        sub->add_option("--c", c_str, "split-variant parameter u_{k+1}/u_{k+2}");
        sub->add_option("--pi-d", d_str, "nonsplit: pi^2 = d p");
    };
    auto* lbuild = lift->add_subcommand("build", "emit the canonical piece data");
    add_lift_opts(lbuild);
    auto* lverify = lift->add_subcommand("verify", "run the verification suite on the lift");
    add_lift_opts(lverify);
    auto* lround = lift->add_subcommand("roundtrip", "random conjugation + normalize roundtrips");
    add_lift_opts(lround);
    lround->add_option("--trials", trials);
    lround->add_option("--seed", seed);

    auto* nebe = app.add_subcommand("nebe", "Nebe's conjectural SL_2(2^f) order from a fixture");
    std::string fixture_file;
    long nf = 0;
    nebe->add_option("--fixture", fixture_file)->required();
    nebe->add_option("--f", nf, "cross-checked against the fixture");

    auto* report = app.add_subcommand("report", "run the full acceptance suite");
    bool all = false;
    long pf_max = 16;
    std::string fixtures_dir = "fixtures";
    unsigned long rseed = 20240809;
    report->add_flag("--all", all);
    report->add_option("--pf-max", pf_max);
    report->add_option("--fixtures", fixtures_dir);
    report->add_option("--seed", rseed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*quiver) {
            Presentation P = qkind == "delta" ? delta_presentation(qp, qf)
                                              : koshita_presentation(qf);
            GradedAlgebra A(P);
            json out;
            out["kind"] = qkind;
            out["p"] = P.p;
            out["f"] = P.f;
            out["vertices"] = P.nverts;
            out["arrows"] = P.arrows.size();
            if (q_cartan) out["cartan"] = matrix_json(A.cartan());
            if (q_dims) {
                out["total_dim"] = A.total_dim();
                json dd = json::array();
                for (long d = 0; d <= A.max_degree(); ++d) dd.push_back(A.degree_dim(d));
                out["degree_dims"] = dd;
            }
            if (q_center) {
                if (P.p == 2 || P.kind == "koshita") out["center_dim"] = A.center_dim(-1);
                else out["center_dim_per_block"] = {A.center_dim(0), A.center_dim(1)};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*group) {
            DeltaGroup G(gp, gf);
            json out;
            out["p"] = gp;
            out["f"] = gf;
            out["order"] = G.order();
            bool ok = true;
            if (g_cartan) out["cartan"] = matrix_json(cartan_from_group(G));
            if (g_xset) {
                XSet x = x_set(G);
                out["xset"] = x.residues;
                out["modulus"] = x.modulus;
            }
            if (g_classes) out["classes"] = class_count(G);
            if (g_iso) {
                Report rep = verify_group_quiver_iso(G, delta_presentation(gp, gf));
                out["iso"] = rep.to_json();
                ok = rep.pass();
            }
            std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (*lbuild) {
            LiftParams P = make_params(lp, lf, variant, u_str, c_str, d_str);
            BlockOrder O = standard_lift(P);
            json out;
            out["p"] = lp;
            out["f"] = lf;
            out["kappa"] = P.kappa();
            out["variant"] = P.variant == LiftVariant::Char2   ? "char2"
                             : P.variant == LiftVariant::Split ? "split"
                                                               : "nonsplit";
            json pieces;
            for (const auto& [ij, L] : O.pieces)
                pieces[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
                    lattice_json(L);
            out["pieces"] = pieces;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*lverify) {
            LiftParams P = make_params(lp, lf, variant, u_str, c_str, d_str);
            return emit(verify_lift(standard_lift(P), P));
        }
        if (*lround) {
            LiftParams P = make_params(lp, lf, variant, u_str, c_str, d_str);
            BlockOrder O = standard_lift(P);
            std::mt19937_64 rng(seed);
            Report rep;
            rep.suite = "lift_roundtrip";
            long k = P.kappa();
            bool all_ok = true;
            for (long t = 0; t < trials; ++t) {
                std::vector<KtScalar> y;
                for (long l = 0; l < k; ++l) {
                    Rat a = Rat(1 + P.p * (long)(rng() % 7)) / Rat(1 + P.p * (long)(rng() % 7));
                    a = a * p_pow(P.p, (long)(rng() % 5) - 2);
                    Rat b = P.variant == LiftVariant::Char2 ? Rat(0)
                            : P.variant == LiftVariant::Split
                                ? Rat(1 + P.p * (long)(rng() % 7)) *
                                      p_pow(P.p, (long)(rng() % 5) - 2)
                                : Rat((long)(rng() % 5) - 2) * a;
                    y.push_back({a, b});
                }
                BlockOrder conj = O;
                for (auto& [ij, L] : conj.pieces) {
                    if (ij.first == ij.second) continue;
                    L = kt_scale_lattice(P, L,
                                         kt_mul(P, kt_inv(P, y[ij.first]), y[ij.second]));
                }
                BlockOrder back = normalize_order(conj, P);
                bool same = true;
                for (const auto& [ij, L] : O.pieces)
                    if (!(back.pieces.at(ij) == L)) same = false;
                if (!same) {
                    all_ok = false;
                    rep.add("trial." + std::to_string(t), false);
                }
            }
            rep.add("roundtrips", all_ok, {{"trials", trials}, {"seed", seed}});
            return emit(rep);
        }
        if (*nebe) {
            std::ifstream in(fixture_file);
            if (!in.good()) throw std::runtime_error("cannot open " + fixture_file);
            json j;
            in >> j;
            DecompFixture fx = DecompFixture::from_json(j);
            if (nf != 0 && nf != fx.f) throw std::runtime_error("--f disagrees with fixture");
            GradedAlgebra K(koshita_presentation(fx.f));
            NebeResult R = nebe_order(fx, K);
            json out;
            out["fixture"] = fx.to_json();
            out["report"] = R.report.to_json();
            std::cout << out.dump(2) << "\n";
            return R.report.pass() ? 0 : 1;
        }
        if (*report) {
            Report rep = run_acceptance(fixtures_dir, rseed, pf_max);
            std::cout << rep.to_json().dump(2) << "\n";
            return gating_pass(rep) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
