// Command-line front end: classification, region queries, sweeps, rank-1
// analysis and realization, Poisson checks, region maps.
//
// Exit codes: 0 success, 2 flag validation, 3 mathematical precondition,
// 4 internal contradiction (the two classification routes disagree).

#include "padcam/classifier.hpp"
#include "padcam/rank1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using json = nlohmann::ordered_json;
using namespace padcam;

namespace {

json rat_json(const Rat& x) { return rat_str(x); }

json form_json(const NormalForm& f) {
    json j;
    j["class"] = nf_class_tag(f);
    json params = json::array();
    for (const Rat& x : nf_param_list(f)) params.push_back(rat_str(x));
    j["params"] = params;
    return j;
}

json trace_json(const ClassifierTrace& tr) {
    json j;
    j["route"] = tr.route;
    j["point"] = tr.point;
    j["z1"] = tr.z1;
    j["z2"] = tr.z2;
    j["region"] = tr.region;
    j["degenerate"] = tr.degenerate;
    j["notes"] = tr.notes;
    return j;
}

json point_json(const PhasePoint& pt) {
    return json::array({rat_str(pt.first.x), rat_str(pt.first.y), rat_str(pt.first.z),
                        rat_str(pt.second.x), rat_str(pt.second.y), rat_str(pt.second.z)});
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(out_path);
    os << j.dump(2) << "\n";
}

struct CommonFlags {
    std::string p = "2", t = "0", R1 = "1", R2 = "1/2";
    std::string out;
};

SystemParams make_params(const CommonFlags& fl) {
    Int p(fl.p);
    PadicContext ctx(p);
    return SystemParams(ctx, parse_number(fl.t, p), parse_number(fl.R1, p),
                        parse_number(fl.R2, p));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic coupled angular momentum toolkit"};
    app.require_subcommand(1);

    CommonFlags fl;
    std::string point_name_flag = "S";
    std::string c_flag = "1", c_prime_flag = "1";
    std::string format = "json";
    int tuples = 20, points = 200;
    unsigned long seed = 1;
    int ord_min = -6, ord_max = -1;

    auto add_params = [&](CLI::App* cmd, bool with_point) {
        cmd->add_option("--p", fl.p, "prime");
        cmd->add_option("--t", fl.t, "coupling parameter (rational or d0.d1...;e)");
        cmd->add_option("--R1", fl.R1, "first radius");
        cmd->add_option("--R2", fl.R2, "second radius");
        cmd->add_option("--out", fl.out, "output file (default stdout)");
        if (with_point) cmd->add_option("--point", point_name_flag, "P, Q, S or T");
    };

    CLI::App* classify = app.add_subcommand("classify", "normal form at a rank-0 point");
    add_params(classify, true);

    CLI::App* regioncmd = app.add_subcommand("region", "parameter region");
    add_params(regioncmd, false);

    CLI::App* rank1cmd = app.add_subcommand("rank1", "rank-1 locus point and its type");
    add_params(rank1cmd, false);
    rank1cmd->add_option("--c", c_flag, "multiplier c (R1-absorbed)");

    CLI::App* sweep = app.add_subcommand("sweep", "normal forms over branch-covering families");
    sweep->add_option("--p", fl.p, "prime");
    sweep->add_option("--point", point_name_flag, "P, Q, S, T or all");
    sweep->add_option("--out", fl.out, "output file");

    CLI::App* poisson_cmd = app.add_subcommand("poisson-check", "bracket vanishing check");
    poisson_cmd->add_option("--p", fl.p, "prime");
    poisson_cmd->add_option("--tuples", tuples, "parameter tuples");
    poisson_cmd->add_option("--points", points, "phase points per tuple");
    poisson_cmd->add_option("--seed", seed, "RNG seed");
    poisson_cmd->add_option("--out", fl.out, "output file");

    CLI::App* regionmap = app.add_subcommand("region-map", "CSV grid of regions");
    regionmap->add_option("--p", fl.p, "prime");
    regionmap->add_option("--ord-min", ord_min, "smallest ord(k)");
    regionmap->add_option("--ord-max", ord_max, "largest ord(k)");
    regionmap->add_option("--out", fl.out, "output file");

    CLI::App* realize = app.add_subcommand("realize", "parameters realizing a rank-1 type");
    realize->add_option("--p", fl.p, "prime");
    realize->add_option("--c-prime", c_prime_flag, "target c' from X_p");
    realize->add_option("--out", fl.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            SystemParams params = make_params(fl);
            CriticalPoint pt = point_from_name(point_name_flag);
            Classification lemma = classify_closed_form(params, pt);
            Classification oracle = classify_spectral(params, pt);
            if (!nf_equal(lemma.form, oracle.form) || lemma.degenerate != oracle.degenerate) {
                json j;
                j["error"] = "classification routes disagree";
                j["closed_form"] = form_json(lemma.form);
                j["spectral"] = form_json(oracle.form);
                j["closed_form_trace"] = trace_json(lemma.trace);
                j["spectral_trace"] = trace_json(oracle.trace);
                emit(j, fl.out);
                return 4;
            }
            json j = form_json(lemma.form);
            j["degenerate"] = lemma.degenerate;
            j["trace"] = trace_json(lemma.trace);
            j["spectral_trace"] = trace_json(oracle.trace);
            emit(j, fl.out);
            return 0;
        }
        if (regioncmd->parsed()) {
            SystemParams params = make_params(fl);
            Rat w = params.k() * (2 * params.t - 1) * (2 * params.t - 1);
            Ord o = ord(w, params.ctx);
            json j;
            j["region"] = region_name(region(params));
            j["ord_k_2t_minus_1_sq"] = o.infinite ? json("+inf") : json(o.v);
            emit(j, fl.out);
            return 0;
        }
        if (rank1cmd->parsed()) {
            SystemParams params = make_params(fl);
            Rat c = parse_number(c_flag, params.ctx.p);
            json j;
            auto pt = rank1_locus(params, c);
            if (!pt) {
                j["locus"] = nullptr;
                emit(j, fl.out);
                return 0;
            }
            Rank1Form form = classify_rank1(params, *pt);
            auto img = image_curve(params, c);
            j["locus"] = point_json(pt->point);
            j["exact_witness"] = pt->exact_witness;
            j["branch"] = rank1_branch_name(pt->branch);
            j["c"] = rat_json(c);
            j["c_prime"] = rat_json(form.c_prime);
            if (form.f_value) j["f"] = rat_json(*form.f_value);
            j["image"] = json::array({rat_str(img.first), rat_str(img.second)});
            j["notes"] = form.notes;
            emit(j, fl.out);
            return 0;
        }
        if (sweep->parsed()) {
            Int p(fl.p);
            json j;
            std::vector<CriticalPoint> pts;
            if (point_name_flag == "all")
                pts = {CriticalPoint::P, CriticalPoint::Q, CriticalPoint::S, CriticalPoint::T};
            else
                pts = {point_from_name(point_name_flag)};
            for (CriticalPoint pt : pts) {
                FormSet forms = enumerate_forms(p, pt);
                json entry;
                entry["count"] = forms.size();
                json arr = json::array();
                for (const NormalForm& f : forms) arr.push_back(form_json(f));
                entry["forms"] = arr;
                j[point_name(pt)] = entry;
            }
            emit(j, fl.out);
            return 0;
        }
        if (poisson_cmd->parsed()) {
            Int p(fl.p);
            PadicContext ctx(p);
            std::mt19937_64 rng(seed);
            auto rnd_rat = [&](int lo, int hi) {
                std::uniform_int_distribution<int> num(lo, hi), den(1, hi);
                Rat r(num(rng), den(rng));
                r.canonicalize();
                return r;
            };
            int nonzero = 0;
            Rat max_abs = 0;
            for (int i = 0; i < tuples; ++i) {
                Rat t = rnd_rat(0, 9);
                Rat R1 = 0;
                while (R1 == 0) R1 = rnd_rat(-9, 9);
                Rat k = rnd_rat(1, 9);
                while (k == 0) k = rnd_rat(1, 9);
                k /= pow_int(Rat(p), 1 + static_cast<int>(i % 3));
                SystemParams params(ctx, t, R1, k * R1);
                Observable J = observable_J(params), H = observable_H(params);
                for (int s = 0; s < points; ++s) {
                    PhasePoint pt{stereographic(rnd_rat(-20, 20), rnd_rat(-20, 20)),
                                  stereographic(rnd_rat(-20, 20), rnd_rat(-20, 20))};
                    Rat br = poisson(J, H, params, pt);
                    if (br != 0) {
                        ++nonzero;
                        if (cmp(abs(br), max_abs) > 0) max_abs = abs(br);
                    }
                }
            }
            json j;
            j["tuples"] = tuples;
            j["points_per_tuple"] = points;
            j["nonzero_brackets"] = nonzero;
            j["max_abs"] = rat_str(max_abs);
            emit(j, fl.out);
            return nonzero == 0 ? 0 : 4;
        }
        if (regionmap->parsed()) {
            Int p(fl.p);
            PadicContext ctx(p);
            if (ord_min > ord_max || ord_max >= 0) throw std::invalid_argument("bad ord range");
            std::ostringstream csv;
            csv << "t_prefix,ord_k,region\n";
            long cube = pow_int(Rat(p), 3).get_num().get_si();
            for (long tp = 0; tp < cube; ++tp)
                for (int e = ord_min; e <= ord_max; ++e) {
                    Rat k = pow_int(Rat(p), e);
                    SystemParams params(ctx, Rat(tp), Rat(1), k);
                    csv << tp << "," << e << "," << region_name(region(params)) << "\n";
                }
            if (fl.out.empty())
                std::cout << csv.str();
            else {
                std::ofstream os(fl.out);
                os << csv.str();
            }
            return 0;
        }
        if (realize->parsed()) {
            Int p(fl.p);
            PadicContext ctx(p);
            Rat cp = parse_number(c_prime_flag, p);
            auto [params, c] = realize_rank1_form(ctx, cp);
            auto pt = rank1_locus(params, c);
            Rank1Form form = classify_rank1(params, *pt);
            json j;
            j["c_prime"] = rat_json(cp);
            j["params"] = {{"t", rat_str(params.t)}, {"R1", rat_str(params.R1)},
                           {"R2", rat_str(params.R2)}};
            j["c"] = rat_json(c);
            j["verified"] = cmp(form.c_prime, cp) == 0;
            emit(j, fl.out);
            return 0;
        }
    } catch (const ContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
