#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sicq/sicq.h"

#include "formats.hpp"
#include "jwriter.hpp"

// Exit codes: 0 success, 1 usage or input error, 2 search budget exhausted,
// 3 verification or validity failure. Reports go to stdout as JSON (or CSV
// with --format csv); artifacts go to --out. Identical invocations produce
// identical bytes.

namespace {

constexpr double kDefaultTol = 1e-10;

int exit_code_for(sicq_status st) {
    switch (st) {
        case SICQ_OK:
            return 0;
        case SICQ_ERR_VERIFICATION:
        case SICQ_ERR_VALIDITY:
            return 3;
        default:
            return 1;
    }
}

int fail(const char* cmd, sicq_status st) {
    std::fprintf(stderr, "sicq %s: %s\n", cmd, sicq_last_error());
    return exit_code_for(st);
}

int fail_msg(const char* cmd, const std::string& msg) {
    std::fprintf(stderr, "sicq %s: %s\n", cmd, msg.c_str());
    return 1;
}

std::string fmt17(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

void emit(const std::string& body, const std::string& out_path) {
    std::fputs(body.c_str(), stdout);
    std::fputc('\n', stdout);
    if (!out_path.empty()) write_file(out_path, body);
}

struct SicHandle {
    sicq_sic* ptr = nullptr;
    ~SicHandle() { sicq_sic_free(ptr); }
};

void config_header(JsonWriter& w, const char* command) {
    w.begin_obj();
    w.key("version");
    w.str(sicq_version());
    w.key("config");
    w.begin_obj();
    w.key("command");
    w.str(command);
}

// ---- search ------------------------------------------------------------

struct SearchArgs {
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::size_t max_restarts = 50;
    std::size_t max_iters = 20000;
    double threshold = 1e-16;
    double tol = kDefaultTol;
    std::string out;
    std::string format = "json";
};

int run_search(const SearchArgs& a) {
    std::vector<double> fid(2 * a.d);
    double objective = 0.0;
    std::size_t restarts = 0, iters = 0;
    int conv = 0;
    sicq_status st = sicq_search(a.d, a.seed, a.max_restarts, a.max_iters, a.threshold,
                                 fid.data(), &objective, &restarts, &iters, &conv);
    if (st != SICQ_OK) return fail("search", st);

    double residual = 0.0;
    bool verified = false;
    if (conv) {
        sicq_verify_report vr{};
        SicHandle h;
        st = sicq_sic_from_fiducial(a.d, fid.data(), a.tol, &vr, &h.ptr);
        if (st == SICQ_OK) {
            verified = true;
            residual = vr.residual;
        } else if (st == SICQ_ERR_VERIFICATION) {
            residual = vr.residual;
        } else {
            return fail("search", st);
        }
    }

    if (a.format == "csv") {
        std::string csv;
        csv += "key,value\n";
        csv += "d," + std::to_string(a.d) + "\n";
        csv += "seed," + std::to_string(a.seed) + "\n";
        csv += "converged," + std::string(conv ? "true" : "false") + "\n";
        csv += "objective," + fmt17(objective) + "\n";
        csv += "restarts_used," + std::to_string(restarts) + "\n";
        csv += "iterations," + std::to_string(iters) + "\n";
        if (verified) csv += "residual," + fmt17(residual) + "\n";
        std::fputs(csv.c_str(), stdout);
    } else {
        JsonWriter w;
        config_header(w, "search");
        w.key("d");
        w.uinteger(a.d);
        w.key("seed");
        w.uinteger(a.seed);
        w.key("max_restarts");
        w.uinteger(a.max_restarts);
        w.key("max_iters");
        w.uinteger(a.max_iters);
        w.key("success_threshold");
        w.num(a.threshold);
        w.key("tol");
        w.num(a.tol);
        w.key("format");
        w.str(a.format);
        w.key("out");
        if (a.out.empty()) {
            w.null();
        } else {
            w.str(a.out);
        }
        w.end_obj();
        w.key("result");
        w.begin_obj();
        w.key("converged");
        w.boolean(conv != 0);
        w.key("objective");
        w.num(objective);
        w.key("restarts_used");
        w.uinteger(restarts);
        w.key("iterations");
        w.uinteger(iters);
        w.key("residual");
        if (verified) {
            w.num(residual);
        } else {
            w.null();
        }
        w.key("fiducial");
        write_pairs(w, fid.data(), a.d);
        w.key("tau_convention");
        w.str(kTauConvention);
        w.end_obj();
        w.end_obj();
        std::fputs(w.take().c_str(), stdout);
        std::fputc('\n', stdout);
    }

    if (conv && verified && !a.out.empty()) {
        write_file(a.out, fiducial_json(a.d, fid.data(), residual));
    }
    if (!conv) return 2;
    return verified ? 0 : 3;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string in;
    double tol = kDefaultTol;
    std::string out;
    std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
    FiducialFile f;
    try {
        f = load_fiducial(a.in);
    } catch (const std::exception& e) {
        return fail_msg("verify", e.what());
    }
    sicq_verify_report vr{};
    SicHandle h;
    const sicq_status st = sicq_sic_from_fiducial(f.d, f.fiducial.data(), a.tol, &vr, &h.ptr);
    if (st != SICQ_OK && st != SICQ_ERR_VERIFICATION) return fail("verify", st);
    const bool pass = st == SICQ_OK;

    if (a.format == "csv") {
        std::string csv;
        csv += "key,value\n";
        csv += "d," + std::to_string(f.d) + "\n";
        csv += "residual," + fmt17(vr.residual) + "\n";
        csv += "worst_i," + std::to_string(vr.worst_i) + "\n";
        csv += "worst_j," + std::to_string(vr.worst_j) + "\n";
        csv += "worst_overlap_sq," + fmt17(vr.worst_overlap_sq) + "\n";
        csv += "resolution_defect," + fmt17(vr.resolution_defect) + "\n";
        csv += "gram_min_singular," + fmt17(vr.gram_min_singular) + "\n";
        csv += "pass," + std::string(pass ? "true" : "false") + "\n";
        std::fputs(csv.c_str(), stdout);
        if (!a.out.empty()) write_file(a.out, csv);
    } else {
        JsonWriter w;
        config_header(w, "verify");
        w.key("in");
        w.str(a.in);
        w.key("tol");
        w.num(a.tol);
        w.key("format");
        w.str(a.format);
        w.end_obj();
        w.key("result");
        w.begin_obj();
        w.key("d");
        w.uinteger(f.d);
        w.key("residual");
        w.num(vr.residual);
        w.key("worst_i");
        w.uinteger(vr.worst_i);
        w.key("worst_j");
        w.uinteger(vr.worst_j);
        w.key("worst_overlap_sq");
        w.num(vr.worst_overlap_sq);
        w.key("resolution_defect");
        w.num(vr.resolution_defect);
        w.key("gram_min_singular");
        w.num(vr.gram_min_singular);
        w.key("equiangular");
        w.boolean(vr.equiangular != 0);
        w.key("resolves_identity");
        w.boolean(vr.resolves_identity != 0);
        w.key("gram_nonsingular");
        w.boolean(vr.gram_nonsingular != 0);
        w.key("pass");
        w.boolean(pass);
        w.end_obj();
        w.end_obj();
        emit(w.take(), a.out);
    }
    return pass ? 0 : 3;
}

// ---- convert -----------------------------------------------------------

struct ConvertArgs {
    std::string fiducial;
    std::string in;
    std::string direction;
    bool normalize = false;
    double tol = kDefaultTol;
    std::string out;
    std::string format = "json";
};

int convert_config(JsonWriter& w, const ConvertArgs& a) {
    w.key("fiducial");
    w.str(a.fiducial);
    w.key("in");
    w.str(a.in);
    w.key("direction");
    w.str(a.direction);
    w.key("normalize");
    w.boolean(a.normalize);
    w.key("tol");
    w.num(a.tol);
    w.key("format");
    w.str(a.format);
    w.key("out");
    if (a.out.empty()) {
        w.null();
    } else {
        w.str(a.out);
    }
    w.end_obj();
    return 0;
}

int run_convert(const ConvertArgs& a) {
    FiducialFile f;
    try {
        f = load_fiducial(a.fiducial);
    } catch (const std::exception& e) {
        return fail_msg("convert", e.what());
    }
    SicHandle h;
    sicq_status st = sicq_sic_from_fiducial(f.d, f.fiducial.data(), a.tol, nullptr, &h.ptr);
    if (st != SICQ_OK) return fail("convert", st);
    const std::size_t d = f.d;
    const std::size_t m = d * d;

    if (a.direction == "to-probs") {
        if (a.normalize) return fail_msg("convert", "--normalize applies to from-probs only");
        StateFile s;
        try {
            s = load_state(a.in);
        } catch (const std::exception& e) {
            return fail_msg("convert", e.what());
        }
        if (s.d != d) {
            return fail_msg("convert", "state dimension " + std::to_string(s.d) +
                                           " does not match fiducial dimension " +
                                           std::to_string(d));
        }
        std::vector<double> probs(m);
        st = sicq_to_probs(h.ptr, s.rho.data(), probs.data());
        if (st != SICQ_OK) return fail("convert", st);
        double purity = 0.0;
        st = sicq_purity_from_probs(d, probs.data(), &purity);
        if (st != SICQ_OK) return fail("convert", st);

        if (a.format == "csv") {
            std::string csv = "i,p\n";
            for (std::size_t i = 0; i < m; ++i) {
                csv += std::to_string(i) + "," + fmt17(probs[i]) + "\n";
            }
            std::fputs(csv.c_str(), stdout);
        } else {
            JsonWriter w;
            config_header(w, "convert");
            convert_config(w, a);
            w.key("result");
            w.begin_obj();
            w.key("d");
            w.uinteger(d);
            w.key("probs");
            w.begin_arr();
            for (double p : probs) w.num(p);
            w.end_arr();
            w.key("purity");
            w.num(purity);
            w.end_obj();
            w.end_obj();
            std::fputs(w.take().c_str(), stdout);
            std::fputc('\n', stdout);
        }
        if (!a.out.empty()) write_file(a.out, probs_json(d, probs));
        return 0;
    }

    if (a.direction == "from-probs") {
        ProbsFile p;
        try {
            p = load_probs(a.in);
        } catch (const std::exception& e) {
            return fail_msg("convert", e.what());
        }
        if (p.d != d) {
            return fail_msg("convert", "probability dimension " + std::to_string(p.d) +
                                           " does not match fiducial dimension " +
                                           std::to_string(d));
        }
        if (a.normalize) {
            double sum = 0.0;
            for (double v : p.probs) sum += v;
            if (sum <= 0.0) return fail_msg("convert", "--normalize: entries sum to zero");
            for (double& v : p.probs) v /= sum;
        }
        std::vector<double> rho(2 * m);
        double min_eig = 0.0;
        st = sicq_from_probs(h.ptr, p.probs.data(), rho.data(), &min_eig);
        if (st != SICQ_OK && st != SICQ_ERR_VALIDITY) return fail("convert", st);
        const bool valid = st == SICQ_OK;

        if (a.format == "csv") {
            std::string csv;
            csv += "key,value\n";
            csv += "valid," + std::string(valid ? "true" : "false") + "\n";
            csv += "min_eigenvalue," + fmt17(min_eig) + "\n";
            if (valid) {
                csv += "row,col,re,im\n";
                for (std::size_t r = 0; r < d; ++r) {
                    for (std::size_t c = 0; c < d; ++c) {
                        csv += std::to_string(r) + "," + std::to_string(c) + "," +
                               fmt17(rho[2 * (r * d + c)]) + "," +
                               fmt17(rho[2 * (r * d + c) + 1]) + "\n";
                    }
                }
            }
            std::fputs(csv.c_str(), stdout);
        } else {
            JsonWriter w;
            config_header(w, "convert");
            convert_config(w, a);
            w.key("result");
            w.begin_obj();
            w.key("d");
            w.uinteger(d);
            w.key("valid");
            w.boolean(valid);
            w.key("min_eigenvalue");
            w.num(min_eig);
            w.key("rho");
            if (valid) {
                write_matrix(w, rho.data(), d);
            } else {
                w.null();
            }
            w.end_obj();
            w.end_obj();
            std::fputs(w.take().c_str(), stdout);
            std::fputc('\n', stdout);
        }
        if (valid && !a.out.empty()) write_file(a.out, state_json(d, rho.data()));
        if (!valid) {
            std::fprintf(stderr, "sicq convert: %s\n", sicq_last_error());
            return 3;
        }
        return 0;
    }

    return fail_msg("convert", "--direction must be to-probs or from-probs");
}

// ---- urgleichung -------------------------------------------------------

struct UrgleichungArgs {
    std::string fiducial;
    std::string state;
    std::uint64_t basis_seed = 0;
    double tol = kDefaultTol;
    std::string out;
    std::string format = "json";
};

int run_urgleichung(const UrgleichungArgs& a) {
    FiducialFile f;
    StateFile s;
    try {
        f = load_fiducial(a.fiducial);
        s = load_state(a.state);
    } catch (const std::exception& e) {
        return fail_msg("urgleichung", e.what());
    }
    if (s.d != f.d) {
        return fail_msg("urgleichung", "state dimension " + std::to_string(s.d) +
                                           " does not match fiducial dimension " +
                                           std::to_string(f.d));
    }
    SicHandle h;
    sicq_status st = sicq_sic_from_fiducial(f.d, f.fiducial.data(), a.tol, nullptr, &h.ptr);
    if (st != SICQ_OK) return fail("urgleichung", st);

    const std::size_t d = f.d;
    std::vector<double> q(d), pc(d), born(d);
    double max_born_error = 0.0, max_abs_gap = 0.0;
    st = sicq_urgleichung(h.ptr, s.rho.data(), a.basis_seed, q.data(), pc.data(), born.data(),
                          &max_born_error, &max_abs_gap);
    if (st != SICQ_OK) return fail("urgleichung", st);
    // The pass gate is part of the exit-code contract, independent of --tol.
    const bool pass = max_born_error < 1e-10;

    if (a.format == "csv") {
        std::string csv = "j,q,p_classical,born\n";
        for (std::size_t j = 0; j < d; ++j) {
            csv += std::to_string(j) + "," + fmt17(q[j]) + "," + fmt17(pc[j]) + "," +
                   fmt17(born[j]) + "\n";
        }
        csv += "max_born_error," + fmt17(max_born_error) + ",,\n";
        csv += "max_abs_gap," + fmt17(max_abs_gap) + ",,\n";
        std::fputs(csv.c_str(), stdout);
        if (!a.out.empty()) write_file(a.out, csv);
    } else {
        JsonWriter w;
        config_header(w, "urgleichung");
        w.key("fiducial");
        w.str(a.fiducial);
        w.key("state");
        w.str(a.state);
        w.key("basis_seed");
        w.uinteger(a.basis_seed);
        w.key("tol");
        w.num(a.tol);
        w.key("format");
        w.str(a.format);
        w.end_obj();
        w.key("result");
        w.begin_obj();
        w.key("d");
        w.uinteger(d);
        w.key("q");
        w.begin_arr();
        for (double v : q) w.num(v);
        w.end_arr();
        w.key("p_classical");
        w.begin_arr();
        for (double v : pc) w.num(v);
        w.end_arr();
        w.key("born_direct");
        w.begin_arr();
        for (double v : born) w.num(v);
        w.end_arr();
        w.key("max_born_error");
        w.num(max_born_error);
        w.key("max_abs_gap");
        w.num(max_abs_gap);
        w.key("pass");
        w.boolean(pass);
        w.end_obj();
        w.end_obj();
        emit(w.take(), a.out);
    }
    return pass ? 0 : 3;
}

// ---- definetti ----------------------------------------------------------

struct DefinettiArgs {
    std::string mixture;
    std::size_t n = 2;
    std::uint64_t seed = 0;
    std::size_t trials = 100000;
    std::string fiducial;  // optional; internal search when empty
    double tol = kDefaultTol;
    std::string out;
    std::string format = "json";
};

int run_definetti(const DefinettiArgs& a) {
    MixtureFile mx;
    try {
        mx = load_mixture(a.mixture);
    } catch (const std::exception& e) {
        return fail_msg("definetti", e.what());
    }
    const std::size_t d = mx.d;
    const std::size_t k = mx.weights.size();

    // Extendability builds n+1 systems, so the cap applies one level up.
    std::size_t dim_np1 = 1;
    bool over = false;
    for (std::size_t i = 0; i < a.n + 1; ++i) {
        if (dim_np1 > 4096 / d) {
            over = true;
            break;
        }
        dim_np1 *= d;
    }
    if (over || dim_np1 > 4096) {
        return fail_msg("definetti", "d^(n+1) = " + std::to_string(d) + "^" +
                                         std::to_string(a.n + 1) +
                                         " exceeds the dense cap 4096; lower --n");
    }

    double max_asym = 0.0, max_incons = 0.0;
    sicq_status st = sicq_definetti_check(d, k, mx.weights.data(), mx.components.data(), a.n,
                                          &max_asym, &max_incons);
    if (st != SICQ_OK) return fail("definetti", st);

    SicHandle h;
    if (a.fiducial.empty()) {
        std::vector<double> fid(2 * d);
        int conv = 0;
        st = sicq_search(d, a.seed, 50, 20000, 1e-16, fid.data(), nullptr, nullptr, nullptr,
                         &conv);
        if (st != SICQ_OK) return fail("definetti", st);
        if (!conv) {
            return fail_msg("definetti",
                            "internal SIC search did not converge; pass --fiducial");
        }
        st = sicq_sic_from_fiducial(d, fid.data(), a.tol, nullptr, &h.ptr);
        if (st != SICQ_OK) return fail("definetti", st);
    } else {
        FiducialFile f;
        try {
            f = load_fiducial(a.fiducial);
        } catch (const std::exception& e) {
            return fail_msg("definetti", e.what());
        }
        if (f.d != d) {
            return fail_msg("definetti", "fiducial dimension " + std::to_string(f.d) +
                                             " does not match mixture dimension " +
                                             std::to_string(d));
        }
        st = sicq_sic_from_fiducial(d, f.fiducial.data(), a.tol, nullptr, &h.ptr);
        if (st != SICQ_OK) return fail("definetti", st);
    }

    std::size_t n_used = 0;
    double law_diff = 0.0, tv = 0.0;
    st = sicq_definetti_as_if(h.ptr, k, mx.weights.data(), mx.components.data(), a.n, a.seed,
                              a.trials, &n_used, &law_diff, &tv);
    if (st != SICQ_OK) return fail("definetti", st);

    if (a.format == "csv") {
        std::string csv;
        csv += "key,value\n";
        csv += "d," + std::to_string(d) + "\n";
        csv += "k," + std::to_string(k) + "\n";
        csv += "n," + std::to_string(a.n) + "\n";
        csv += "max_asymmetry," + fmt17(max_asym) + "\n";
        csv += "max_inconsistency," + fmt17(max_incons) + "\n";
        csv += "as_if_n_used," + std::to_string(n_used) + "\n";
        csv += "as_if_trials," + std::to_string(a.trials) + "\n";
        csv += "exact_law_max_abs_diff," + fmt17(law_diff) + "\n";
        csv += "tv_distance," + fmt17(tv) + "\n";
        std::fputs(csv.c_str(), stdout);
        if (!a.out.empty()) write_file(a.out, csv);
    } else {
        JsonWriter w;
        config_header(w, "definetti");
        w.key("mixture");
        w.str(a.mixture);
        w.key("n");
        w.uinteger(a.n);
        w.key("seed");
        w.uinteger(a.seed);
        w.key("trials");
        w.uinteger(a.trials);
        w.key("fiducial");
        if (a.fiducial.empty()) {
            w.null();
        } else {
            w.str(a.fiducial);
        }
        w.key("tol");
        w.num(a.tol);
        w.key("format");
        w.str(a.format);
        w.end_obj();
        w.key("result");
        w.begin_obj();
        w.key("d");
        w.uinteger(d);
        w.key("k");
        w.uinteger(k);
        w.key("n");
        w.uinteger(a.n);
        w.key("max_asymmetry");
        w.num(max_asym);
        w.key("max_inconsistency");
        w.num(max_incons);
        w.key("as_if");
        w.begin_obj();
        w.key("n_requested");
        w.uinteger(a.n);
        w.key("n_used");
        w.uinteger(n_used);
        w.key("trials");
        w.uinteger(a.trials);
        w.key("exact_law_max_abs_diff");
        w.num(law_diff);
        w.key("tv_distance");
        w.num(tv);
        w.end_obj();
        w.end_obj();
        w.end_obj();
        emit(w.take(), a.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIC toolkit: search, verification, and the probability-only "
                 "representation of quantum states"};
    app.require_subcommand(1);

    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search", "find a fiducial by frame-potential descent");
    search->add_option("--d", sa.d, "Hilbert-space dimension")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    search->add_option("--seed", sa.seed, "base PRNG seed");
    search->add_option("--max-restarts", sa.max_restarts, "random restarts budget");
    search->add_option("--max-iters", sa.max_iters, "iteration budget per restart");
    search->add_option("--threshold", sa.threshold, "objective value declared converged");
    search->add_option("--tol", sa.tol, "verification tolerance for the found SIC");
    search->add_option("--out", sa.out, "write the fiducial file here");
    search->add_option("--format", sa.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "check a fiducial file's orbit");
    verify->add_option("--in", va.in, "fiducial file")->required();
    verify->add_option("--tol", va.tol, "equiangularity tolerance");
    verify->add_option("--out", va.out, "also write the report here");
    verify->add_option("--format", va.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    ConvertArgs ca;
    CLI::App* convert = app.add_subcommand("convert", "map states to SIC probabilities and back");
    convert->add_option("--fiducial", ca.fiducial, "fiducial file")->required();
    convert->add_option("--in", ca.in, "input state or probability file")->required();
    convert->add_option("--direction", ca.direction, "to-probs or from-probs")
        ->required()
        ->check(CLI::IsMember({"to-probs", "from-probs"}));
    convert->add_flag("--normalize", ca.normalize,
                      "rescale input probabilities to sum to 1 (from-probs only)");
    convert->add_option("--tol", ca.tol, "fiducial verification tolerance");
    convert->add_option("--out", ca.out, "write the converted artifact here");
    convert->add_option("--format", ca.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    UrgleichungArgs ua;
    CLI::App* urg = app.add_subcommand(
        "urgleichung", "deformed vs classical total probability for a ground measurement");
    urg->add_option("--fiducial", ua.fiducial, "fiducial file")->required();
    urg->add_option("--state", ua.state, "state file")->required();
    urg->add_option("--basis-seed,--seed", ua.basis_seed, "seed for the ground basis");
    urg->add_option("--tol", ua.tol, "largest accepted deviation from direct Born values");
    urg->add_option("--out", ua.out, "also write the report here");
    urg->add_option("--format", ua.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    DefinettiArgs da;
    CLI::App* def = app.add_subcommand("definetti", "exchangeable-state diagnostics");
    def->add_option("--mixture", da.mixture, "mixture file")->required();
    def->add_option("--n", da.n, "number of systems")->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    def->add_option("--seed", da.seed, "sampling seed (and internal search seed)");
    def->add_option("--trials", da.trials, "sampling trials");
    def->add_option("--fiducial", da.fiducial,
                    "fiducial file (omitted: internal search at --seed)");
    def->add_option("--tol", da.tol, "fiducial verification tolerance");
    def->add_option("--out", da.out, "also write the report here");
    def->add_option("--format", da.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (search->parsed()) return run_search(sa);
    if (verify->parsed()) return run_verify(va);
    if (convert->parsed()) return run_convert(ca);
    if (urg->parsed()) return run_urgleichung(ua);
    if (def->parsed()) return run_definetti(da);
    return 1;
}
