// harmonika: command-line surface for finite-group harmonic analysis.
//
// Subcommands: group show, transform, itransform, convolve, spectrum,
// state check, expect, project, operator check, cg, su2 expand, dft.
// All results are deterministic JSON (stable key order, 15-significant-digit
// floats); --format csv flattens the same JSON to path,value rows.
// Exit codes: 0 ok, 2 schema violation, 3 mathematical precondition failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <harmonika/harmonika.hpp>

namespace hk = harmonika;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[40];
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void flatten_csv(const hk::Json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_csv(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& v : j) flatten_csv(v, path + "[" + std::to_string(i++) + "]", out);
    } else {
        out += path;
        out += ",";
        if (j.is_number_float())
            out += format_double(j.get<double>());
        else if (j.is_string())
            out += j.get<std::string>();
        else
            out += j.dump();
        out += "\n";
    }
}

struct Output {
    std::string out_path;  // empty = stdout
    std::string format = "json";

    void emit(const hk::Json& j) const {
        std::string text;
        if (format == "csv")
            flatten_csv(j, "", text);
        else
            text = hk::dump_deterministic(j);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw hk::SchemaError("cannot open output file: " + out_path);
            f << text;
        }
    }
};

// ---------------------------------------------------------------------------
// Spin strings: "p/2" fractions or decimals ending in .0/.5, stored as twice-j.
// ---------------------------------------------------------------------------

int parse_twice_spin(const std::string& s) {
    try {
        std::size_t pos = 0;
        if (auto slash = s.find('/'); slash != std::string::npos) {
            int num = std::stoi(s.substr(0, slash), &pos);
            if (pos != slash) throw hk::SchemaError("bad spin: " + s);
            std::size_t pos2 = 0;
            int den = std::stoi(s.substr(slash + 1), &pos2);
            if (pos2 != s.size() - slash - 1 || den != 2) throw hk::SchemaError("bad spin: " + s);
            return num;
        }
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw hk::SchemaError("bad spin: " + s);
        double tv = 2.0 * v;
        if (std::abs(tv - std::llround(tv)) > 1e-9)
            throw hk::SchemaError("spin must be a half-integer: " + s);
        return static_cast<int>(std::llround(tv));
    } catch (const std::invalid_argument&) {
        throw hk::SchemaError("bad spin: " + s);
    } catch (const std::out_of_range&) {
        throw hk::SchemaError("bad spin: " + s);
    }
}

std::string spin_string(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

hk::AlgebraElement load_element(const std::string& path, const hk::GroupTable& g) {
    hk::AlgebraElement f = hk::element_from_json(hk::load_json_file(path));
    if (f.group != g.label)
        throw hk::SchemaError("file " + path + " is over group " + f.group + ", expected " + g.label);
    if (f.size() != g.order) throw hk::SchemaError("file " + path + " has wrong value count");
    return f;
}

/// Group descriptor from --group or, if absent, the input file's group field.
hk::GroupTable resolve_group(const std::string& descriptor, const std::string& in_path) {
    if (!descriptor.empty()) return hk::build_group(descriptor);
    hk::Json j = hk::load_json_file(in_path);
    if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
        throw hk::SchemaError("no --group given and no group field in " + in_path);
    return hk::build_group(j["group"].get<std::string>());
}

hk::Json cg_table_json(int tj1, int tj2) {
    hk::su2::CGTable t = hk::su2::clebsch_gordan(tj1, tj2);
    hk::Json entries = hk::Json::array();
    for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
        for (int tm = -tj; tm <= tj; tm += 2)
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                const int tm2 = tm - tm1;
                if (std::abs(tm2) > tj2) continue;
                double v = t.matrix(t.coupled_index(tj, tm), t.product_index(tm1, tm2));
                if (v == 0.0) continue;
                entries.push_back(hk::Json::array({spin_string(tm1), spin_string(tm2),
                                                   spin_string(tj), spin_string(tm), v}));
            }
    hk::Json j;
    j[spin_string(tj1) + "," + spin_string(tj2)] = std::move(entries);
    return j;
}

/// CG tables are memoized as plain JSON files when HARMONIKA_CACHE_DIR is set.
hk::Json cg_table_cached(int tj1, int tj2) {
    const char* dir = std::getenv("HARMONIKA_CACHE_DIR");
    if (!dir || !*dir) return cg_table_json(tj1, tj2);
    std::string path = std::string(dir) + "/cg_" + std::to_string(tj1) + "_" + std::to_string(tj2) + ".json";
    if (std::ifstream in(path); in) {
        hk::Json j = hk::Json::parse(in, nullptr, false);
        if (!j.is_discarded()) return j;
    }
    hk::Json j = cg_table_json(tj1, tj2);
    std::ofstream out(path, std::ios::binary);
    if (out) out << hk::dump_deterministic(j);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic analysis on finite groups and SU(2)"};
    app.require_subcommand(1);

    Output output;
    double tol = 1e-10;
    std::string group_desc, in_path, with_path, irrep_label, op_kind = "L";
    std::string j1_str, j2_str, a_str, b_str, r_str, s_str;
    bool inverse = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", output.out_path, "Write result to this file instead of stdout");
        cmd->add_option("--tol", tol, "Numerical tolerance")->capture_default_str();
        cmd->add_option("--format", output.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    auto* group_cmd = app.add_subcommand("group", "Group table operations");
    auto* group_show = group_cmd->add_subcommand("show", "Print a group multiplication table");
    group_show->add_option("--group", group_desc, "Group descriptor")->required();
    add_common(group_show);

    auto* transform = app.add_subcommand("transform", "Peter-Weyl forward transform");
    transform->add_option("--group", group_desc, "Group descriptor");
    transform->add_option("--in", in_path, "Function file")->required();
    add_common(transform);

    auto* itransform = app.add_subcommand("itransform", "Peter-Weyl inverse transform");
    itransform->add_option("--group", group_desc, "Group descriptor");
    itransform->add_option("--in", in_path, "Spectral blocks file")->required();
    add_common(itransform);

    auto* convolve_cmd = app.add_subcommand("convolve", "Convolve two functions");
    convolve_cmd->add_option("--group", group_desc, "Group descriptor");
    convolve_cmd->add_option("--in", in_path, "Left factor file")->required();
    convolve_cmd->add_option("--with", with_path, "Right factor file")->required();
    add_common(convolve_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of an algebra element");
    spectrum_cmd->add_option("--group", group_desc, "Group descriptor");
    spectrum_cmd->add_option("--in", in_path, "Function file")->required();
    add_common(spectrum_cmd);

    auto* state_cmd = app.add_subcommand("state", "Density state operations");
    auto* state_check = state_cmd->add_subcommand("check", "Validate a density state");
    state_check->add_option("--group", group_desc, "Group descriptor");
    state_check->add_option("--in", in_path, "State file")->required();
    add_common(state_check);

    auto* expect_cmd = app.add_subcommand("expect", "Expectation value of an observable");
    expect_cmd->add_option("--group", group_desc, "Group descriptor");
    expect_cmd->add_option("--in", in_path, "Observable file")->required();
    expect_cmd->add_option("--state", with_path, "State file")->required();
    add_common(expect_cmd);

    auto* project_cmd = app.add_subcommand("project", "Project onto a minimal two-sided ideal");
    project_cmd->add_option("--group", group_desc, "Group descriptor");
    project_cmd->add_option("--in", in_path, "Function file")->required();
    project_cmd->add_option("--irrep", irrep_label, "Irrep label")->required();
    add_common(project_cmd);

    auto* operator_cmd = app.add_subcommand("operator", "Convolution-type operator checks");
    auto* operator_check = operator_cmd->add_subcommand("check", "Unitarity check of a symbol");
    operator_check->add_option("--group", group_desc, "Group descriptor");
    operator_check->add_option("--in", in_path, "Symbol file")->required();
    operator_check->add_option("--kind", op_kind, "Operator kind")
        ->check(CLI::IsMember({"L", "R", "Rt"}))
        ->capture_default_str();
    add_common(operator_check);

    auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan table");
    cg_cmd->add_option("--j1", j1_str, "First spin")->required();
    cg_cmd->add_option("--j2", j2_str, "Second spin")->required();
    add_common(cg_cmd);

    auto* su2_cmd = app.add_subcommand("su2", "SU(2) operations");
    auto* su2_expand = su2_cmd->add_subcommand("expand", "Pointwise product expansion of D-matrix elements");
    su2_expand->add_option("--j1", j1_str, "First spin")->required();
    su2_expand->add_option("--a", a_str, "Row projection of the first factor")->required();
    su2_expand->add_option("--b", b_str, "Column projection of the first factor")->required();
    su2_expand->add_option("--j2", j2_str, "Second spin")->required();
    su2_expand->add_option("--r", r_str, "Row projection of the second factor")->required();
    su2_expand->add_option("--s", s_str, "Column projection of the second factor")->required();
    add_common(su2_expand);

    auto* dft_cmd = app.add_subcommand("dft", "Fourier transform on a finite abelian group");
    dft_cmd->add_option("--group", group_desc, "Group descriptor");
    dft_cmd->add_option("--in", in_path, "Input file")->required();
    dft_cmd->add_flag("--inverse", inverse, "Apply the inverse transform");
    add_common(dft_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (group_show->parsed()) {
            output.emit(hk::group_to_json(hk::build_group(group_desc)));
        } else if (transform->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            output.emit(hk::blocks_to_json(hk::peter_weyl_forward(g, irreps, load_element(in_path, g))));
        } else if (itransform->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            hk::SpectralBlocks b = hk::blocks_from_json(hk::load_json_file(in_path));
            if (b.group != g.label) throw hk::SchemaError("spectral blocks group mismatch");
            output.emit(hk::element_to_json(hk::peter_weyl_inverse(g, irreps, b)));
        } else if (convolve_cmd->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            output.emit(hk::element_to_json(
                hk::convolve(g, load_element(in_path, g), load_element(with_path, g))));
        } else if (spectrum_cmd->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            hk::Json entries = hk::Json::array();
            for (const auto& e : hk::spectrum(g, irreps, load_element(in_path, g))) {
                hk::Json row;
                row["value"] = hk::complex_to_json(e.value);
                row["multiplicity"] = e.multiplicity;
                entries.push_back(std::move(row));
            }
            hk::Json j;
            j["group"] = g.label;
            j["spectrum"] = std::move(entries);
            output.emit(j);
        } else if (state_check->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            hk::AlgebraElement f = load_element(in_path, g);
            hk::AlgebraElement adj = hk::involution(g, f);
            bool hermitian = (adj.values - f.values).cwiseAbs().maxCoeff() <= tol;
            hk::Complex tr = hk::trace_functional(g, f);
            bool positive = true;
            if (hermitian) {
                hk::SpectralBlocks b = hk::peter_weyl_forward(g, irreps, f);
                for (const auto& [label, blk] : b.blocks) {
                    Eigen::SelfAdjointEigenSolver<hk::CMatrix> es(((blk + blk.adjoint()) / 2.0).eval());
                    if (es.eigenvalues().minCoeff() < -tol) positive = false;
                }
            } else {
                positive = false;
            }
            hk::AlgebraElement sq = hk::convolve(g, f, f);
            bool pure = hermitian && positive && std::abs(tr - hk::Complex(1.0)) <= tol &&
                        hk::l2_norm(g, {g.label, sq.values - f.values}) <= tol;
            hk::Json j;
            j["hermitian"] = hermitian;
            j["trace"] = tr.real();
            j["positive"] = positive;
            j["pure"] = pure;
            output.emit(j);
        } else if (expect_cmd->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            hk::Observable a = hk::make_observable(g, load_element(in_path, g), tol);
            hk::DensityState rho = hk::make_state(g, irreps, load_element(with_path, g), tol);
            hk::Json j;
            j["value"] = hk::expectation(g, a, rho, tol);
            output.emit(j);
        } else if (project_cmd->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            auto irreps = hk::irreps_of(g);
            output.emit(hk::element_to_json(
                hk::project_ideal(g, irreps, load_element(in_path, g), irrep_label)));
        } else if (operator_check->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            hk::AlgebraElement f = load_element(in_path, g);
            // f+ * f deviation from delta: zero iff the operator is unitary,
            // identically for the L, R and Rt shells.
            hk::AlgebraElement prod = hk::convolve(g, hk::involution(g, f), f);
            double dev = (prod.values - hk::delta_element(g).values).cwiseAbs().maxCoeff();
            hk::Json j;
            j["kind"] = op_kind;
            j["unitary"] = dev <= tol;
            j["max_violation"] = dev;
            output.emit(j);
        } else if (cg_cmd->parsed()) {
            output.emit(cg_table_cached(parse_twice_spin(j1_str), parse_twice_spin(j2_str)));
        } else if (su2_expand->parsed()) {
            const int tj1 = parse_twice_spin(j1_str), tj2 = parse_twice_spin(j2_str);
            auto terms = hk::su2::pointwise_product_expand(tj1, parse_twice_spin(a_str),
                                                           parse_twice_spin(b_str), tj2,
                                                           parse_twice_spin(r_str), parse_twice_spin(s_str));
            hk::Json blocks;
            for (const auto& [tk, c] : terms) {
                hk::Json rows = hk::Json::array();
                for (int rr = 0; rr < c.rows(); ++rr) {
                    hk::Json row = hk::Json::array();
                    for (int cc = 0; cc < c.cols(); ++cc) row.push_back(c(rr, cc));
                    rows.push_back(std::move(row));
                }
                blocks[spin_string(tk)] = std::move(rows);
            }
            hk::Json j;
            j["J"] = spin_string(tj1 + tj2);
            j["blocks"] = std::move(blocks);
            output.emit(j);
        } else if (dft_cmd->parsed()) {
            hk::GroupTable g = resolve_group(group_desc, in_path);
            hk::DualGroup dg = hk::dual_group(g);
            if (inverse) {
                hk::DualFunction f = hk::dual_from_json(dg, hk::load_json_file(in_path));
                output.emit(hk::element_to_json(hk::pontryagin_inverse(dg, f)));
            } else {
                output.emit(hk::dual_to_json(dg, hk::pontryagin_forward(dg, load_element(in_path, g))));
            }
        }
    } catch (const hk::PreconditionError& e) {
        hk::Json err;
        err["code"] = "precondition";
        err["message"] = e.what();
        err["max_violation"] = e.max_violation;
        std::cout << hk::dump_deterministic(err);
        return 3;
    } catch (const hk::SchemaError& e) {
        hk::Json err;
        err["code"] = "schema";
        err["message"] = e.what();
        std::cout << hk::dump_deterministic(err);
        return 2;
    }
    return 0;
}
