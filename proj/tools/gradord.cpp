#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gradord/conductor_oracle.hpp"
#include "gradord/io.hpp"

using namespace gradord;
using nlohmann::json;

namespace {

struct Output {
    std::string out_path;
    std::string format = "text";

    void emit(const std::string& text, const json& machine) const {
        std::string payload = format == "json" ? machine.dump() + "\n" : text;
        std::cout << payload;
        if (!out_path.empty()) write_file(out_path, payload);
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.out_path, "also write the report to this file");
    cmd->add_option("--format", out.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

GraduatedOrder load_order(const std::string& path) {
    return parse_order_document(read_file(path));
}

CharacterTable load_group(const std::string& path) {
    return parse_group_document(read_file(path));
}

std::vector<ChiProfile> load_profiles(const std::string& path) {
    return parse_profiles_document(read_file(path));
}

json command_json(const std::string& name) {
    json j;
    j["command"] = name;
    return j;
}

std::string matrix_report(const GraduatedOrder& order, const IdealMatrix& m) {
    return write_matrix_document(order.blocks(), m);
}

json matrix_json(const std::string& command, const GraduatedOrder& order, const IdealMatrix& m) {
    json j = command_json(command);
    j["result"] = matrix_to_json(order.backend(), order.blocks(), m);
    return j;
}

json order_json(const std::string& command, const GraduatedOrder& order) {
    json j = command_json(command);
    j["result"] = order_to_json(order);
    return j;
}

std::string join_rows(const std::vector<int>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << rows[i];
    }
    return os.str();
}

int run_app(int argc, char** argv) {
    CLI::App app{"exact calculus of graduated orders and central conductors"};
    app.require_subcommand(1);

    // ---- order ----------------------------------------------------------
    CLI::App* order_cmd = app.add_subcommand("order", "standard-form graduated orders");
    order_cmd->require_subcommand(1);
    struct {
        std::string in, in2;
        Output out;
    } ord;

    auto add_order_sub = [&](const std::string& name, const std::string& desc, bool needs_in2) {
        CLI::App* c = order_cmd->add_subcommand(name, desc);
        c->add_option("--in", ord.in, "order file")->required();
        if (needs_in2) c->add_option("--in2", ord.in2, "second order file")->required();
        add_output_flags(c, ord.out);
        return c;
    };

    CLI::App* c_validate = add_order_sub("validate", "check the standard-form conditions", false);
    CLI::App* c_radical = add_order_sub("radical", "Jacobson radical", false);
    CLI::App* c_quotient = add_order_sub("quotient", "semisimple quotient by the radical", false);
    CLI::App* c_different = add_order_sub("different", "inverse different (trace dual)", false);
    CLI::App* c_conductor =
        add_order_sub("conductor", "conductor into a self-dual suborder", false);
    CLI::App* c_intersect = add_order_sub("intersect", "intersection of two orders", true);
    CLI::App* c_hull = add_order_sub("hull", "graduated hull by extremal covers", false);
    CLI::App* c_extremal = add_order_sub("extremal", "staircase-shape test", false);
    CLI::App* c_hereditary =
        add_order_sub("hereditary", "obstruction: is the radical non-invertible", false);
    CLI::App* c_principalize =
        add_order_sub("principalize", "principal suborder on the same frame", false);

    // ---- group ----------------------------------------------------------
    CLI::App* group_cmd = app.add_subcommand("group", "group algebra computations");
    group_cmd->require_subcommand(1);
    struct {
        std::string group, name;
        long long prime = 3;
        int precision = 8;
        long long auto_power = 1;
        int eta = -1;
        Output out;
    } grp;

    CLI::App* c_orbits = group_cmd->add_subcommand("orbits", "p-adic Galois orbits of Irr(H)");
    CLI::App* c_idem = group_cmd->add_subcommand("idempotents", "primitive and orbit idempotents");
    CLI::App* c_inv = group_cmd->add_subcommand("invariants", "w and v under an automorphism");
    CLI::App* c_oracle =
        group_cmd->add_subcommand("conductor-oracle", "brute-force conductor of a maximal order");
    for (CLI::App* c : {c_orbits, c_idem, c_inv, c_oracle}) {
        c->add_option("--group", grp.group, "group table file")->required();
        c->add_option("--prime", grp.prime, "odd prime p")->required();
        add_output_flags(c, grp.out);
    }
    c_inv->add_option("--auto", grp.auto_power, "automorphism x -> x^k (default identity)");
    c_inv->add_option("--eta", grp.eta, "restrict to one character row");
    c_oracle->add_option("--precision", grp.precision, "p-adic modeling precision")
        ->check(CLI::Range(4, 64));
    CLI::App* c_bundled = group_cmd->add_subcommand("bundled", "write a bundled group table");
    c_bundled->add_option("--name", grp.name, "C<n>, S3, D4, Q8 or A4")->required();
    add_output_flags(c_bundled, grp.out);

    // ---- iwasawa --------------------------------------------------------
    CLI::App* iw_cmd = app.add_subcommand("iwasawa", "central conductor exponents");
    iw_cmd->require_subcommand(1);
    struct {
        std::string profile;
        long long prime = 3;
        std::vector<long long> tower;
        Output out;
    } iw;

    CLI::App* c_rchi = iw_cmd->add_subcommand("r-chi", "height-one prime exponent r_chi");
    CLI::App* c_schi = iw_cmd->add_subcommand("s-chi", "Schur index s_chi");
    CLI::App* c_central =
        iw_cmd->add_subcommand("central-conductor", "per-character central conductor data");
    for (CLI::App* c : {c_rchi, c_schi, c_central}) {
        c->add_option("--profile", iw.profile, "profile file")->required();
        c->add_option("--prime", iw.prime, "odd prime p");
        add_output_flags(c, iw.out);
    }
    CLI::App* c_tower = iw_cmd->add_subcommand("tower-check", "different-exponent additivity");
    c_tower->add_option("--tower", iw.tower, "three full cyclotomic layers N1 N2 N3")
        ->expected(3)
        ->required();
    c_tower->add_option("--prime", iw.prime, "odd prime p")->required();
    add_output_flags(c_tower, iw.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // ---- order dispatch --------------------------------------------------
    if (c_validate->parsed()) {
        try {
            GraduatedOrder o = load_order(ord.in);
            json j = command_json("order.validate");
            j["valid"] = true;
            j["result"] = order_to_json(o);
            ord.out.emit("valid standard form\n" + write_order_document(o), j);
            return 0;
        } catch (const DomainError& e) {
            json j = command_json("order.validate");
            j["valid"] = false;
            j["violation"] = e.what();
            ord.out.emit(std::string("invalid: ") + e.what() + "\n", j);
            return 1;
        }
    }
    if (c_radical->parsed()) {
        GraduatedOrder o = load_order(ord.in);
        IdealMatrix m = jacobson_radical(o);
        ord.out.emit(matrix_report(o, m), matrix_json("order.radical", o, m));
        return 0;
    }
    if (c_quotient->parsed()) {
        GraduatedOrder o = load_order(ord.in);
        auto q = radical_quotient(o);
        std::ostringstream os;
        json j = command_json("order.quotient");
        json blocks = json::array();
        os << "semisimple quotient with " << q.size() << " blocks\n";
        for (const auto& b : q) {
            os << "block of size " << b.size << ": " << b.algebra << "\n";
            blocks.push_back({{"size", b.size}, {"algebra", b.algebra}});
        }
        j["blocks"] = blocks;
        ord.out.emit(os.str(), j);
        return 0;
    }
    if (c_different->parsed() || c_conductor->parsed()) {
        GraduatedOrder o = load_order(ord.in);
        bool conductor = c_conductor->parsed();
        IdealMatrix m = conductor ? conductor_into_selfdual(o) : inverse_different(o);
        std::string name = conductor ? "order.conductor" : "order.different";
        std::string head = conductor ? "conductor into any self-dual suborder\n" : "";
        ord.out.emit(head + matrix_report(o, m), matrix_json(name, o, m));
        return 0;
    }
    if (c_intersect->parsed()) {
        GraduatedOrder meet = intersect_orders(load_order(ord.in), load_order(ord.in2));
        ord.out.emit(write_order_document(meet), order_json("order.intersect", meet));
        return 0;
    }
    if (c_hull->parsed()) {
        GraduatedOrder hull = graduated_hull(load_order(ord.in));
        ord.out.emit(write_order_document(hull), order_json("order.hull", hull));
        return 0;
    }
    if (c_extremal->parsed()) {
        bool ex = is_extremal(load_order(ord.in));
        json j = command_json("order.extremal");
        j["extremal"] = ex;
        ord.out.emit(std::string("extremal: ") + (ex ? "yes" : "no") + "\n", j);
        return 0;
    }
    if (c_hereditary->parsed()) {
        bool obstructed = hereditary_obstruction(load_order(ord.in));
        json j = command_json("order.hereditary");
        j["obstructed"] = obstructed;
        ord.out.emit(std::string("hereditary obstruction: ") + (obstructed ? "yes" : "no") + "\n",
                     j);
        return 0;
    }
    if (c_principalize->parsed()) {
        GraduatedOrder p = principalize(load_order(ord.in));
        ord.out.emit(write_order_document(p), order_json("order.principalize", p));
        return 0;
    }

    // ---- group dispatch ---------------------------------------------------
    if (c_bundled->parsed()) {
        CharacterTable t = CharacterTable::bundled(grp.name);
        json j = command_json("group.bundled");
        j["document"] = write_group_document(t);
        grp.out.emit(write_group_document(t), j);
        return 0;
    }
    if (c_orbits->parsed()) {
        CharacterTable t = load_group(grp.group);
        auto orbits = p_adic_orbits(t, grp.prime);
        std::ostringstream os;
        json j = command_json("group.orbits");
        j["p"] = grp.prime;
        json jo = json::array();
        for (size_t k = 0; k < orbits.size(); ++k) {
            os << "orbit " << k << ": rows " << join_rows(orbits[k]) << " | degree "
               << t.row(orbits[k][0]).degree << " | size " << orbits[k].size() << "\n";
            jo.push_back(orbits[k]);
        }
        j["orbits"] = jo;
        grp.out.emit(os.str(), j);
        return 0;
    }
    if (c_idem->parsed()) {
        CharacterTable t = load_group(grp.group);
        auto orbits = p_adic_orbits(t, grp.prime);
        std::ostringstream os;
        json j = command_json("group.idempotents");
        j["p"] = grp.prime;
        json jprim = json::array();
        for (int r = 0; r < t.row_count(); ++r) {
            GroupAlgebraElement e = primitive_idempotent(t, r);
            os << "e " << r << ":";
            json coeffs = json::array();
            for (int h = 0; h < t.group().order(); ++h) {
                os << " [" << e.coefficient(h).str() << "]";
                coeffs.push_back(e.coefficient(h).str());
            }
            os << "\n";
            jprim.push_back({{"row", r}, {"coefficients", coeffs}});
        }
        json je = json::array();
        for (size_t k = 0; k < orbits.size(); ++k) {
            GroupAlgebraElement eps = epsilon_idempotent(t, orbits[k]);
            os << "epsilon " << k << " (rows " << join_rows(orbits[k]) << "):";
            json coeffs = json::array();
            for (int h = 0; h < t.group().order(); ++h) {
                os << " [" << eps.coefficient(h).str() << "]";
                coeffs.push_back(eps.coefficient(h).str());
            }
            os << "\n";
            je.push_back({{"rows", orbits[k]}, {"coefficients", coeffs}});
        }
        j["primitive"] = jprim;
        j["epsilon"] = je;
        grp.out.emit(os.str(), j);
        return 0;
    }
    if (c_inv->parsed()) {
        CharacterTable t = load_group(grp.group);
        if (grp.eta >= t.row_count())
            throw DomainError("--eta out of range: table has " +
                              std::to_string(t.row_count()) + " rows");
        std::vector<int> alpha = t.group().power_map(grp.auto_power);
        std::ostringstream os;
        json j = command_json("group.invariants");
        j["p"] = grp.prime;
        j["auto_power"] = grp.auto_power;
        json rows = json::array();
        for (int r = 0; r < t.row_count(); ++r) {
            if (grp.eta >= 0 && r != grp.eta) continue;
            ChiInvariants inv = chi_invariants(t, alpha, r, grp.prime);
            long long s = (long long)t.row(r).schur_index * (inv.w_chi / inv.v_chi);
            os << "chi " << r << ": w=" << inv.w_chi << " v=" << inv.v_chi << " s_chi=" << s
               << " galois_witness=" << inv.galois_witness << "\n";
            rows.push_back({{"row", r},
                            {"w_chi", inv.w_chi},
                            {"v_chi", inv.v_chi},
                            {"s_chi", s},
                            {"galois_witness", inv.galois_witness}});
        }
        j["invariants"] = rows;
        grp.out.emit(os.str(), j);
        return 0;
    }
    if (c_oracle->parsed()) {
        CharacterTable t = load_group(grp.group);
        ConductorOracleResult r = bruteforce_conductor(t, grp.prime, grp.precision);
        std::ostringstream os;
        json j = command_json("group.conductor-oracle");
        j["p"] = grp.prime;
        j["precision"] = grp.precision;
        json jo = json::array();
        for (size_t k = 0; k < r.orbits.size(); ++k) {
            const auto& o = r.orbits[k];
            os << "orbit " << k << ": rows " << join_rows(o.rows) << " | degree " << o.degree
               << " | value field zeta_" << o.value_field << " | e " << o.e << " | f " << o.f
               << " | valuation " << o.valuation << " | formula " << o.formula_valuation << "\n";
            jo.push_back({{"rows", o.rows},
                          {"degree", o.degree},
                          {"value_field", o.value_field},
                          {"e", o.e},
                          {"f", o.f},
                          {"valuation", o.valuation},
                          {"formula_valuation", o.formula_valuation}});
        }
        j["orbits"] = jo;
        grp.out.emit(os.str(), j);
        return 0;
    }

    // ---- iwasawa dispatch --------------------------------------------------
    if (c_rchi->parsed() || c_schi->parsed() || c_central->parsed()) {
        auto profiles = load_profiles(iw.profile);
        std::ostringstream os;
        std::string name = c_rchi->parsed()  ? "iwasawa.r-chi"
                           : c_schi->parsed() ? "iwasawa.s-chi"
                                              : "iwasawa.central-conductor";
        json j = command_json(name);
        j["p"] = iw.prime;
        json rows = json::array();
        for (const auto& p : profiles) {
            p.validate(iw.prime);
            if (c_rchi->parsed()) {
                os << "profile " << p.label << ": r_chi = " << r_chi(p) << "\n";
                rows.push_back({{"label", p.label}, {"r_chi", r_chi(p)}});
            } else if (c_schi->parsed()) {
                os << "profile " << p.label << ": s_chi = " << s_chi(p) << "\n";
                rows.push_back({{"label", p.label}, {"s_chi", s_chi(p)}});
            } else {
                ConductorRow row = central_conductor_component(p, iw.prime);
                os << "profile " << row.label << ": r_chi=" << row.r_chi
                   << " s_chi=" << row.s_chi << " coeff_valuation=" << row.coefficient_valuation
                   << " d_chi_F=" << row.d_chi_F << " ideal=" << row.ideal << "\n";
                rows.push_back({{"label", row.label},
                                {"r_chi", row.r_chi},
                                {"s_chi", row.s_chi},
                                {"coefficient_valuation", row.coefficient_valuation},
                                {"d_chi_F", row.d_chi_F},
                                {"pi_exponent", row.pi_exponent},
                                {"ideal", row.ideal}});
            }
        }
        j["rows"] = rows;
        iw.out.emit(os.str(), j);
        return 0;
    }
    if (c_tower->parsed()) {
        long long lo = iw.tower[0], mid = iw.tower[1], up = iw.tower[2];
        bool ok = tower_additivity_check(lo, mid, up, iw.prime);
        long long d_ml = relative_different_full_layers(mid, lo, iw.prime);
        long long d_um = relative_different_full_layers(up, mid, iw.prime);
        long long d_ul = relative_different_full_layers(up, lo, iw.prime);
        long long e_um = full_layer_ramification(up, iw.prime) /
                         full_layer_ramification(mid, iw.prime);
        std::ostringstream os;
        os << "tower " << lo << " | " << mid << " | " << up << " at p=" << iw.prime
           << ": additivity " << (ok ? "holds" : "FAILS") << " (d(M/L)=" << d_ml
           << ", d(U/M)=" << d_um << ", e(U/M)=" << e_um << ", d(U/L)=" << d_ul << ")\n";
        json j = command_json("iwasawa.tower-check");
        j["p"] = iw.prime;
        j["tower"] = iw.tower;
        j["holds"] = ok;
        j["d_middle_lower"] = d_ml;
        j["d_upper_middle"] = d_um;
        j["d_upper_lower"] = d_ul;
        j["e_upper_middle"] = e_um;
        iw.out.emit(os.str(), j);
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
