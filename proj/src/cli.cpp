#include "hbk/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "hbk/json_io.hpp"
#include "hbk/verify.hpp"

namespace hbk {

namespace {

struct Session {
    unsigned p = 2;
    int d = 2;
    std::uint64_t seed = 7;
    int max_degree = 64;

    FieldCtx field() const { return FieldCtx{p, d, max_degree}; }
    ValCtx fine() const { return ValCtx::fine(field()); }
};

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

json parse_json_arg(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON argument");
    return j;
}

LatticeClass lattice_arg(const Session& s, const std::string& text, int coarse = 0) {
    json j = parse_json_arg(text);
    ValCtx vc = coarse > 0 ? ValCtx(s.field(), coarse) : s.fine();
    if (j.is_array()) return LatticeClass(vc, matrix_from_json(s.field(), j));
    return lattice_from_json(vc, j);
}

std::string dot_escape(const std::string& in) {
    std::string out;
    for (char c : in) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string invariants_str(const std::vector<LexVal>& vals) {
    std::string out = "(";
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += vals[i].str();
    }
    return out + ")";
}

int emit_tree(const Session& s, const std::string& center_text, int radius,
              const std::string& format, std::ostream& out) {
    CoarseContext cc(s.field(), 1);
    LatticeClass center = lattice_arg(s, center_text);
    FiberBall ball = fiber_ball(center, radius, cc);

    // Boundary annotations: the two apartment ends of the center's basis.
    End up(center.basis());
    Matrix swapped = center.basis();
    swapped.swap_cols(0, 1);
    End down(swapped);

    if (format == "dot") {
        out << "graph fiber_ball {\n";
        out << "  label=\"fiber tree ball, radius " << radius << "\";\n";
        for (size_t i = 0; i < ball.vertices.size(); ++i) {
            out << "  v" << i << " [label=\""
                << dot_escape(invariants_str(rel_position(center, ball.vertices[i].cls))) << "\"];\n";
        }
        for (size_t i = 0; i < ball.vertices.size(); ++i)
            for (int a : ball.vertices[i].adj)
                if (static_cast<size_t>(a) > i) out << "  v" << i << " -- v" << a << ";\n";
        out << "}\n";
        return 0;
    }
    json jv = json::array();
    for (size_t i = 0; i < ball.vertices.size(); ++i) {
        json inv = json::array();
        for (const auto& v : rel_position(center, ball.vertices[i].cls)) inv.push_back(v.str());
        jv.push_back(json{{"id", i},
                          {"depth", ball.vertices[i].depth},
                          {"invariants", inv},
                          {"basis", matrix_to_json(ball.vertices[i].cls.basis())}});
    }
    json je = json::array();
    for (size_t i = 0; i < ball.vertices.size(); ++i)
        for (int a : ball.vertices[i].adj)
            if (static_cast<size_t>(a) > i) je.push_back(json::array({i, a}));
    auto end_json = [](const std::string& sign, const End& e) {
        return json{{"sign", sign},
                    {"lim_plus", matrix_to_json(lim(e, true).basis)},
                    {"lim_minus", matrix_to_json(lim(e, false).basis)},
                    {"upsilon", edge_to_json(upsilon(e, true))}};
    };
    json ends = json::array({end_json("+", up), end_json("-", down)});
    json doc{{"base", lattice_to_json(coarsen(center, cc))},
             {"is_tree", ball.is_tree},
             {"vertices", jv},
             {"edges", je},
             {"ends", ends}};
    out << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hbk: exact lattice model of the Z^d-building of SL_n"};
    app.require_subcommand(1);

    Session s;
    app.add_option("--p", s.p, "base prime of the tower field")->envname("HBK_P");
    app.add_option("--d", s.d, "valuation rank (1..3)")->envname("HBK_D");
    app.add_option("--seed", s.seed, "sampling seed")->envname("HBK_SEED");
    app.add_option("--max-degree", s.max_degree, "degree guard bound")->envname("HBK_MAX_DEGREE");

    // val
    auto* val_cmd = app.add_subcommand("val", "valuation of a field element");
    std::string val_elem;
    val_cmd->add_option("--elem", val_elem, "element expression")->required();

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "distance between two lattice classes");
    std::string dist_kind = "max", dist_l1, dist_l2;
    int dist_coarse = 0;
    dist_cmd->add_option("--kind", dist_kind, "max or sum")->check(CLI::IsMember({"max", "sum"}));
    dist_cmd->add_option("--l1", dist_l1, "first class (JSON)")->required();
    dist_cmd->add_option("--l2", dist_l2, "second class (JSON)")->required();
    dist_cmd->add_option("--coarse", dist_coarse, "use the s-coarsened valuation");

    // relpos
    auto* rel_cmd = app.add_subcommand("relpos", "relative position (invariant valuations)");
    std::string rel_l1, rel_l2;
    rel_cmd->add_option("--l1", rel_l1)->required();
    rel_cmd->add_option("--l2", rel_l2)->required();

    // apartment
    auto* apt_cmd = app.add_subcommand("apartment", "common apartment of two classes");
    std::string apt_l1, apt_l2;
    apt_cmd->add_option("--l1", apt_l1)->required();
    apt_cmd->add_option("--l2", apt_l2)->required();

    // enclosure
    auto* enc_cmd = app.add_subcommand("enclosure", "enclosure of finitely many apartment points");
    std::string enc_points;
    enc_cmd->add_option("--points", enc_points, "JSON array of apartment points")->required();

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "Iwasawa or affine Bruhat decomposition");
    std::string dec_mode, dec_matrix, dec_chamber = "plus";
    dec_cmd->add_option("--mode", dec_mode)->required()->check(CLI::IsMember({"iwasawa", "bruhat"}));
    dec_cmd->add_option("--matrix", dec_matrix, "matrix (JSON rows)")->required();
    dec_cmd->add_option("--chamber", dec_chamber)->check(CLI::IsMember({"plus", "minus"}));

    // stabilizes
    auto* stab_cmd = app.add_subcommand("stabilizes", "does the matrix fix the building point?");
    std::string stab_point, stab_matrix;
    stab_cmd->add_option("--point", stab_point)->required();
    stab_cmd->add_option("--matrix", stab_matrix)->required();

    // project / residue / lift
    auto* proj_cmd = app.add_subcommand("project", "coarsen a class to the s leading coordinates");
    int proj_s = 1;
    std::string proj_lattice;
    proj_cmd->add_option("--s", proj_s)->required();
    proj_cmd->add_option("--lattice", proj_lattice)->required();

    auto* res_cmd = app.add_subcommand("residue", "residue class of a fiber member");
    int res_s = 1;
    std::string res_base, res_lattice;
    res_cmd->add_option("--s", res_s)->required();
    res_cmd->add_option("--base", res_base, "coarse base class")->required();
    res_cmd->add_option("--lattice", res_lattice, "fiber member")->required();

    auto* lift_cmd = app.add_subcommand("lift", "lift a residue class into the fiber");
    int lift_s = 1;
    std::string lift_base, lift_residue;
    lift_cmd->add_option("--s", lift_s)->required();
    lift_cmd->add_option("--base", lift_base)->required();
    lift_cmd->add_option("--residue", lift_residue)->required();

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "fiber tree ball with boundary annotations");
    std::string tree_center = "", tree_format = "dot";
    int tree_radius = 3;
    tree_cmd->add_option("--center", tree_center, "fine lattice class (JSON)");
    tree_cmd->add_option("--radius", tree_radius);
    tree_cmd->add_option("--format", tree_format)->check(CLI::IsMember({"dot", "json"}));

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run the acceptance suite");
    std::string ver_suite = "all";
    ver_cmd->add_option("--suite", ver_suite, "all or comma-separated criterion ids");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!is_prime(s.p)) throw value_error("p must be prime");
        if (s.d < 1 || s.d > 3) throw value_error("d must be between 1 and 3");

        if (*val_cmd) {
            FieldElem e = FieldElem::parse(s.field(), val_elem);
            out << e.val().str() << "\n";
            return 0;
        }
        if (*dist_cmd) {
            LatticeClass a = lattice_arg(s, dist_l1, dist_coarse);
            LatticeClass b = lattice_arg(s, dist_l2, dist_coarse);
            out << (dist_kind == "sum" ? dist_sum(a, b) : dist_max(a, b)).str() << "\n";
            return 0;
        }
        if (*rel_cmd) {
            auto rel = rel_position(lattice_arg(s, rel_l1), lattice_arg(s, rel_l2));
            json j = json::array();
            for (const auto& v : rel) j.push_back(v.str());
            out << j.dump() << "\n";
            return 0;
        }
        if (*apt_cmd) {
            auto ca = common_apartment(lattice_arg(s, apt_l1), lattice_arg(s, apt_l2));
            json j{{"basis", matrix_to_json(ca.basis)},
                   {"x1", point_to_json(ca.x1)},
                   {"x2", point_to_json(ca.x2)}};
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*enc_cmd) {
            json j = parse_json_arg(enc_points);
            if (!j.is_array()) throw parse_error("--points must be a JSON array");
            std::vector<ApartmentPoint> pts;
            for (const auto& pj : j) pts.push_back(point_from_json(pj, s.d));
            out << bound_to_json(enclosure(pts)).dump(2) << "\n";
            return 0;
        }
        if (*dec_cmd) {
            Matrix g = matrix_from_json(s.field(), parse_json_arg(dec_matrix));
            if (!g.det().is_one()) throw membership_error("matrix is not in SL_n");
            json j;
            if (dec_mode == "iwasawa") {
                auto dec = iwasawa(g, s.fine(), dec_chamber == "plus");
                j["u"] = matrix_to_json(dec.u);
                j["m"] = matrix_to_json(dec.m);
                j["k"] = matrix_to_json(dec.k);
                j["weyl"] = weyl_to_json(nu_action(dec.m, s.fine()));
            } else {
                auto dec = bruhat(g, s.fine());
                j["b1"] = matrix_to_json(dec.b1);
                j["m"] = matrix_to_json(dec.m);
                j["b2"] = matrix_to_json(dec.b2);
                j["weyl"] = weyl_to_json(nu_action(dec.m, s.fine()));
            }
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*stab_cmd) {
            Matrix g = matrix_from_json(s.field(), parse_json_arg(stab_matrix));
            if (!g.det().is_one()) throw membership_error("matrix is not in SL_n");
            ApartmentPoint x = point_from_json(parse_json_arg(stab_point), s.d);
            json j{{"fixes", is_in_parahoric(g, x, s.fine())},
                   {"iwahori", is_in_iwahori(g, s.fine())}};
            out << j.dump() << "\n";
            return 0;
        }
        if (*proj_cmd) {
            CoarseContext cc(s.field(), proj_s);
            out << lattice_to_json(coarsen(lattice_arg(s, proj_lattice), cc)).dump(2) << "\n";
            return 0;
        }
        if (*res_cmd) {
            CoarseContext cc(s.field(), res_s);
            LatticeClass base = lattice_arg(s, res_base, res_s);
            LatticeClass lt = lattice_arg(s, res_lattice);
            out << lattice_to_json(residue_class(lt, base, cc)).dump(2) << "\n";
            return 0;
        }
        if (*lift_cmd) {
            CoarseContext cc(s.field(), lift_s);
            LatticeClass base = lattice_arg(s, lift_base, lift_s);
            json rj = parse_json_arg(lift_residue);
            LatticeClass rcls = rj.is_array()
                                    ? LatticeClass(cc.residue(), matrix_from_json(cc.residue_field(), rj))
                                    : lattice_from_json(cc.residue(), rj);
            out << lattice_to_json(lift(rcls, base, cc)).dump(2) << "\n";
            return 0;
        }
        if (*tree_cmd) {
            if (s.d != 2) throw unsupported_error("tree exploration needs d = 2");
            std::string center = tree_center.empty() ? "[[\"1\",\"0\"],[\"0\",\"1\"]]" : tree_center;
            return emit_tree(s, center, tree_radius, tree_format, out);
        }
        if (*ver_cmd) {
            VerifyOptions vo;
            vo.seed = s.seed;
            std::vector<int> ids;
            if (ver_suite != "all") {
                std::stringstream ss(ver_suite);
                std::string tok;
                while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
            }
            auto results = run_acceptance(vo, ids);
            bool all_pass = true;
            for (const auto& cr : results) {
                all_pass = all_pass && cr.pass;
                out << (cr.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << cr.id << "  "
                    << cr.name << "  [" << cr.detail << "]\n";
            }
            out << (all_pass ? "acceptance: all criteria passed\n"
                             : "acceptance: at least one criterion FAILED\n");
            return all_pass ? 0 : 3;
        }
        err << "no subcommand selected\n";
        return 1;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hbk
