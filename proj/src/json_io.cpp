#include "adilab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "adilab/errors.hpp"

namespace adi {

using nlohmann::json;

namespace {

Real coeff_part(const json& term, const char* key, const PrecisionConfig& ctx,
                const std::string& where) {
    if (!term.contains(key)) return Real::of(0L, ctx.working());
    const json& v = term.at(key);
    try {
        if (v.is_string()) return Real::parse(v.get<std::string>(), ctx.working());
        if (v.is_number()) return Real::of(v.get<double>(), ctx.working());
    } catch (const SchemaError& e) {
        throw SchemaError(where + "." + key + ": " + e.what());
    }
    throw SchemaError(where + "." + key + " must be a decimal string or number");
}

int nonneg_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw SchemaError(where + " must be an integer");
    long x = v.get<long>();
    if (x < 0) throw SchemaError(where + " must be nonnegative");
    return (int)x;
}

}  // namespace

ADEPoly adepoly_from_json(const json& j, const PrecisionConfig& ctx) {
    ctx.validate();
    if (!j.is_object()) throw SchemaError("polynomial document must be a JSON object");
    if (!j.contains("m")) throw SchemaError("missing field \"m\"");
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw SchemaError("missing array field \"terms\"");

    ADEPoly p;
    p.m = nonneg_int(j.at("m"), "m");
    size_t ti = 0;
    for (const json& term : j.at("terms")) {
        std::string where = "terms[" + std::to_string(ti++) + "]";
        if (!term.is_object()) throw SchemaError(where + " must be an object");
        if (!term.contains("lambda") || !term.at("lambda").is_array() ||
            term.at("lambda").size() != 3)
            throw SchemaError(where + ".lambda must be an array of three integers");
        LambdaIndex l;
        l.l0 = nonneg_int(term.at("lambda")[0], where + ".lambda[0]");
        l.l1 = nonneg_int(term.at("lambda")[1], where + ".lambda[1]");
        l.l2 = nonneg_int(term.at("lambda")[2], where + ".lambda[2]");
        if (!term.contains("u_poly") || !term.at("u_poly").is_array())
            throw SchemaError(where + ".u_poly must be an array");
        UPoly u;
        u.m = p.m;
        size_t mi = 0;
        for (const json& mono : term.at("u_poly")) {
            std::string mwhere = where + ".u_poly[" + std::to_string(mi++) + "]";
            if (!mono.is_object()) throw SchemaError(mwhere + " must be an object");
            if (!mono.contains("exps") || !mono.at("exps").is_array() ||
                (int)mono.at("exps").size() != p.m + 1)
                throw SchemaError(mwhere + ".exps must be an array of m + 1 integers");
            std::vector<int> exps;
            size_t ei = 0;
            for (const json& e : mono.at("exps"))
                exps.push_back(nonneg_int(e, mwhere + ".exps[" + std::to_string(ei++) + "]"));
            Complex c(coeff_part(mono, "re", ctx, mwhere), coeff_part(mono, "im", ctx, mwhere));
            u.add(exps, c);
        }
        p.add(l, u);
    }
    return p;
}

json upoly_to_json(const UPoly& u, long digits) {
    json arr = json::array();
    for (auto& [e, c] : u.terms) {
        json mono;
        mono["exps"] = e;
        mono["re"] = to_string(c.re(), digits);
        mono["im"] = to_string(c.im(), digits);
        arr.push_back(mono);
    }
    return arr;
}

json adepoly_to_json(const ADEPoly& p, long digits) {
    json out;
    out["m"] = p.m;
    json terms = json::array();
    for (auto& [l, u] : p.terms) {
        json t;
        t["lambda"] = {l.l0, l.l1, l.l2};
        t["u_poly"] = upoly_to_json(u, digits);
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

json table_to_json(const CoeffTable& t, long digits) {
    json out;
    out["kind"] = std::string(1, t.kind);
    out["ell"] = t.ell;
    out["p"] = t.p;
    out["max_q"] = t.max_q;
    out["max_r"] = t.max_r;
    json cells = json::array();
    for (int q = 0; q <= t.max_q; ++q)
        for (int r = 0; r <= t.max_r; ++r) {
            const UPoly& cell = t.at(q, r);
            if (cell.is_zero()) continue;
            json c;
            c["q"] = q;
            c["r"] = r;
            c["u_poly"] = upoly_to_json(cell, digits);
            cells.push_back(c);
        }
    out["cells"] = cells;
    return out;
}

json decomposition_to_json(const ADEPoly& p, int ell, long digits) {
    json out;
    out["m"] = p.m;
    if (p.is_zero()) {
        out["verdict"] = "P ≡ 0";
        out["parts"] = json::array();
        return out;
    }
    out["L"] = p.total_degree();
    json parts = json::array();
    bool first_found = false;
    for (auto& [deg, part] : homogeneous_parts(p)) {
        CoeffTable a = a_table(part, deg, ell);
        CoeffTable b = b_from_a(a);
        json entry;
        entry["p"] = deg;
        entry["a_table"] = table_to_json(a, digits);
        entry["b_table"] = table_to_json(b, digits);
        if (!first_found) {
            if (auto qr = first_nonzero_b(b)) {
                out["first_nonzero"] = {{"p", deg}, {"q", qr->first}, {"r", qr->second}};
                first_found = true;
            }
        }
        parts.push_back(entry);
    }
    out["parts"] = parts;
    return out;
}

namespace {

json real_field(const Real& v, long digits) { return to_string(v, digits); }

}  // namespace

json dominance_to_json(const DominanceReport& r, long digits) {
    json out;
    out["p0"] = r.p0;
    out["q0"] = r.q0;
    out["r0"] = r.r0;
    out["L"] = r.total_degree;
    out["witnessed"] = r.witnessed;
    out["verdict"] = r.verdict;
    json rows = json::array();
    for (auto& row : r.rows) {
        json e;
        e["y"] = row.y.decimal_str();
        e["lhs"] = real_field(row.lhs, digits);
        e["bound"] = real_field(row.bound, digits);
        e["ratio"] = real_field(row.ratio, digits);
        e["noise_floor"] = real_field(row.noise, digits);
        rows.push_back(e);
    }
    out["rows"] = rows;
    json blow = json::array();
    for (auto& bp : r.blowup_series) {
        json e;
        e["y"] = bp.y.decimal_str();
        e["magnitude"] = real_field(bp.magnitude, digits);
        blow.push_back(e);
    }
    out["blowup_series"] = blow;
    return out;
}

json blowup_to_json(const BlowupReport& r, long digits) {
    json out;
    out["p0"] = r.p0;
    out["L"] = r.total_degree;
    out["degenerate"] = r.degenerate;
    out["strictly_increasing"] = r.strictly_increasing;
    out["growth_ratio"] = real_field(r.growth_ratio, digits);
    json pts = json::array();
    for (auto& bp : r.series) {
        json e;
        e["y"] = bp.y.decimal_str();
        e["magnitude"] = real_field(bp.magnitude, digits);
        pts.push_back(e);
    }
    out["series"] = pts;
    return out;
}

json independence_to_json(const IndependenceReport& r, long digits) {
    json out;
    out["identically_zero"] = r.identically_zero;
    out["verdict"] = r.verdict;
    if (r.identically_zero) return out;
    json sel;
    sel["q0"] = r.selection.q0;
    sel["r0"] = r.selection.r0;
    sel["rescaled"] = r.selection.rescaled;
    if (r.selection.rescaled)
        sel["rescale_factor"] = real_field(r.selection.rescale_factor, digits);
    if (!r.selection.diagnostics.empty()) sel["diagnostics"] = r.selection.diagnostics;
    out["selection"] = sel;
    if (!r.selection.indices.empty()) out["dominance"] = dominance_to_json(r.dominance, digits);
    if (r.has_blowup) out["blowup"] = blowup_to_json(r.blowup, digits);
    return out;
}

std::string trajectory_csv(const Trajectory& traj, long digits) {
    std::ostringstream os;
    os << "y";
    for (int j = 0; j <= traj.m; ++j) os << ",re_" << j << ",im_" << j;
    os << "\n";
    for (auto& s : traj.samples) {
        os << s.y.decimal_str();
        for (auto& v : s.values)
            os << "," << to_string(v.re(), digits) << "," << to_string(v.im(), digits);
        os << "\n";
    }
    return os.str();
}

ADEPoly load_adepoly(const std::string& path, const PrecisionConfig& ctx) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open polynomial file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
    return adepoly_from_json(j, ctx);
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("io", "cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) throw DomainError("io", "write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DomainError("io", "rename into place failed: " + path);
}

}  // namespace adi
