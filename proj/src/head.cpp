#include "superdual/head.hpp"

#include <algorithm>

namespace superdual::cartan {

Flavor flavor_of(const std::string& name) {
    if (name == "dg") return Flavor::dg;
    if (name == "g") return Flavor::g;
    if (name == "sg") return Flavor::sg;
    throw DomainError("unknown flavor '" + name + "' (want dg|g|sg)");
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::dg: return "dg";
        case Flavor::g: return "g";
        default: return "sg";
    }
}

std::string HeadSpec::tail_vertex_id(int tail, int idx2) {
    return "t" + std::to_string(tail) + ":" + std::to_string(idx2);
}

Sgcm HeadSpec::head_matrix() const {
    Sgcm m;
    for (auto& t : tails) {
        m.indices.push_back(tail_vertex_id(t.id, -2));
        m.parity.push_back(Parity::Odd);
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        m.indices.push_back(base.indices[i]);
        m.parity.push_back(base.parity[i]);
    }
    std::size_t n = m.indices.size();
    m.entries.assign(n, std::vector<long>(n, 0));
    std::size_t nt = tails.size();
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j)
            m.entries[nt + i][nt + j] = base.at(i, j);
    for (std::size_t ti = 0; ti < nt; ++ti)
        for (auto& att : tails[ti].attachments) {
            std::size_t g = nt + base.find(att.target);
            m.entries[g][ti] = att.b;
            m.entries[ti][g] = att.c;
        }
    for (auto& ce : cross) {
        std::size_t i = m.find(tail_vertex_id(ce.tail_i, -2));
        std::size_t j = m.find(tail_vertex_id(ce.tail_j, -2));
        m.entries[i][j] = ce.dij;
        m.entries[j][i] = ce.dji;
    }
    return m;
}

ValidationReport check_head_condition(const HeadSpec& h) {
    ValidationReport rep;
    bool ok = true;
    for (auto& t : h.tails) {
        std::string tid = HeadSpec::tail_vertex_id(t.id, -2);
        for (auto& att : t.attachments) {
            std::size_t g = h.base.find(att.target);
            if (att.b == 0 || att.c == 0) {
                rep.violations.push_back({"A", att.target, tid});
                ok = false;
                continue;
            }
            long diag = h.base.at(g, g);
            if (diag == 2) {
                bool good = (h.base.parity[g] == Parity::Even)
                                ? att.b < 0
                                : (att.b < 0 && att.b % 2 == 0);
                if (!good) {
                    rep.violations.push_back({"A", att.target, tid});
                    ok = false;
                }
            }
        }
    }
    for (auto& ce : h.cross)
        if (ce.dij == 0 || ce.dji == 0) {
            rep.violations.push_back({"A", HeadSpec::tail_vertex_id(ce.tail_i, -2),
                                      HeadSpec::tail_vertex_id(ce.tail_j, -2)});
            ok = false;
        }
    auto mat = validate_sgcm(h.head_matrix());
    rep.is_sgcm = ok && mat.is_sgcm;
    rep.is_anisotropic = false;  // A^hd always has an isotropic tail vertex
    for (auto& v : mat.violations) rep.violations.push_back(v);
    if (!mat.is_sgcm) rep.is_sgcm = false;
    return rep;
}

namespace {

// Tail vertex indices (doubled) present at the given doubled rank.
std::vector<int> tail_indices(Flavor flavor, int rank2) {
    std::vector<int> out{-2};
    switch (flavor) {
        case Flavor::dg:
            if (rank2 != -2 && rank2 < 1)
                throw DomainError("dg rank must be -1 or in (1/2)N");
            for (int k = 1; k <= rank2; ++k) out.push_back(k);
            break;
        case Flavor::g:
            if (rank2 < 2 || rank2 % 2 != 0)
                throw DomainError("g rank must be a positive integer");
            for (int k = 2; k <= rank2 - 2; k += 2) out.push_back(k);
            break;
        case Flavor::sg:
            if (rank2 != -2 && (rank2 < 2 || rank2 % 2 != 0))
                throw DomainError("sg rank must be -1 or a positive integer");
            for (int k = 1; k <= rank2 - 1; k += 2) out.push_back(k);
            break;
    }
    return out;
}

}  // namespace

DynkinDiagram build_merged_diagram(const HeadSpec& h, const std::map<int, int>& rank2,
                                   Flavor flavor) {
    auto cond = check_head_condition(h);
    if (!cond.is_sgcm) throw DomainError("head spec violates condition (A)");
    DynkinDiagram d;
    for (std::size_t i = 0; i < h.base.size(); ++i)
        d.vertices.push_back({h.base.indices[i], h.base.parity[i], h.base.at(i, i)});
    for (std::size_t i = 0; i < h.base.size(); ++i)
        for (std::size_t j = i + 1; j < h.base.size(); ++j)
            if (h.base.at(i, j) != 0 || h.base.at(j, i) != 0)
                d.edges.push_back({h.base.indices[i], h.base.indices[j], h.base.at(i, j),
                                   h.base.at(j, i)});
    for (auto& t : h.tails) {
        auto it = rank2.find(t.id);
        if (it == rank2.end()) throw DomainError("missing rank for tail " + std::to_string(t.id));
        auto idxs = tail_indices(flavor, it->second);
        bool attachment_odd = flavor != Flavor::g;
        for (int k : idxs) {
            bool odd = (k == -2) ? attachment_odd : (flavor == Flavor::dg);
            d.vertices.push_back({HeadSpec::tail_vertex_id(t.id, k),
                                  odd ? Parity::Odd : Parity::Even, odd ? 0l : 2l});
        }
        for (auto& att : t.attachments)
            d.edges.push_back(
                {att.target, HeadSpec::tail_vertex_id(t.id, -2), att.b, att.c});
        for (std::size_t p = 0; p + 1 < idxs.size(); ++p) {
            long a;
            if (flavor == Flavor::dg)
                a = (idxs[p] == -2) ? 1 : (idxs[p] % 2 == 0 ? 1 : -1);
            else if (flavor == Flavor::sg)
                a = (idxs[p] == -2) ? 1 : -1;
            else
                a = -1;
            long b = (flavor == Flavor::sg && idxs[p] == -2) ? -1 : a;
            d.edges.push_back({HeadSpec::tail_vertex_id(t.id, idxs[p]),
                               HeadSpec::tail_vertex_id(t.id, idxs[p + 1]), a, b});
        }
    }
    for (auto& ce : h.cross)
        d.edges.push_back({HeadSpec::tail_vertex_id(ce.tail_i, -2),
                           HeadSpec::tail_vertex_id(ce.tail_j, -2), ce.dij, ce.dji});
    return d;
}

DynkinDiagram build_merged_diagram(const HeadSpec& h, int rank2, Flavor flavor) {
    std::map<int, int> ranks;
    for (auto& t : h.tails) ranks[t.id] = rank2;
    return build_merged_diagram(h, ranks, flavor);
}

DynkinDiagram truncate_diagram(const DynkinDiagram& d, Flavor flavor, int rank2) {
    auto keep_set = tail_indices(flavor, rank2);
    int max_keep = keep_set.back();
    std::vector<std::string> kept;
    bool dropped_any = false;
    int max_seen = -2;
    for (auto& v : d.vertices) {
        if (v.id.size() > 1 && v.id[0] == 't' && v.id.find(':') != std::string::npos) {
            int idx2 = std::stoi(v.id.substr(v.id.find(':') + 1));
            max_seen = std::max(max_seen, idx2);
            if (idx2 > max_keep) {
                dropped_any = true;
                continue;
            }
        }
        kept.push_back(v.id);
    }
    if (max_seen < max_keep)
        throw DomainError("truncation rank exceeds the rank the diagram was built at");
    (void)dropped_any;
    DynkinDiagram out;
    for (auto& v : d.vertices)
        if (std::find(kept.begin(), kept.end(), v.id) != kept.end()) out.vertices.push_back(v);
    for (auto& e : d.edges)
        if (std::find(kept.begin(), kept.end(), e.from) != kept.end() &&
            std::find(kept.begin(), kept.end(), e.to) != kept.end())
            out.edges.push_back(e);
    return out;
}

namespace {

Sgcm chain_base(int n, const std::string& prefix) {
    Sgcm b;
    for (int i = 1; i <= n; ++i) {
        b.indices.push_back(prefix + std::to_string(i));
        b.parity.push_back(Parity::Even);
    }
    b.entries.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) b.entries[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) {
        b.entries[i][i + 1] = -1;
        b.entries[i + 1][i] = -1;
    }
    return b;
}

void join(Sgcm& dst, const Sgcm& src) {
    std::size_t off = dst.size();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst.indices.push_back(src.indices[i]);
        dst.parity.push_back(src.parity[i]);
    }
    for (auto& row : dst.entries) row.resize(off + src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::vector<long> row(off + src.size(), 0);
        for (std::size_t j = 0; j < src.size(); ++j) row[off + j] = src.at(i, j);
        dst.entries.push_back(std::move(row));
    }
}

bool parse_two_ints(const std::string& name, const std::string& fn, long& a, long& b) {
    if (name.size() < fn.size() + 4 || name.compare(0, fn.size(), fn) != 0) return false;
    if (name[fn.size()] != '(' || name.back() != ')') return false;
    std::string inner = name.substr(fn.size() + 1, name.size() - fn.size() - 2);
    auto bar = inner.find('|');
    if (bar == std::string::npos) return false;
    try {
        a = std::stol(inner.substr(0, bar));
        b = std::stol(inner.substr(bar + 1));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

HeadSpec preset(const std::string& name) {
    HeadSpec h;
    h.tails.push_back({0, {}});
    if (name == "G3") {
        h.base = chain_base(2, "g");
        h.base.entries[0][1] = -3;
        h.tails[0].attachments = {{"g1", -1, -1}};
        return h;
    }
    if (name == "F31") {
        h.base = chain_base(3, "g");
        h.base.entries[0][1] = -2;
        h.tails[0].attachments = {{"g1", -1, -1}};
        return h;
    }
    if (name.rfind("D21a(", 0) == 0 && name.back() == ')') {
        long alpha = std::stol(name.substr(5, name.size() - 6));
        if (alpha < 1) throw DomainError("D21a preset requires alpha in N");
        h.base = chain_base(2, "g");
        h.base.entries[0][1] = 0;
        h.base.entries[1][0] = 0;
        h.tails[0].attachments = {{"g1", -1, -1}, {"g2", -1, -alpha}};
        return h;
    }
    long a = 0, b = 0;
    if (parse_two_ints(name, "gl", a, b)) {
        if (b != 1 || a < 1) throw DomainError("gl preset must be gl(m|1), m >= 1");
        h.base = chain_base(a - 1, "h");
        if (a > 1) h.tails[0].attachments = {{"h" + std::to_string(a - 1), -1, -1}};
        return h;
    }
    if (parse_two_ints(name, "osp", a, b)) {
        if (b == 2 && a >= 5 && a % 2 == 1) {  // osp(2m+1|2)
            long m = (a - 1) / 2;
            h.base = chain_base(m, "h");
            h.base.entries[0][1] = -2;
            h.tails[0].attachments = {{"h" + std::to_string(m), -1, -1}};
            return h;
        }
        if (b == 2 && a >= 4 && a % 2 == 0) {  // osp(2m|2)
            long m = a / 2;
            h.base = chain_base(m, "h");
            if (m >= 3) {
                // h1 and h2 fork onto h3.
                h.base.entries[0][1] = 0;
                h.base.entries[1][0] = 0;
                h.base.entries[0][2] = -1;
                h.base.entries[2][0] = -1;
                h.tails[0].attachments = {{"h" + std::to_string(m), -1, -1}};
            } else {
                h.base.entries[0][1] = 0;
                h.base.entries[1][0] = 0;
                h.tails[0].attachments = {{"h1", -1, -1}, {"h2", -1, -1}};
            }
            return h;
        }
        if (a == 2 && b >= 4 && b % 2 == 0) {  // osp(2|2m)
            long m = b / 2;
            h.base = chain_base(m, "h");
            h.base.entries[0][1] = -1;
            h.base.entries[1][0] = -2;
            h.tails[0].attachments = {{"h" + std::to_string(m), -1, -1}};
            return h;
        }
        if (a == 3 && b >= 4 && b % 2 == 0) {  // osp(3|2m)
            long m = b / 2;
            h.base = chain_base(m, "h");
            h.base.parity[0] = Parity::Odd;
            h.base.entries[0][1] = -2;
            h.tails[0].attachments = {{"h" + std::to_string(m), -1, -1}};
            return h;
        }
        throw DomainError("unsupported osp preset '" + name + "'");
    }
    if (name == "affineB" || name == "affineD") {
        Sgcm c = chain_base(3, "c");
        c.entries[0][1] = -1;
        c.entries[1][0] = -2;
        h.base = c;
        if (name == "affineB") {
            Sgcm bb = chain_base(3, "b");
            bb.entries[0][1] = -2;
            bb.entries[1][0] = -1;
            join(h.base, bb);
            h.tails[0].attachments = {{"c3", -1, -1}, {"b3", -1, 1}};
        } else {
            Sgcm dd = chain_base(4, "d");
            dd.entries[0][1] = 0;
            dd.entries[1][0] = 0;
            dd.entries[0][2] = -1;
            dd.entries[2][0] = -1;
            join(h.base, dd);
            h.tails[0].attachments = {{"c3", -1, -1}, {"d4", -1, 1}};
        }
        return h;
    }
    if (name == "affineA") {
        h.base = chain_base(2, "x");
        join(h.base, chain_base(2, "y"));
        h.tails = {{0, {{"x1", -1, 1}, {"y2", -1, -1}}},
                   {1, {{"y1", -1, 1}, {"x2", -1, -1}}}};
        return h;
    }
    throw DomainError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"G3",        "F31",      "D21a(a)",     "gl(m|1)",  "osp(2m+1|2)",
            "osp(2m|2)", "osp(2|2m)", "osp(3|2m)",  "affineB",  "affineD",
            "affineA"};
}

}  // namespace superdual::cartan
