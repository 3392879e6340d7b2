#include "superdual/sgcm.hpp"

#include <nlohmann/json.hpp>

namespace superdual::cartan {

using nlohmann::json;

Sgcm Sgcm::submatrix(const std::vector<std::string>& ids) const {
    Sgcm s;
    std::vector<std::size_t> pos;
    for (auto& id : ids) pos.push_back(find(id));
    s.indices = ids;
    for (auto p : pos) s.parity.push_back(parity[p]);
    for (auto pi : pos) {
        std::vector<long> row;
        for (auto pj : pos) row.push_back(entries[pi][pj]);
        s.entries.push_back(std::move(row));
    }
    return s;
}

ValidationReport validate_sgcm(const Sgcm& m) {
    ValidationReport rep;
    std::size_t n = m.size();
    if (m.parity.size() != n || m.entries.size() != n)
        throw DomainError("matrix shape does not match index set");
    for (auto& row : m.entries)
        if (row.size() != n) throw DomainError("matrix is not square");

    bool sgcm = true, aniso = true;
    for (std::size_t i = 0; i < n; ++i) {
        long d = m.at(i, i);
        if (m.parity[i] == Parity::Even) {
            if (d != 2) {
                rep.violations.push_back({"C0", m.indices[i], ""});
                sgcm = false;
            }
        } else if (d != 2 && d != 0) {
            rep.violations.push_back({"C1", m.indices[i], ""});
            sgcm = false;
        }
        if (d != 2) aniso = false;
        if (d == 2) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                long a = m.at(i, j);
                bool ok = (m.parity[i] == Parity::Even) ? (a <= 0)
                                                        : (a <= 0 && a % 2 == 0);
                if (!ok) {
                    rep.violations.push_back({"C2", m.indices[i], m.indices[j]});
                    sgcm = false;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((m.at(i, j) == 0) != (m.at(j, i) == 0)) {
                rep.violations.push_back({"C3", m.indices[i], m.indices[j]});
                sgcm = false;
            }
    rep.is_sgcm = sgcm;
    rep.is_anisotropic = sgcm && aniso;
    return rep;
}

std::optional<std::vector<Rat>> symmetrizer(const Sgcm& m) {
    std::size_t n = m.size();
    std::vector<Rat> d(n, Rat(0));
    std::vector<bool> seen(n, false);
    // Ratio propagation over each connected component; d_i a_ij = d_j a_ji.
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        d[root] = 1;
        seen[root] = true;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || m.at(i, j) == 0) continue;
                if (m.at(j, i) == 0) return std::nullopt;  // C3 broken; no D
                Rat dj = d[i] * make_rat(m.at(i, j)) / make_rat(m.at(j, i));
                if (seen[j]) {
                    if (d[j] != dj) return std::nullopt;  // inconsistent cycle
                } else {
                    if (dj <= 0) return std::nullopt;
                    d[j] = dj;
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
    }
    return d;
}

DynkinDiagram DynkinDiagram::from_sgcm(const Sgcm& m) {
    DynkinDiagram d;
    for (std::size_t i = 0; i < m.size(); ++i)
        d.vertices.push_back({m.indices[i], m.parity[i], m.at(i, i)});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.at(i, j) != 0 || m.at(j, i) != 0)
                d.edges.push_back({m.indices[i], m.indices[j], m.at(i, j), m.at(j, i)});
    return d;
}

Sgcm DynkinDiagram::to_sgcm() const {
    Sgcm m;
    for (auto& v : vertices) {
        m.indices.push_back(v.id);
        m.parity.push_back(v.parity);
    }
    std::size_t n = vertices.size();
    m.entries.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = vertices[i].diag;
    for (auto& e : edges) {
        std::size_t i = m.find(e.from), j = m.find(e.to);
        m.entries[i][j] = e.label_ft;
        m.entries[j][i] = e.label_tf;
    }
    return m;
}

std::string DynkinDiagram::to_json() const {
    json out;
    out["vertices"] = json::array();
    for (auto& v : vertices)
        out["vertices"].push_back({{"id", v.id},
                                   {"parity", v.parity == Parity::Odd ? "odd" : "even"},
                                   {"diag", v.diag}});
    out["edges"] = json::array();
    for (auto& e : edges)
        out["edges"].push_back(
            {{"from", e.from}, {"to", e.to}, {"label", {e.label_ft, e.label_tf}}});
    return out.dump(2);
}

DynkinDiagram DynkinDiagram::from_json(const std::string& text) {
    json in = json::parse(text);
    DynkinDiagram d;
    for (auto& v : in.at("vertices")) {
        std::string par = v.at("parity");
        if (par != "even" && par != "odd") throw DomainError("parity must be even|odd");
        d.vertices.push_back({v.at("id").get<std::string>(),
                              par == "odd" ? Parity::Odd : Parity::Even,
                              v.at("diag").get<long>()});
    }
    if (in.contains("edges"))
        for (auto& e : in.at("edges"))
            d.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                               e.at("label").at(0).get<long>(), e.at("label").at(1).get<long>()});
    return d;
}

}  // namespace superdual::cartan
