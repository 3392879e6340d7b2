#include "superdual/reflect.hpp"

namespace superdual::reflect {

using cartan::Flavor;
using cartan::Parity;
using weights::Coroot;
using weights::Weight;

namespace {

// Tail vertex ids look like "t<tail>:<idx2>".
bool parse_tail_id(const std::string& id, int& tail, int& idx2) {
    if (id.empty() || id[0] != 't') return false;
    auto colon = id.find(':');
    if (colon == std::string::npos) return false;
    try {
        tail = std::stoi(id.substr(1, colon - 1));
        idx2 = std::stoi(id.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

std::string root_expr_str(const RootExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    for (auto& [id, c] : e) {
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? "+" : "-";
        else if (c < 0) out += "-";
        long mag = c > 0 ? c : -c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "a[" + id + "]";
    }
    return out;
}

FundamentalSystem FundamentalSystem::standard(const cartan::DynkinDiagram& d, Flavor flavor) {
    FundamentalSystem fs;
    fs.base_ = d.to_sgcm();
    fs.flavor_ = flavor;
    const auto& m = fs.base_;
    std::size_t n = m.size();

    // Canonical coroots and root weights per vertex.
    std::vector<Coroot> coroots(n);
    for (std::size_t v = 0; v < n; ++v) {
        int t, k;
        if (!parse_tail_id(m.indices[v], t, k)) {
            coroots[v] = weights::head_coroot(m.indices[v]);
            continue;
        }
        if (k == -2) {
            coroots[v] = (flavor == Flavor::g)
                             ? weights::h_coroot(t, -2) - weights::h_coroot(t, 2)
                             : weights::tail_coroot(t, -2);
        } else {
            coroots[v] = (flavor == Flavor::dg)
                             ? weights::tail_coroot(t, k)
                             : weights::h_coroot(t, k) - weights::h_coroot(t, k + 2);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        int t, k;
        Weight w;
        if (!parse_tail_id(m.indices[v], t, k)) {
            for (std::size_t u = 0; u < n; ++u) {
                int ut, uk;
                if (!parse_tail_id(m.indices[u], ut, uk)) {
                    w += make_rat(m.at(u, v)) * weights::head_fw(m.indices[u]);
                } else if (uk == -2 && m.at(u, v) != 0) {
                    w += make_rat(m.at(u, v)) *
                         (weights::eps(ut, -2) + weights::tail_omega(ut));
                }
            }
        } else if (k == -2) {
            for (std::size_t u = 0; u < n; ++u) {
                int ut, uk;
                if (!parse_tail_id(m.indices[u], ut, uk)) {
                    w += make_rat(m.at(u, v)) * weights::head_fw(m.indices[u]);
                } else if (uk == -2 && ut != t && m.at(u, v) != 0) {
                    w += make_rat(m.at(u, v)) *
                         (weights::eps(ut, -2) + weights::tail_omega(ut));
                }
            }
            int next = (flavor == Flavor::g) ? 2 : 1;
            w += weights::eps(t, -2) - weights::eps(t, next);
        } else {
            int step = (flavor == Flavor::dg) ? 1 : 2;
            w = weights::eps(t, k) - weights::eps(t, k + step);
        }
        fs.root_weights_[m.indices[v]] = w;
    }
    for (std::size_t v = 0; v < n; ++v) {
        SimpleRoot r;
        r.expr[m.indices[v]] = 1;
        r.coroot = coroots[v];
        r.parity = m.parity[v];
        fs.simples_.push_back(std::move(r));
    }
    fs.recompute_pairing();
    return fs;
}

Weight FundamentalSystem::vertex_root_weight(const std::string& id) const {
    auto it = root_weights_.find(id);
    if (it == root_weights_.end()) throw DomainError("unknown vertex '" + id + "'");
    return it->second;
}

Weight FundamentalSystem::root_weight(const RootExpr& e) const {
    Weight w;
    for (auto& [id, c] : e) w += make_rat(c) * vertex_root_weight(id);
    return w;
}

FundamentalSystem FundamentalSystem::truncated(int rank2, const std::vector<int>& tails) const {
    FundamentalSystem out = *this;
    for (auto& [id, w] : out.root_weights_) {
        auto t = weights::truncate_weight(w, flavor_, rank2, tails);
        if (!t.has_value())
            throw DomainError("vertex root does not survive its own rank window");
        w = *t;
    }
    out.recompute_pairing();
    return out;
}

void FundamentalSystem::recompute_pairing() {
    std::size_t n = simples_.size();
    std::vector<Weight> ws(n);
    for (std::size_t j = 0; j < n; ++j) ws[j] = root_weight(simples_[j].expr);
    pairing_.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pairing_[i][j] = weights::pair(ws[j], simples_[i].coroot);
}

cartan::DynkinDiagram FundamentalSystem::to_diagram() const {
    cartan::DynkinDiagram d;
    std::size_t n = simples_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(pairing_[i][i]))
            throw DomainError("non-integer diagonal in reflected system");
        d.vertices.push_back({base_.indices[i], simples_[i].parity, rat_to_long(pairing_[i][i])});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pairing_[i][j] != 0 || pairing_[j][i] != 0)
                d.edges.push_back({base_.indices[i], base_.indices[j],
                                   rat_to_long(pairing_[i][j]), rat_to_long(pairing_[j][i])});
    return d;
}

std::size_t FundamentalSystem::find_simple(const RootExpr& e) const {
    RootExpr norm;
    for (auto& [id, c] : e)
        if (c != 0) norm[id] = c;
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (simples_[i].expr == norm) return i;
    return npos;
}

FundamentalSystem odd_reflection(const FundamentalSystem& fs, std::size_t s) {
    if (s >= fs.size()) throw DomainError("reflection index out of range");
    if (fs.simples_[s].parity != Parity::Odd || fs.pairing_[s][s] != 0)
        throw DomainError("reflection root must be odd isotropic");
    FundamentalSystem out = fs;
    const auto& alpha_s = fs.simples_[s];
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i == s) {
            for (auto& [id, c] : out.simples_[s].expr) c = -c;
            out.simples_[s].coroot = make_rat(-1) * alpha_s.coroot;
            continue;
        }
        const Rat& a_is = fs.pairing_[i][s];  // <alpha_s, alpha_i^vee>
        const Rat& a_si = fs.pairing_[s][i];  // <alpha_i, alpha_s^vee>
        if (a_is == 0) continue;
        if (a_si == 0)
            throw DomainError("a_is != 0 with a_si = 0: not reflectable (C3 violated)");
        auto& target = out.simples_[i];
        for (auto& [id, c] : alpha_s.expr) {
            target.expr[id] += c;
            if (target.expr[id] == 0) target.expr.erase(id);
        }
        target.coroot += (a_is / a_si) * alpha_s.coroot;
        target.parity = cartan::parity_sum(target.parity, alpha_s.parity);
    }
    out.recompute_pairing();
    return out;
}

FundamentalSystem normalize_diagonal(const FundamentalSystem& fs) {
    FundamentalSystem out = fs;
    bool changed = false;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs.pairing_[i][i] == -2) {
            out.simples_[i].coroot = make_rat(-1) * out.simples_[i].coroot;
            changed = true;
        }
    if (changed) out.recompute_pairing();
    return out;
}

std::vector<RootExpr> bc_sequence(int n, int tail) {
    if (n <= 0) throw DomainError("sequence length parameter must be positive");
    std::vector<RootExpr> seq;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j) {
            RootExpr e;
            for (int idx = 2 * k - 1; idx >= 2 * k - 2 * j + 1; --idx)
                e[cartan::HeadSpec::tail_vertex_id(tail, idx)] = 1;
            seq.push_back(std::move(e));
        }
    return seq;
}

std::vector<RootExpr> bs_sequence(int n, int tail) {
    if (n <= 0) throw DomainError("sequence length parameter must be positive");
    std::vector<RootExpr> seq;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j) {
            RootExpr e;
            for (int idx = 2 * k; idx >= 2 * k - 2 * j + 2; --idx)
                e[cartan::HeadSpec::tail_vertex_id(tail, idx)] = 1;
            seq.push_back(std::move(e));
        }
    return seq;
}

FundamentalSystem apply_sequence(FundamentalSystem fs, const std::vector<RootExpr>& seq) {
    for (auto& e : seq) {
        std::size_t s = fs.find_simple(e);
        if (s == FundamentalSystem::npos)
            throw DomainError("sequence element " + root_expr_str(e) +
                              " is not simple in the current system");
        fs = odd_reflection(fs, s);
    }
    return fs;
}

Weight track_highest_weight(Weight lambda, FundamentalSystem fs,
                            const std::vector<RootExpr>& seq) {
    for (auto& e : seq) {
        std::size_t s = fs.find_simple(e);
        if (s == FundamentalSystem::npos)
            throw DomainError("sequence element " + root_expr_str(e) +
                              " is not simple in the current system");
        if (weights::pair(lambda, fs.simple(s).coroot) != 0)
            lambda -= fs.root_weight(fs.simple(s).expr);
        fs = odd_reflection(fs, s);
    }
    return lambda;
}

}  // namespace superdual::reflect
