#include "superdual/kl.hpp"

#include <algorithm>

namespace superdual::coxkl {

namespace {

void add_to(std::map<std::size_t, Laurent>& dst, std::size_t k, const Laurent& v) {
    auto it = dst.find(k);
    if (it == dst.end()) {
        if (!v.is_zero()) dst.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) dst.erase(it);
}

}  // namespace

KLTable::KLTable(WeylGroup& w, std::vector<int> levi, ParabolicConvention conv)
    : w_(w), levi_(std::move(levi)) {
    // H_{s_j} acts on the inducing line by v^{-1} (u = -1) or -v (u = q).
    sigma_ = (conv == ParabolicConvention::UMinusOne) ? Laurent(1, -1) : Laurent(-1, 1);
}

bool KLTable::in_quotient(std::size_t x) const {
    for (int j : levi_)
        if (w_.left_descent(x, j)) return false;
    return true;
}

KLTable::Elt KLTable::mult_hs(const Elt& e, int s) const {
    Elt out;
    for (auto& [y, c] : e) {
        std::size_t ys = w_.mult_gen(y, s);
        if (ys == WeylGroup::npos)
            throw ResourceError("Hecke action leaves the enumerated range");
        if (!in_quotient(ys)) {
            add_to(out, y, c * sigma_);
        } else if (w_.length(ys) > w_.length(y)) {
            add_to(out, ys, c);
        } else {
            // n_y H_s = n_{ys} + (v^{-1} - v) n_y
            add_to(out, ys, c);
            add_to(out, y, c * (Laurent(1, -1) - Laurent(1, 1)));
        }
    }
    return out;
}

const KLTable::Elt& KLTable::bar_of(std::size_t y) {
    auto it = bar_memo_.find(y);
    if (it != bar_memo_.end()) return it->second;
    Elt res;
    if (w_.length(y) == 0) {
        res[y] = Laurent(1);
    } else {
        int s = w_.word(y).back();
        std::size_t yp = w_.mult_gen(y, s);
        const Elt& base = bar_of(yp);
        // bar(H_s) = H_s + (v - v^{-1})
        Elt acted = mult_hs(base, s);
        Laurent corr = Laurent(1, 1) - Laurent(1, -1);
        for (auto& [z, c] : base) add_to(acted, z, c * corr);
        res = std::move(acted);
    }
    return bar_memo_.emplace(y, std::move(res)).first->second;
}

const KLTable::Elt& KLTable::canonical(std::size_t w) {
    auto it = canonical_memo_.find(w);
    if (it != canonical_memo_.end()) return it->second;
    if (!in_quotient(w)) throw DomainError("element is not a minimal coset representative");
    Elt b;
    b[w] = Laurent(1);
    // Correct defects top-down; corrections live in vZ[v].
    while (true) {
        Elt defect;
        for (auto& [y, c] : b) {
            const Elt& br = bar_of(y);
            for (auto& [z, bc] : br) {
                // c(v) bar-applied times bar(n_y) component
                add_to(defect, z, c.bar() * bc);
            }
        }
        for (auto& [y, c] : b) add_to(defect, y, Laurent(0) - c);
        // pick the longest y with a nonzero defect
        std::size_t best = WeylGroup::npos;
        for (auto& [y, c] : defect) {
            if (c.is_zero()) continue;
            if (best == WeylGroup::npos || w_.length(y) > w_.length(best)) best = y;
        }
        if (best == WeylGroup::npos) break;
        Laurent gamma = defect[best];
        // gamma is bar-antisymmetric; h in vZ[v] with h - bar(h) = gamma
        Laurent h;
        for (auto& [e, c] : gamma.coeffs())
            if (e > 0) h.add(c, e);
        if (!(h - h.bar() == gamma))
            throw DomainError("internal: defect is not bar-antisymmetric");
        add_to(b, best, h);
    }
    return canonical_memo_.emplace(w, std::move(b)).first->second;
}

Laurent KLTable::kl(std::size_t x, std::size_t w) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!in_quotient(x) || !in_quotient(w))
        throw DomainError("KL arguments must be minimal coset representatives");
    const Elt& b = canonical(w);
    auto it = b.find(x);
    if (it == b.end()) return Laurent();
    // h_{x,w}(v) = v^{l(w)-l(x)} P_{x,w}(v^{-2})
    int d = w_.length(w) - w_.length(x);
    Laurent p;
    for (auto& [e, c] : it->second.coeffs()) {
        int twice = d - e;
        if (twice < 0 || twice % 2 != 0)
            throw DomainError("internal: KL degree bound violated");
        p.add(c, twice / 2);
    }
    return p;
}

Laurent KLTable::r_polynomial(std::size_t x, std::size_t w) {
    std::lock_guard<std::mutex> lock(mu_);
    std::function<Laurent(std::size_t, std::size_t)> rec = [&](std::size_t a,
                                                               std::size_t b) -> Laurent {
        if (a == b) return Laurent(1);
        if (!w_.bruhat_leq(a, b)) return Laurent();
        auto key = std::make_pair(a, b);
        auto it = r_memo_.find(key);
        if (it != r_memo_.end()) return it->second;
        int s = w_.word(b).back();
        std::size_t bs = w_.mult_gen(b, s);
        std::size_t as = w_.mult_gen(a, s);
        Laurent res;
        if (as != WeylGroup::npos && w_.length(as) < w_.length(a)) {
            res = rec(as, bs);
        } else {
            // (q-1) R_{a,bs} + q R_{as,bs}
            res = (Laurent(1, 1) - Laurent(1, 0)) * rec(a, bs);
            if (as != WeylGroup::npos) res += Laurent(1, 1) * rec(as, bs);
        }
        r_memo_[key] = res;
        return res;
    };
    return rec(x, w);
}

namespace {

// Dot action on coroot-pairing vectors: p -> p - p_i * column(a, i).
std::vector<long> reflect_pairings(const cartan::Sgcm& a, const std::vector<long>& p, int i) {
    std::vector<long> out(p);
    for (std::size_t j = 0; j < p.size(); ++j) out[j] -= p[i] * a.at(j, i);
    return out;
}

}  // namespace

std::vector<BlockEntry> multiplicity_table(WeylGroup& w, const std::vector<int>& levi,
                                           const std::vector<long>& lambda_pairings,
                                           int cutoff, ParabolicConvention conv) {
    const auto& a = w.gcm();
    int n = w.rank();
    if (static_cast<int>(lambda_pairings.size()) != n)
        throw DomainError("pairing vector has wrong length");
    for (int j : levi)
        if (lambda_pairings[j] < 0)
            throw DomainError("weight is not dominant for the levi");

    // Walk lambda+rho into the antidominant chamber; the recorded word is a
    // reduced word for w_lambda with lambda = w_lambda . lambda0.
    std::vector<long> v(lambda_pairings);
    for (auto& x : v) x += 1;
    std::vector<int> desc_word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) throw DomainError("weight is not dot-regular");
            if (v[i] > 0) {
                desc_word.push_back(i);
                v = reflect_pairings(a, v, i);
                moved = true;
                if (static_cast<int>(desc_word.size()) > cutoff + 64)
                    throw DomainError("block not reachable within the length cutoff");
            }
        }
    }
    std::vector<long> lam0_rho = v;
    w.ensure_length(std::max<int>(static_cast<int>(desc_word.size()), cutoff));
    std::size_t w_lambda = w.from_word(desc_word);
    if (w.length(w_lambda) != static_cast<int>(desc_word.size()))
        throw DomainError("internal: descent word is not reduced");

    // (lambda+rho) - (lam0+rho) in root coordinates.
    std::vector<long> shift(n, 0);
    {
        std::vector<long> cur(lambda_pairings);
        for (auto& x : cur) x += 1;
        for (int i : desc_word) {
            shift[i] += cur[i];
            cur = reflect_pairings(a, cur, i);
        }
    }

    KLTable table(w, levi, conv);

    // Strip left levi descents: lambda sits at the maximal representative of
    // its coset, KL data is indexed by the minimal ones.
    std::size_t z_lambda = w_lambda;
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int j : levi)
            if (w.left_descent(z_lambda, j)) {
                z_lambda = w.inverse(w.mult_gen(w.inverse(z_lambda), j));
                stripped = true;
                break;
            }
    }
    if (!table.in_quotient(z_lambda))
        throw DomainError("internal: stripping left descents failed");

    std::vector<BlockEntry> out;
    for (std::size_t z = 0; z < w.size(); ++z) {
        if (w.length(z) > w.length(z_lambda)) continue;
        if (!table.in_quotient(z)) continue;
        if (!w.bruhat_leq(z, z_lambda)) continue;
        Laurent p = table.kl(z, z_lambda);
        if (p.is_zero()) continue;
        long m = p.eval_one();
        if ((w.length(z_lambda) - w.length(z)) % 2 != 0) m = -m;

        // mu = (w0_levi z) . lambda0; grow z to the maximal representative.
        std::size_t y = z;
        bool grow = true;
        while (grow) {
            grow = false;
            for (int j : levi)
                if (!w.left_descent(y, j)) {
                    auto up = w.mult_gen(w.inverse(y), j);
                    if (up == WeylGroup::npos) throw ResourceError("levi coset too long");
                    y = w.inverse(up);
                    grow = true;
                    break;
                }
        }
        // Apply y to lam0+rho, accumulating (lam0+rho) - y(lam0+rho).
        std::vector<long> p_mu = lam0_rho;
        std::vector<long> acc(n, 0);
        auto word = w.word(y);
        for (auto gi = word.rbegin(); gi != word.rend(); ++gi) {
            acc[*gi] += p_mu[*gi];
            p_mu = reflect_pairings(a, p_mu, *gi);
        }
        // lambda - mu = [(lambda+rho)-(lam0+rho)] + [(lam0+rho)-(mu+rho)]
        BlockEntry e;
        e.offset.resize(n);
        for (int i = 0; i < n; ++i) e.offset[i] = shift[i] + acc[i];
        e.pairings = p_mu;
        for (auto& x : e.pairings) x -= 1;
        e.m = m;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<OrbitTerm> weyl_orbit_signs(WeylGroup& w, const std::vector<long>& lam_rho,
                                        int max_height, const std::vector<int>& levi_min) {
    const auto& a = w.gcm();
    int n = w.rank();
    for (int i = 0; i < n; ++i)
        if (lam_rho[i] <= 0) throw DomainError("weight+rho must be strictly dominant");
    struct Node {
        std::vector<long> pairings;
        std::vector<long> offset;
        int len;
    };
    std::vector<OrbitTerm> out;
    std::map<std::vector<long>, bool> seen;
    std::vector<Node> frontier{{lam_rho, std::vector<long>(n, 0), 0}};
    seen[lam_rho] = true;
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (auto& node : frontier) {
            long h = 0;
            for (auto x : node.offset) h += x;
            if (h <= max_height) {
                bool minimal = true;
                for (int j : levi_min)
                    if (node.pairings[j] < 0) minimal = false;
                // minimal coset representative of W_levi \ W acting on a
                // dominant weight keeps levi-pairings positive
                if (minimal)
                    out.push_back({node.offset, node.pairings, node.len % 2 == 0 ? 1 : -1});
            }
            for (int i = 0; i < n; ++i) {
                if (node.pairings[i] <= 0) continue;  // only walk down
                Node nn;
                nn.pairings = reflect_pairings(a, node.pairings, i);
                nn.offset = node.offset;
                nn.offset[i] += node.pairings[i];
                nn.len = node.len + 1;
                long nh = 0;
                for (auto x : nn.offset) nh += x;
                if (nh > max_height) continue;
                if (seen.count(nn.pairings)) continue;
                seen[nn.pairings] = true;
                next.push_back(std::move(nn));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace superdual::coxkl
