#include "superdual/kostant.hpp"

#include <algorithm>
#include <functional>

#include "superdual/symfunc.hpp"

namespace superdual::oracle {

namespace {

struct Letter {
    int a, b;
    cartan::Parity parity;
    std::vector<Rat> weight;  // diagonal coords of E_ab
};

std::vector<int> slot_block(const std::vector<int>& blocks, int slots) {
    std::vector<int> of(slots, -1);
    int s = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int k = 0; k < blocks[b]; ++k) of[s++] = static_cast<int>(b);
    if (s != slots) throw DomainError("block sizes do not cover the slots");
    return of;
}

std::vector<Letter> radical_letters(const GlModel& g, const std::vector<int>& blocks,
                                    bool lower) {
    auto of = slot_block(blocks, g.slots());
    std::vector<Letter> out;
    for (int a = 0; a < g.slots(); ++a)
        for (int b = 0; b < g.slots(); ++b) {
            bool in = lower ? of[a] > of[b] : of[a] < of[b];
            if (!in) continue;
            Letter l;
            l.a = a;
            l.b = b;
            l.parity = g.unit_parity(a, b);
            l.weight.assign(g.slots(), Rat(0));
            l.weight[a] = 1;
            l.weight[b] = -1;
            out.push_back(l);
        }
    return out;
}

// Super exterior monomial: sorted letter ids, even letters strictly
// increasing, odd letters weakly.
using Mono = std::vector<int>;

struct MonoCombo {
    std::map<Mono, Rat> terms;
    void add(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end())
            terms.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// Sort a raw letter list into normal form with the super Koszul sign;
// returns false if it vanishes (repeated even letter).
bool normal_order(Mono m, const std::vector<Letter>& letters, Rat& sign, Mono& out) {
    sign = 1;
    // insertion sort with super swap signs
    for (std::size_t i = 1; i < m.size(); ++i)
        for (std::size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
            bool both_odd = letters[m[j]].parity == cartan::Parity::Odd &&
                            letters[m[j - 1]].parity == cartan::Parity::Odd;
            sign *= both_odd ? 1 : -1;
            std::swap(m[j], m[j - 1]);
        }
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && letters[m[i]].parity == cartan::Parity::Even) return false;
    out = std::move(m);
    return true;
}

// All normal-form monomials of the given degree.
std::vector<Mono> monomials(const std::vector<Letter>& letters, int degree) {
    std::vector<Mono> out;
    Mono cur;
    std::function<void(int, int)> rec = [&](int from, int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int l = from; l < static_cast<int>(letters.size()); ++l) {
            if (!cur.empty() && cur.back() == l && letters[l].parity == cartan::Parity::Even)
                continue;
            cur.push_back(l);
            rec(l, rem - 1);
            cur.pop_back();
        }
    };
    rec(0, degree);
    return out;
}

std::vector<Rat> mono_weight(const Mono& m, const std::vector<Letter>& letters, int slots) {
    std::vector<Rat> w(slots, Rat(0));
    for (int id : m)
        for (int s = 0; s < slots; ++s) w[s] += letters[id].weight[s];
    return w;
}

int mono_parity_prefix(const Mono& m, const std::vector<Letter>& letters, std::size_t upto) {
    int p = 0;
    for (std::size_t t = 0; t < upto; ++t)
        if (letters[m[t]].parity == cartan::Parity::Odd) p ^= 1;
    return p;
}

}  // namespace

KostantResult kostant_homology(const ExplicitModule& M, const std::vector<int>& blocks,
                               int max_degree) {
    const GlModel& g = *M.model;
    auto letters = radical_letters(g, blocks, true);

    // chain spaces: (monomial, module index) pairs per degree
    struct Chain {
        std::vector<std::pair<Mono, std::size_t>> basis;
        std::map<std::pair<Mono, std::size_t>, std::size_t> pos;
    };
    std::vector<Chain> chains(max_degree + 2);
    for (int n = 0; n <= max_degree + 1; ++n) {
        for (auto& mono : monomials(letters, n))
            for (std::size_t i = 0; i < M.dim; ++i) {
                chains[n].pos[{mono, i}] = chains[n].basis.size();
                chains[n].basis.push_back({mono, i});
            }
    }

    // boundary d_n: C_n -> C_{n-1}
    auto boundary = [&](int n) {
        QMatrix d(n >= 1 ? chains[n - 1].basis.size() : 0, chains[n].basis.size());
        if (n == 0) return d;
        for (std::size_t col = 0; col < chains[n].basis.size(); ++col) {
            auto& [mono, vi] = chains[n].basis[col];
            // action terms: move x_t to the front (prefix Koszul sign), act
            for (std::size_t t = 0; t < mono.size(); ++t) {
                int par = mono_parity_prefix(mono, letters, t);
                Rat sgn = ((t % 2) ? -1 : 1);
                if (letters[mono[t]].parity == cartan::Parity::Odd && par) sgn = -sgn;
                Mono rest;
                for (std::size_t u = 0; u < mono.size(); ++u)
                    if (u != t) rest.push_back(mono[u]);
                const Letter& x = letters[mono[t]];
                auto act = M.act(x.a, x.b);
                for (std::size_t w = 0; w < M.dim; ++w) {
                    Rat c = act.at(w, vi);
                    if (c == 0) continue;
                    d.at(chains[n - 1].pos.at({rest, w}), col) += sgn * c;
                }
            }
            // bracket terms: x_s then x_t moved to the front
            for (std::size_t s = 0; s + 1 < mono.size(); ++s)
                for (std::size_t t = s + 1; t < mono.size(); ++t) {
                    Rat sgn = (((s + t) % 2) ? 1 : -1);
                    if (letters[mono[s]].parity == cartan::Parity::Odd &&
                        mono_parity_prefix(mono, letters, s))
                        sgn = -sgn;
                    int pt = 0;
                    for (std::size_t u = 0; u < t; ++u)
                        if (u != s && letters[mono[u]].parity == cartan::Parity::Odd)
                            pt ^= 1;
                    if (letters[mono[t]].parity == cartan::Parity::Odd && pt) sgn = -sgn;
                    Mono rest;
                    for (std::size_t u = 0; u < mono.size(); ++u)
                        if (u != s && u != t) rest.push_back(mono[u]);
                    const Letter& xs = letters[mono[s]];
                    const Letter& xt = letters[mono[t]];
                    for (auto& [a, b, coef] : g.bracket(xs.a, xs.b, xt.a, xt.b)) {
                        // the bracket of two radical letters stays in u^-
                        int id = -1;
                        for (std::size_t l = 0; l < letters.size(); ++l)
                            if (letters[l].a == a && letters[l].b == b)
                                id = static_cast<int>(l);
                        if (id < 0) {
                            if (a == b) continue;  // cannot happen for u^-
                            throw DomainError("bracket left the nilradical");
                        }
                        Mono raw;
                        raw.push_back(id);
                        raw.insert(raw.end(), rest.begin(), rest.end());
                        Rat s2;
                        Mono nf;
                        if (!normal_order(raw, letters, s2, nf)) continue;
                        d.at(chains[n - 1].pos.at({nf, vi}), col) += sgn * s2 * coef;
                    }
                }
        }
        return d;
    };

    std::vector<QMatrix> d(max_degree + 2);
    for (int n = 0; n <= max_degree + 1; ++n) d[n] = boundary(n);
    for (int n = 1; n <= max_degree + 1; ++n) {
        // d_{n-1} d_n = 0, cheap at desk scale and guards the Koszul signs
        for (std::size_t c = 0; c < d[n].cols(); ++c)
            for (std::size_t r = 0; r < d[n - 1].rows(); ++r) {
                Rat v(0);
                for (std::size_t k = 0; k < d[n].rows(); ++k)
                    v += d[n - 1].at(r, k) * d[n].at(k, c);
                if (v != 0) throw DomainError("internal: boundary does not square to zero");
            }
    }

    // weight-graded homology dims: group columns by total weight
    KostantResult res;
    res.homology.resize(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        // collect weights
        std::map<std::vector<Rat>, std::vector<std::size_t>> by_weight;
        for (std::size_t c = 0; c < chains[n].basis.size(); ++c) {
            auto& [mono, vi] = chains[n].basis[c];
            auto w = mono_weight(mono, letters, g.slots());
            for (int s = 0; s < g.slots(); ++s) w[s] += M.basis_weights[vi][s];
            by_weight[w].push_back(c);
        }
        for (auto& [w, cols] : by_weight) {
            // rank of d_n restricted to these columns
            QMatrix dn(d[n].rows(), cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t r = 0; r < d[n].rows(); ++r)
                    dn.at(r, j) = d[n].at(r, cols[j]);
            std::size_t rank_n = dn.rank();
            // rank of d_{n+1} landing in these columns: restrict rows
            std::size_t rank_np1 = 0;
            if (n + 1 <= max_degree + 1) {
                // columns of C_{n+1} with this weight
                std::vector<std::size_t> cols_up;
                for (std::size_t c = 0; c < chains[n + 1].basis.size(); ++c) {
                    auto& [mono, vi] = chains[n + 1].basis[c];
                    auto wu = mono_weight(mono, letters, g.slots());
                    for (int s = 0; s < g.slots(); ++s) wu[s] += M.basis_weights[vi][s];
                    if (wu == w) cols_up.push_back(c);
                }
                QMatrix dup(cols.size(), cols_up.size());
                for (std::size_t j = 0; j < cols_up.size(); ++j)
                    for (std::size_t i = 0; i < cols.size(); ++i)
                        dup.at(i, j) = d[n + 1].at(cols[i], cols_up[j]);
                rank_np1 = dup.rank();
            }
            long h = static_cast<long>(cols.size()) - static_cast<long>(rank_n) -
                     static_cast<long>(rank_np1);
            if (h != 0) res.homology[n][w] = h;
        }
    }

    // levi highest-weight multiplicities by leading-term extraction (even
    // blocks only)
    for (int a = 0; a < g.slots(); ++a)
        for (int b = 0; b < g.slots(); ++b)
            if (g.unit_parity(a, b) == cartan::Parity::Odd &&
                slot_block(blocks, g.slots())[a] == slot_block(blocks, g.slots())[b])
                throw DomainError("levi multiplicities need an even levi");
    auto of = slot_block(blocks, g.slots());
    res.levi_mults.resize(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        auto dims = res.homology[n];
        while (!dims.empty()) {
            // lex-max weight is levi-dominant
            auto lead = std::prev(dims.end());
            std::vector<Rat> mu = lead->first;
            long mult = lead->second;
            if (mult <= 0) throw DomainError("internal: negative leading multiplicity");
            // subtract mult * levi character of mu
            // build per-block schur characters
            std::map<std::vector<Rat>, long> lchar;
            lchar[std::vector<Rat>(g.slots(), Rat(0))] = 1;
            int base = 0;
            for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
                int sz = blocks[blk];
                std::vector<long> parts;
                long shift = 0;
                for (int k = 0; k < sz; ++k) {
                    if (!is_integer(mu[base + k]))
                        throw DomainError("levi weight is not integral");
                    parts.push_back(rat_to_long(mu[base + k]));
                }
                for (int k = 0; k + 1 < sz; ++k)
                    if (parts[k] < parts[k + 1])
                        throw DomainError("leading weight is not levi-dominant");
                shift = -std::min<long>(0, parts.empty() ? 0 : parts.back());
                for (auto& p : parts) p += shift;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                auto sch = symfunc::schur(symfunc::Partition(parts), sz);
                std::map<std::vector<Rat>, long> nchar;
                for (auto& [w0, c0] : lchar)
                    for (auto& [e, c] : sch) {
                        auto w = w0;
                        for (int k = 0; k < sz; ++k)
                            w[base + k] += Rat(e[k]) - Rat(shift);
                        nchar[w] += c0 * c;
                    }
                lchar = std::move(nchar);
                base += sz;
            }
            for (auto& [w, c] : lchar) {
                dims[w] -= mult * c;
                if (dims[w] == 0) dims.erase(w);
            }
            res.levi_mults[n][mu] += mult;
        }
    }
    (void)of;
    return res;
}

std::vector<WeightDims> u_plus_cohomology(const ExplicitModule& M,
                                          const std::vector<int>& blocks, int max_degree) {
    const GlModel& g = *M.model;
    auto letters = radical_letters(g, blocks, false);

    struct Cochain {
        std::vector<std::pair<Mono, std::size_t>> basis;
        std::map<std::pair<Mono, std::size_t>, std::size_t> pos;
    };
    std::vector<Cochain> co(max_degree + 2);
    for (int n = 0; n <= max_degree + 1; ++n)
        for (auto& mono : monomials(letters, n))
            for (std::size_t i = 0; i < M.dim; ++i) {
                co[n].pos[{mono, i}] = co[n].basis.size();
                co[n].basis.push_back({mono, i});
            }

    // delta_n: C^n -> C^{n+1}; evaluate on (n+1)-monomials.
    auto delta = [&](int n) {
        QMatrix d(co[n + 1].basis.size(), co[n].basis.size());
        for (std::size_t row = 0; row < co[n + 1].basis.size(); ++row) {
            auto& [mono, vi] = co[n + 1].basis[row];
            // (delta f)(mono ⊗ ?) evaluated against f = (rest)* ⊗ v:
            for (std::size_t t = 0; t < mono.size(); ++t) {
                int moved = static_cast<int>(t);
                int par = mono_parity_prefix(mono, letters, t);
                Rat sgn = ((moved % 2) ? -1 : 1);
                if (letters[mono[t]].parity == cartan::Parity::Odd && par) sgn = -sgn;
                Mono rest;
                for (std::size_t u = 0; u < mono.size(); ++u)
                    if (u != t) rest.push_back(mono[u]);
                const Letter& x = letters[mono[t]];
                auto act = M.act(x.a, x.b);
                // (x.f)(rest) = x.(f(rest)) contribution
                for (std::size_t w = 0; w < M.dim; ++w) {
                    Rat c = act.at(vi, w);
                    // f(rest) = v_w component acts: x v_w has v_vi coefficient c
                    if (c == 0) continue;
                    auto it = co[n].pos.find({rest, w});
                    if (it != co[n].pos.end()) d.at(row, it->second) += sgn * c;
                }
            }
            for (std::size_t s = 0; s + 1 < mono.size(); ++s)
                for (std::size_t t = s + 1; t < mono.size(); ++t) {
                    Rat sgn = (((s + t) % 2) ? -1 : 1);
                    if (letters[mono[s]].parity == cartan::Parity::Odd &&
                        mono_parity_prefix(mono, letters, s))
                        sgn = -sgn;
                    int pt = 0;
                    for (std::size_t u = 0; u < t; ++u)
                        if (u != s && letters[mono[u]].parity == cartan::Parity::Odd)
                            pt ^= 1;
                    if (letters[mono[t]].parity == cartan::Parity::Odd && pt) sgn = -sgn;
                    Mono rest;
                    for (std::size_t u = 0; u < mono.size(); ++u)
                        if (u != s && u != t) rest.push_back(mono[u]);
                    const Letter& xs = letters[mono[s]];
                    const Letter& xt = letters[mono[t]];
                    for (auto& [a, b, coef] : g.bracket(xs.a, xs.b, xt.a, xt.b)) {
                        int id = -1;
                        for (std::size_t l = 0; l < letters.size(); ++l)
                            if (letters[l].a == a && letters[l].b == b)
                                id = static_cast<int>(l);
                        if (id < 0) continue;
                        Mono raw;
                        raw.push_back(id);
                        raw.insert(raw.end(), rest.begin(), rest.end());
                        Rat s2;
                        Mono nf;
                        if (!normal_order(raw, letters, s2, nf)) continue;
                        auto it = co[n].pos.find({nf, vi});
                        if (it != co[n].pos.end()) d.at(row, it->second) += sgn * s2 * coef;
                    }
                }
        }
        return d;
    };

    std::vector<QMatrix> d(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) d[n] = delta(n);
    for (int n = 1; n <= max_degree; ++n)
        for (std::size_t c = 0; c < d[n - 1].cols(); ++c)
            for (std::size_t r = 0; r < d[n].rows(); ++r) {
                Rat v(0);
                for (std::size_t k = 0; k < d[n].cols(); ++k)
                    v += d[n].at(r, k) * d[n - 1].at(k, c);
                if (v != 0)
                    throw DomainError("internal: coboundary does not square to zero");
            }

    std::vector<WeightDims> out(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        std::map<std::vector<Rat>, std::vector<std::size_t>> by_weight;
        for (std::size_t c = 0; c < co[n].basis.size(); ++c) {
            auto& [mono, vi] = co[n].basis[c];
            // functional on Lambda^n u^+ has weight -wt(mono) + wt(v)
            auto w = mono_weight(mono, letters, g.slots());
            for (int s = 0; s < g.slots(); ++s)
                w[s] = M.basis_weights[vi][s] - w[s];
            by_weight[w].push_back(c);
        }
        for (auto& [w, cols] : by_weight) {
            QMatrix dn(d[n].rows(), cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t r = 0; r < d[n].rows(); ++r)
                    dn.at(r, j) = d[n].at(r, cols[j]);
            std::size_t rank_n = dn.rank();
            std::size_t rank_prev = 0;
            if (n >= 1) {
                std::vector<std::size_t> cols_prev;
                for (std::size_t c = 0; c < co[n - 1].basis.size(); ++c) {
                    auto& [mono, vi] = co[n - 1].basis[c];
                    auto wp = mono_weight(mono, letters, g.slots());
                    for (int s = 0; s < g.slots(); ++s)
                        wp[s] = M.basis_weights[vi][s] - wp[s];
                    if (wp == w) cols_prev.push_back(c);
                }
                QMatrix dprev(cols.size(), cols_prev.size());
                for (std::size_t j = 0; j < cols_prev.size(); ++j)
                    for (std::size_t i = 0; i < cols.size(); ++i)
                        dprev.at(i, j) = d[n - 1].at(cols[i], cols_prev[j]);
                rank_prev = dprev.rank();
            }
            long h = static_cast<long>(cols.size()) - static_cast<long>(rank_n) -
                     static_cast<long>(rank_prev);
            if (h != 0) out[n][w] = h;
        }
    }
    return out;
}

std::map<std::vector<Rat>, Laurent> klv_from_homology(const ExplicitModule& M,
                                                      const std::vector<int>& blocks,
                                                      int max_degree) {
    auto res = kostant_homology(M, blocks, max_degree);
    std::map<std::vector<Rat>, Laurent> out;
    for (int n = 0; n <= max_degree; ++n)
        for (auto& [mu, mult] : res.levi_mults[n]) {
            long c = (n % 2) ? -mult : mult;
            out[mu].add(c, -n);
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace superdual::oracle
