#include "superdual/glmodel.hpp"

#include <functional>

#include "superdual/oracle.hpp"

namespace superdual::oracle {

GlModel::GlModel(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m + n < 1) throw DomainError("bad gl(m|n) shape");
}

cartan::Sgcm GlModel::sgcm() const {
    cartan::Sgcm s;
    int r = rank();
    for (int k = 0; k < r; ++k) {
        s.indices.push_back("a" + std::to_string(k));
        s.parity.push_back(unit_parity(k, k + 1));
    }
    s.entries.assign(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i) {
        // coroot: E_ii - E_{i+1,i+1}, or E_ii + E_{i+1,i+1} at the odd node
        bool odd = unit_parity(i, i + 1) == cartan::Parity::Odd;
        for (int j = 0; j < r; ++j) {
            // alpha_j = eps_j - eps_{j+1} as a function of the slot
            auto alpha_at = [&](int slot) {
                return (slot == j ? 1l : 0l) - (slot == j + 1 ? 1l : 0l);
            };
            s.entries[i][j] = alpha_at(i) + (odd ? 1 : -1) * alpha_at(i + 1);
        }
    }
    return s;
}

std::vector<std::tuple<int, int, Rat>> GlModel::bracket(int a, int b, int c, int d) const {
    // [E_ab, E_cd] = delta_bc E_ad - (-1)^{p p} delta_da E_cb
    std::vector<std::tuple<int, int, Rat>> out;
    bool minus = unit_parity(a, b) == cartan::Parity::Odd &&
                 unit_parity(c, d) == cartan::Parity::Odd;
    if (b == c) out.emplace_back(a, d, Rat(1));
    if (d == a) out.emplace_back(c, b, minus ? Rat(1) : Rat(-1));
    return out;
}

Rat GlModel::pair_coroot(const std::vector<Rat>& f, int k) const {
    bool odd = unit_parity(k, k + 1) == cartan::Parity::Odd;
    return odd ? Rat(f[k] + f[k + 1]) : Rat(f[k] - f[k + 1]);
}

namespace {

struct Letter {
    int a, b;  // E_ab with a > b
    std::vector<long> coords;
    cartan::Parity parity;
};

std::vector<Letter> lowering_letters(const GlModel& g) {
    std::vector<Letter> out;
    int r = g.rank();
    for (int a = 1; a < g.slots(); ++a)
        for (int b = 0; b < a; ++b) {
            Letter l;
            l.a = a;
            l.b = b;
            l.coords.assign(r, 0);
            for (int k = b; k < a; ++k) l.coords[k] = 1;
            l.parity = g.unit_parity(a, b);
            out.push_back(l);
        }
    return out;
}

using LWord = std::vector<int>;  // indices into the letter table

struct VermaChain {
    const GlModel& g;
    const std::vector<Letter>& letters;
    const std::vector<Rat>& lambda;
    std::map<LWord, std::vector<Rat>> memo;

    std::vector<Rat> wt_suffix(const LWord& w, std::size_t from) const {
        std::vector<Rat> s(g.slots(), Rat(0));
        for (std::size_t t = from; t < w.size(); ++t) {
            s[letters[w[t]].a] += 1;
            s[letters[w[t]].b] -= 1;
        }
        // letters lower the weight: E_ab v has weight wt(v) + eps_a - eps_b
        return s;
    }

    // concatenated collapse vector of the word under all raising chains
    const std::vector<Rat>& vec(const LWord& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::vector<Rat> out;
        if (w.empty()) {
            out.push_back(Rat(1));
        } else {
            std::vector<long> gamma(g.rank(), 0);
            for (int id : w)
                for (int k = 0; k < g.rank(); ++k) gamma[k] += letters[id].coords[k];
            for (int k = 0; k < g.rank(); ++k) {
                if (gamma[k] == 0) continue;
                // accumulate e_k applied to the word
                std::map<LWord, Rat> img;
                int prefix = 0;
                bool ek_odd = g.unit_parity(k, k + 1) == cartan::Parity::Odd;
                for (std::size_t t = 0; t < w.size(); ++t) {
                    const Letter& x = letters[w[t]];
                    Rat sign = (ek_odd && prefix % 2) ? -1 : 1;
                    for (auto& [c, d, coef] : g.bracket(k, k + 1, x.a, x.b)) {
                        if (c == d) {
                            // Cartan part: scalar against lambda minus the suffix
                            std::vector<Rat> mu(lambda);
                            auto suf = wt_suffix(w, t + 1);
                            for (int s = 0; s < g.slots(); ++s) mu[s] += suf[s];
                            Rat scal = coef * mu[c];
                            if (scal != 0) {
                                LWord rest;
                                for (std::size_t s = 0; s < w.size(); ++s)
                                    if (s != t) rest.push_back(w[s]);
                                img[rest] += sign * scal;
                            }
                        } else if (c > d) {
                            LWord rep = w;
                            // find the letter id for E_cd
                            int id = -1;
                            for (std::size_t li = 0; li < letters.size(); ++li)
                                if (letters[li].a == c && letters[li].b == d)
                                    id = static_cast<int>(li);
                            rep[t] = id;
                            img[rep] += sign * coef;
                        } else {
                            throw DomainError("internal: raising component in e-action");
                        }
                    }
                    if (x.parity == cartan::Parity::Odd) prefix ^= 1;
                }
                // flatten through the lower chain; block sizes per weight are
                // structural, so zero images still occupy their block
                std::vector<Rat> acc(block_length(gamma, k), Rat(0));
                for (auto& [ww, c] : img) {
                    if (c == 0) continue;
                    auto& v = vec(ww);
                    for (std::size_t s = 0; s < v.size(); ++s) acc[s] += c * v[s];
                }
                out.insert(out.end(), acc.begin(), acc.end());
            }
        }
        return memo.emplace(w, std::move(out)).first->second;
    }

    std::map<std::vector<long>, std::size_t> block_len_memo;
    std::size_t block_length(const std::vector<long>& gamma, int k) {
        std::vector<long> sub(gamma);
        sub[k] -= 1;
        return chain_length(sub);
    }
    std::size_t chain_length(const std::vector<long>& gamma) {
        long h = 0;
        for (auto c : gamma) h += c;
        if (h == 0) return 1;
        auto it = block_len_memo.find(gamma);
        if (it != block_len_memo.end()) return it->second;
        std::size_t total = 0;
        for (int k = 0; k < g.rank(); ++k) {
            if (gamma[k] == 0) continue;
            std::vector<long> sub(gamma);
            sub[k] -= 1;
            total += chain_length(sub);
        }
        block_len_memo[gamma] = total;
        return total;
    }
};

}  // namespace

std::vector<GlModel::WM> GlModel::shapovalov(const std::vector<Rat>& lambda, int depth) const {
    if (depth > kMaxDepth) throw ResourceError("depth exceeds the oracle cap");
    if (static_cast<int>(lambda.size()) != slots())
        throw DomainError("lambda must have one coordinate per slot");
    auto letters = lowering_letters(*this);
    // PBW monomials per offset: sorted words, odd letters at most once
    std::map<std::vector<long>, std::vector<LWord>> monos;
    std::function<void(std::size_t, LWord&, std::vector<long>&, long)> rec =
        [&](std::size_t li, LWord& acc, std::vector<long>& off, long height) {
            monos[off].push_back(acc);
            for (std::size_t l = li; l < letters.size(); ++l) {
                long lh = 0;
                for (auto c : letters[l].coords) lh += c;
                if (height + lh > depth) continue;
                if (letters[l].parity == cartan::Parity::Odd && !acc.empty() &&
                    acc.back() == static_cast<int>(l))
                    continue;
                acc.push_back(static_cast<int>(l));
                for (int k = 0; k < rank(); ++k) off[k] += letters[l].coords[k];
                rec(l, acc, off, height + lh);
                for (int k = 0; k < rank(); ++k) off[k] -= letters[l].coords[k];
                acc.pop_back();
            }
        };
    LWord acc;
    std::vector<long> off(rank(), 0);
    rec(0, acc, off, 0);

    VermaChain chain{*this, letters, lambda, {}};
    std::vector<WM> out;
    for (auto& [gamma, words] : monos) {
        if (words.size() > kMaxSlice) throw ResourceError("weight space too large");
        QMatrix mat(words.empty() ? 0 : chain.vec(words[0]).size(), words.size());
        for (std::size_t c = 0; c < words.size(); ++c) {
            auto& v = chain.vec(words[c]);
            for (std::size_t r = 0; r < v.size(); ++r) mat.at(r, c) = v[r];
        }
        out.push_back({gamma, static_cast<long>(words.size()),
                       static_cast<long>(mat.rank())});
    }
    return out;
}

QMatrix ExplicitModule::act(int a, int b) const {
    auto it = action.find({a, b});
    if (it != action.end()) return it->second;
    return QMatrix(dim, dim);
}

void ExplicitModule::verify_is_module() const {
    int s = model->slots();
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d) {
                    // [E_ab, E_cd] m = E_ab E_cd m -+ E_cd E_ab m
                    bool minus = model->unit_parity(a, b) == cartan::Parity::Odd &&
                                 model->unit_parity(c, d) == cartan::Parity::Odd;
                    QMatrix lhs(dim, dim);
                    auto A = act(a, b), B = act(c, d);
                    for (std::size_t i = 0; i < dim; ++i)
                        for (std::size_t j = 0; j < dim; ++j) {
                            Rat v(0);
                            for (std::size_t k = 0; k < dim; ++k) {
                                v += A.at(i, k) * B.at(k, j);
                                Rat w = B.at(i, k) * A.at(k, j);
                                v += minus ? w : -w;
                            }
                            lhs.at(i, j) = v;
                        }
                    QMatrix rhs(dim, dim);
                    for (auto& [x, y, coef] : model->bracket(a, b, c, d)) {
                        auto C = act(x, y);
                        for (std::size_t i = 0; i < dim; ++i)
                            for (std::size_t j = 0; j < dim; ++j)
                                rhs.at(i, j) += coef * C.at(i, j);
                    }
                    for (std::size_t i = 0; i < dim; ++i)
                        for (std::size_t j = 0; j < dim; ++j)
                            if (!(lhs.at(i, j) == rhs.at(i, j)))
                                throw DomainError("module axioms fail");
                }
}

ExplicitModule trivial_module(const GlModel& model) {
    ExplicitModule m;
    m.model = &model;
    m.dim = 1;
    m.basis_weights = {std::vector<Rat>(model.slots(), Rat(0))};
    m.basis_parity = {cartan::Parity::Even};
    return m;
}

ExplicitModule natural_module(const GlModel& model) {
    ExplicitModule m;
    m.model = &model;
    m.dim = model.slots();
    for (int a = 0; a < model.slots(); ++a) {
        std::vector<Rat> w(model.slots(), Rat(0));
        w[a] = 1;
        m.basis_weights.push_back(w);
        m.basis_parity.push_back(model.slot_odd(a) ? cartan::Parity::Odd
                                                   : cartan::Parity::Even);
    }
    for (int a = 0; a < model.slots(); ++a)
        for (int b = 0; b < model.slots(); ++b) {
            QMatrix mat(m.dim, m.dim);
            mat.at(a, b) = 1;  // E_ab v_c = delta_bc v_a
            m.action[{a, b}] = mat;
        }
    return m;
}

namespace {

// tau as an automorphism determined by tau(e_k) = -(-1)^{p(e_k)} f_k,
// tau(f_k) = -e_k, tau(h) = -h; on matrix units tau(E_ab) = c_ab E_ba.
Rat tau_coeff(const GlModel& g, int a, int b) {
    if (a == b) return Rat(-1);
    if (b == a + 1)  // simple raising
        return g.unit_parity(a, b) == cartan::Parity::Odd ? Rat(1) : Rat(-1);
    if (a == b + 1) return Rat(-1);  // simple lowering
    if (a < b) {
        // E_ab = [E_{a,a+1}, E_{a+1,b}]; tau multiplicative over brackets
        Rat c = tau_coeff(g, a, a + 1) * tau_coeff(g, a + 1, b);
        // [c1 E_{a+1,a}, c2 E_{b,a+1}] = -+ c1 c2 [E_{b,a+1}, E_{a+1,a}] sign...
        // compute directly: [E_{a+1,a}, E_{b,a+1}] = -(-1)^{pp} E_{b,a}
        bool minus = g.unit_parity(a + 1, a) == cartan::Parity::Odd &&
                     g.unit_parity(b, a + 1) == cartan::Parity::Odd;
        return c * (minus ? Rat(1) : Rat(-1));
    }
    // a > b: E_ab = [E_{a,b+1}, E_{b+1,b}]
    Rat c = tau_coeff(g, a, b + 1) * tau_coeff(g, b + 1, b);
    // [c1 E_{b+1,a}, c2 E_{b,b+1}] = c1 c2 * (-(-1)^{pp}) E_{b,a}
    bool minus = g.unit_parity(b + 1, a) == cartan::Parity::Odd &&
                 g.unit_parity(b, b + 1) == cartan::Parity::Odd;
    return c * (minus ? Rat(1) : Rat(-1));
}

}  // namespace

ExplicitModule dual_module(const ExplicitModule& mod) {
    const GlModel& g = *mod.model;
    ExplicitModule d;
    d.model = mod.model;
    d.dim = mod.dim;
    d.basis_weights = mod.basis_weights;  // tau-twist preserves weights
    d.basis_parity = mod.basis_parity;
    for (int a = 0; a < g.slots(); ++a)
        for (int b = 0; b < g.slots(); ++b) {
            // (E_ab . f^i)(v_j) = (-1)^{p(E)p(f^i)+1} f^i(tau(E_ab) v_j)
            Rat tc = tau_coeff(g, a, b);
            QMatrix tact = mod.act(b, a);  // tau(E_ab) = tc E_ba
            QMatrix out(d.dim, d.dim);
            for (std::size_t i = 0; i < d.dim; ++i)
                for (std::size_t j = 0; j < d.dim; ++j) {
                    bool sign_odd = g.unit_parity(a, b) == cartan::Parity::Odd &&
                                    mod.basis_parity[i] == cartan::Parity::Odd;
                    Rat s = sign_odd ? Rat(1) : Rat(-1);  // (-1)^{p p + 1}
                    out.at(j, i) = s * tc * tact.at(i, j);
                }
            d.action[{a, b}] = out;
        }
    return d;
}

}  // namespace superdual::oracle
