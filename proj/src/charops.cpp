#include "superdual/charops.hpp"

#include <algorithm>
#include <set>

#include "superdual/symfunc.hpp"

namespace superdual::chars {

using cartan::Flavor;
using cartan::HeadSpec;
using oracle::RootDatum;
using symfunc::Partition;
using weights::Weight;

namespace {

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

FlavorContext FlavorContext::make(const HeadSpec& head, Flavor flavor, int rank2) {
    FlavorContext ctx;
    ctx.head = head;
    ctx.flavor = flavor;
    ctx.rank2 = rank2;
    auto d = cartan::build_merged_diagram(head, rank2, flavor);
    for (auto& t : head.tails) ctx.tail_ids.push_back(t.id);
    ctx.fs = std::make_shared<const reflect::FundamentalSystem>(
        reflect::FundamentalSystem::standard(d, flavor));
    return ctx;
}

std::vector<RootDatum> even_positive_roots(const cartan::Sgcm& gcm, int height) {
    if (!gcm.is_even()) throw DomainError("even root closure needs an even diagram");
    std::size_t n = gcm.size();
    // reflection closure; bail out to the oracle if it does not stabilize
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    bool finite = true;
    for (int iter = 0; iter < 64 && !frontier.empty(); ++iter) {
        std::vector<std::vector<long>> next;
        for (auto& r : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                // s_i(r) = r - <r, alpha_i^vee> alpha_i
                long p = 0;
                for (std::size_t j = 0; j < n; ++j) p += gcm.at(i, j) * r[j];
                std::vector<long> s(r);
                s[i] -= p;
                bool pos = true;
                for (auto c : s) pos = pos && c >= 0;
                if (!pos) continue;
                long h = 0;
                for (auto c : s) h += c;
                if (h > 64) {
                    finite = false;
                    break;
                }
                if (roots.insert(s).second) next.push_back(s);
            }
        if (!finite) break;
        frontier = std::move(next);
        if (roots.size() > 2000) {
            finite = false;
            break;
        }
    }
    if (finite) {
        std::vector<RootDatum> out;
        for (auto& r : roots) {
            long h = 0;
            for (auto c : r) h += c;
            if (h <= height) out.push_back({r, 1, cartan::Parity::Even});
        }
        std::sort(out.begin(), out.end(), [](const RootDatum& a, const RootDatum& b) {
            return std::make_pair(height_of(a.coords), a.coords) <
                   std::make_pair(height_of(b.coords), b.coords);
        });
        return out;
    }
    return oracle::root_multiplicities(gcm, height);
}

std::vector<RootDatum> flavor_positive_roots(const FlavorContext& ctx, int height) {
    const auto& m = ctx.fs->diagram_matrix();
    if (m.is_even()) {
        bool aniso = true;
        for (std::size_t i = 0; i < m.size(); ++i) aniso = aniso && m.at(i, i) == 2;
        if (aniso) return even_positive_roots(m, height);
    }
    if (cartan::symmetrizer(m).has_value()) return oracle::root_multiplicities(m, height);
    if (ctx.flavor == Flavor::dg)
        throw DomainError("dg diagram without symmetrizer: roots unavailable");

    // dg-route: compute roots of the dg diagram at a covering rank and
    // restrict to the flavor sublattice (the two algebras share their roots
    // with multiplicities).
    std::map<int, int> dg_ranks;
    for (auto& t : ctx.head.tails)
        dg_ranks[t.id] = (ctx.rank2 == -2) ? -2
                         : (ctx.flavor == Flavor::g ? ctx.rank2 - 1 : ctx.rank2);
    auto dgd = cartan::build_merged_diagram(ctx.head, dg_ranks, Flavor::dg);
    auto dgm = dgd.to_sgcm();
    if (!cartan::symmetrizer(dgm).has_value())
        throw DomainError("dg companion diagram is not symmetrizable");
    auto dg_roots = oracle::root_multiplicities(dgm, std::min(2 * height, oracle::kMaxDepth));

    // map: flavor vertex -> the dg vertex pair (or singleton) it expands to
    const auto& fm = m;
    std::vector<std::vector<std::size_t>> expand(fm.size());
    for (std::size_t v = 0; v < fm.size(); ++v) {
        int t, k;
        if (!parse_tail_id(fm.indices[v], t, k)) {
            expand[v] = {dgm.find(fm.indices[v])};
        } else if (ctx.flavor == Flavor::sg && k == -2) {
            expand[v] = {dgm.find(fm.indices[v])};
        } else {
            // beta vertex (t, k) = alpha_{k/2} + alpha_{(k+1)/2}
            int base = (k == -2) ? -2 : k;
            int next = (k == -2) ? 1 : k + 1;
            expand[v] = {dgm.find(HeadSpec::tail_vertex_id(t, base)),
                         dgm.find(HeadSpec::tail_vertex_id(t, next))};
        }
    }
    std::vector<RootDatum> out;
    for (auto& r : dg_roots) {
        // solve r = sum_v c_v expand(v): every dg-coordinate must be covered
        std::vector<long> c(fm.size(), 0);
        std::vector<long> residue(r.coords);
        bool ok = true;
        for (std::size_t v = 0; v < fm.size(); ++v) {
            long val = residue[expand[v][0]];
            for (auto u : expand[v]) {
                if (residue[u] != val) ok = false;
                residue[u] = 0;
            }
            c[v] = val;
            if (val < 0) ok = false;
        }
        for (auto x : residue) ok = ok && x == 0;
        if (!ok) continue;
        if (height_of(c) > height) continue;
        out.push_back({c, r.mult, r.parity});
    }
    std::sort(out.begin(), out.end(), [](const RootDatum& a, const RootDatum& b) {
        return std::make_pair(height_of(a.coords), a.coords) <
               std::make_pair(height_of(b.coords), b.coords);
    });
    return out;
}

FormalCharacter pbw_factor(std::shared_ptr<const reflect::FundamentalSystem> fs,
                           const std::vector<RootDatum>& roots, int cutoff) {
    FormalCharacter out(fs, Weight(), cutoff);
    out.add(Offset(fs->size(), 0), 1);
    for (auto& r : roots) {
        long rh = height_of(r.coords);
        if (rh > cutoff || rh == 0) continue;
        FormalCharacter factor(fs, Weight(), cutoff);
        long kmax = cutoff / rh;
        if (r.parity == cartan::Parity::Odd) kmax = std::min(kmax, r.mult);
        for (long k = 0; k <= kmax; ++k) {
            long long ways = 1;
            if (r.parity == cartan::Parity::Even) {
                for (long t = 1; t <= r.mult - 1; ++t) ways = ways * (k + t) / t;
            } else {
                for (long t = 1; t <= k; ++t) ways = ways * (r.mult - t + 1) / t;
            }
            if (ways == 0) continue;
            Offset o(fs->size(), 0);
            for (std::size_t v = 0; v < o.size(); ++v) o[v] = k * r.coords[v];
            factor.add(o, ways);
        }
        out = out.mul(factor);
    }
    return out;
}

namespace {

// Recover the partition from its interleaved Frobenius sequence; the inverse
// of frobenius_theta, validated by a round-trip.
std::optional<Partition> frobenius_inverse(const std::vector<long>& seq) {
    for (auto v : seq)
        if (v < 0) return std::nullopt;
    auto at = [&](std::size_t k) { return k < seq.size() ? seq[k] : 0; };
    // position 2j-2 carries <mu'_j-(j-1)>, position 2j-1 carries <mu_j-j>
    std::vector<long> mu;
    std::size_t arm_rows = 0;
    for (std::size_t j = 1; at(2 * j - 1) > 0; ++j) {
        mu.push_back(at(2 * j - 1) + static_cast<long>(j));
        arm_rows = j;
    }
    std::vector<long> col_len;
    for (std::size_t j = 1; at(2 * j - 2) > 0; ++j)
        col_len.push_back(at(2 * j - 2) + static_cast<long>(j) - 1);
    long max_len = 0;
    for (auto l : col_len) max_len = std::max(max_len, l);
    for (long row = static_cast<long>(arm_rows) + 1; row <= max_len; ++row) {
        long cnt = 0;
        for (auto l : col_len)
            if (l >= row) ++cnt;
        if (cnt == 0) break;
        mu.push_back(cnt);
    }
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1]) return std::nullopt;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    Partition p(mu);
    auto back = weights::frobenius_theta(p);
    std::vector<long> trimmed(seq);
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    if (back != trimmed) return std::nullopt;
    return p;
}

// index2 values of eps coordinates carried by the tail levi at this rank,
// in increasing order (the chain of consecutive differences).
std::vector<int> tail_eps_chain(Flavor flavor, int rank2) {
    std::vector<int> out;
    switch (flavor) {
        case Flavor::g:
            for (int k = 2; k <= rank2; k += 2) out.push_back(k);
            break;
        case Flavor::sg:
            for (int k = 1; k <= (rank2 == -2 ? 1 : rank2 + 1); k += 2) out.push_back(k);
            break;
        case Flavor::dg:
            for (int k = 1; k <= (rank2 == -2 ? 1 : rank2 + 1); ++k) out.push_back(k);
            break;
    }
    return out;
}

}  // namespace

FormalCharacter weyl_kac_char(const cartan::Sgcm& gcm, const std::vector<long>& pairings,
                              int cutoff) {
    Weight lambda;
    for (std::size_t i = 0; i < gcm.size(); ++i)
        lambda += make_rat(pairings[i]) * weights::head_fw(gcm.indices[i]);
    auto fs = std::make_shared<const reflect::FundamentalSystem>(
        reflect::FundamentalSystem::standard(cartan::DynkinDiagram::from_sgcm(gcm),
                                             Flavor::g));
    // numerator: signed orbit of lambda + rho
    for (auto p : pairings)
        if (p < 0) throw DomainError("weight is not dominant integral");
    std::vector<long> lr(pairings);
    for (auto& p : lr) p += 1;
    coxkl::WeylGroup w(gcm);
    auto orbit = coxkl::weyl_orbit_signs(w, lr, cutoff);
    FormalCharacter num(fs, lambda, cutoff);
    for (auto& t : orbit) num.add(t.offset, t.sign);
    auto roots = even_positive_roots(gcm, cutoff);
    return num.mul(pbw_factor(fs, roots, cutoff));
}

FormalCharacter weyl_kac_char(const FlavorContext& ctx, const Weight& lambda, int cutoff) {
    const auto& m = ctx.fs->diagram_matrix();
    if (!m.is_even()) throw DomainError("Weyl-Kac needs an even diagram");
    std::vector<long> pairings;
    for (std::size_t v = 0; v < m.size(); ++v) {
        Rat p = weights::pair(lambda, ctx.fs->simple(v).coroot);
        if (!is_integer(p) || p < 0) throw DomainError("weight is not dominant integral");
        pairings.push_back(rat_to_long(p));
    }
    std::vector<long> lr(pairings);
    for (auto& p : lr) p += 1;
    coxkl::WeylGroup w(m);
    auto orbit = coxkl::weyl_orbit_signs(w, lr, cutoff);
    FormalCharacter num(ctx.fs, lambda, cutoff);
    for (auto& t : orbit) num.add(t.offset, t.sign);
    return num.mul(pbw_factor(ctx.fs, flavor_positive_roots(ctx, cutoff), cutoff));
}

FormalCharacter levi_irreducible_char(const FlavorContext& ctx,
                                      const std::vector<std::string>& J,
                                      const Weight& lambda, int cutoff) {
    const auto& m = ctx.fs->diagram_matrix();
    const auto& base = ctx.head.base;
    // reject anisotropic odd head vertices inside J (oracle path only)
    for (auto& id : J) {
        std::size_t i = base.find(id);
        if (base.parity[i] == cartan::Parity::Odd)
            throw DomainError("head levi with anisotropic odd vertices is unsupported");
    }
    FormalCharacter out(ctx.fs, lambda, cutoff);
    out.add(Offset(m.size(), 0), 1);

    if (!J.empty()) {
        auto sub = base.submatrix(J);
        std::vector<long> pairings;
        for (auto& id : J) {
            Rat p = weights::pair(lambda, weights::head_coroot(id));
            if (!is_integer(p) || p < 0)
                throw DomainError("weight is not dominant integral for the head levi");
            pairings.push_back(rat_to_long(p));
        }
        auto headch = weyl_kac_char(sub, pairings, cutoff);
        // re-express sub-offsets in the merged coordinates
        FormalCharacter lifted(ctx.fs, Weight(), cutoff);
        for (auto& [o, mult] : headch.terms()) {
            Offset full(m.size(), 0);
            for (std::size_t j = 0; j < J.size(); ++j) full[m.find(J[j])] = o[j];
            lifted.add(full, mult);
        }
        out = out.mul(lifted);
    }

    for (int t : ctx.tail_ids) {
        auto chain = tail_eps_chain(ctx.flavor, ctx.rank2);
        if (chain.empty()) continue;
        // anchor coefficients along the chain
        std::vector<long> anchor_c;
        for (int k : chain) {
            Rat c = lambda.eps_coeff(t, k);
            if (!is_integer(c)) throw DomainError("tail coefficients must be integers");
            anchor_c.push_back(rat_to_long(c));
        }
        symfunc::Poly poly;
        long shift = 0;
        if (ctx.flavor == Flavor::g || ctx.flavor == Flavor::sg) {
            // gl(k)-dominant tuples may have negative entries; shifting by a
            // determinant power does not move the offsets
            for (std::size_t i = 0; i + 1 < anchor_c.size(); ++i)
                if (anchor_c[i] < anchor_c[i + 1])
                    throw DomainError("tail coefficients are not levi-dominant");
            shift = anchor_c.empty() ? 0 : std::max(0l, -anchor_c.back());
            std::vector<long> parts(anchor_c);
            for (auto& p : parts) p += shift;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            poly = symfunc::schur(Partition(parts), static_cast<int>(chain.size()));
        } else {
            auto mu = frobenius_inverse(anchor_c);
            if (!mu.has_value())
                throw DomainError("tail coefficients are not theta coordinates");
            // x variables on integer indices, y on half indices
            int mx = 0, my = 0;
            for (int k : chain) (k % 2 == 0 ? mx : my) += 1;
            auto hs = symfunc::hook_schur(*mu, mx, my);
            // reorder exponents into chain order: ints first in hs, chain is
            // interleaved (1=half,2=int,...)
            for (auto& [e, c] : hs) {
                std::vector<int> inchain(chain.size(), 0);
                int xi = 0, yi = 0;
                for (std::size_t pos = 0; pos < chain.size(); ++pos) {
                    if (chain[pos] % 2 == 0)
                        inchain[pos] = e[xi++];
                    else
                        inchain[pos] = e[mx + yi++];
                }
                poly[inchain] += c;
            }
        }
        FormalCharacter factor(ctx.fs, Weight(), cutoff);
        for (auto& [e, c] : poly) {
            // offset over the chain's consecutive-difference roots; the
            // shifted anchor equals anchor_c + shift componentwise
            Offset full(m.size(), 0);
            long run = 0;
            bool ok = true;
            for (std::size_t pos = 0; pos + 1 < chain.size(); ++pos) {
                run += anchor_c[pos] + shift - e[pos];
                if (run < 0) ok = false;
                full[m.find(HeadSpec::tail_vertex_id(t, chain[pos]))] = run;
            }
            long total = run + (anchor_c.back() + shift - e.back());
            if (total != 0 || !ok)
                throw DomainError("tail monomial outside the dominance cone");
            factor.add(full, c);
        }
        out = out.mul(factor);
    }
    return out;
}

FormalCharacter parabolic_verma_char(const FlavorContext& ctx,
                                     const std::vector<std::string>& J,
                                     const Weight& lambda, int cutoff) {
    auto levi = levi_irreducible_char(ctx, J, lambda, cutoff);
    auto all_roots = flavor_positive_roots(ctx, cutoff);
    const auto& m = ctx.fs->diagram_matrix();
    // levi support: J-head vertices and tail vertices other than the
    // attachment ones
    std::vector<bool> in_levi(m.size(), false);
    for (auto& id : J) in_levi[m.find(id)] = true;
    for (std::size_t v = 0; v < m.size(); ++v) {
        int t, k;
        if (parse_tail_id(m.indices[v], t, k) && k != -2) in_levi[v] = true;
    }
    std::vector<RootDatum> radical;
    for (auto& r : all_roots) {
        bool levi_root = true;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (r.coords[v] != 0 && !in_levi[v]) levi_root = false;
        if (!levi_root) radical.push_back(r);
    }
    return levi.mul(pbw_factor(ctx.fs, radical, cutoff));
}

std::vector<MEntry> integrable_mtable(const FlavorContext& gside,
                                      const std::vector<std::string>& J,
                                      const Weight& lambda, int max_height) {
    const auto& m = gside.fs->diagram_matrix();
    if (!m.is_even()) throw DomainError("the integrable table lives on the even side");
    std::vector<long> lr;
    for (std::size_t v = 0; v < m.size(); ++v) {
        Rat p = weights::pair(lambda, gside.fs->simple(v).coroot);
        if (!is_integer(p) || p < 0)
            throw DomainError("weight is not dominant integral on the even side");
        lr.push_back(rat_to_long(p) + 1);
    }
    std::vector<int> levi_min;
    for (auto& id : J) levi_min.push_back(static_cast<int>(m.find(id)));
    for (std::size_t v = 0; v < m.size(); ++v) {
        int t, k;
        if (parse_tail_id(m.indices[v], t, k) && k != -2)
            levi_min.push_back(static_cast<int>(v));
    }
    coxkl::WeylGroup w(m);
    auto orbit = coxkl::weyl_orbit_signs(w, lr, max_height, levi_min);
    std::vector<MEntry> out;
    for (auto& term : orbit) {
        Weight mu = lambda;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (term.offset[v] != 0)
                mu -= make_rat(term.offset[v]) *
                      gside.fs->vertex_root_weight(m.indices[v]);
        out.push_back({mu, term.sign});
    }
    return out;
}

FormalCharacter superduality_transfer(const FlavorContext& target,
                                      const std::vector<std::string>& J,
                                      const std::vector<MEntry>& table, int cutoff) {
    std::vector<std::pair<Weight, long long>> mapped;
    for (auto& e : table) {
        Weight img;
        switch (target.flavor) {
            case Flavor::g: img = e.mu; break;
            case Flavor::sg: img = weights::natural_map(e.mu); break;
            case Flavor::dg: img = weights::theta_map(e.mu); break;
        }
        // the rank-n dominant set filter; weights stay in the symbolic form
        if (!weights::truncate_weight(img, target.flavor, target.rank2, target.tail_ids)
                 .has_value())
            continue;
        mapped.push_back({img, e.m});
    }
    if (mapped.empty())
        return FormalCharacter(target.fs, Weight(), cutoff);
    // anchor at the unique weight dominating all the others
    std::size_t top = 0;
    for (std::size_t i = 1; i < mapped.size(); ++i) {
        auto c = root_coordinates(*target.fs, mapped[i].first - mapped[top].first);
        if (!c.has_value()) throw DomainError("transfer weights are not in one block");
        bool above = true;
        for (auto& x : *c) above = above && x >= 0;
        if (above) top = i;
    }
    FormalCharacter out(target.fs, mapped[top].first, cutoff);
    for (auto& [mu, c] : mapped)
        out.accumulate(parabolic_verma_char(target, J, mu, cutoff), c);
    return out;
}

FormalCharacter truncate_char(const FormalCharacter& ch, const HeadSpec& head,
                              Flavor flavor, int rank2) {
    auto target = FlavorContext::make(head, flavor, rank2);
    std::vector<int> tails;
    for (auto& t : head.tails) tails.push_back(t.id);
    // filter terms by the rank-n window, keeping symbolic weights
    std::map<Weight, long long> kept;
    for (auto& [o, mult] : ch.terms()) {
        Weight w = ch.weight_of(o);
        if (weights::truncate_weight(w, flavor, rank2, tails).has_value()) kept[w] += mult;
    }
    // anchor: the given anchor if it survives, else a dominating survivor
    Weight anchor = ch.anchor();
    if (!weights::truncate_weight(anchor, flavor, rank2, tails).has_value()) {
        if (kept.empty()) return FormalCharacter(target.fs, Weight(), ch.cutoff());
        anchor = kept.begin()->first;
        for (auto& [w, mult] : kept) {
            auto c = root_coordinates(*target.fs, w - anchor);
            if (c.has_value()) {
                bool above = true;
                for (auto& x : *c) above = above && x >= 0;
                if (above) anchor = w;
            }
        }
    }
    FormalCharacter out(target.fs, anchor, ch.cutoff());
    for (auto& [w, mult] : kept) {
        auto c = root_coordinates(*target.fs, anchor - w);
        if (!c.has_value())
            throw DomainError("truncated term leaves the rank-n root lattice");
        Offset o(target.fs->size());
        for (std::size_t v = 0; v < o.size(); ++v) {
            if (!is_integer((*c)[v]) || (*c)[v] < 0)
                throw DomainError("truncated term is not below the anchor");
            o[v] = rat_to_long((*c)[v]);
        }
        out.add(o, mult);
    }
    return out;
}

FormalCharacter integrable_char(const FlavorContext& ctx, const std::vector<std::string>& J,
                                const Weight& lambda, int cutoff) {
    if (ctx.flavor == Flavor::g) return weyl_kac_char(ctx, lambda, cutoff);
    throw DomainError(
        "integrable characters on the super side are obtained through "
        "superduality_transfer with an even-side table");
}

std::map<Weight, long long> tensor_decompose_integrable(const FlavorContext& ctx,
                                                        const std::vector<std::string>& J,
                                                        const Weight& lambda,
                                                        const Weight& mu, int cutoff) {
    auto cha = integrable_char(ctx, J, lambda, cutoff);
    auto chb = integrable_char(ctx, J, mu, cutoff);
    auto prod = cha.mul(chb);
    std::map<Weight, long long> out;
    std::map<Weight, FormalCharacter> memo;
    while (!prod.terms().empty()) {
        // leading term: minimal depth, then lexicographically least offset
        auto lead = prod.terms().begin();
        for (auto it = prod.terms().begin(); it != prod.terms().end(); ++it)
            if (std::make_pair(height_of(it->first), it->first) <
                std::make_pair(height_of(lead->first), lead->first))
                lead = it;
        Weight hw = prod.weight_of(lead->first);
        long long mult = lead->second;
        if (!weights::in_P_plusplus_G(hw, ctx.head.base))
            throw DomainError("leading term is not dominant: cutoff too small");
        out[hw] += mult;
        auto comp = integrable_char(ctx, J, hw, prod.cutoff());
        // subtract mult * comp re-anchored
        FormalCharacter shifted(prod.ctx_ptr(), prod.anchor(), prod.cutoff());
        shifted.accumulate(comp, 1);
        for (auto& [o, m] : shifted.terms()) prod.add(o, -mult * m);
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace superdual::chars
