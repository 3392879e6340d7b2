#include "superdual/oracle.hpp"

#include <functional>

namespace superdual::oracle {

namespace {

std::vector<std::vector<long>> contents_of_height(std::size_t gens, int h) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(gens, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int rem) {
        if (g + 1 == gens) {
            cur[g] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            cur[g] = k;
            rec(g + 1, rem - k);
        }
    };
    if (gens == 0) return out;
    rec(0, h);
    return out;
}

// Rows of m reduced to a basis of the row space.
std::vector<std::vector<Rat>> row_basis(std::vector<std::vector<Rat>> m) {
    std::vector<std::vector<Rat>> basis;
    if (m.empty()) return basis;
    std::size_t cols = m[0].size();
    std::vector<std::size_t> pivot_of;  // pivot column per basis row
    for (auto& row : m) {
        // reduce against existing
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (row[pivot_of[b]] == 0) continue;
            Rat f = row[pivot_of[b]];
            for (std::size_t j = 0; j < cols; ++j) row[j] -= f * basis[b][j];
        }
        std::size_t p = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p == cols) continue;
        Rat inv = 1 / row[p];
        for (std::size_t j = 0; j < cols; ++j) row[j] *= inv;
        basis.push_back(row);
        pivot_of.push_back(p);
    }
    return basis;
}

struct ChainCache {
    const cartan::Sgcm& a;
    const std::vector<cartan::Parity>& parity;
    Rat zero_shift;
    const std::vector<Rat>* lambda = nullptr;  // null for the adjoint chain
    std::map<std::vector<long>, std::vector<std::vector<Rat>>> memo;

    // Row space of the full collapse chain on the word space of the content.
    const std::vector<std::vector<Rat>>& chain(const std::vector<long>& content) {
        auto it = memo.find(content);
        if (it != memo.end()) return it->second;
        long h = 0;
        for (auto c : content) h += c;
        auto words = words_of_content(content);
        if (words.size() > kMaxSlice) throw ResourceError("oracle slice too large");
        std::map<Word, std::size_t> pos;
        for (std::size_t k = 0; k < words.size(); ++k) pos[words[k]] = k;
        std::vector<std::vector<Rat>> rows;
        if (h == 0) {
            rows.push_back({Rat(1)});
        } else if (h == 1 && !lambda) {
            // adjoint chain bottoms out by reading off the f-coefficient
            // ([e_i, f_j] = delta_ij alpha_i^vee, not a scalar)
            rows.push_back({Rat(1)});
        } else {
            for (std::size_t i = 0; i < content.size(); ++i) {
                if (content[i] == 0) continue;
                std::vector<long> sub(content);
                sub[i] -= 1;
                const auto& below = chain(sub);
                auto sub_words = words_of_content(sub);
                std::map<Word, std::size_t> sub_pos;
                for (std::size_t k = 0; k < sub_words.size(); ++k) sub_pos[sub_words[k]] = k;
                // E_i matrix: word space -> sub word space
                std::vector<std::vector<Rat>> ei(sub_words.size(),
                                                 std::vector<Rat>(words.size(), Rat(0)));
                Rat shift = lambda ? (*lambda)[i] : Rat(0);
                for (std::size_t k = 0; k < words.size(); ++k)
                    for (auto& [w2, c] : e_collapse(words[k], static_cast<int>(i), a,
                                                    parity, shift))
                        ei[sub_pos.at(w2)][k] += c;
                for (auto& brow : below) {
                    std::vector<Rat> row(words.size(), Rat(0));
                    for (std::size_t r = 0; r < brow.size(); ++r) {
                        if (brow[r] == 0) continue;
                        for (std::size_t k = 0; k < words.size(); ++k)
                            row[k] += brow[r] * ei[r][k];
                    }
                    rows.push_back(std::move(row));
                }
            }
            rows = row_basis(std::move(rows));
        }
        return memo.emplace(content, std::move(rows)).first->second;
    }
};

long height_of(const std::vector<long>& v) {
    long h = 0;
    for (auto c : v) h += c;
    return h;
}

}  // namespace

std::vector<RootDatum> root_multiplicities(const cartan::Sgcm& a, int height) {
    if (height < 1) throw DomainError("height must be >= 1");
    if (height > kMaxDepth) throw ResourceError("height exceeds the oracle cap");
    if (!cartan::symmetrizer(a).has_value())
        throw DomainError("root multiplicity oracle requires a symmetrizable matrix");
    ChainCache cache{a, a.parity, Rat(0), nullptr, {}};
    std::vector<RootDatum> out;
    for (int h = 1; h <= height; ++h) {
        for (auto& content : contents_of_height(a.size(), h)) {
            auto slice = free_lie_slice(content, a.parity);
            if (slice.empty()) continue;
            auto words = words_of_content(content);
            std::map<Word, std::size_t> pos;
            for (std::size_t k = 0; k < words.size(); ++k) pos[words[k]] = k;
            const auto& phi = cache.chain(content);
            // rank of phi composed with the slice embedding
            QMatrix m(phi.size(), slice.size());
            for (std::size_t r = 0; r < phi.size(); ++r)
                for (std::size_t c = 0; c < slice.size(); ++c) {
                    Rat v(0);
                    for (auto& [w, coef] : slice[c]) v += phi[r][pos.at(w)] * coef;
                    m.at(r, c) = v;
                }
            std::size_t rank = m.rank();
            if (rank == 0) continue;
            int p = 0;
            for (std::size_t g = 0; g < content.size(); ++g)
                if (a.parity[g] == cartan::Parity::Odd) p ^= (content[g] % 2);
            out.push_back({content, static_cast<long>(rank), static_cast<cartan::Parity>(p)});
        }
    }
    return out;
}

std::map<std::vector<long>, long> pbw_dimensions(const std::vector<RootDatum>& roots,
                                                 int height) {
    std::map<std::vector<long>, long> dims;
    if (roots.empty()) return dims;
    std::size_t n = roots[0].coords.size();
    dims[std::vector<long>(n, 0)] = 1;
    for (auto& r : roots) {
        long rh = height_of(r.coords);
        std::map<std::vector<long>, long> next;
        for (auto& [off, d] : dims) {
            long base = height_of(off);
            // k copies of the root vector, capped by parity and height
            long kmax = (height - base) / rh;
            if (r.parity == cartan::Parity::Odd) kmax = std::min(kmax, r.mult);
            for (long k = 0; k <= kmax; ++k) {
                // multiplicity-m root: symmetric or exterior k-th power count
                long ways;
                if (r.parity == cartan::Parity::Even) {
                    // C(k + m - 1, m - 1)
                    ways = 1;
                    for (long t = 1; t <= r.mult - 1; ++t) ways = ways * (k + t) / t;
                } else {
                    // C(m, k)
                    ways = 1;
                    for (long t = 1; t <= k; ++t) ways = ways * (r.mult - t + 1) / t;
                }
                if (ways == 0) continue;
                std::vector<long> off2(off);
                for (std::size_t j = 0; j < n; ++j) off2[j] += k * r.coords[j];
                next[off2] += d * ways;
            }
        }
        dims = std::move(next);
    }
    return dims;
}

std::vector<WeightMults> shapovalov_multiplicities(const cartan::Sgcm& a,
                                                   const std::vector<Rat>& lambda_pairings,
                                                   int depth) {
    if (depth > kMaxDepth) throw ResourceError("depth exceeds the oracle cap");
    if (lambda_pairings.size() != a.size())
        throw DomainError("pairing vector has wrong length");
    auto roots = root_multiplicities(a, depth);
    auto verma = pbw_dimensions(roots, depth);
    ChainCache cache{a, a.parity, Rat(0), &lambda_pairings, {}};
    std::vector<WeightMults> out;
    for (int h = 0; h <= depth; ++h)
        for (auto& content : contents_of_height(a.size(), h)) {
            auto it = verma.find(content);
            long vd = it == verma.end() ? 0 : it->second;
            if (vd == 0 && h > 0) continue;
            const auto& g = cache.chain(content);
            out.push_back({content, vd, static_cast<long>(g.size())});
        }
    return out;
}

}  // namespace superdual::oracle
