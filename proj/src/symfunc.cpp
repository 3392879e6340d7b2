#include "superdual/symfunc.hpp"

#include <functional>

namespace superdual::symfunc {

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            auto [it, fresh] = r.try_emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

std::string poly_str(const Poly& p, const std::vector<std::string>& vars) {
    if (p.empty()) return "0";
    std::string out;
    for (auto& [e, c] : p) {
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        long long mag = c > 0 ? c : -c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

// Cells of mu/nu in row-major order.
struct Cell {
    int row, col;
};

std::vector<Cell> cells_of(const Partition& mu, const Partition& nu) {
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < mu.length(); ++r)
        for (long c = nu.part(r); c < mu.part(r); ++c)
            cells.push_back({static_cast<int>(r), static_cast<int>(c)});
    return cells;
}

}  // namespace

Poly skew_schur(const Partition& mu, const Partition& nu, int m) {
    if (!mu.contains(nu)) throw DomainError("nu is not contained in mu");
    auto cells = cells_of(mu, nu);
    Poly out;
    if (cells.empty()) {
        out[std::vector<int>(m, 0)] = 1;
        return out;
    }
    // grid of entries, 0 = empty (outside or inner shape)
    std::vector<std::vector<int>> grid(mu.length(), std::vector<int>(mu.part(0), 0));
    std::vector<int> weight(m, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            auto [it, fresh] = out.try_emplace(weight, 1);
            if (!fresh) ++it->second;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0 && grid[r][c - 1] != 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c < mu.part(r - 1) && grid[r - 1][c] != 0)
            lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            grid[r][c] = v;
            ++weight[v - 1];
            fill(k + 1);
            --weight[v - 1];
            grid[r][c] = 0;
        }
    };
    fill(0);
    return out;
}

Poly schur(const Partition& mu, int m) { return skew_schur(mu, Partition(), m); }

Poly hook_schur(const Partition& mu, int m, int n) {
    // alphabet: 1..m unprimed, m+1..m+n primed
    auto cells = cells_of(mu, Partition());
    Poly out;
    if (cells.empty()) {
        out[std::vector<int>(m + n, 0)] = 1;
        return out;
    }
    std::vector<std::vector<int>> grid(mu.length(), std::vector<int>(mu.part(0), 0));
    std::vector<int> weight(m + n, 0);
    auto primed = [&](int v) { return v > m; };
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            auto [it, fresh] = out.try_emplace(weight, 1);
            if (!fresh) ++it->second;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= m + n; ++v) {
            if (c > 0) {
                int l = grid[r][c - 1];
                if (v < l) continue;
                if (v == l && primed(v)) continue;  // primed strict in rows
            }
            if (r > 0) {
                int t = grid[r - 1][c];
                if (v < t) continue;
                if (v == t && !primed(v)) continue;  // unprimed strict in columns
            }
            grid[r][c] = v;
            ++weight[v - 1];
            fill(k + 1);
            --weight[v - 1];
            grid[r][c] = 0;
        }
    };
    fill(0);
    return out;
}

std::map<Partition, long> lr_coefficients(const Partition& mu, const Partition& nu) {
    std::map<Partition, long> out;
    if (nu.length() == 0) {
        out[mu] = 1;
        return out;
    }
    long total = mu.size() + nu.size();
    for (auto& lam : Partition::all_of_size(total)) {
        if (!lam.contains(mu)) continue;
        // columns of lam/mu can't be longer than l(nu) shifts... cheap bound:
        if (lam.part(0) > mu.part(0) + nu.part(0)) continue;
        if (lam.length() > mu.length() + nu.length()) continue;
        // fill lam/mu with content nu; reverse reading word (rows right to
        // left, top to bottom) must stay a lattice word
        std::vector<Cell> cells;
        for (std::size_t r = 0; r < lam.length(); ++r)
            for (long c = lam.part(r) - 1; c >= mu.part(r); --c)
                cells.push_back({static_cast<int>(r), static_cast<int>(c)});
        std::vector<std::vector<int>> grid(lam.length(), std::vector<int>(lam.part(0), 0));
        std::vector<long> count(nu.length() + 1, 0);
        long found = 0;
        std::function<void(std::size_t)> fill = [&](std::size_t k) {
            if (k == cells.size()) {
                ++found;
                return;
            }
            auto [r, c] = cells[k];
            for (int v = 1; v <= static_cast<int>(nu.length()); ++v) {
                if (count[v] >= nu.part(v - 1)) continue;           // content bound
                if (v > 1 && count[v] >= count[v - 1]) continue;    // lattice
                if (c + 1 < lam.part(r) && grid[r][c + 1] != 0 && v > grid[r][c + 1])
                    continue;  // row weakly increasing
                if (r > 0 && c >= mu.part(r - 1) && grid[r - 1][c] != 0 &&
                    v <= grid[r - 1][c])
                    continue;  // column strict
                // cells above inside mu impose nothing
                grid[r][c] = v;
                ++count[v];
                fill(k + 1);
                --count[v];
                grid[r][c] = 0;
            }
        };
        fill(0);
        if (found != 0) out[lam] = found;
    }
    return out;
}

std::map<Partition, long long> schur_decompose(Poly p, int m) {
    std::map<Partition, long long> out;
    while (!p.empty()) {
        auto lead = p.begin();
        std::vector<long> parts;
        for (auto v : lead->first) parts.push_back(v);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition lam(parts);  // throws if the leading exponent is not a partition
        long long c = lead->second;
        out[lam] = c;
        auto s = schur(lam, m);
        for (auto& [e, sc] : s) {
            auto it = p.find(e);
            long long nv = (it == p.end() ? 0 : it->second) - c * sc;
            if (it != p.end()) p.erase(it);
            if (nv != 0) p[e] = nv;
        }
    }
    return out;
}

}  // namespace superdual::symfunc
