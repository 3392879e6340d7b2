#include "superdual/weight.hpp"

#include <nlohmann/json.hpp>

namespace superdual::weights {

using nlohmann::json;
using symfunc::Partition;

void Weight::add(const Sym& s, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Weight& Weight::operator+=(const Weight& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
}
Weight& Weight::operator-=(const Weight& o) {
    for (auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}
Weight operator*(const Rat& c, Weight w) {
    if (c == 0) return Weight();
    for (auto& [s, v] : w.terms_) v *= c;
    return w;
}

std::set<int> Weight::tails() const {
    std::set<int> out;
    for (auto& [s, c] : terms_)
        if (s.kind == SymKind::Eps || s.kind == SymKind::TailOmega) out.insert(s.tail);
    return out;
}

static std::string sym_str(const Sym& s) {
    switch (s.kind) {
        case SymKind::Omega: return "om";
        case SymKind::TailOmega: return "om(t" + std::to_string(s.tail) + ")";
        case SymKind::HeadFw: return "w(" + s.head + ")";
        default:
            return "eps(t" + std::to_string(s.tail) + ":" + std::to_string(s.index2) + ")";
    }
}

std::string Weight::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [s, c] : terms_) {
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat mag = abs(c);
        if (mag != 1) out += rat_str(mag) + "*";
        out += sym_str(s);
    }
    return out;
}

void Coroot::add(const CorSym& s, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}
Coroot& Coroot::operator+=(const Coroot& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
}
Coroot& Coroot::operator-=(const Coroot& o) {
    for (auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}
Coroot operator*(const Rat& c, Coroot w) {
    if (c == 0) return Coroot();
    for (auto& [s, v] : w.terms_) v *= c;
    return w;
}

std::string Coroot::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [s, c] : terms_) {
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat mag = abs(c);
        if (mag != 1) out += rat_str(mag) + "*";
        switch (s.kind) {
            case CorKind::HeadCoroot: out += "cv(" + s.head + ")"; break;
            case CorKind::TailCoroot:
                out += "cv(t" + std::to_string(s.tail) + ":" + std::to_string(s.index2) + ")";
                break;
            default: out += "d(t" + std::to_string(s.tail) + ")";
        }
    }
    return out;
}

Weight omega() {
    Weight w;
    w.add({SymKind::Omega, 0, 0, ""}, 1);
    return w;
}
Weight tail_omega(int tail) {
    Weight w;
    w.add({SymKind::TailOmega, tail, 0, ""}, 1);
    return w;
}
Weight head_fw(const std::string& id) {
    Weight w;
    w.add({SymKind::HeadFw, 0, 0, id}, 1);
    return w;
}
Weight eps(int tail, int idx2) {
    if (idx2 != -2 && idx2 < 1) throw DomainError("eps index must be -2 or >= 1");
    Weight w;
    w.add({SymKind::Eps, tail, idx2, ""}, 1);
    return w;
}

Weight tail_fw(int tail, int idx2) {
    // omega_r = eps_{-1} + sum_{s <= r} (-1)^{2s} eps_s.
    if (idx2 != -2 && idx2 < 1) throw DomainError("tail fw index must be -2 or >= 1");
    Weight w = eps(tail, -2);
    if (idx2 > 0)
        for (int m = 1; m <= idx2; ++m)
            w += make_rat(m % 2 == 0 ? 1 : -1) * eps(tail, m);
    return w;
}

Coroot head_coroot(const std::string& id) {
    Coroot c;
    c.add({CorKind::HeadCoroot, 0, 0, id}, 1);
    return c;
}
Coroot tail_coroot(int tail, int idx2) {
    if (idx2 != -2 && idx2 < 1) throw DomainError("tail coroot index must be -2 or >= 1");
    Coroot c;
    c.add({CorKind::TailCoroot, tail, idx2, ""}, 1);
    return c;
}
Coroot derivation(int tail) {
    Coroot c;
    c.add({CorKind::Derivation, tail, 0, ""}, 1);
    return c;
}

Coroot h_coroot(int tail, int idx2) {
    if (idx2 == -2) return make_rat(-1) * derivation(tail);
    if (idx2 < 1) throw DomainError("h index must be -2 or >= 1");
    if (idx2 == 1) return derivation(tail) + tail_coroot(tail, -2);
    // h_i = -h_{i-1/2} - (-1)^{2i} alpha^vee_{i-1/2}
    Coroot h = derivation(tail) + tail_coroot(tail, -2);
    for (int k = 2; k <= idx2; ++k) {
        Coroot next = make_rat(-1) * h;
        next += make_rat(k % 2 == 0 ? -1 : 1) * tail_coroot(tail, k - 1);
        h = next;
    }
    return h;
}

static Rat pair_sym(const Sym& w, const CorSym& c) {
    switch (w.kind) {
        case SymKind::Omega:
            return c.kind == CorKind::Derivation ? Rat(1) : Rat(0);
        case SymKind::TailOmega:
            return (c.kind == CorKind::Derivation && c.tail == w.tail) ? Rat(1) : Rat(0);
        case SymKind::HeadFw:
            return (c.kind == CorKind::HeadCoroot && c.head == w.head) ? Rat(1) : Rat(0);
        case SymKind::Eps:
            if (c.kind == CorKind::Derivation)
                return (c.tail == w.tail && w.index2 == -2) ? Rat(-1) : Rat(0);
            if (c.kind != CorKind::TailCoroot || c.tail != w.tail) return Rat(0);
            if (c.index2 == -2)  // alpha_{-1}^vee = h_{-1} + h_{1/2}
                return (w.index2 == -2 || w.index2 == 1) ? Rat(1) : Rat(0);
            // alpha_s^vee = (-1)^{2s} (h_s + h_{s+1/2})
            if (w.index2 == c.index2 || w.index2 == c.index2 + 1)
                return Rat(c.index2 % 2 == 0 ? 1 : -1);
            return Rat(0);
    }
    return Rat(0);
}

Rat pair(const Weight& w, const Coroot& c) {
    Rat total(0);
    for (auto& [ws, wc] : w.terms())
        for (auto& [cs, cc] : c.terms()) total += wc * cc * pair_sym(ws, cs);
    return total;
}

Weight varpi(int tail, int idx2) {
    if (idx2 == -2) return eps(tail, -2);
    if (idx2 < 1) throw DomainError("varpi index must be -2 or >= 1");
    if (idx2 % 2 == 0) {
        // varpi_n = eps_n + varpi_{n-1}, varpi_1 = eps_1 + omega_{-1}
        Weight w = eps(tail, -2);
        for (int k = 2; k <= idx2; k += 2) w += eps(tail, k);
        return w;
    }
    // varpi_{1/2} = -eps_{1/2}; varpi_r = -eps_r + varpi_{r-1}
    Weight w;
    for (int k = 1; k <= idx2; k += 2) w -= eps(tail, k);
    return w;
}

std::vector<long> frobenius_theta(const Partition& mu) {
    auto muc = mu.conjugate();
    std::vector<long> out;
    long n = std::max<long>(static_cast<long>(mu.length()), mu.part(0));
    for (long j = 1; j <= n; ++j) {
        out.push_back(std::max<long>(muc.part(j - 1) - (j - 1), 0));
        out.push_back(std::max<long>(mu.part(j - 1) - j, 0));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Partition tail_partition(const Weight& w, int tail) {
    std::vector<long> parts;
    int max_idx = 0;
    for (auto& [s, c] : w.terms())
        if (s.kind == SymKind::Eps && s.tail == tail && s.index2 >= 2 && s.index2 % 2 == 0)
            max_idx = std::max(max_idx, s.index2);
    for (int k = 2; k <= max_idx; k += 2) {
        Rat c = w.eps_coeff(tail, k);
        if (!is_integer(c)) throw DomainError("tail coefficients are not integers");
        parts.push_back(rat_to_long(c));
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw DomainError("integer eps coefficients do not form a partition");
    return Partition(std::move(parts));
}

Weight natural_map(const Weight& w) {
    Weight out = w;
    for (int t : w.tails()) {
        Partition lam = tail_partition(w, t);
        for (std::size_t j = 0; j < lam.length(); ++j)
            out.add({SymKind::Eps, t, 2 * static_cast<int>(j) + 2, ""}, -make_rat(lam.part(j)));
        auto conj = lam.conjugate();
        for (std::size_t j = 0; j < conj.length(); ++j)
            out.add({SymKind::Eps, t, 2 * static_cast<int>(j) + 1, ""}, make_rat(conj.part(j)));
    }
    return out;
}

Weight theta_map(const Weight& w) {
    Weight out = w;
    for (int t : w.tails()) {
        Partition lam = tail_partition(w, t);
        for (std::size_t j = 0; j < lam.length(); ++j)
            out.add({SymKind::Eps, t, 2 * static_cast<int>(j) + 2, ""}, -make_rat(lam.part(j)));
        auto theta = frobenius_theta(lam);
        for (std::size_t k = 0; k < theta.size(); ++k)
            out.add({SymKind::Eps, t, static_cast<int>(k) + 1, ""}, make_rat(theta[k]));
    }
    return out;
}

bool in_P_plus(const Weight& w, const cartan::Sgcm& head, const std::vector<std::string>& J) {
    for (auto& [s, c] : w.terms()) {
        if (!is_integer(c)) return false;
        if (s.kind == SymKind::Eps && s.index2 >= 1 && s.index2 % 2 == 1) return false;
    }
    for (int t : w.tails()) {
        try {
            tail_partition(w, t);
        } catch (const DomainError&) {
            return false;
        }
    }
    for (auto& id : J) {
        Rat kappa = w.head_coeff(id);
        if (kappa < 0) return false;
        bool odd = head.parity[head.find(id)] == cartan::Parity::Odd;
        if (odd && rat_to_long(kappa) % 2 != 0) return false;
    }
    return true;
}

static bool head_kappa_ok(const Weight& w, const cartan::Sgcm& head) {
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (head.at(i, i) != 2) continue;
        Rat kappa = w.head_coeff(head.indices[i]);
        if (!is_integer(kappa) || kappa < 0) return false;
        if (head.parity[i] == cartan::Parity::Odd && rat_to_long(kappa) % 2 != 0) return false;
    }
    return true;
}

bool in_P_plusplus_G(const Weight& w, const cartan::Sgcm& head) {
    if (!head_kappa_ok(w, head)) return false;
    for (auto& [s, c] : w.terms()) {
        if (!is_integer(c)) return false;
        if (s.kind == SymKind::Eps && s.index2 >= 1 && s.index2 % 2 == 1) return false;
    }
    for (int t : w.tails()) {
        Rat head_part = w.eps_coeff(t, -2);
        if (!is_integer(head_part) || head_part < 0) return false;
        Partition lam;
        try {
            lam = tail_partition(w, t);
        } catch (const DomainError&) {
            return false;
        }
        if (lam.part(0) > rat_to_long(head_part)) return false;
    }
    return true;
}

bool in_P_plusplus_script(const Weight& w, const cartan::Sgcm& head) {
    if (!head_kappa_ok(w, head)) return false;
    for (auto& [s, c] : w.terms()) {
        if (s.kind == SymKind::Omega || s.kind == SymKind::TailOmega) return false;
        if (!is_integer(c)) return false;
        if (s.kind == SymKind::Eps && s.index2 != -2 && s.index2 != 1) return false;
    }
    for (int t : w.tails()) {
        Rat a = w.eps_coeff(t, -2), b = w.eps_coeff(t, 1);
        if (a < 0 || b < 0) return false;
        if (b != 0 && a == 0) return false;
    }
    return true;
}

bool eps_index_allowed(cartan::Flavor flavor, int rank2, int idx2) {
    if (idx2 == -2) return true;
    switch (flavor) {
        case cartan::Flavor::dg:
            return idx2 == 1 || idx2 <= rank2 + 1;
        case cartan::Flavor::g:
            return idx2 % 2 == 0 && idx2 <= rank2;
        case cartan::Flavor::sg:
            return idx2 % 2 == 1 && (idx2 == 1 || idx2 <= rank2 + 1);
    }
    return false;
}

// omega as a weight of the rank-n algebra, per tail.
static Weight omega_expansion(cartan::Flavor flavor, int rank2, int tail) {
    Weight w = make_rat(-1) * eps(tail, -2);
    int limit = (rank2 == -2) ? 1 : rank2 + 1;
    switch (flavor) {
        case cartan::Flavor::dg:
            for (int m = 1; m <= limit; ++m)
                w += make_rat(m % 2 == 1 ? 1 : -1) * eps(tail, m);
            break;
        case cartan::Flavor::sg:
            for (int m = 1; m <= limit; m += 2) w += eps(tail, m);
            break;
        case cartan::Flavor::g:
            for (int m = 2; m <= rank2; m += 2) w -= eps(tail, m);
            break;
    }
    return w;
}

std::optional<Weight> truncate_weight(const Weight& w, cartan::Flavor flavor, int rank2,
                                      const std::vector<int>& tails) {
    Weight out;
    Rat global(0);
    std::map<int, Rat> per_tail;
    for (auto& [s, c] : w.terms()) {
        if (s.kind == SymKind::Eps) {
            if (!eps_index_allowed(flavor, rank2, s.index2)) return std::nullopt;
            out.add(s, c);
        } else if (s.kind == SymKind::Omega) {
            global = c;
        } else if (s.kind == SymKind::TailOmega) {
            per_tail[s.tail] += c;
        } else {
            out.add(s, c);
        }
    }
    if (global != 0)
        for (int t : tails) out += global * omega_expansion(flavor, rank2, t);
    for (auto& [t, c] : per_tail) out += c * omega_expansion(flavor, rank2, t);
    return out;
}

std::string Weight::to_json() const {
    json terms = json::array();
    for (auto& [s, c] : terms_) {
        json t;
        switch (s.kind) {
            case SymKind::Omega: t["basis"] = "omega"; break;
            case SymKind::TailOmega:
                t["basis"] = "tomega";
                t["tail"] = s.tail;
                break;
            case SymKind::HeadFw:
                t["basis"] = "hfw";
                t["head"] = s.head;
                break;
            case SymKind::Eps:
                t["basis"] = "eps";
                t["tail"] = s.tail;
                t["index"] = s.index2;
                break;
        }
        t["coeff"] = rat_str(c);
        terms.push_back(t);
    }
    json out;
    out["terms"] = terms;
    return out.dump(2);
}

Weight Weight::from_json(const std::string& text) {
    json in = json::parse(text);
    Weight w;
    for (auto& t : in.at("terms")) {
        Rat c = parse_rat(t.at("coeff").get<std::string>());
        std::string basis = t.at("basis");
        if (basis == "omega") {
            w += c * omega();
        } else if (basis == "tomega") {
            w += c * tail_omega(t.at("tail").get<int>());
        } else if (basis == "hfw") {
            w += c * head_fw(t.at("head").get<std::string>());
        } else if (basis == "eps") {
            w += c * eps(t.at("tail").get<int>(), t.at("index").get<int>());
        } else if (basis == "tfw") {
            w += c * tail_fw(t.at("tail").get<int>(), t.at("index").get<int>());
        } else {
            throw DomainError("unknown basis symbol '" + basis + "'");
        }
    }
    return w;
}

}  // namespace superdual::weights
