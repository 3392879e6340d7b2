#include "superdual/character.hpp"

#include <set>

#include "superdual/qmatrix.hpp"

namespace superdual::chars {

long height_of(const Offset& o) {
    long h = 0;
    for (auto c : o) h += c;
    return h;
}

FormalCharacter::FormalCharacter(std::shared_ptr<const reflect::FundamentalSystem> ctx,
                                 weights::Weight anchor, int cutoff)
    : ctx_(std::move(ctx)), anchor_(std::move(anchor)), cutoff_(cutoff) {
    if (cutoff_ < 0) throw DomainError("cutoff must be nonnegative");
}

void FormalCharacter::add(const Offset& o, long long mult) {
    if (mult == 0) return;
    if (o.size() != ctx_->size()) throw DomainError("offset has wrong length");
    if (height_of(o) > cutoff_) return;
    auto it = terms_.find(o);
    if (it == terms_.end()) {
        terms_.emplace(o, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long long FormalCharacter::at(const Offset& o) const {
    auto it = terms_.find(o);
    return it == terms_.end() ? 0 : it->second;
}

weights::Weight FormalCharacter::weight_of(const Offset& o) const {
    weights::Weight w = anchor_;
    for (std::size_t v = 0; v < o.size(); ++v) {
        if (o[v] == 0) continue;
        w -= make_rat(o[v]) * ctx_->vertex_root_weight(ctx_->diagram_matrix().indices[v]);
    }
    return w;
}

std::map<weights::Weight, long long> FormalCharacter::weight_terms() const {
    std::map<weights::Weight, long long> out;
    for (auto& [o, m] : terms_) out[weight_of(o)] += m;
    return out;
}

FormalCharacter FormalCharacter::mul(const FormalCharacter& other) const {
    if (ctx_->diagram_matrix().indices != other.ctx_->diagram_matrix().indices ||
        ctx_->diagram_matrix().entries != other.ctx_->diagram_matrix().entries)
        throw DomainError("character product requires a common diagram");
    FormalCharacter out(ctx_, anchor_ + other.anchor_, std::min(cutoff_, other.cutoff_));
    for (auto& [a, ma] : terms_) {
        long ha = height_of(a);
        if (ha > out.cutoff_) continue;
        for (auto& [b, mb] : other.terms_) {
            if (ha + height_of(b) > out.cutoff_) continue;
            Offset o(a);
            for (std::size_t i = 0; i < o.size(); ++i) o[i] += b[i];
            out.add(o, ma * mb);
        }
    }
    return out;
}

void FormalCharacter::accumulate(const FormalCharacter& other, long long c) {
    auto delta = root_coordinates(*ctx_, anchor_ - other.anchor_);
    if (!delta.has_value())
        throw DomainError("anchors do not differ by a root-lattice vector");
    Offset shift(ctx_->size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
        if (!is_integer((*delta)[i]) || (*delta)[i] < 0)
            throw DomainError("accumulated anchor must sit below this anchor");
        shift[i] = rat_to_long((*delta)[i]);
    }
    for (auto& [o, m] : other.terms_) {
        Offset t(o);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += shift[i];
        add(t, c * m);
    }
}

std::string FormalCharacter::str() const {
    std::string out;
    for (auto& [o, m] : terms_) {
        if (!out.empty()) out += "\n";
        out += std::to_string(m) + " @ " + weight_of(o).str();
    }
    return out.empty() ? "0" : out;
}

std::optional<std::vector<Rat>> root_coordinates(const reflect::FundamentalSystem& ctx,
                                                 const weights::Weight& delta) {
    std::size_t n = ctx.size();
    std::vector<weights::Weight> roots;
    std::set<weights::Sym> syms;
    for (std::size_t v = 0; v < n; ++v) {
        roots.push_back(ctx.vertex_root_weight(ctx.diagram_matrix().indices[v]));
        for (auto& [s, c] : roots.back().terms()) syms.insert(s);
    }
    for (auto& [s, c] : delta.terms()) syms.insert(s);
    std::vector<weights::Sym> symv(syms.begin(), syms.end());
    QMatrix m(symv.size(), n);
    std::vector<Rat> rhs(symv.size(), Rat(0));
    for (std::size_t r = 0; r < symv.size(); ++r) {
        for (std::size_t v = 0; v < n; ++v) m.at(r, v) = roots[v].coeff(symv[r]);
        rhs[r] = delta.coeff(symv[r]);
    }
    return m.solve(rhs);
}

}  // namespace superdual::chars
