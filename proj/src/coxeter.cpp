#include "superdual/coxeter.hpp"

namespace superdual::coxkl {

WeylGroup::WeylGroup(cartan::Sgcm gcm) : gcm_(std::move(gcm)) {
    if (!gcm_.is_even()) throw DomainError("Weyl group requires an even diagram");
    for (std::size_t i = 0; i < gcm_.size(); ++i)
        if (gcm_.at(i, i) != 2) throw DomainError("Weyl group requires diagonal 2");
    n_ = static_cast<int>(gcm_.size());
    std::vector<long> id(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    intern(id, id, {});
    max_len_ = 0;
}

std::vector<long> WeylGroup::gen_matrix(int s) const {
    // s_i(alpha_j) = alpha_j - a[s][j] alpha_i
    std::vector<long> m(n_ * n_, 0);
    for (int j = 0; j < n_; ++j) {
        m[j * n_ + j] = 1;
        m[s * n_ + j] -= gcm_.at(s, j);
    }
    return m;
}

std::vector<long> WeylGroup::mat_mul(const std::vector<long>& a,
                                     const std::vector<long>& b) const {
    std::vector<long> c(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            long aik = a[i * n_ + k];
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) c[i * n_ + j] += aik * b[k * n_ + j];
        }
    return c;
}

std::size_t WeylGroup::intern(const std::vector<long>& mat, const std::vector<long>& inv,
                              std::vector<int> word) {
    auto [it, fresh] = index_.try_emplace(mat, mats_.size());
    if (!fresh) return it->second;
    mats_.push_back(mat);
    inv_mats_.push_back(inv);
    words_.push_back(std::move(word));
    inverse_.push_back(npos);
    return it->second;
}

void WeylGroup::ensure_length(int L) {
    if (L <= max_len_) return;
    if (mats_.size() > 4000000) throw ResourceError("Weyl enumeration too large");
    // BFS layer by layer; shortlex order within a layer gives shortlex normal
    // forms on first discovery.
    std::vector<std::size_t> frontier;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (length(w) == max_len_) frontier.push_back(w);
    for (int len = max_len_; len < L; ++len) {
        std::vector<std::size_t> next;
        for (auto w : frontier) {
            for (int s = 0; s < n_; ++s) {
                auto m = mat_mul(mats_[w], gen_matrix(s));
                if (index_.count(m)) continue;
                auto inv = mat_mul(gen_matrix(s), inv_mats_[w]);
                auto word = words_[w];
                word.push_back(s);
                next.push_back(intern(m, inv, std::move(word)));
                if (mats_.size() > 4000000)
                    throw ResourceError("Weyl enumeration too large");
            }
        }
        frontier = std::move(next);
        max_len_ = len + 1;
        if (frontier.empty()) {
            max_len_ = 1 << 30;  // finite group fully enumerated
            break;
        }
    }
    for (std::size_t w = 0; w < mats_.size(); ++w)
        if (inverse_[w] == npos) {
            auto it = index_.find(inv_mats_[w]);
            if (it != index_.end()) inverse_[w] = it->second;
        }
}

std::size_t WeylGroup::mult_gen(std::size_t w, int s) const {
    auto m = mat_mul(mats_[w], gen_matrix(s));
    auto it = index_.find(m);
    return it == index_.end() ? npos : it->second;
}

std::size_t WeylGroup::from_word(const std::vector<int>& word) const {
    std::size_t w = 0;
    for (int s : word) {
        w = mult_gen(w, s);
        if (w == npos) throw DomainError("word leaves the enumerated range");
    }
    return w;
}

bool WeylGroup::right_descent(std::size_t w, int s) const {
    // ws < w iff w(alpha_s) < 0
    const auto& m = mats_[w];
    for (int i = 0; i < n_; ++i)
        if (m[i * n_ + s] > 0) return false;
    return true;
}

bool WeylGroup::bruhat_leq(std::size_t x, std::size_t w) const {
    if (x == w) return true;
    if (length(x) >= length(w)) return false;
    auto key = std::make_pair(x, w);
    auto memo = bruhat_memo_.find(key);
    if (memo != bruhat_memo_.end()) return memo->second;
    int s = words_[w].back();
    std::size_t ws = mult_gen(w, s);
    std::size_t xs = mult_gen(x, s);
    bool r;
    if (xs != npos && length(xs) < length(x))
        r = bruhat_leq(xs, ws);
    else
        r = bruhat_leq(x, ws);
    bruhat_memo_[key] = r;
    return r;
}

std::vector<long> WeylGroup::act(std::size_t w, const std::vector<long>& v) const {
    const auto& m = mats_[w];
    std::vector<long> out(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += m[i * n_ + j] * v[j];
    return out;
}

}  // namespace superdual::coxkl
