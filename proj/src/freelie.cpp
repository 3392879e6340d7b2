#include "superdual/freelie.hpp"

#include <algorithm>
#include <functional>

namespace superdual::oracle {

std::vector<Word> words_of_content(const std::vector<long>& content) {
    Word sorted;
    for (std::size_t g = 0; g < content.size(); ++g)
        for (long k = 0; k < content[g]; ++k) sorted.push_back(static_cast<int>(g));
    std::vector<Word> out;
    if (sorted.empty()) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

namespace {

bool is_lyndon(const Word& w) {
    // strictly smaller than all proper rotations
    std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            int a = w[k], b = w[(r + k) % n];
            if (a != b) {
                if (a > b) return false;
                break;
            }
            if (k + 1 == n) return false;  // equal rotation
        }
    }
    return true;
}

cartan::Parity word_parity(const Word& w, const std::vector<cartan::Parity>& parity) {
    int p = 0;
    for (int g : w) p ^= static_cast<int>(parity[g]);
    return static_cast<cartan::Parity>(p);
}

void combo_add(WordCombo& dst, const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = dst.find(w);
    if (it == dst.end()) {
        dst.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

WordCombo super_bracket(const WordCombo& x, const WordCombo& y, cartan::Parity px,
                        cartan::Parity py) {
    // [x,y] = xy - (-1)^{p(x)p(y)} yx
    Rat sign = (px == cartan::Parity::Odd && py == cartan::Parity::Odd) ? 1 : -1;
    WordCombo out;
    for (auto& [wx, cx] : x)
        for (auto& [wy, cy] : y) {
            Word xy = wx;
            xy.insert(xy.end(), wy.begin(), wy.end());
            combo_add(out, xy, cx * cy);
            Word yx = wy;
            yx.insert(yx.end(), wx.begin(), wx.end());
            combo_add(out, yx, sign * cx * cy);
        }
    return out;
}

}  // namespace

std::vector<Word> lyndon_words(const std::vector<long>& content) {
    std::vector<Word> out;
    for (auto& w : words_of_content(content))
        if (!w.empty() && is_lyndon(w)) out.push_back(w);
    return out;
}

WordCombo lyndon_bracket_expansion(const Word& w, const std::vector<cartan::Parity>& parity) {
    if (w.size() == 1) {
        WordCombo c;
        c[w] = 1;
        return c;
    }
    // standard factorization: v = the longest proper Lyndon suffix
    std::size_t split = 1;
    for (std::size_t s = 1; s < w.size(); ++s) {
        Word suffix(w.begin() + s, w.end());
        if (is_lyndon(suffix)) {
            split = s;
            break;
        }
    }
    Word u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
    return super_bracket(lyndon_bracket_expansion(u, parity),
                         lyndon_bracket_expansion(v, parity), word_parity(u, parity),
                         word_parity(v, parity));
}

std::vector<WordCombo> free_lie_slice(const std::vector<long>& content,
                                      const std::vector<cartan::Parity>& parity) {
    std::vector<WordCombo> basis;
    for (auto& w : lyndon_words(content)) basis.push_back(lyndon_bracket_expansion(w, parity));
    // squares of odd Lyndon elements at the doubled degree
    bool halvable = true;
    std::vector<long> half(content);
    for (auto& c : half) {
        if (c % 2 != 0) halvable = false;
        c /= 2;
    }
    if (halvable && !content.empty()) {
        long total = 0;
        for (auto c : half) total += c;
        if (total > 0)
            for (auto& u : lyndon_words(half))
                if (word_parity(u, parity) == cartan::Parity::Odd) {
                    auto bu = lyndon_bracket_expansion(u, parity);
                    basis.push_back(super_bracket(bu, bu, cartan::Parity::Odd,
                                                  cartan::Parity::Odd));
                }
    }
    return basis;
}

WordCombo e_collapse(const Word& w, int i, const cartan::Sgcm& a,
                     const std::vector<cartan::Parity>& parity, const Rat& shift) {
    WordCombo out;
    int prefix_parity = 0;
    bool ei_odd = parity[i] == cartan::Parity::Odd;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] == i) {
            Rat scalar = shift;
            for (std::size_t s = t + 1; s < w.size(); ++s) scalar -= a.at(i, w[s]);
            if (scalar != 0) {
                Rat sign = (ei_odd && prefix_parity) ? -1 : 1;
                Word rest;
                rest.reserve(w.size() - 1);
                for (std::size_t s = 0; s < w.size(); ++s)
                    if (s != t) rest.push_back(w[s]);
                combo_add(out, rest, sign * scalar);
            }
        }
        if (parity[w[t]] == cartan::Parity::Odd) prefix_parity ^= 1;
    }
    return out;
}

}  // namespace superdual::oracle
