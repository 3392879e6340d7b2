#include "superdual/partition.hpp"

namespace superdual::symfunc {

Partition Partition::conjugate() const {
    std::vector<long> out;
    for (long j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
        long cnt = 0;
        for (auto p : parts_)
            if (p >= j) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition Partition::parse(const std::string& in) {
    std::string s = in;
    if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
    std::vector<long> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        parts.push_back(std::stol(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

static void gen(long remaining, long maxpart, std::vector<long>& acc,
                std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (long p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> Partition::all_of_size(long n) {
    std::vector<Partition> out;
    std::vector<long> acc;
    gen(n, n, acc, out);
    return out;
}

std::vector<Partition> Partition::all_up_to_size(long n) {
    std::vector<Partition> out;
    for (long k = 0; k <= n; ++k) {
        auto v = all_of_size(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace superdual::symfunc
